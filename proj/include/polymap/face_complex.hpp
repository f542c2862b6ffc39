// Rebuilds dart tables from labeled face walks. Every construction in the
// library (gluing, rings, edge patches, global expansion, growth rewrites)
// edits face walks and then rebuilds here, so the rotation system is always
// derived from one rule: phi follows the given walks, sigma = phi o alpha.
//
// Input contract: faces are cyclic vertex-label walks listed so that every
// directed side (u, v) occurs exactly once across all walks (the outer walk
// of a patch counts as a face). This holds exactly when the walks describe a
// cellular embedding with simple edges; violations raise ComplexError.
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "polymap/error.hpp"
#include "polymap/oriented_map.hpp"

namespace polymap {

using VertexLabel = std::int64_t;

struct FaceComplex {
  std::vector<std::vector<VertexLabel>> faces;
  std::optional<size_t> outer;  // index of the outer walk, when building a patch
};

struct BuiltMap {
  OrientedMap map;
  std::unordered_map<VertexLabel, int> vertex_of_label;
  std::vector<int> face_ids;  // input face index -> face orbit id
  int outer_face = -1;
};

inline BuiltMap build_from_faces(const FaceComplex& fc) {
  struct Key {
    VertexLabel u, v;
    bool operator==(const Key& o) const { return u == o.u && v == o.v; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      size_t h = std::hash<VertexLabel>()(k.u);
      return h ^ (std::hash<VertexLabel>()(k.v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
  };

  int dart_count = 0;
  for (const auto& f : fc.faces) {
    if (f.size() < 2) throw ComplexError("face walk shorter than 2");
    dart_count += static_cast<int>(f.size());
  }
  if (dart_count == 0) throw ComplexError("no faces");

  std::unordered_map<Key, int, KeyHash> dart_of_side;
  dart_of_side.reserve(dart_count * 2);
  std::vector<VertexLabel> origin(dart_count);
  std::vector<int> phi(dart_count), face_first;
  face_first.reserve(fc.faces.size());

  int next = 0;
  for (const auto& f : fc.faces) {
    const int n = static_cast<int>(f.size());
    face_first.push_back(next);
    for (int i = 0; i < n; i++) {
      VertexLabel u = f[i], v = f[(i + 1) % n];
      if (u == v) throw ComplexError("degenerate side at a vertex");
      int d = next + i;
      origin[d] = u;
      phi[d] = next + (i + 1) % n;
      if (!dart_of_side.emplace(Key{u, v}, d).second)
        throw ComplexError("directed side repeated; gluing would produce a multi-edge");
    }
    next += n;
  }

  std::vector<int> alpha(dart_count, -1), sigma(dart_count, -1);
  for (const auto& [key, d] : dart_of_side) {
    auto rev = dart_of_side.find(Key{key.v, key.u});
    if (rev == dart_of_side.end())
      throw ComplexError("side lacks its reverse; the complex is not closed");
    alpha[d] = rev->second;
  }
  for (int d = 0; d < dart_count; d++) sigma[d] = phi[alpha[d]];

  BuiltMap out;
  out.map = OrientedMap::build_dense(std::move(alpha), std::move(sigma));

  // Each vertex label must form a single sigma-orbit; a split label means the
  // walks pinch a vertex and do not describe a surface.
  out.vertex_of_label.reserve(dart_count);
  for (int d = 0; d < dart_count; d++) {
    auto [it, inserted] = out.vertex_of_label.emplace(origin[d], out.map.vertex_of(d));
    if (!inserted && it->second != out.map.vertex_of(d))
      throw ComplexError("vertex label occupies two rotation orbits (pinched vertex)");
  }
  if (static_cast<int>(out.vertex_of_label.size()) != out.map.num_vertices())
    throw ComplexError("rotation orbit without a label (pinched vertex)");

  out.face_ids.reserve(fc.faces.size());
  for (size_t i = 0; i < fc.faces.size(); i++)
    out.face_ids.push_back(out.map.face_of(face_first[i]));
  if (fc.outer) out.outer_face = out.face_ids[*fc.outer];
  return out;
}

// Face walks of an existing map, with vertex orbits as labels. Passing a face
// id in `outer` marks that walk as the outer one in the produced complex.
inline FaceComplex complex_of(const OrientedMap& m, std::optional<int> outer = std::nullopt) {
  FaceComplex fc;
  fc.faces.reserve(m.num_faces());
  for (int f = 0; f < m.num_faces(); f++) {
    fc.faces.push_back({});
    auto& walk = fc.faces.back();
    for (int d : m.face_darts(f)) walk.push_back(m.vertex_of(d));
    if (outer && *outer == f) fc.outer = fc.faces.size() - 1;
  }
  return fc;
}

}  // namespace polymap
