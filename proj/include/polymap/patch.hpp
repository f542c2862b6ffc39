// Patches: planar maps with a designated outer face, 2-valent vertices
// allowed only on the boundary. Boundary weights w(v) = deg(v) - 1 drive all
// fitting conditions.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polymap/count_seq.hpp"
#include "polymap/error.hpp"
#include "polymap/face_complex.hpp"
#include "polymap/oriented_map.hpp"

namespace polymap {

struct GrowthMarker {
  enum class Kind { Square, Diamond, Vertex };
  Kind kind = Kind::Square;
  int anchor_a = -1;  // vertex orbit: edge endpoint, or the circled vertex
  int anchor_b = -1;  // second endpoint; -1 for Kind::Vertex
  int face1 = -1, face2 = -1;

  static std::string kind_name(Kind k) {
    switch (k) {
      case Kind::Square: return "square";
      case Kind::Diamond: return "diamond";
      case Kind::Vertex: return "vertex";
    }
    return "?";
  }
};

struct RPatchReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Inner valences all r, boundary degrees in [2, r], planar, simple graph.
inline RPatchReport r_patch_report(const OrientedMap& m, int outer_face, int r) {
  RPatchReport rep;
  if (m.euler_characteristic() != 2)
    rep.violations.push_back("not planar: chi = " + std::to_string(m.euler_characteristic()));
  std::vector<char> on_boundary(m.num_vertices(), 0);
  for (int d : m.face_darts(outer_face)) on_boundary[m.vertex_of(d)] = 1;
  for (int v = 0; v < m.num_vertices(); v++) {
    int deg = m.degree(v);
    if (on_boundary[v]) {
      if (deg < 2 || deg > r)
        rep.violations.push_back("boundary vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(deg) + " outside [2, " + std::to_string(r) + "]");
    } else if (deg != r) {
      rep.violations.push_back("inner vertex " + std::to_string(v) + " has degree " +
                               std::to_string(deg) + " != " + std::to_string(r));
    }
  }
  std::map<std::pair<int, int>, int> pair_count;
  for (int e = 0; e < m.num_edges(); e++) {
    auto [u, v] = m.edge_endpoints(e);
    if (u == v) {
      rep.violations.push_back("loop at vertex " + std::to_string(u));
      continue;
    }
    pair_count[{std::min(u, v), std::max(u, v)}]++;
  }
  for (auto& [pr, c] : pair_count)
    if (c > 1)
      rep.violations.push_back("multi-edge between vertices " + std::to_string(pr.first) +
                               " and " + std::to_string(pr.second));
  rep.ok = rep.violations.empty();
  return rep;
}

class Patch {
public:
  Patch() = default;

  static Patch create(OrientedMap m, int outer_face, int r,
                      std::vector<GrowthMarker> markers = {}) {
    auto rep = r_patch_report(m, outer_face, r);
    if (!rep.ok) throw ResultNotRPatchError(rep.violations.front());
    Patch p;
    p.map_ = std::move(m);
    p.outer_ = outer_face;
    p.r_ = r;
    p.markers_ = std::move(markers);
    p.root_boundary();
    return p;
  }

  const OrientedMap& map() const { return map_; }
  int outer_face() const { return outer_; }
  int r() const { return r_; }
  const std::vector<GrowthMarker>& markers() const { return markers_; }
  std::vector<GrowthMarker>& markers() { return markers_; }

  // Inner faces only.
  CountSeq p_vector() const {
    CountSeq p;
    for (int f = 0; f < map_.num_faces(); f++)
      if (f != outer_) p.add_count(map_.face_size(f), 1);
    return p;
  }

  int weight(int v) const { return map_.degree(v) - 1; }

  // Outer-face orbit rooted at its lowest dart id; the walk visits the
  // boundary with the outer face on the right.
  const std::vector<int>& boundary_darts() const { return boundary_darts_; }

  std::vector<int> boundary_vertices() const {
    std::vector<int> vs;
    vs.reserve(boundary_darts_.size());
    for (int d : boundary_darts_) vs.push_back(map_.vertex_of(d));
    return vs;
  }

  std::vector<int> boundary_weights() const {
    std::vector<int> ws;
    ws.reserve(boundary_darts_.size());
    for (int d : boundary_darts_) ws.push_back(weight(map_.vertex_of(d)));
    return ws;
  }

  // Cyclic (vertex, weight) walk along the outer face.
  std::vector<std::pair<int, int>> boundary_walk() const {
    std::vector<std::pair<int, int>> walk;
    walk.reserve(boundary_darts_.size());
    for (int d : boundary_darts_) {
      int v = map_.vertex_of(d);
      walk.push_back({v, weight(v)});
    }
    return walk;
  }

  bool on_boundary(int v) const {
    for (int d : boundary_darts_)
      if (map_.vertex_of(d) == v) return true;
    return false;
  }

private:
  void root_boundary() {
    const auto& orbit = map_.face_darts(outer_);
    size_t best = 0;
    for (size_t i = 1; i < orbit.size(); i++)
      if (map_.id_of(orbit[i]) < map_.id_of(orbit[best])) best = i;
    boundary_darts_.clear();
    boundary_darts_.reserve(orbit.size());
    for (size_t i = 0; i < orbit.size(); i++)
      boundary_darts_.push_back(orbit[(best + i) % orbit.size()]);
  }

  OrientedMap map_;
  int outer_ = -1;
  int r_ = 0;
  std::vector<GrowthMarker> markers_;
  std::vector<int> boundary_darts_;
};

inline bool is_self_fitting(const std::vector<int>& w, int r) {
  const size_t n = w.size();
  if (n == 0) return false;
  for (size_t i = 0; i < n; i++)
    if (w[i] + w[n - 1 - i] != r) return false;
  return true;
}

// Match of the w-k-gonal boundary pattern: k corner vertices of weight 1,
// each followed by side vertices carrying w. Returns the walk offset of the
// first corner for the earliest matching rotation.
inline std::optional<int> w_k_gonal_offset(const Patch& p, const std::vector<int>& w, int k) {
  const int n = static_cast<int>(w.size());
  auto weights = p.boundary_weights();
  const int len = static_cast<int>(weights.size());
  if (k < 3 || len != k * (n + 1)) return std::nullopt;
  for (int rot = 0; rot < len; rot++) {
    bool ok = true;
    for (int j = 0; j < k && ok; j++) {
      if (weights[(rot + j * (n + 1)) % len] != 1) ok = false;
      for (int t = 1; t <= n && ok; t++)
        if (weights[(rot + j * (n + 1) + t) % len] != w[t - 1]) ok = false;
    }
    if (ok) return rot;
  }
  return std::nullopt;
}

inline bool is_w_k_gonal(const Patch& p, const std::vector<int>& w, int k, int r) {
  if (p.r() != r || !r_patch_report(p.map(), p.outer_face(), r).ok) return false;
  return w_k_gonal_offset(p, w, k).has_value();
}

namespace detail {

// Position of `path` as a contiguous run in the cyclic boundary vertex list.
inline std::optional<int> locate_boundary_path(const std::vector<int>& boundary,
                                               const std::vector<int>& path) {
  const int B = static_cast<int>(boundary.size());
  const int L = static_cast<int>(path.size());
  if (L < 2 || L > B) return std::nullopt;
  for (int s = 0; s < B; s++) {
    bool ok = true;
    for (int i = 0; i < L && ok; i++)
      if (boundary[(s + i) % B] != path[i]) ok = false;
    if (ok) return s;
  }
  return std::nullopt;
}

struct GlueResult {
  Patch patch;
  // vertex orbit id in the input -> vertex orbit id in the result
  std::vector<int> map1, map2;
};

// Glue P2 to P1 along boundary paths of equal length, identifying
// path1[i] with path2[L+1-i] (1-based). Both paths are given in their own
// patch's boundary-walk order. Interior fit requires weight sums equal to r;
// the two endpoint sums may fall short of r and stay on the boundary.
inline GlueResult glue_along_impl(const Patch& p1, const std::vector<int>& path1, const Patch& p2,
                                  const std::vector<int>& path2) {
  if (p1.r() != p2.r()) throw FitViolationError(0, "patches have different r");
  const int r = p1.r();
  const int L = static_cast<int>(path1.size());
  if (L != static_cast<int>(path2.size()))
    throw LengthMismatchError("paths have lengths " + std::to_string(path1.size()) + " and " +
                              std::to_string(path2.size()));
  if (L < 2) throw LengthMismatchError("glue path needs at least one edge");

  auto b1 = p1.boundary_vertices();
  auto b2 = p2.boundary_vertices();
  auto pos1 = locate_boundary_path(b1, path1);
  auto pos2 = locate_boundary_path(b2, path2);
  if (!pos1) throw FitViolationError(0, "path1 does not lie on the boundary of patch 1");
  if (!pos2) throw FitViolationError(0, "path2 does not lie on the boundary of patch 2");

  for (int i = 1; i <= L; i++) {
    int wsum = p1.weight(path1[i - 1]) + p2.weight(path2[L - i]);
    bool endpoint = (i == 1 || i == L);
    if (endpoint ? (wsum > r) : (wsum != r)) throw FitViolationError(i, "weights do not fit");
  }

  // P1 vertices keep their orbit ids as labels; P2 labels are offset, with
  // seam vertices renamed onto their partners in P1.
  const VertexLabel offset = p1.map().num_vertices() + 1;
  std::vector<VertexLabel> rename2(p2.map().num_vertices());
  for (int v = 0; v < p2.map().num_vertices(); v++) rename2[v] = offset + v;
  for (int i = 1; i <= L; i++) rename2[path2[L - i]] = path1[i - 1];

  FaceComplex fc;
  for (int f = 0; f < p1.map().num_faces(); f++) {
    if (f == p1.outer_face()) continue;
    fc.faces.push_back({});
    for (int d : p1.map().face_darts(f)) fc.faces.back().push_back(p1.map().vertex_of(d));
  }
  for (int f = 0; f < p2.map().num_faces(); f++) {
    if (f == p2.outer_face()) continue;
    fc.faces.push_back({});
    for (int d : p2.map().face_darts(f)) fc.faces.back().push_back(rename2[p2.map().vertex_of(d)]);
  }

  // Stitched outer walk: the free arc of P1 from path1 end to path1 start
  // (both seam endpoints included), then the open free arc of P2.
  const int B1 = static_cast<int>(b1.size());
  const int B2 = static_cast<int>(b2.size());
  std::vector<VertexLabel> outer_walk;
  for (int i = 0; i <= B1 - L + 1; i++) outer_walk.push_back(b1[(*pos1 + L - 1 + i) % B1]);
  for (int i = 1; i <= B2 - L; i++) outer_walk.push_back(rename2[b2[(*pos2 + L - 1 + i) % B2]]);
  fc.faces.push_back(outer_walk);
  fc.outer = fc.faces.size() - 1;

  BuiltMap built = build_from_faces(fc);
  GlueResult out;
  out.patch = Patch::create(std::move(built.map), built.outer_face, r);
  out.map1.resize(p1.map().num_vertices());
  for (int v = 0; v < p1.map().num_vertices(); v++) out.map1[v] = built.vertex_of_label.at(v);
  out.map2.resize(p2.map().num_vertices());
  for (int v = 0; v < p2.map().num_vertices(); v++)
    out.map2[v] = built.vertex_of_label.at(rename2[v]);
  return out;
}

}  // namespace detail

inline Patch glue_along(const Patch& p1, const std::vector<int>& path1, const Patch& p2,
                        const std::vector<int>& path2) {
  return detail::glue_along_impl(p1, path1, p2, path2).patch;
}

}  // namespace polymap
