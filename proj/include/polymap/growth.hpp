// The three local rewrites that grow two target polygons while adding only
// triangles and 4-valent vertices. Each rewrite is a structural edit of the
// face walks around the marked element, rebuilt into fresh dart tables and
// re-validated; p-vector formulas are postconditions checked by the tests,
// never the implementation.
//
//   square  : marked edge, one endpoint on each target; both endpoints split;
//             adds 2 triangles, each target grows by 1.
//   diamond : marked edge common to both targets; replaced by a 6-triangle
//             column; each target grows by 3.
//   vertex  : marked 4-valent vertex on both targets (no shared edge there);
//             replaced by a 6-triangle gadget; each target grows by 3.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "polymap/error.hpp"
#include "polymap/face_complex.hpp"
#include "polymap/patch.hpp"

namespace polymap {

struct GrowthResult {
  Patch patch;                  // markers remapped; the used marker relocated
  std::vector<int> vertex_map;  // old vertex orbit -> new vertex orbit
};

namespace detail {

struct FaceEdit {
  // Replace one occurrence of `at` by `seq`; when `after` >= 0 the edit is an
  // insertion of `seq` between consecutive vertices `after`, `at`.
  int after = -1;
  int at = -1;
  std::vector<VertexLabel> seq;
};

struct RewritePlan {
  std::map<int, std::vector<FaceEdit>> edits;              // face orbit -> edits
  std::vector<std::vector<VertexLabel>> new_faces;         // appended triangles
  std::vector<std::pair<int, VertexLabel>> split_primary;  // old vertex -> fallback label
  GrowthMarker next_marker;                                // labels in anchor slots
  VertexLabel next_anchor_a = -1, next_anchor_b = -1;
  int next_face1 = -1, next_face2 = -1;
};

inline int count_occurrences(const std::vector<VertexLabel>& walk, VertexLabel x) {
  int c = 0;
  for (auto v : walk) c += (v == x);
  return c;
}

inline int dart_between(const OrientedMap& m, int u, int v) {
  for (int d : m.vertex_darts(u))
    if (m.vertex_of(m.alpha(d)) == v) return d;
  throw MarkerInvalidError("anchor edge does not exist");
}

inline void require_inner_target(const Patch& p, int face, const GrowthMarker& mk) {
  if (face == p.outer_face()) throw MarkerInvalidError("target face is the outer face");
  if (face != mk.face1 && face != mk.face2)
    throw MarkerInvalidError("marker targets do not match the faces at the anchor");
}

inline GrowthResult apply_plan(const Patch& p, int used_marker, const RewritePlan& plan) {
  const auto& m = p.map();
  FaceComplex fc;
  fc.faces.reserve(m.num_faces() + plan.new_faces.size());
  for (int f = 0; f < m.num_faces(); f++) {
    std::vector<VertexLabel> walk;
    for (int d : m.face_darts(f)) walk.push_back(m.vertex_of(d));
    auto it = plan.edits.find(f);
    if (it != plan.edits.end()) {
      for (const auto& edit : it->second) {
        std::vector<VertexLabel> next;
        const int n = static_cast<int>(walk.size());
        bool applied = false;
        for (int i = 0; i < n; i++) {
          if (!applied && walk[i] == edit.at &&
              (edit.after < 0 || walk[(i + n - 1) % n] == edit.after)) {
            if (edit.after >= 0) {  // insertion keeps the vertex
              for (auto s : edit.seq) next.push_back(s);
              next.push_back(walk[i]);
            } else {
              for (auto s : edit.seq) next.push_back(s);
            }
            applied = true;
          } else {
            next.push_back(walk[i]);
          }
        }
        if (!applied) throw MarkerInvalidError("face edit did not match the walk");
        walk = std::move(next);
      }
    }
    fc.faces.push_back(std::move(walk));
    if (f == p.outer_face()) fc.outer = fc.faces.size() - 1;
  }
  for (const auto& nf : plan.new_faces) fc.faces.push_back(nf);

  BuiltMap built = build_from_faces(fc);

  GrowthResult out;
  out.vertex_map.assign(m.num_vertices(), -1);
  for (int v = 0; v < m.num_vertices(); v++) {
    auto it = built.vertex_of_label.find(v);
    if (it != built.vertex_of_label.end()) out.vertex_map[v] = it->second;
  }
  for (auto& [v, label] : plan.split_primary) {
    // Boundary splits take the label that replaced the vertex in the outer
    // walk; interior splits take the provided fallback.
    VertexLabel chosen = label;
    auto oe = plan.edits.find(p.outer_face());
    if (oe != plan.edits.end())
      for (const auto& edit : oe->second)
        if (edit.at == v && edit.after < 0 && edit.seq.size() == 1) chosen = edit.seq[0];
    out.vertex_map[v] = built.vertex_of_label.at(chosen);
  }

  std::vector<GrowthMarker> markers;
  for (int i = 0; i < static_cast<int>(p.markers().size()); i++) {
    const GrowthMarker& mk = p.markers()[i];
    if (i == used_marker) {
      GrowthMarker next;
      next.kind = mk.kind;
      next.anchor_a = built.vertex_of_label.at(plan.next_anchor_a);
      next.anchor_b = plan.next_anchor_b >= 0 ? built.vertex_of_label.at(plan.next_anchor_b) : -1;
      next.face1 = built.face_ids[plan.next_face1];
      next.face2 = built.face_ids[plan.next_face2];
      markers.push_back(next);
      continue;
    }
    GrowthMarker moved = mk;
    for (int* anchor : {&moved.anchor_a, &moved.anchor_b}) {
      if (*anchor < 0) continue;
      if (out.vertex_map[*anchor] < 0)
        throw MarkerInvalidError("another marker anchors a vertex consumed by this rewrite");
      *anchor = out.vertex_map[*anchor];
    }
    moved.face1 = built.face_ids[moved.face1];
    moved.face2 = built.face_ids[moved.face2];
    markers.push_back(moved);
  }

  out.patch = Patch::create(std::move(built.map), built.outer_face, p.r(), std::move(markers));
  return out;
}

inline GrowthResult square_step(const Patch& p, int idx) {
  const auto& m = p.map();
  const GrowthMarker& mk = p.markers()[idx];
  int d = dart_between(m, mk.anchor_a, mk.anchor_b);
  // u is the endpoint incident to face1.
  {
    auto vs = m.face_vertices(mk.face1);
    bool at_a = std::find(vs.begin(), vs.end(), mk.anchor_a) != vs.end();
    if (!at_a) d = m.alpha(d);
  }
  const int u = m.vertex_of(d);
  const int v = m.vertex_of(m.alpha(d));
  if (m.degree(u) != 4 || m.degree(v) != 4)
    throw MarkerInvalidError("square endpoints must be 4-valent");
  const int dp = m.alpha(d);
  const int side_n = m.face_of(dp);  // face left of u->v
  const int side_s = m.face_of(d);   // face right of u->v
  if (side_n == p.outer_face() || side_s == p.outer_face())
    throw MarkerInvalidError("marked edge lies on the boundary");
  if (side_n == side_s) throw MarkerInvalidError("marked edge has the same face on both sides");
  const int k1 = mk.face1, k2 = mk.face2;
  require_inner_target(p, k1, mk);
  require_inner_target(p, k2, mk);
  if (k1 == k2 || k1 == side_n || k1 == side_s || k2 == side_n || k2 == side_s)
    throw MarkerInvalidError("square targets must avoid the marked edge");
  {
    auto vs1 = m.face_vertices(k1);
    auto vs2 = m.face_vertices(k2);
    if (std::count(vs1.begin(), vs1.end(), u) != 1 || std::count(vs2.begin(), vs2.end(), v) != 1 ||
        std::count(vs1.begin(), vs1.end(), v) != 0 || std::count(vs2.begin(), vs2.end(), u) != 0)
      throw MarkerInvalidError("each square target must touch exactly one endpoint");
    for (int f : {side_n, side_s}) {
      auto vs = m.face_vertices(f);
      if (std::count(vs.begin(), vs.end(), u) != 1 || std::count(vs.begin(), vs.end(), v) != 1)
        throw MarkerInvalidError("a face at the marked edge revisits an endpoint");
    }
  }

  int pos_u, pos_v;
  if (m.face_of(m.sigma(m.sigma(d))) == k1) {
    pos_u = 2;
  } else if (m.face_of(m.sigma(m.sigma(m.sigma(d)))) == k1) {
    pos_u = 3;
  } else {
    throw MarkerInvalidError("target face not adjacent around the endpoint");
  }
  if (m.face_of(m.sigma(m.sigma(dp))) == k2) {
    pos_v = 2;
  } else if (m.face_of(m.sigma(m.sigma(m.sigma(dp)))) == k2) {
    pos_v = 3;
  } else {
    throw MarkerInvalidError("target face not adjacent around the endpoint");
  }
  if (pos_u != pos_v)
    throw MarkerInvalidError("targets sit at different positions in the rotations at the endpoints");

  const int fourth_u = m.face_of(pos_u == 2 ? m.sigma(m.sigma(m.sigma(d))) : m.sigma(m.sigma(d)));
  const int fourth_v =
      m.face_of(pos_v == 2 ? m.sigma(m.sigma(m.sigma(dp))) : m.sigma(m.sigma(dp)));

  const VertexLabel U1 = m.num_vertices(), U2 = U1 + 1, V1 = U1 + 2, V2 = U1 + 3;
  RewritePlan plan;
  auto add_edit = [&](int face, int after, int at, std::vector<VertexLabel> seq) {
    plan.edits[face].push_back(FaceEdit{after, at, std::move(seq)});
  };
  if (pos_u == 2) {
    add_edit(side_n, -1, u, {U1});
    add_edit(side_n, -1, v, {V1});
    add_edit(side_s, -1, u, {U2});
    add_edit(side_s, -1, v, {V2});
    add_edit(k1, -1, u, {U1, U2});
    add_edit(k2, -1, v, {V2, V1});
    add_edit(fourth_u, -1, u, {U2});
    add_edit(fourth_v, -1, v, {V1});
    plan.new_faces.push_back({U1, V2, U2});
    plan.new_faces.push_back({U1, V1, V2});
  } else {
    add_edit(side_n, -1, u, {U2});
    add_edit(side_n, -1, v, {V2});
    add_edit(side_s, -1, u, {U1});
    add_edit(side_s, -1, v, {V1});
    add_edit(k1, -1, u, {U2, U1});
    add_edit(k2, -1, v, {V1, V2});
    add_edit(fourth_u, -1, u, {U2});
    add_edit(fourth_v, -1, v, {V1});
    plan.new_faces.push_back({U1, U2, V2});
    plan.new_faces.push_back({V1, U1, V2});
  }
  plan.split_primary = {{u, U2}, {v, V1}};
  plan.next_anchor_a = U1;
  plan.next_anchor_b = V1;
  plan.next_face1 = k1;
  plan.next_face2 = k2;
  return apply_plan(p, idx, plan);
}

inline GrowthResult diamond_step(const Patch& p, int idx) {
  const auto& m = p.map();
  const GrowthMarker& mk = p.markers()[idx];
  int d = dart_between(m, mk.anchor_a, mk.anchor_b);
  if (m.id_of(m.alpha(d)) < m.id_of(d)) d = m.alpha(d);
  const int u = m.vertex_of(d);
  const int v = m.vertex_of(m.alpha(d));
  const int right = m.face_of(d);
  const int left = m.face_of(m.alpha(d));
  if (right == left) throw MarkerInvalidError("marked edge has the same face on both sides");
  require_inner_target(p, right, mk);
  require_inner_target(p, left, mk);
  for (int f : {right, left}) {
    auto vs = m.face_vertices(f);
    if (std::count(vs.begin(), vs.end(), u) != 1 || std::count(vs.begin(), vs.end(), v) != 1)
      throw MarkerInvalidError("target face revisits an endpoint");
  }

  const VertexLabel Q1 = m.num_vertices(), Q2 = Q1 + 1, Q3 = Q1 + 2, Q4 = Q1 + 3, L = Q1 + 4,
                    R = Q1 + 5;
  RewritePlan plan;
  plan.edits[right].push_back(FaceEdit{u, v, {Q4, R, Q1}});
  plan.edits[left].push_back(FaceEdit{v, u, {Q1, L, Q4}});
  plan.new_faces = {{L, Q1, Q2}, {L, Q2, Q3}, {L, Q3, Q4},
                    {R, Q2, Q1}, {R, Q3, Q2}, {Q4, Q3, R}};
  plan.next_anchor_a = Q1;
  plan.next_anchor_b = v;
  plan.next_face1 = right;
  plan.next_face2 = left;
  return apply_plan(p, idx, plan);
}

inline GrowthResult vertex_step(const Patch& p, int idx) {
  const auto& m = p.map();
  const GrowthMarker& mk = p.markers()[idx];
  const int x = mk.anchor_a;
  if (m.degree(x) != 4) throw MarkerInvalidError("circled vertex must be 4-valent");
  const auto& darts = m.vertex_darts(x);
  int e1 = -1;
  for (int i = 0; i < 4; i++) {
    int fa = m.face_of(darts[i]);
    int fb = m.face_of(darts[(i + 2) % 4]);
    if ((fa == mk.face1 && fb == mk.face2) || (fa == mk.face2 && fb == mk.face1)) {
      e1 = i;
      break;
    }
  }
  if (e1 < 0)
    throw MarkerInvalidError("targets must sit in opposite sectors around the circled vertex");
  const int k1 = m.face_of(darts[e1]);
  const int k2 = m.face_of(darts[(e1 + 2) % 4]);
  const int top = m.face_of(darts[(e1 + 3) % 4]);
  const int bottom = m.face_of(darts[(e1 + 1) % 4]);
  require_inner_target(p, k1, mk);
  require_inner_target(p, k2, mk);
  if (k1 == k2 || top == bottom || top == k1 || top == k2 || bottom == k1 || bottom == k2)
    throw MarkerInvalidError("the circled vertex must see four distinct faces");
  for (int f : {k1, k2, top, bottom}) {
    auto vs = m.face_vertices(f);
    if (std::count(vs.begin(), vs.end(), x) != 1)
      throw MarkerInvalidError("a face revisits the circled vertex");
  }

  const VertexLabel T = m.num_vertices(), B = T + 1, L1 = T + 2, L2 = T + 3, R1 = T + 4,
                    R2 = T + 5, M = T + 6;
  RewritePlan plan;
  plan.edits[k1].push_back(FaceEdit{-1, x, {T, L2, L1, B}});
  plan.edits[k2].push_back(FaceEdit{-1, x, {B, R1, R2, T}});
  plan.edits[top].push_back(FaceEdit{-1, x, {T}});
  plan.edits[bottom].push_back(FaceEdit{-1, x, {B}});
  plan.new_faces = {{B, L1, R1}, {L1, M, R1}, {L1, L2, M},
                    {L2, R2, M}, {M, R2, R1}, {L2, T, R2}};
  plan.split_primary = {{x, T}};
  plan.next_anchor_a = T;
  plan.next_anchor_b = -1;
  plan.next_face1 = k1;
  plan.next_face2 = k2;
  return apply_plan(p, idx, plan);
}

}  // namespace detail

// k applications of the marker's rewrite, each step relocating the marker.
inline GrowthResult grow(const Patch& p, int marker_index, int k) {
  if (p.r() != 4) throw NotFourPatchError("growth rewrites require a 4-patch");
  if (marker_index < 0 || marker_index >= static_cast<int>(p.markers().size()))
    throw MarkerInvalidError("no marker with index " + std::to_string(marker_index));
  if (k < 0) throw MarkerInvalidError("negative step count");
  GrowthResult out;
  out.patch = p;
  out.vertex_map.resize(p.map().num_vertices());
  for (int v = 0; v < p.map().num_vertices(); v++) out.vertex_map[v] = v;
  for (int step = 0; step < k; step++) {
    const GrowthMarker& mk = out.patch.markers()[marker_index];
    GrowthResult next;
    switch (mk.kind) {
      case GrowthMarker::Kind::Square: next = detail::square_step(out.patch, marker_index); break;
      case GrowthMarker::Kind::Diamond: next = detail::diamond_step(out.patch, marker_index); break;
      case GrowthMarker::Kind::Vertex: next = detail::vertex_step(out.patch, marker_index); break;
    }
    for (auto& v : out.vertex_map) v = v >= 0 ? next.vertex_map[v] : -1;
    out.patch = std::move(next.patch);
  }
  return out;
}

inline GrowthResult grow_square(const Patch& p, int marker_index, int k) {
  if (p.markers()[marker_index].kind != GrowthMarker::Kind::Square)
    throw MarkerInvalidError("marker is not a square edge");
  return grow(p, marker_index, k);
}
inline GrowthResult grow_diamond(const Patch& p, int marker_index, int k) {
  if (p.markers()[marker_index].kind != GrowthMarker::Kind::Diamond)
    throw MarkerInvalidError("marker is not a diamond edge");
  return grow(p, marker_index, k);
}
inline GrowthResult grow_vertex(const Patch& p, int marker_index, int k) {
  if (p.markers()[marker_index].kind != GrowthMarker::Kind::Vertex)
    throw MarkerInvalidError("marker is not a circled vertex");
  return grow(p, marker_index, k);
}

}  // namespace polymap
