// Expansion patches: r-patches whose boundary splits into two gluable i-paths
// and an o-path whose weights form a self-fitting outer tuple. From one
// expansion patch the ring construction produces an o-k-gonal patch for every
// k >= 3, and the four-copy edge patch is the arena for the polyhedral
// property test.
#pragma once

#include <string>
#include <vector>

#include "polymap/count_seq.hpp"
#include "polymap/error.hpp"
#include "polymap/face_complex.hpp"
#include "polymap/patch.hpp"

namespace polymap {

struct ExpansionRoles {
  // Vertex orbits along the boundary: i[0..m], o[0..n], ip[0..m], with
  // i[m] == o[0] and o[n] == ip[m]; 1 <= s < n, m > 0.
  std::vector<int> i, o, ip;
  int s = 0;

  int m() const { return static_cast<int>(i.size()) - 1; }
  int n() const { return static_cast<int>(o.size()) - 1; }
};

struct ExpansionPatch {
  Patch patch;
  ExpansionRoles roles;
  std::vector<int> outer_tuple;

  CountSeq p_vector() const { return patch.p_vector(); }
  int r() const { return patch.r(); }
};

// Checks every condition of the expansion-patch definition and computes the
// outer tuple. The boundary walk must be exactly
//   i0 - i1 - ... - (im = o0) - o1 - ... - (on = ip_m) - ip_{m-1} - ... - ip0
// up to rotation of the walk root.
inline ExpansionPatch validate_expansion_patch(Patch patch, ExpansionRoles roles) {
  const int m = roles.m();
  const int n = roles.n();
  const int r = patch.r();
  if (m < 1) throw I0ConditionError("need m > 0");
  if (roles.s < 1 || roles.s >= n) throw OsNotOneError("need 1 <= s < n");
  if (static_cast<int>(roles.ip.size()) != m + 1)
    throw I0ConditionError("i and i' paths must have equal length");
  if (roles.i[m] != roles.o[0]) throw I0ConditionError("i_m and o_0 must be the same vertex");
  if (roles.o[n] != roles.ip[m]) throw I0ConditionError("o_n and i'_m must be the same vertex");

  std::vector<int> expected;
  for (int l = 0; l < m; l++) expected.push_back(roles.i[l]);
  for (int t = 0; t <= n; t++) expected.push_back(roles.o[t]);
  for (int l = m - 1; l >= 0; l--) expected.push_back(roles.ip[l]);

  auto boundary = patch.boundary_vertices();
  {
    std::vector<int> sorted = boundary;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw NotPatchError("boundary walk revisits a vertex");
  }
  if (boundary.size() != expected.size())
    throw I0ConditionError("roles cover " + std::to_string(expected.size()) +
                           " boundary positions, walk has " + std::to_string(boundary.size()));
  bool matched = false;
  const int B = static_cast<int>(boundary.size());
  for (int rot = 0; rot < B && !matched; rot++) {
    bool ok = true;
    for (int idx = 0; idx < B && ok; idx++)
      if (boundary[(rot + idx) % B] != expected[idx]) ok = false;
    matched = ok;
  }
  if (!matched) throw I0ConditionError("role labels do not follow the boundary walk");

  auto w = [&](int v) { return patch.weight(v); };
  if (w(roles.i[0]) + w(roles.ip[0]) != r - 1)
    throw I0ConditionError("w(i0) + w(i'0) = " +
                           std::to_string(w(roles.i[0]) + w(roles.ip[0])) + ", expected " +
                           std::to_string(r - 1));
  for (int l = 1; l < m; l++)
    if (w(roles.i[l]) + w(roles.ip[l]) != r)
      throw SelfFitAlongIError(l, "w(i_l) + w(i'_l) != r");
  if (w(roles.o[roles.s]) != 1) throw OsNotOneError("w(o_s) != 1");

  std::vector<int> tuple;
  for (int t = roles.s + 1; t <= n - 1; t++) tuple.push_back(w(roles.o[t]));
  tuple.push_back(w(roles.o[n]) + w(roles.o[0]));
  for (int t = 1; t <= roles.s - 1; t++) tuple.push_back(w(roles.o[t]));
  for (size_t idx = 0; idx < tuple.size(); idx++)
    if (tuple[idx] + tuple[tuple.size() - 1 - idx] != r)
      throw OuterTupleNotSelfFittingError(static_cast<int>(idx + 1),
                                          "outer tuple is not self-fitting");

  ExpansionPatch ep;
  ep.patch = std::move(patch);
  ep.roles = std::move(roles);
  ep.outer_tuple = std::move(tuple);
  return ep;
}

// Ring construction M(k): k copies of the expansion patch glued around a
// central k-gon. Copy j's i-path is identified with copy j-1's i'-path; the
// closing edges {i0, i'0} bound the central k-gon. The result is an
// o-k-gonal r-patch with p-vector [k] + k * p.
inline Patch ring(const ExpansionPatch& ep, int k) {
  if (k < 3) throw KTooSmallError("ring needs k >= 3, got " + std::to_string(k));
  const auto& pm = ep.patch.map();
  const int m = ep.roles.m();
  const int n = ep.roles.n();
  const long long V = pm.num_vertices();

  std::vector<char> is_i(V, 0);
  std::vector<int> i_index(V, -1);
  for (int l = 0; l <= m; l++) {
    is_i[ep.roles.i[l]] = 1;
    i_index[ep.roles.i[l]] = l;
  }
  auto label = [&](int copy, int v) -> VertexLabel {
    if (is_i[v]) {
      int prev = (copy + k - 1) % k;
      return static_cast<VertexLabel>(prev) * V + ep.roles.ip[i_index[v]];
    }
    return static_cast<VertexLabel>(copy) * V + v;
  };

  FaceComplex fc;
  for (int copy = 0; copy < k; copy++) {
    for (int f = 0; f < pm.num_faces(); f++) {
      if (f == ep.patch.outer_face()) continue;
      fc.faces.push_back({});
      for (int d : pm.face_darts(f)) fc.faces.back().push_back(label(copy, pm.vertex_of(d)));
    }
  }
  {
    std::vector<VertexLabel> kgon;
    for (int copy = k - 1; copy >= 0; copy--) kgon.push_back(label(copy, ep.roles.i[0]));
    fc.faces.push_back(std::move(kgon));
  }
  {
    std::vector<VertexLabel> outer;
    for (int copy = 0; copy < k; copy++)
      for (int t = 0; t < n; t++) outer.push_back(label(copy, ep.roles.o[t]));
    fc.faces.push_back(std::move(outer));
    fc.outer = fc.faces.size() - 1;
  }

  BuiltMap built = build_from_faces(fc);
  Patch out = Patch::create(std::move(built.map), built.outer_face, ep.r());
  CountSeq expect = CountSeq::single(k) + k * ep.p_vector();
  if (out.p_vector() != expect)
    throw ComplexError("ring census " + out.p_vector().to_string() + " != expected " +
                       expect.to_string());
  return out;
}

namespace detail {

struct DoubledPatch {
  Patch patch;
  std::vector<int> glue_path;  // o_s .. merged(o_n/o_0) .. o_s, in walk order
};

// Two copies glued along the full i-paths. The free boundary runs
// c2.o_s .. c2.o_{n-1}, merged vertex, c1.o_1 .. c1.o_s in walk order.
inline DoubledPatch make_double(const ExpansionPatch& ep) {
  const int m = ep.roles.m();
  const int n = ep.roles.n();
  const int s = ep.roles.s;
  std::vector<int> path1, path2;
  for (int l = 0; l <= m; l++) path1.push_back(ep.roles.i[l]);
  for (int l = m; l >= 0; l--) path2.push_back(ep.roles.ip[l]);
  auto glued = glue_along_impl(ep.patch, path1, ep.patch, path2);

  DoubledPatch out;
  for (int t = s; t <= n - 1; t++) out.glue_path.push_back(glued.map2[ep.roles.o[t]]);
  out.glue_path.push_back(glued.map1[ep.roles.o[0]]);  // == map2[o_n]
  for (int t = 1; t <= s; t++) out.glue_path.push_back(glued.map1[ep.roles.o[t]]);
  out.patch = std::move(glued.patch);
  return out;
}

}  // namespace detail

// Edge patch: four copies, two i-path gluings and one gluing of the doubles
// along their self-fitting o-boundaries. p-vector is 4 * p.
inline Patch edge_patch(const ExpansionPatch& ep) {
  auto d1 = detail::make_double(ep);
  auto d2 = detail::make_double(ep);
  Patch out = glue_along(d1.patch, d1.glue_path, d2.patch, d2.glue_path);
  CountSeq expect = 4 * ep.p_vector();
  if (out.p_vector() != expect)
    throw ComplexError("edge patch census " + out.p_vector().to_string() + " != expected " +
                       expect.to_string());
  return out;
}

struct PolyhedralPropertyReport {
  bool ok = false;
  int witness_f1 = -1, witness_f2 = -1;  // faces of the edge patch
};

// Every two inner faces of the edge patch meet properly.
inline PolyhedralPropertyReport has_polyhedral_property(const ExpansionPatch& ep) {
  Patch edge = edge_patch(ep);
  auto rep = edge.map().polyhedral_report(edge.outer_face());
  return {rep.ok, rep.witness_f1, rep.witness_f2};
}

}  // namespace polymap
