// Shipped patches (transcribed from planar drawings) and seed maps. Figure
// transcriptions are locked by the validators: outer tuples, face censuses
// and role conditions are all re-checked at construction time, so a wrong
// edge or rotation fails loudly.
#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymap/error.hpp"
#include "polymap/expansion.hpp"
#include "polymap/face_complex.hpp"
#include "polymap/patch.hpp"

namespace polymap {

struct Figure {
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<int, int>> edges;
};

struct FigurePatch {
  Patch patch;
  std::vector<int> vertex_of_point;  // point index -> vertex orbit
};

// Encodes a drawing as a rotation system. Rotations are taken in clockwise
// drawing order, which makes the outer-face orbit follow the boundary in the
// direction the figures label it.
inline FigurePatch patch_from_figure(const Figure& fig, int r) {
  const int E = static_cast<int>(fig.edges.size());
  const int P = static_cast<int>(fig.points.size());
  std::vector<std::vector<std::pair<double, int>>> at(P);  // (angle, dart)
  auto angle = [&](int from, int to) {
    return std::atan2(fig.points[to].second - fig.points[from].second,
                      fig.points[to].first - fig.points[from].first);
  };
  std::vector<int> origin(2 * E);
  for (int e = 0; e < E; e++) {
    auto [a, b] = fig.edges[e];
    origin[2 * e] = a;
    origin[2 * e + 1] = b;
    at[a].push_back({angle(a, b), 2 * e});
    at[b].push_back({angle(b, a), 2 * e + 1});
  }
  std::vector<int> alpha(2 * E), sigma(2 * E, -1);
  for (int e = 0; e < E; e++) {
    alpha[2 * e] = 2 * e + 1;
    alpha[2 * e + 1] = 2 * e;
  }
  for (int p = 0; p < P; p++) {
    auto& darts = at[p];
    if (darts.empty()) throw ComplexError("isolated point in figure");
    std::sort(darts.begin(), darts.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (size_t i = 0; i < darts.size(); i++)
      sigma[darts[i].second] = darts[(i + 1) % darts.size()].second;
  }
  OrientedMap m = OrientedMap::build_dense(std::move(alpha), std::move(sigma));

  int bottom = 0;
  for (int p = 1; p < P; p++) {
    auto [x, y] = fig.points[p];
    auto [bx, by] = fig.points[bottom];
    if (y < by || (y == by && x < bx)) bottom = p;
  }
  int top_dart = at[bottom][0].second;  // largest drawn angle after the sort
  int outer = m.face_of(top_dart);

  FigurePatch out;
  out.vertex_of_point.assign(P, -1);
  for (int e = 0; e < E; e++) {
    out.vertex_of_point[origin[2 * e]] = m.vertex_of(2 * e);
    out.vertex_of_point[origin[2 * e + 1]] = m.vertex_of(2 * e + 1);
  }
  out.patch = Patch::create(std::move(m), outer, r);
  return out;
}

struct CatalogPatch {
  std::string name;
  Patch patch;  // carries the shipped growth markers
  std::optional<ExpansionPatch> expansion;
  std::string provenance;
};

namespace detail {

inline int find_face(const FigurePatch& fp, const std::vector<int>& points) {
  std::vector<int> want;
  want.reserve(points.size());
  for (int p : points) want.push_back(fp.vertex_of_point[p]);
  std::sort(want.begin(), want.end());
  const auto& m = fp.patch.map();
  for (int f = 0; f < m.num_faces(); f++) {
    auto vs = m.face_vertices(f);
    std::sort(vs.begin(), vs.end());
    if (vs == want) return f;
  }
  throw UnknownNameError("figure face not found");
}

struct MarkerSpec {
  GrowthMarker::Kind kind;
  int point_a, point_b;  // point_b = -1 for circled vertices
  std::vector<int> face1_points, face2_points;
};

struct RoleSpec {
  std::vector<int> i, o, ip;  // point indices
  int s = 0;
};

inline CatalogPatch make_entry(std::string name, const Figure& fig, int r,
                               const std::vector<MarkerSpec>& marker_specs,
                               const std::optional<RoleSpec>& role_spec, std::string prov) {
  FigurePatch fp = patch_from_figure(fig, r);
  std::vector<GrowthMarker> markers;
  for (const auto& ms : marker_specs) {
    GrowthMarker mk;
    mk.kind = ms.kind;
    mk.anchor_a = fp.vertex_of_point[ms.point_a];
    mk.anchor_b = ms.point_b >= 0 ? fp.vertex_of_point[ms.point_b] : -1;
    mk.face1 = find_face(fp, ms.face1_points);
    mk.face2 = find_face(fp, ms.face2_points);
    markers.push_back(mk);
  }
  CatalogPatch entry;
  entry.name = std::move(name);
  entry.patch = Patch::create(fp.patch.map(), fp.patch.outer_face(), r, std::move(markers));
  if (role_spec) {
    ExpansionRoles roles;
    for (int p : role_spec->i) roles.i.push_back(fp.vertex_of_point[p]);
    for (int p : role_spec->o) roles.o.push_back(fp.vertex_of_point[p]);
    for (int p : role_spec->ip) roles.ip.push_back(fp.vertex_of_point[p]);
    roles.s = role_spec->s;
    entry.expansion = validate_expansion_patch(entry.patch, roles);
  }
  entry.provenance = std::move(prov);
  return entry;
}

}  // namespace detail

inline CatalogPatch catalog_patch(const std::string& name) {
  using Kind = GrowthMarker::Kind;
  if (name == "H") {
    // Hexagon as an expansion 3-patch; outer tuple (2, 1).
    Figure fig;
    for (int t = 0; t < 6; t++) {
      double a = t * M_PI / 3.0;
      fig.points.push_back({2 * std::cos(a), 2 * std::sin(a)});
      fig.edges.push_back({t, (t + 1) % 6});
    }
    return detail::make_entry("H", fig, 3, {},
                              detail::RoleSpec{{4, 3}, {3, 2, 1, 0}, {5, 0}, 2},
                              "hexagon expansion 3-patch");
  }
  if (name == "Q2") {
    // Two quadrangles sharing an edge; expansion 4-patch, outer tuple (2, 2).
    Figure fig;
    fig.points = {{-2, -1}, {-2, 1}, {0, 1}, {2, 1}, {2, -1}, {0, -1}};
    fig.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 5}};
    return detail::make_entry("Q2", fig, 4, {},
                              detail::RoleSpec{{0, 1}, {1, 2, 3, 4}, {5, 4}, 2},
                              "two quadrangles expansion 4-patch");
  }
  if (name == "PN35") {
    // Four triangles and four pentagons; outer tuple (1,2,1,3,2,3).
    // Two square growth markers, each aimed at two pentagons.
    Figure fig;
    fig.points = {{0.5, 1},  {-0.5, 1}, {-1.5, 3}, {-4, 6},     {-3.5, 7},
                  {-2.5, 7}, {-1, 6.5}, {-0.5, 7}, {0.5, 7},    {1, 7.5},
                  {2.5, 7},  {1.5, 3},  {-0.5, 4.5}, {0.5, 3},  {-1, 6}};
    fig.edges = {{0, 1},  {1, 2},  {2, 3},   {3, 4},  {4, 5},   {5, 6},   {6, 7},  {7, 8},
                 {8, 9},  {9, 10}, {10, 11}, {11, 0}, {2, 12},  {12, 13}, {13, 0}, {3, 14},
                 {14, 6}, {2, 14}, {12, 14}, {12, 8}, {13, 8},  {13, 9}};
    std::vector<detail::MarkerSpec> ms = {
        {Kind::Square, 2, 14, {1, 2, 12, 13, 0}, {3, 4, 5, 6, 14}},
        {Kind::Square, 13, 8, {13, 9, 10, 11, 0}, {12, 8, 7, 6, 14}},
    };
    return detail::make_entry("PN35", fig, 4, ms,
                              detail::RoleSpec{{1, 2, 3}, {3, 4, 5, 6, 7, 8, 9, 10},
                                               {0, 11, 10}, 1},
                              "triangle/pentagon expansion 4-patch, doubles as P_P");
  }
  if (name == "PN37") {
    // Six triangles and two heptagons; outer tuple (2,2,3,2,1,3,2,1,2,2).
    // One circled-vertex marker aimed at the two heptagons.
    Figure fig;
    fig.points = {{0, 1.5},   {-1, 2},  {-0.5, 3},  {0.5, 3.5}, {1.5, 3}, {2.5, 3},
                  {4.5, 2.5}, {5.5, 3}, {6.5, 2.5}, {5.5, 2},   {5, 1},   {4, 0.5},
                  {3, 0.5},   {2, 0},   {2, 1},     {1, 1.5},   {2, 2}};
    fig.edges = {{0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},   {6, 7},   {7, 8},
                 {8, 9},   {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 0},
                 {12, 14}, {14, 16}, {16, 15}, {4, 16},  {16, 5},  {10, 6},  {6, 9},   {9, 7}};
    std::vector<detail::MarkerSpec> ms = {
        {Kind::Vertex, 16, -1, {0, 1, 2, 3, 4, 16, 15}, {5, 6, 10, 11, 12, 14, 16}},
    };
    return detail::make_entry("PN37", fig, 4, ms,
                              detail::RoleSpec{{0, 1, 2},
                                               {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
                                               {15, 14, 13}, 1},
                              "triangle/heptagon expansion 4-patch");
  }
  if (name == "PF35") {
    // Eight triangles and eight pentagons; the o-4-gonal companion of PN35.
    // Three diamond markers plus one circled vertex cover the 8 pentagons.
    Figure fig;
    fig.points = {{-0.145531, 0.231610},  {-0.063274, -0.419927}, {0.405804, -0.125166},
                  {-0.993712, 0.111964},  {-0.993712, -0.111964}, {-0.330279, -0.943883},
                  {-0.111964, -0.993712}, {0.111964, -0.993712},  {0.943883, -0.330279},
                  {0.993712, -0.111964},  {0.993712, 0.111964},   {0.330279, 0.943883},
                  {0.111964, 0.993712},   {-0.943883, 0.330279},  {-0.111964, 0.993712},
                  {-0.532032, 0.846724},  {-0.707107, 0.707107},  {-0.846724, 0.532032},
                  {-0.330279, 0.943883},  {-0.846724, -0.532032}, {-0.707107, -0.707107},
                  {-0.532032, -0.846724}, {-0.943883, -0.330279}, {0.532032, -0.846724},
                  {0.707107, -0.707107},  {0.846724, -0.532032},  {0.330279, -0.943883},
                  {0.846724, 0.532032},   {0.707107, 0.707107},   {0.532032, 0.846724},
                  {0.943883, 0.330279}};
    fig.edges = {{0, 1},   {1, 2},   {2, 0},   {0, 3},   {3, 4},   {4, 5},   {5, 1},   {5, 6},
                 {6, 1},   {6, 7},   {7, 8},   {8, 2},   {8, 9},   {9, 2},   {9, 10},  {10, 11},
                 {11, 0},  {11, 12}, {12, 13}, {13, 3},  {12, 14}, {14, 13}, {14, 15}, {15, 16},
                 {16, 17}, {17, 13}, {14, 18}, {18, 15}, {4, 19},  {19, 20}, {20, 21}, {21, 5},
                 {4, 22},  {22, 19}, {7, 23},  {23, 24}, {24, 25}, {25, 8},  {7, 26},  {26, 23},
                 {10, 27}, {27, 28}, {28, 29}, {29, 11}, {10, 30}, {30, 27}};
    std::vector<detail::MarkerSpec> ms = {
        {Kind::Diamond, 4, 5, {4, 5, 1, 0, 3}, {4, 19, 20, 21, 5}},
        {Kind::Diamond, 7, 8, {7, 8, 2, 1, 6}, {7, 23, 24, 25, 8}},
        {Kind::Diamond, 10, 11, {10, 11, 0, 2, 9}, {10, 27, 28, 29, 11}},
        {Kind::Vertex, 13, -1, {3, 13, 12, 11, 0}, {13, 14, 15, 16, 17}},
    };
    return detail::make_entry("PF35", fig, 4, ms, std::nullopt,
                              "triangle/pentagon o-4-gonal 4-patch");
  }
  throw UnknownNameError("no catalog patch named '" + name + "'");
}

inline std::vector<std::string> catalog_patch_names() {
  return {"H", "Q2", "PN35", "PF35", "PN37"};
}

inline OrientedMap seed_from_faces(const std::vector<std::vector<VertexLabel>>& faces) {
  FaceComplex fc;
  fc.faces = faces;
  return build_from_faces(fc).map;
}

inline OrientedMap torus_grid(int m, int n) {
  if (m < 3 || n < 3)
    throw BadParamsError("torus_grid needs m, n >= 3 (smaller grids double edges)");
  auto v = [&](int i, int j) -> VertexLabel { return ((i % m + m) % m) * n + ((j % n + n) % n); };
  std::vector<std::vector<VertexLabel>> faces;
  for (int i = 0; i < m; i++)
    for (int j = 0; j < n; j++)
      faces.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)});
  return seed_from_faces(faces);
}

inline OrientedMap catalog_seed(const std::string& name, int m = 0, int n = 0) {
  if (name == "tetrahedron")
    return seed_from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
  if (name == "cube")
    return seed_from_faces({{0, 3, 2, 1},
                            {4, 5, 6, 7},
                            {0, 1, 5, 4},
                            {1, 2, 6, 5},
                            {2, 3, 7, 6},
                            {3, 0, 4, 7}});
  if (name == "octahedron")
    return seed_from_faces({{0, 1, 2},
                            {0, 2, 3},
                            {0, 3, 4},
                            {0, 4, 1},
                            {5, 2, 1},
                            {5, 3, 2},
                            {5, 4, 3},
                            {5, 1, 4}});
  if (name == "icosahedron")
    return seed_from_faces({{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},   {0, 5, 1},
                            {1, 6, 2},  {2, 7, 3},  {3, 8, 4},  {4, 9, 5},   {5, 10, 1},
                            {2, 6, 7},  {3, 7, 8},  {4, 8, 9},  {5, 9, 10},  {1, 10, 6},
                            {11, 7, 6}, {11, 8, 7}, {11, 9, 8}, {11, 10, 9}, {11, 6, 10}});
  if (name == "torus_grid") return torus_grid(m, n);
  throw UnknownNameError("no catalog seed named '" + name + "'");
}

inline std::vector<std::string> catalog_seed_names() {
  return {"tetrahedron", "cube", "octahedron", "icosahedron", "torus_grid(m,n)"};
}

}  // namespace polymap
