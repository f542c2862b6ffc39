// Hand-built structures shared across the suites.
#pragma once

#include <map>

#include "polymap/catalog.hpp"
#include "polymap/oriented_map.hpp"

namespace polymap::fixtures {

// Two K4-minus-an-edge blocks joined by two edges, embedded in the sphere.
// The two hexagonal faces share the two disjoint joining edges, so the map is
// 3-regular, simple and valid but not polyhedral and not 3-connected.
inline OrientedMap barbell() {
  // vertices: a1 b1 c1 d1 a2 b2 c2 d2 = 0..7
  return seed_from_faces({
      {0, 2, 1},           // west triangle of block 1
      {0, 1, 3},           // east triangle of block 1
      {4, 7, 5},           // block 2
      {4, 5, 6},
      {0, 3, 7, 4, 6, 2},  // upper hexagon
      {1, 2, 6, 5, 7, 3},  // lower hexagon
  });
}

// Theta graph on the sphere: two vertices joined by three parallel edges.
// Valid rotation system with multi-edges (three bigon faces).
inline OrientedMap theta() {
  std::map<int, int> alpha{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}};
  std::map<int, int> sigma{{0, 2}, {2, 4}, {4, 0}, {1, 5}, {5, 3}, {3, 1}};
  return OrientedMap::build(alpha, sigma);
}

// Tetrahedron with one edge subdivided: vertex 4 is 2-valent.
inline OrientedMap subdivided_tetrahedron() {
  return seed_from_faces({{0, 4, 1, 2}, {0, 2, 3}, {0, 3, 1, 4}, {1, 3, 2}});
}

// Dart tables of two disjoint triangles (each vertex 2-valent).
inline std::pair<std::map<int, int>, std::map<int, int>> two_triangle_tables() {
  std::map<int, int> alpha, sigma;
  for (int base : {0, 6}) {
    for (int e = 0; e < 3; e++) {
      alpha[base + 2 * e] = base + 2 * e + 1;
      alpha[base + 2 * e + 1] = base + 2 * e;
    }
    // triangle A-B-C with darts A->B, B->A, B->C, C->B, C->A, A->C
    sigma[base + 0] = base + 5;
    sigma[base + 5] = base + 0;
    sigma[base + 1] = base + 2;
    sigma[base + 2] = base + 1;
    sigma[base + 3] = base + 4;
    sigma[base + 4] = base + 3;
  }
  return {alpha, sigma};
}

// Independent construction of the m x n torus quadrangulation by explicit
// dart tables: vertex (i,j) carries darts E,N,W,S with counterclockwise
// rotation E -> N -> W -> S.
inline OrientedMap torus_grid_by_darts(int m, int n) {
  auto vid = [&](int i, int j) { return ((i % m + m) % m) * n + ((j % n + n) % n); };
  auto dart = [&](int i, int j, int dir) { return 4 * vid(i, j) + dir; };
  const int E = 0, N = 1, W = 2, S = 3;
  std::map<int, int> alpha, sigma;
  for (int i = 0; i < m; i++) {
    for (int j = 0; j < n; j++) {
      for (int dir = 0; dir < 4; dir++)
        sigma[dart(i, j, dir)] = dart(i, j, (dir + 1) % 4);
      alpha[dart(i, j, E)] = dart(i + 1, j, W);
      alpha[dart(i, j, W)] = dart(i - 1, j, E);
      alpha[dart(i, j, N)] = dart(i, j + 1, S);
      alpha[dart(i, j, S)] = dart(i, j - 1, N);
    }
  }
  return OrientedMap::build(alpha, sigma);
}

}  // namespace polymap::fixtures
