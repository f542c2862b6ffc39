// Dart-based rotation systems for graphs cellularly embedded in closed
// orientable surfaces. A map is a fixed-point-free involution alpha (edge
// pairing) plus a permutation sigma (counterclockwise successor around the
// origin vertex) acting on a finite dart set. Vertices are sigma-orbits,
// edges alpha-orbits, faces orbits of phi = sigma o alpha; a face orbit
// traverses its boundary with the face on the right of each dart.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polymap/count_seq.hpp"
#include "polymap/error.hpp"

namespace polymap {

struct MapSummary {
  long long num_vertices = 0;
  long long num_edges = 0;
  long long num_faces = 0;
  long long euler_characteristic = 0;
  long long genus = 0;
  CountSeq p_vector;
  CountSeq v_vector;

  bool operator==(const MapSummary& o) const {
    return num_vertices == o.num_vertices && num_edges == o.num_edges &&
           num_faces == o.num_faces && euler_characteristic == o.euler_characteristic &&
           genus == o.genus && p_vector == o.p_vector && v_vector == o.v_vector;
  }
};

class OrientedMap {
public:
  OrientedMap() = default;

  // alpha and sigma as maps over external dart ids; both must cover the same
  // finite dart set.
  static OrientedMap build(const std::map<int, int>& alpha, const std::map<int, int>& sigma) {
    OrientedMap m;
    for (auto& [d, _] : alpha) m.ids_.push_back(d);
    {
      std::vector<int> sig_ids;
      for (auto& [d, _] : sigma) sig_ids.push_back(d);
      if (sig_ids != m.ids_)
        throw NotPermutationError("alpha and sigma must be defined on the same dart set");
    }
    const int n = static_cast<int>(m.ids_.size());
    if (n == 0) throw NotPermutationError("empty dart set");
    auto dense = [&](int id) {
      auto it = std::lower_bound(m.ids_.begin(), m.ids_.end(), id);
      if (it == m.ids_.end() || *it != id) return -1;
      return static_cast<int>(it - m.ids_.begin());
    };
    m.alpha_.assign(n, -1);
    m.sigma_.assign(n, -1);
    std::vector<int> sigma_seen(n, 0);
    for (auto& [d, a] : alpha) {
      int di = dense(d), ai = dense(a);
      if (ai < 0) throw NotInvolutionError("alpha image " + std::to_string(a) + " not a dart");
      m.alpha_[di] = ai;
    }
    for (auto& [d, s] : sigma) {
      int di = dense(d), si = dense(s);
      if (si < 0) throw NotPermutationError("sigma image " + std::to_string(s) + " not a dart");
      m.sigma_[di] = si;
      sigma_seen[si]++;
    }
    for (int i = 0; i < n; i++) {
      if (m.alpha_[i] == i)
        throw NotInvolutionError("alpha fixes dart " + std::to_string(m.ids_[i]));
      if (m.alpha_[m.alpha_[i]] != i)
        throw NotInvolutionError("alpha not an involution at dart " + std::to_string(m.ids_[i]));
      if (sigma_seen[i] != 1)
        throw NotPermutationError("sigma not a bijection at dart " + std::to_string(m.ids_[i]));
    }
    m.finish();
    return m;
  }

  // Dense construction used by the builders: darts 0..n-1.
  static OrientedMap build_dense(std::vector<int> alpha, std::vector<int> sigma) {
    OrientedMap m;
    const int n = static_cast<int>(alpha.size());
    m.ids_.resize(n);
    for (int i = 0; i < n; i++) m.ids_[i] = i;
    m.alpha_ = std::move(alpha);
    m.sigma_ = std::move(sigma);
    std::vector<int> seen(n, 0);
    for (int i = 0; i < n; i++) {
      if (m.alpha_[i] < 0 || m.alpha_[i] >= n || m.alpha_[i] == i || m.alpha_[m.alpha_[i]] != i)
        throw NotInvolutionError("bad alpha at dart " + std::to_string(i));
      if (m.sigma_[i] < 0 || m.sigma_[i] >= n)
        throw NotPermutationError("bad sigma at dart " + std::to_string(i));
      seen[m.sigma_[i]]++;
    }
    for (int i = 0; i < n; i++)
      if (seen[i] != 1) throw NotPermutationError("sigma not a bijection at dart " + std::to_string(i));
    m.finish();
    return m;
  }

  int dart_count() const { return static_cast<int>(ids_.size()); }
  const std::vector<int>& dart_ids() const { return ids_; }
  int id_of(int dart) const { return ids_[dart]; }
  int dart_of_id(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
  }

  int alpha(int d) const { return alpha_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int phi(int d) const { return sigma_[alpha_[d]]; }

  int vertex_of(int d) const { return vertex_of_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  int face_of(int d) const { return face_of_[d]; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  // Darts of a vertex in sigma-cycle order, of a face in phi-cycle order.
  const std::vector<int>& vertex_darts(int v) const { return vertices_[v]; }
  const std::vector<int>& edge_darts(int e) const { return edges_[e]; }
  const std::vector<int>& face_darts(int f) const { return faces_[f]; }

  int degree(int v) const { return static_cast<int>(vertices_[v].size()); }
  int face_size(int f) const { return static_cast<int>(faces_[f].size()); }

  // Endpoints of an edge; for the origin of a dart use vertex_of.
  std::pair<int, int> edge_endpoints(int e) const {
    return {vertex_of_[edges_[e][0]], vertex_of_[edges_[e][1]]};
  }

  // Face boundary as vertex orbits, in phi order (org of each orbit dart).
  std::vector<int> face_vertices(int f) const {
    std::vector<int> vs;
    vs.reserve(faces_[f].size());
    for (int d : faces_[f]) vs.push_back(vertex_of_[d]);
    return vs;
  }
  std::vector<int> face_edges(int f) const {
    std::vector<int> es;
    es.reserve(faces_[f].size());
    for (int d : faces_[f]) es.push_back(edge_of_[d]);
    return es;
  }

  long long euler_characteristic() const {
    return static_cast<long long>(num_vertices()) - num_edges() + num_faces();
  }

  MapSummary summarize() const {
    MapSummary s;
    s.num_vertices = num_vertices();
    s.num_edges = num_edges();
    s.num_faces = num_faces();
    s.euler_characteristic = euler_characteristic();
    s.genus = (2 - s.euler_characteristic) / 2;
    for (const auto& orbit : faces_) s.p_vector.add_count(static_cast<int>(orbit.size()), 1);
    for (const auto& orbit : vertices_) s.v_vector.add_count(static_cast<int>(orbit.size()), 1);
    return s;
  }

  // Dual map: same darts and alpha, sigma* = phi. Vertices and faces swap.
  OrientedMap dual() const {
    OrientedMap m;
    m.ids_ = ids_;
    m.alpha_ = alpha_;
    m.sigma_.resize(dart_count());
    for (int d = 0; d < dart_count(); d++) m.sigma_[d] = phi(d);
    m.finish();
    return m;
  }

  // Simple-graph adjacency between vertex orbits (multi-edges collapse).
  std::vector<std::vector<int>> simple_adjacency() const {
    std::vector<std::vector<int>> adj(num_vertices());
    for (const auto& e : edges_) {
      int u = vertex_of_[e[0]], v = vertex_of_[e[1]];
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& nb : adj) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return adj;
  }

  struct SimpleReport {
    bool ok = true;
    std::vector<std::string> violations;
  };

  // Simple graph, min valence 3, at least 3 faces.
  SimpleReport simple_valid_report() const {
    SimpleReport rep;
    std::map<std::pair<int, int>, int> pair_count;
    for (int e = 0; e < num_edges(); e++) {
      auto [u, v] = edge_endpoints(e);
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
    for (int v = 0; v < num_vertices(); v++)
      if (degree(v) < 3)
        rep.violations.push_back("vertex " + std::to_string(v) + " has valence " +
                                 std::to_string(degree(v)) + " < 3");
    if (num_faces() < 3) rep.violations.push_back("fewer than 3 faces");
    rep.ok = rep.violations.empty();
    return rep;
  }

  // Shared incidences of two distinct faces: counts of common vertices/edges.
  struct FaceMeeting {
    int shared_vertices = 0;
    int shared_edges = 0;
    bool proper = false;
  };

  FaceMeeting face_meeting(int f1, int f2) const {
    if (f1 == f2) throw SameFaceError("faces must be distinct");
    auto vs1 = sorted_unique(face_vertices(f1));
    auto vs2 = sorted_unique(face_vertices(f2));
    auto es1 = sorted_unique(face_edges(f1));
    auto es2 = sorted_unique(face_edges(f2));
    FaceMeeting meet;
    meet.shared_vertices = intersection_size(vs1, vs2);
    meet.shared_edges = intersection_size(es1, es2);
    meet.proper = (meet.shared_edges == 0 && meet.shared_vertices <= 1) ||
                  (meet.shared_edges == 1 && meet.shared_vertices == 2);
    return meet;
  }

  bool meets_properly(int f1, int f2) const { return face_meeting(f1, f2).proper; }

  struct PolyhedralReport {
    bool ok = true;
    int witness_f1 = -1, witness_f2 = -1;
  };

  // All unordered face pairs meet properly. Pairs sharing no vertex are
  // proper automatically, so only pairs found through a common vertex are
  // examined. skip_face excludes one face (a patch's outer face).
  PolyhedralReport polyhedral_report(int skip_face = -1) const {
    std::vector<std::vector<int>> faces_at(num_vertices());
    for (int f = 0; f < num_faces(); f++) {
      if (f == skip_face) continue;
      for (int v : sorted_unique(face_vertices(f))) faces_at[v].push_back(f);
    }
    std::vector<std::vector<int>> fverts(num_faces()), fedges(num_faces());
    for (int f = 0; f < num_faces(); f++) {
      if (f == skip_face) continue;
      fverts[f] = sorted_unique(face_vertices(f));
      fedges[f] = sorted_unique(face_edges(f));
    }
    std::vector<std::pair<int, int>> candidates;
    for (int v = 0; v < num_vertices(); v++)
      for (size_t i = 0; i < faces_at[v].size(); i++)
        for (size_t j = i + 1; j < faces_at[v].size(); j++)
          candidates.emplace_back(faces_at[v][i], faces_at[v][j]);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto& [f1, f2] : candidates) {
      int sv = intersection_size(fverts[f1], fverts[f2]);
      int se = intersection_size(fedges[f1], fedges[f2]);
      bool proper = (se == 0 && sv <= 1) || (se == 1 && sv == 2);
      if (!proper) return {false, f1, f2};
    }
    return {};
  }

  bool is_polyhedral() const { return polyhedral_report().ok; }

  // Literal brute-force test: at least 3 vertices and removing any 2 leaves
  // the simple graph connected.
  bool is_three_connected() const {
    const int n = num_vertices();
    if (n < 3) return false;
    auto adj = simple_adjacency();
    std::vector<int> stack, mark(n, 0);
    int stamp = 0;
    for (int a = 0; a < n; a++) {
      for (int b = a + 1; b < n; b++) {
        stamp++;
        int start = -1;
        for (int v = 0; v < n && start < 0; v++)
          if (v != a && v != b) start = v;
        if (start < 0) return true;  // nothing left to disconnect
        stack.assign(1, start);
        mark[start] = stamp;
        int seen = 1;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int w : adj[v]) {
            if (w == a || w == b || mark[w] == stamp) continue;
            mark[w] = stamp;
            seen++;
            stack.push_back(w);
          }
        }
        if (seen != n - 2) return false;
      }
    }
    return true;
  }

private:
  void finish() {
    const int n = dart_count();
    sigma_inv_.assign(n, -1);
    for (int d = 0; d < n; d++) sigma_inv_[sigma_[d]] = d;
    vertex_of_.assign(n, -1);
    edge_of_.assign(n, -1);
    face_of_.assign(n, -1);
    collect_orbits([this](int d) { return sigma_[d]; }, vertex_of_, vertices_);
    collect_orbits([this](int d) { return alpha_[d]; }, edge_of_, edges_);
    collect_orbits([this](int d) { return phi(d); }, face_of_, faces_);
    check_connected();
  }

  template <typename Next>
  void collect_orbits(Next next, std::vector<int>& orbit_of, std::vector<std::vector<int>>& orbits) {
    orbits.clear();
    for (int d = 0; d < dart_count(); d++) {
      if (orbit_of[d] != -1) continue;
      int oid = static_cast<int>(orbits.size());
      std::vector<int> cycle;
      int cur = d;
      do {
        orbit_of[cur] = oid;
        cycle.push_back(cur);
        cur = next(cur);
      } while (cur != d);
      orbits.push_back(std::move(cycle));
    }
  }

  void check_connected() const {
    std::vector<char> seen(dart_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      for (int nd : {alpha_[d], sigma_[d]}) {
        if (!seen[nd]) {
          seen[nd] = 1;
          count++;
          stack.push_back(nd);
        }
      }
    }
    if (count != dart_count())
      throw DisconnectedError("dart set splits into several components");
  }

  static std::vector<int> sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  static int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        i++;
      } else if (b[j] < a[i]) {
        j++;
      } else {
        count++;
        i++;
        j++;
      }
    }
    return count;
  }

  std::vector<int> ids_;
  std::vector<int> alpha_, sigma_, sigma_inv_;
  std::vector<int> vertex_of_, edge_of_, face_of_;
  std::vector<std::vector<int>> vertices_, edges_, faces_;
};

}  // namespace polymap
