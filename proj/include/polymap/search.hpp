// Bounded exhaustive search for o-4-gonal r-patches with restricted face
// sizes. The boundary is fully prescribed by the outer tuple; the interior is
// filled face by face over a stack of disk regions. A face placed at the base
// edge of a region may consume further region sides, chord forward across the
// region (splitting the disk), or grow fresh chains of interior vertices, so
// the enumeration covers every simple filling. Deterministic order: face
// sizes ascending, steps consume < chord < fresh chain; iterative deepening
// on the total vertex count keeps the first hit vertex-minimal.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "polymap/error.hpp"
#include "polymap/face_complex.hpp"
#include "polymap/patch.hpp"

namespace polymap {

struct SearchBounds {
  int max_inner_faces = 16;
  int max_vertices = 48;            // boundary + interior
  long long max_nodes = 2'000'000;  // DFS step budget
};

struct SearchOutcome {
  std::optional<Patch> patch;
  bool exhausted_bounds = false;  // a branch was cut by a bound or the budget
  long long nodes = 0;
};

namespace detail {

class PatchSearch {
public:
  PatchSearch(const std::vector<int>& outer_tuple, int r, const std::set<int>& allowed,
              const SearchBounds& bounds)
      : tuple_(outer_tuple), r_(r), allowed_(allowed.begin(), allowed.end()), bounds_(bounds) {}

  SearchOutcome run() {
    const int N = static_cast<int>(tuple_.size());
    const int B = 4 * (N + 1);
    SearchOutcome out;
    if (B > bounds_.max_vertices) {
      out.exhausted_bounds = true;
      return out;
    }
    long long total_nodes = 0;
    bool any_cut = false;
    for (int budget = B; budget <= bounds_.max_vertices; budget++) {
      int faces_needed = census_faces(B, budget);
      if (faces_needed < 0) continue;  // no face census fits this vertex count
      if (faces_needed > bounds_.max_inner_faces) {
        any_cut = true;
        continue;
      }
      init(B, N);
      vertex_budget_ = budget;
      face_target_ = faces_needed;
      found_.reset();
      bool hit = dfs();
      total_nodes += nodes_;
      any_cut = any_cut || cut_;
      if (hit && found_) {
        out.patch = std::move(found_);
        out.nodes = total_nodes;
        return out;
      }
      if (total_nodes >= bounds_.max_nodes) break;
    }
    out.exhausted_bounds = any_cut || total_nodes >= bounds_.max_nodes;
    out.nodes = total_nodes;
    return out;
  }

  // Inner face count forced by Euler's relation and double counting for a
  // patch with this exact vertex count, or -1 when no face multiset over the
  // allowed sizes matches.
  int census_faces(int B, int total_vertices) const {
    long long boundary_degree_sum = 4LL * 2;
    for (int w : tuple_) boundary_degree_sum += 4LL * (w + 1);
    long long vi = total_vertices - B;
    long long twice_edges = boundary_degree_sum + static_cast<long long>(r_) * vi;
    if (twice_edges % 2 != 0) return -1;
    long long edges = twice_edges / 2;
    long long faces = edges - total_vertices + 1;
    long long size_sum = twice_edges - B;
    if (faces < 1) return -1;
    // reachability of (faces, size_sum) over the allowed sizes
    std::vector<char> reach(size_sum + 1, 0);
    reach[0] = 1;
    for (long long f = 1; f <= faces; f++) {
      std::vector<char> next(size_sum + 1, 0);
      for (long long s = 0; s <= size_sum; s++) {
        if (!reach[s]) continue;
        for (int g : allowed_)
          if (s + g <= size_sum) next[s + g] = 1;
      }
      reach = std::move(next);
    }
    return reach[size_sum] ? static_cast<int>(faces) : -1;
  }

private:
  // One span of a face walk between two visited region positions: either a
  // consumed region side (to == from + 1, empty chain) or a chain of fresh
  // vertices landing forward (to == t closes the walk at position 0).
  struct Segment {
    int from, to;
    std::vector<int> chain;

    bool is_chain(int) const { return !(chain.empty() && to == from + 1); }
  };
  using Segments = std::vector<Segment>;

  void init(int B, int N) {
    caps_.clear();
    occ_.clear();
    regions_.clear();
    edges_.clear();
    faces_.clear();
    boundary_.clear();
    nodes_ = 0;
    cut_ = false;
    // Region in face orientation; the outer walk is its reversal, so each
    // block lays out the corner first and then the tuple reversed.
    for (int block = 0; block < 4; block++) {
      add_vertex(2);
      for (int j = N - 1; j >= 0; j--) add_vertex(tuple_[j] + 1);
    }
    for (int i = 0; i < B; i++) {
      boundary_.push_back(i);
      add_edge(i, (i + 1) % B);
      caps_[i] -= 2;
      occ_[i] = 1;
    }
    regions_.push_back(boundary_);
  }

  int add_vertex(int target_degree) {
    caps_.push_back(target_degree);
    occ_.push_back(0);
    return static_cast<int>(caps_.size()) - 1;
  }

  static std::pair<int, int> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }
  bool has_edge(int a, int b) const { return edges_.count(key(a, b)) > 0; }
  void add_edge(int a, int b) { edges_.insert(key(a, b)); }
  void remove_edge(int a, int b) { edges_.erase(key(a, b)); }

  bool dfs() {
    if (++nodes_ >= bounds_.max_nodes) {
      cut_ = true;
      return false;
    }
    if (regions_.empty()) return assemble();
    if (static_cast<int>(faces_.size() + regions_.size()) > face_target_) return false;
    std::vector<int> region = std::move(regions_.back());
    regions_.pop_back();
    // A run of L filled-degree vertices forces one face to consume the whole
    // run, so that face has at least L + 2 sides; a region with no capacity
    // anywhere must be exactly one allowed face.
    {
      const int t = static_cast<int>(region.size());
      int longest = 0, current = 0;
      for (int i = 0; i < 2 * t && longest < t; i++) {
        if (caps_[region[i % t]] == 0) {
          current++;
          longest = std::max(longest, current);
        } else {
          current = 0;
        }
      }
      bool dead;
      if (longest >= t)
        dead = !std::binary_search(allowed_.begin(), allowed_.end(), t);
      else
        dead = longest + 2 > allowed_.back();
      if (dead) {
        regions_.push_back(std::move(region));
        return false;
      }
    }

    // Root the base edge so the walk starts at the most constrained vertex.
    const int t = static_cast<int>(region.size());
    int pivot = 0;
    for (int i = 1; i < t; i++)
      if (caps_[region[(i + 1) % t]] < caps_[region[(pivot + 1) % t]]) pivot = i;
    std::rotate(region.begin(), region.begin() + pivot, region.end());

    bool ok = false;
    for (int g : allowed_) {
      Segments segments;
      if (walk(region, segments, 1, g - 1)) {
        ok = true;
        break;
      }
    }
    regions_.push_back(std::move(region));
    return ok;
  }

  // Extends the face walk from on-region position `pos` with `left` sides to
  // place; the walk started with the consumed base side region[0]->region[1].
  bool walk(const std::vector<int>& region, Segments& segments, int pos, int left) {
    const int t = static_cast<int>(region.size());
    if (left == 0) return finish_face(region, segments);
    // consume the next region side (position t closes at region[0])
    {
      bool closes = (pos + 1 == t);
      if (closes == (left == 1)) {
        segments.push_back({pos, pos + 1, {}});
        if (walk(region, segments, pos + 1, left - 1)) return true;
        segments.pop_back();
      }
    }
    if (caps_[region[pos]] >= 1) {
      // chord forward; q == t closes at region[0]
      for (int q = pos + 2; q <= t; q++) {
        if ((q == t) != (left == 1)) continue;
        int target = region[q % t];
        if (caps_[target] < 1 || has_edge(region[pos], target)) continue;
        caps_[region[pos]]--;
        caps_[target]--;
        add_edge(region[pos], target);
        segments.push_back({pos, q, {}});
        bool ok = walk(region, segments, q % t, left - 1);
        if (ok) return true;
        segments.pop_back();
        remove_edge(region[pos], target);
        caps_[region[pos]]++;
        caps_[target]++;
      }
      // fresh chain
      if (left >= 2 && static_cast<int>(caps_.size()) < vertex_budget_)
        if (chain_walk(region, segments, pos, {}, left)) return true;
    }
    return false;
  }

  // Grows a fresh chain hanging off region position `from`, then lands it.
  bool chain_walk(const std::vector<int>& region, Segments& segments, int from,
                  std::vector<int> chain, int left) {
    const int t = static_cast<int>(region.size());
    int tail = chain.empty() ? region[from] : chain.back();
    int z = add_vertex(r_);
    caps_[tail]--;
    caps_[z]--;
    add_edge(tail, z);
    occ_[z] = 1;
    chain.push_back(z);
    const int used = static_cast<int>(chain.size()) + 1;  // chain sides + landing side
    bool ok = false;
    for (int q = from + 1; q <= t && !ok; q++) {
      if ((q == t) != (left == used)) continue;
      int target = region[q % t];
      if (caps_[target] < 1 || has_edge(z, target)) continue;
      caps_[z]--;
      caps_[target]--;
      add_edge(z, target);
      segments.push_back({from, q, chain});
      ok = walk(region, segments, q % t, left - used);
      if (!ok) {
        segments.pop_back();
        remove_edge(z, target);
        caps_[z]++;
        caps_[target]++;
      }
    }
    if (!ok && left > used && static_cast<int>(caps_.size()) < vertex_budget_ && caps_[z] >= 1)
      ok = chain_walk(region, segments, from, chain, left);
    if (!ok) {
      remove_edge(tail, z);
      caps_[tail]++;
      caps_.pop_back();
      occ_.pop_back();
    }
    return ok;
  }

  bool finish_face(const std::vector<int>& region, const Segments& segments) {
    const int t = static_cast<int>(region.size());
    const int m = static_cast<int>(segments.size());

    // Corner accounting. Joint j sits between segment j-1 and segment j
    // (joint 0 follows the consumed base side, joint m is back at region[0]).
    // A visited vertex keeps one open corner per adjacent chained segment and
    // otherwise leaves the boundary, which demands a filled degree.
    std::vector<std::pair<int, int>> occ_delta;  // (vertex, delta)
    {
      std::vector<int> delta(m + 1, -1);
      for (int j = 0; j < m; j++) {
        if (segments[j].is_chain(t)) {
          delta[j]++;
          delta[j + 1]++;
        }
      }
      occ_delta.push_back({region[0], delta[m]});
      occ_delta.push_back({region[1], delta[0]});
      for (int j = 0; j + 1 < m; j++)
        occ_delta.push_back({region[segments[j].to % t], delta[j + 1]});
    }
    for (auto& [v, d] : occ_delta) occ_[v] += d;
    bool dead = false;
    for (auto& [v, d] : occ_delta)
      if (occ_[v] == 0 && caps_[v] != 0) dead = true;
    if (dead) {
      for (auto& [v, d] : occ_delta) occ_[v] -= d;
      return false;
    }

    std::vector<VertexLabel> face;
    face.push_back(region[0]);
    face.push_back(region[1]);
    size_t spawned = 0;
    for (const auto& seg : segments) {
      for (int z : seg.chain) face.push_back(z);
      if (seg.to < t) face.push_back(region[seg.to]);
      if (seg.is_chain(t)) {
        std::vector<int> sub;
        for (int q = seg.from; q <= seg.to; q++) sub.push_back(region[q % t]);
        for (auto it = seg.chain.rbegin(); it != seg.chain.rend(); ++it) sub.push_back(*it);
        regions_.push_back(std::move(sub));
        spawned++;
      }
    }
    faces_.push_back(std::move(face));

    bool ok = dfs();
    if (!ok) {
      faces_.pop_back();
      for (size_t i = 0; i < spawned; i++) regions_.pop_back();
      for (auto& [v, d] : occ_delta) occ_[v] -= d;
    }
    return ok;
  }

  bool assemble() {
    FaceComplex fc;
    fc.faces = faces_;
    fc.faces.emplace_back(boundary_.rbegin(), boundary_.rend());
    fc.outer = fc.faces.size() - 1;
    BuiltMap built = build_from_faces(fc);
    Patch p = Patch::create(std::move(built.map), built.outer_face, r_);
    if (!is_w_k_gonal(p, tuple_, 4, r_))
      throw ComplexError("search produced a patch with the wrong boundary pattern");
    found_ = std::move(p);
    return true;
  }

  std::vector<int> tuple_;
  int r_;
  std::vector<int> allowed_;
  SearchBounds bounds_;
  int vertex_budget_ = 0;
  int face_target_ = 0;

  std::vector<int> caps_, occ_, boundary_;
  std::vector<std::vector<int>> regions_;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::vector<VertexLabel>> faces_;
  std::optional<Patch> found_;
  long long nodes_ = 0;
  bool cut_ = false;
};

}  // namespace detail

inline SearchOutcome search_patch(const std::vector<int>& outer_tuple, int r,
                                  const std::set<int>& allowed_gons, const SearchBounds& bounds) {
  for (int g : allowed_gons)
    if (g < 3) throw BadParamsError("face sizes below 3 are not allowed");
  if (r < 3) throw BadParamsError("need r >= 3");
  if (!is_self_fitting(outer_tuple, r))
    throw NotSelfFittingError("outer tuple is not self-fitting for r");
  return detail::PatchSearch(outer_tuple, r, allowed_gons, bounds).run();
}

}  // namespace polymap
