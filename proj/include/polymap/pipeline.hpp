// Global constructions: admissibility arithmetic, face replacement with
// w-k-gonal patches (every edge subdivided by |w| vertices), the
// polyhedral-output expansion, and the two triangle-family realizers built
// from catalog patches and growth schedules.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polymap/catalog.hpp"
#include "polymap/count_seq.hpp"
#include "polymap/error.hpp"
#include "polymap/expansion.hpp"
#include "polymap/face_complex.hpp"
#include "polymap/growth.hpp"
#include "polymap/oriented_map.hpp"
#include "polymap/patch.hpp"
#include "polymap/search.hpp"

namespace polymap {

struct AdmissibilityReport {
  long long eq6_lhs = 0;  // sum (6-k) p_k + 2 sum (3-k) v_k
  long long eq4_lhs = 0;  // sum (4-k) p_k + sum (4-k) v_k
  bool sum_faces_eq_sum_vertices_weighted = false;
  bool parity_ok = false;
  long long chi = 0;
  bool admissible = false;
};

inline AdmissibilityReport check_admissible(const CountSeq& p, const CountSeq& v, long long chi) {
  if (chi % 2 != 0 || chi > 2)
    throw BadChiError("chi must be even and at most 2, got " + std::to_string(chi));
  AdmissibilityReport rep;
  rep.chi = chi;
  for (auto& [k, c] : p.entries()) {
    rep.eq6_lhs += (6 - k) * c;
    rep.eq4_lhs += (4 - k) * c;
  }
  for (auto& [k, c] : v.entries()) {
    rep.eq6_lhs += 2 * (3 - k) * c;
    rep.eq4_lhs += (4 - k) * c;
  }
  rep.sum_faces_eq_sum_vertices_weighted = p.weighted_total() == v.weighted_total();
  rep.parity_ok = p.weighted_total() % 2 == 0;
  rep.admissible = rep.eq6_lhs == 6 * chi && rep.eq4_lhs == 4 * chi &&
                   rep.sum_faces_eq_sum_vertices_weighted;
  return rep;
}

// Patch chosen for a face; faces are identified by orbit id, k is the gon size.
using PatchAssignment = std::function<const Patch*(int face, int k)>;

struct ExpandedMap {
  OrientedMap map;
  std::vector<int> seed_vertex_ids;  // seed vertex orbit -> result vertex orbit
};

// Replaces every face f of the seed by its assigned w-k-gonal r-patch.
// Each seed edge is subdivided by n = |w| vertices; patch corner vertices
// land on the seed vertices and side vertices on the subdivision points, with
// all patches glued in the surface orientation. Output invariants: chi is
// preserved, seed vertices keep their valences, every other vertex is
// r-valent.
inline ExpandedMap expand_map(const OrientedMap& seed, const std::vector<int>& w,
                              const PatchAssignment& assign) {
  const int n = static_cast<int>(w.size());
  if (n == 0) throw NotSelfFittingError("empty side tuple");

  struct Instance {
    const Patch* patch;
    int offset;  // boundary-walk position of the first corner
  };
  std::vector<Instance> plan(seed.num_faces());
  int r = 0;
  for (int f = 0; f < seed.num_faces(); f++) {
    const int k = seed.face_size(f);
    const Patch* patch = assign(f, k);
    if (!patch)
      throw PatchShapeMismatchError("no patch assigned to a " + std::to_string(k) + "-gon");
    if (r == 0) {
      r = patch->r();
      if (!is_self_fitting(w, r))
        throw NotSelfFittingError("side tuple is not self-fitting for r = " + std::to_string(r));
    }
    if (patch->r() != r) throw PatchShapeMismatchError("patches disagree on r");
    auto offset = w_k_gonal_offset(*patch, w, k);
    if (!offset)
      throw PatchShapeMismatchError("assigned patch is not w-" + std::to_string(k) + "-gonal");
    plan[f] = {patch, *offset};
  }

  const long long Vs = seed.num_vertices();
  const long long slot_base = Vs;
  auto slot_label = [&](int dart, int t) -> VertexLabel {
    // Subdivision point t (1..n) counted from the dart's origin; both sides
    // of the edge share the labels through the canonical dart.
    int e = seed.edge_of(dart);
    int canonical = seed.edge_darts(e)[0];
    int pos = (dart == canonical) ? t : n + 1 - t;
    return slot_base + static_cast<long long>(e) * n + (pos - 1);
  };
  VertexLabel next_interior = slot_base + static_cast<long long>(seed.num_edges()) * n;

  FaceComplex fc;
  CountSeq expected_p;
  for (int f = 0; f < seed.num_faces(); f++) {
    const Patch& patch = *plan[f].patch;
    const int k = seed.face_size(f);
    const auto& face_darts = seed.face_darts(f);
    auto bw_darts = patch.boundary_darts();
    const int blen = static_cast<int>(bw_darts.size());

    // Patch boundary position -> global label. The patch boundary walk runs
    // against the face orbit: corner J matches face vertex (k - J) mod k and
    // the side run after corner J lies on the face dart into that vertex.
    std::vector<VertexLabel> boundary_label(blen);
    for (int J = 0; J < k; J++) {
      int corner_pos = (plan[f].offset + J * (n + 1)) % blen;
      int vi = (k - J) % k;
      boundary_label[corner_pos] = seed.vertex_of(face_darts[vi]);
      int run_dart = face_darts[(vi + k - 1) % k];
      for (int t = 1; t <= n; t++)
        boundary_label[(corner_pos + t) % blen] = slot_label(run_dart, n + 1 - t);
    }
    std::map<int, VertexLabel> label_of_vertex;
    for (int pos = 0; pos < blen; pos++)
      label_of_vertex[patch.map().vertex_of(bw_darts[pos])] = boundary_label[pos];

    for (int pf = 0; pf < patch.map().num_faces(); pf++) {
      if (pf == patch.outer_face()) continue;
      expected_p.add_count(patch.map().face_size(pf), 1);
      fc.faces.push_back({});
      auto& walk = fc.faces.back();
      for (int d : patch.map().face_darts(pf)) {
        int pv = patch.map().vertex_of(d);
        auto it = label_of_vertex.find(pv);
        if (it == label_of_vertex.end()) it = label_of_vertex.emplace(pv, next_interior++).first;
        walk.push_back(it->second);
      }
    }
  }

  BuiltMap built;
  try {
    built = build_from_faces(fc);
  } catch (const ComplexError& err) {
    throw GlueConflictError(std::string("patch gluing failed: ") + err.what());
  }

  ExpandedMap out;
  out.seed_vertex_ids.resize(Vs);
  for (int v = 0; v < Vs; v++) {
    out.seed_vertex_ids[v] = built.vertex_of_label.at(v);
    if (built.map.degree(out.seed_vertex_ids[v]) != seed.degree(v))
      throw GlueConflictError("seed vertex changed valence");
  }
  {
    std::vector<char> is_seed(built.map.num_vertices(), 0);
    for (int v : out.seed_vertex_ids) is_seed[v] = 1;
    for (int v = 0; v < built.map.num_vertices(); v++)
      if (!is_seed[v] && built.map.degree(v) != r)
        throw GlueConflictError("side-vertex weights across an edge do not sum to r");
  }
  if (built.map.euler_characteristic() != seed.euler_characteristic())
    throw GlueConflictError("Euler characteristic changed");
  if (built.map.summarize().p_vector != expected_p)
    throw GlueConflictError("face census does not match the assigned patches");
  out.map = std::move(built.map);
  return out;
}

struct PolyhedralExpansion {
  ExpandedMap expanded;
  std::vector<int> ring_sizes;  // distinct face sizes served by rings
};

// Alg.-1 expansion with assign(f) = ring(E, k), except that 4-gonal faces use
// the supplied o-4-gonal patch when one is given. The output is verified
// polyhedral, never assumed.
inline PolyhedralExpansion expand_polyhedral(const OrientedMap& seed, const ExpansionPatch& ep,
                                             const Patch* four_gon_patch = nullptr) {
  std::set<int> sizes;
  for (int f = 0; f < seed.num_faces(); f++) sizes.insert(seed.face_size(f));
  std::map<int, Patch> rings;
  PolyhedralExpansion out;
  for (int k : sizes) {
    if (k == 4 && four_gon_patch) continue;
    rings.emplace(k, ring(ep, k));
    out.ring_sizes.push_back(k);
  }
  auto assign = [&](int, int k) -> const Patch* {
    if (k == 4 && four_gon_patch) return four_gon_patch;
    return &rings.at(k);
  };
  out.expanded = expand_map(seed, ep.outer_tuple, assign);
  auto rep = out.expanded.map.polyhedral_report();
  if (!rep.ok)
    throw PolyhedralityFailedError("output faces " + std::to_string(rep.witness_f1) + " and " +
                                   std::to_string(rep.witness_f2) + " do not meet properly");
  return out;
}

enum class Family { ThreeFive, ThreeSeven };

struct FamilySpec {
  Family family = Family::ThreeFive;
  int k = 0;
  int passes = 1;
  static constexpr int r = 4;

  int l() const { return family == Family::ThreeFive ? 3 * k + 5 : 3 * k + 7; }
  CountSeq q() const {
    long long triangles = family == Family::ThreeFive ? 3 * k + 1 : 3 * k + 3;
    return CountSeq::bracket({{triangles, 3}, {1, l()}});
  }
  CountSeq w() const { return CountSeq::single(4); }
  std::string name() const { return family == Family::ThreeFive ? "3:5" : "3:7"; }
};

struct RealizationReport {
  FamilySpec spec;
  MapSummary seed_summary;
  MapSummary result_summary;
  CountSeq delta_p;  // p(result) - p(seed), the seed's 4-gons excluded
  long long c = 0;
  long long d = 0;
  int passes_used = 0;
  bool polyhedral = false;
  bool seed_admissible = false;
  bool pf_available = false;
  bool pf_from_search = false;
};

namespace detail {

// Growth schedule: squares advance the target polygon by 1 per step,
// diamonds and circled vertices by 3; every marker of the entry is driven the
// same number of steps.
inline CatalogPatch grow_all_markers(const CatalogPatch& entry, int steps) {
  if (steps == 0) return entry;
  Patch patch = entry.patch;
  std::vector<int> composed(patch.map().num_vertices());
  for (size_t v = 0; v < composed.size(); v++) composed[v] = static_cast<int>(v);
  for (int idx = 0; idx < static_cast<int>(patch.markers().size()); idx++) {
    GrowthResult res = grow(patch, idx, steps);
    for (auto& v : composed) v = v >= 0 ? res.vertex_map[v] : -1;
    patch = std::move(res.patch);
  }
  CatalogPatch grown;
  grown.name = entry.name;
  grown.patch = patch;
  grown.provenance = entry.provenance;
  if (entry.expansion) {
    ExpansionRoles roles = entry.expansion->roles;
    for (auto* list : {&roles.i, &roles.o, &roles.ip})
      for (int& v : *list) {
        if (composed[v] < 0) throw MarkerInvalidError("growth consumed a role vertex");
        v = composed[v];
      }
    grown.expansion = validate_expansion_patch(grown.patch, roles);
  }
  return grown;
}

inline bool has_four_gon(const OrientedMap& m) {
  for (int f = 0; f < m.num_faces(); f++)
    if (m.face_size(f) == 4) return true;
  return false;
}

}  // namespace detail

// Patches backing one family level: P_N for intermediate passes, P_P (with
// the verified polyhedral property) for the final pass, P_F for 4-gonal seed
// faces.
struct FamilyPatches {
  ExpansionPatch pn;
  ExpansionPatch pp;
  std::optional<Patch> pf;
  bool pf_from_search = false;
};

struct RealizeOptions {
  std::optional<Patch> user_pf;
  bool attempt_search = true;  // fill the missing 3:7 P_F by bounded search
  SearchBounds search_bounds{26, 50, 1'500'000};
};

inline FamilyPatches build_family_patches(const FamilySpec& spec,
                                          const std::optional<Patch>& user_pf = std::nullopt,
                                          bool pf_needed = false,
                                          const RealizeOptions& opts = {}) {
  FamilyPatches out;
  if (spec.family == Family::ThreeFive) {
    CatalogPatch pn = detail::grow_all_markers(catalog_patch("PN35"), 3 * spec.k);
    out.pn = *pn.expansion;
    out.pp = out.pn;
    CatalogPatch pf = detail::grow_all_markers(catalog_patch("PF35"), spec.k);
    out.pf = pf.patch;
  } else {
    CatalogPatch pn = detail::grow_all_markers(catalog_patch("PN37"), spec.k);
    out.pn = *pn.expansion;
    CatalogPatch pp = detail::grow_all_markers(catalog_patch("PN35"), 3 * spec.k + 2);
    out.pp = *pp.expansion;
    if (user_pf) {
      out.pf = user_pf;
    } else if (pf_needed && opts.attempt_search) {
      // The paper's figure for this patch is blank; try to reconstruct it.
      auto found =
          search_patch(out.pn.outer_tuple, spec.r, {3, spec.l()}, opts.search_bounds);
      if (found.patch) {
        out.pf = std::move(found.patch);
        out.pf_from_search = true;
      }
    }
  }
  if (out.pf) {
    if (!is_w_k_gonal(*out.pf, out.pn.outer_tuple, 4, spec.r))
      throw PatchShapeMismatchError("P_F is not o-4-gonal for the family outer tuple");
  }
  auto prop = has_polyhedral_property(out.pp);
  if (!prop.ok)
    throw PolyhedralityFailedError("P_P lost the polyhedral property after growth");
  return out;
}

struct RealizationResult {
  RealizationReport report;
  OrientedMap result;
};

inline RealizationResult realize_family(const OrientedMap& seed, const FamilySpec& spec,
                                        const RealizeOptions& opts = {}) {
  if (spec.passes < 1) throw BadParamsError("need at least one pass");
  FamilyPatches patches =
      build_family_patches(spec, opts.user_pf, detail::has_four_gon(seed), opts);

  RealizationReport rep;
  rep.spec = spec;
  rep.seed_summary = seed.summarize();
  rep.seed_admissible =
      check_admissible(rep.seed_summary.p_vector, rep.seed_summary.v_vector,
                       rep.seed_summary.euler_characteristic)
          .admissible;
  rep.pf_available = patches.pf.has_value();
  rep.pf_from_search = patches.pf_from_search;

  const bool seed_has_4gons = detail::has_four_gon(seed);
  if (seed_has_4gons && !patches.pf) {
    if (spec.family == Family::ThreeSeven)
      throw MissingPF37Error(
          "the seed has 4-gonal faces and no o-4-gonal triangle/" + std::to_string(spec.l()) +
          "-gon patch is available (supply one or let the bounded search find it)");
    throw PatchShapeMismatchError("internal: P_F missing for a 4-gonal seed");
  }
  if (seed_has_4gons && spec.family == Family::ThreeSeven && spec.passes < 2)
    throw BadParamsError(
        "family 3:7 on a seed with 4-gons needs at least 2 passes: the final pass uses the "
        "grown PN35 as P_P, whose outer tuple does not match the 3:7 P_F");

  OrientedMap current = seed;
  for (int pass = 1; pass <= spec.passes; pass++) {
    const ExpansionPatch& ep = (pass == spec.passes) ? patches.pp : patches.pn;
    const Patch* pf = (pass == 1 && seed_has_4gons) ? &*patches.pf : nullptr;
    if (pass == spec.passes) {
      current = expand_polyhedral(current, ep, pf).expanded.map;
    } else {
      std::set<int> sizes;
      for (int f = 0; f < current.num_faces(); f++) sizes.insert(current.face_size(f));
      std::map<int, Patch> rings;
      for (int k : sizes)
        if (!(k == 4 && pf)) rings.emplace(k, ring(ep, k));
      auto assign = [&](int, int k) -> const Patch* {
        if (k == 4 && pf) return pf;
        return &rings.at(k);
      };
      current = expand_map(current, ep.outer_tuple, assign).map;
    }
    rep.passes_used = pass;
  }

  rep.result_summary = current.summarize();
  rep.polyhedral = true;  // the final pass verified it

  // The seed's 4-gons are the free entries consumed by P_F; the measured gain
  // is taken against the seed census with them removed.
  CountSeq target_p = rep.seed_summary.p_vector;
  if (target_p.at(4) > 0) target_p.add_count(4, -target_p.at(4));
  rep.delta_p = rep.result_summary.p_vector - target_p;
  auto ratio = CountSeq::proportional(rep.delta_p, spec.q());
  if (!ratio || !ratio->is_integer() || ratio->num <= 0)
    throw PolyhedralityFailedError("measured p-vector gain is not a positive multiple of q");
  rep.c = ratio->num;
  CountSeq delta_v = rep.result_summary.v_vector - rep.seed_summary.v_vector;
  if (delta_v.support_size() != 1 || delta_v.at(4) <= 0)
    throw GlueConflictError("vertex gain is not d * [4]");
  rep.d = delta_v.at(4);
  return {rep, std::move(current)};
}

}  // namespace polymap
