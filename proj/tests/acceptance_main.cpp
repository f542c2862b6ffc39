// Acceptance suite: one line per criterion, every tolerance exact integer
// arithmetic. Exit code 0 only if all criteria pass.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "polymap/cli.hpp"
#include "polymap/io.hpp"
#include "polymap/pipeline.hpp"
#include "polymap/search.hpp"

using namespace polymap;

namespace {

struct Failure {
  std::string message;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << " mismatch";
    throw Failure{os.str()};
  }
}

bool cyclic_equal(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (size_t rot = 0; rot < a.size(); rot++) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return false;
}

class Runner {
public:
  void criterion(int number, const std::string& title, const std::function<void()>& body) {
    try {
      body();
      std::cout << "PASS criterion " << number << ": " << title << "\n";
    } catch (const Failure& f) {
      std::cout << "FAIL criterion " << number << ": " << title << " -- " << f.message << "\n";
      failed_ = true;
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion " << number << ": " << title << " -- " << e.what() << "\n";
      failed_ = true;
    }
  }
  int exit_code() const { return failed_ ? 1 : 0; }

private:
  bool failed_ = false;
};

// Maps constructed across the criteria, re-checked for admissibility and
// (at desk scale) 3-connectivity.
std::vector<OrientedMap> g_constructed;

void note_map(const OrientedMap& m) { g_constructed.push_back(m); }

}  // namespace

int main() {
  Runner runner;

  runner.criterion(1, "H and Q2 validate with outer tuples (2,1), (2,2) and have the polyhedral property", [] {
    auto H = catalog_patch("H");
    expect(H.expansion.has_value(), "H roles");
    expect_eq(H.expansion->outer_tuple, std::vector<int>{2, 1}, "H outer tuple");
    expect(has_polyhedral_property(*H.expansion).ok, "H polyhedral property");
    auto Q2 = catalog_patch("Q2");
    expect_eq(Q2.expansion->outer_tuple, std::vector<int>{2, 2}, "Q2 outer tuple");
    expect(has_polyhedral_property(*Q2.expansion).ok, "Q2 polyhedral property");
  });

  runner.criterion(2, "PN35, PN37 outer tuples and properties; PF35 is o-4-gonal", [] {
    auto PN35 = catalog_patch("PN35");
    expect_eq(PN35.expansion->outer_tuple, std::vector<int>{1, 2, 1, 3, 2, 3}, "PN35 outer tuple");
    expect(has_polyhedral_property(*PN35.expansion).ok, "PN35 polyhedral property");
    auto PN37 = catalog_patch("PN37");
    expect_eq(PN37.expansion->outer_tuple, std::vector<int>{2, 2, 3, 2, 1, 3, 2, 1, 2, 2}, "PN37 outer tuple");
    auto PF35 = catalog_patch("PF35");
    expect(is_w_k_gonal(PF35.patch, PN35.expansion->outer_tuple, 4, 4), "PF35 o-4-gonal");
  });

  runner.criterion(3, "ring census equals [k] + k*p for all catalog patches, k in 3..8", [] {
    for (auto name : {"H", "Q2", "PN35", "PN37"}) {
      auto ep = *catalog_patch(name).expansion;
      for (int k = 3; k <= 8; k++) {
        Patch rk = ring(ep, k);
        CountSeq census;  // read from the built dart structure
        for (int f = 0; f < rk.map().num_faces(); f++)
          if (f != rk.outer_face()) census.add_count(rk.map().face_size(f), 1);
        expect_eq(census, CountSeq::single(k) + k * ep.p_vector(),
                  std::string(name) + " ring k=" + std::to_string(k));
        expect(is_w_k_gonal(rk, ep.outer_tuple, k, ep.r()), "ring is o-k-gonal");
      }
    }
  });

  runner.criterion(4, "growth rewrites match the p-vector formulas for k in 0..5", [] {
    for (auto name : {"PN35", "PN37", "PF35"}) {
      CatalogPatch entry = catalog_patch(name);
      for (int idx = 0; idx < static_cast<int>(entry.patch.markers().size()); idx++) {
        const GrowthMarker& mk = entry.patch.markers()[idx];
        int k1 = entry.patch.map().face_size(mk.face1);
        int k2 = entry.patch.map().face_size(mk.face2);
        int gain = mk.kind == GrowthMarker::Kind::Square ? 1 : 3;
        for (int k = 0; k <= 5; k++) {
          GrowthResult res = grow(entry.patch, idx, k);
          CountSeq expected = entry.patch.p_vector();
          if (k > 0) {
            expected = expected - CountSeq::bracket({{1, k1}, {1, k2}});
            expected = expected + CountSeq::bracket({{2LL * gain * k, 3}});
            expected = expected + CountSeq::bracket({{1, k1 + gain * k}, {1, k2 + gain * k}});
          }
          expect_eq(res.patch.p_vector(), expected,
                    std::string(name) + " marker " + std::to_string(idx) + " k=" + std::to_string(k));
          expect(cyclic_equal(res.patch.boundary_weights(), entry.patch.boundary_weights()),
                 "boundary walk unchanged");
          if (entry.expansion) {
            ExpansionRoles roles = entry.expansion->roles;
            for (auto* list : {&roles.i, &roles.o, &roles.ip})
              for (int& v : *list) v = res.vertex_map[v];
            ExpansionPatch grown = validate_expansion_patch(res.patch, roles);
            expect_eq(grown.outer_tuple, entry.expansion->outer_tuple, "outer tuple preserved");
          }
        }
      }
    }
  });

  runner.criterion(5, "expansion invariants over 5 seeds x {Q2, PN35}", [] {
    std::vector<std::pair<std::string, OrientedMap>> seeds;
    for (auto name : {"tetrahedron", "cube", "octahedron"})
      seeds.push_back({name, catalog_seed(name)});
    seeds.push_back({"torus_grid(3,3)", catalog_seed("torus_grid", 3, 3)});
    seeds.push_back({"torus_grid(3,4)", catalog_seed("torus_grid", 3, 4)});
    for (auto patch_name : {"Q2", "PN35"}) {
      auto ep = *catalog_patch(patch_name).expansion;
      for (const auto& [seed_name, seed] : seeds) {
        auto res = expand_polyhedral(seed, ep);  // throws on a failed brute-force check
        const auto& map = res.expanded.map;
        std::string tag = seed_name + std::string(" x ") + patch_name;
        expect_eq(map.euler_characteristic(), seed.euler_characteristic(), tag + " chi");
        std::vector<char> is_seed(map.num_vertices(), 0);
        for (int v : res.expanded.seed_vertex_ids) is_seed[v] = 1;
        long long d = 0;
        for (int v = 0; v < map.num_vertices(); v++) {
          if (is_seed[v]) continue;
          expect(map.degree(v) == 4, tag + " non-seed vertex r-valent");
          d++;
        }
        expect(d > 0, tag + " d > 0");
        CountSeq delta_v = map.summarize().v_vector - seed.summarize().v_vector;
        expect_eq(delta_v, CountSeq::bracket({{d, 4}}), tag + " delta v");
        note_map(map);
      }
    }
  });

  runner.criterion(6, "theorem 3:5 at k=0: exact multiples of [3,5], second pass grows c and d", [] {
    FamilySpec spec{Family::ThreeFive, 0, 1};
    auto oct = realize_family(catalog_seed("octahedron"), spec);
    expect(oct.report.polyhedral, "octahedron output polyhedral");
    auto ratio = CountSeq::proportional(oct.report.delta_p, CountSeq::bracket({{1, 3}, {1, 5}}));
    expect(ratio && ratio->is_integer() && ratio->num >= 1, "delta p = c*[3,5]");
    expect_eq(oct.report.c, 96LL, "octahedron c (hand prediction)");
    note_map(oct.result);

    auto torus = realize_family(catalog_seed("torus_grid", 3, 3), spec);
    expect_eq(torus.report.result_summary.euler_characteristic, 0LL, "torus chi");
    auto tratio = CountSeq::proportional(torus.report.delta_p, CountSeq::bracket({{1, 3}, {1, 5}}));
    expect(tratio && tratio->is_integer() && tratio->num >= 1, "torus delta p = c*[3,5]");
    expect_eq(torus.report.c, 72LL, "torus c (hand prediction)");
    note_map(torus.result);

    FamilySpec two{Family::ThreeFive, 0, 2};
    auto second = realize_family(catalog_seed("octahedron"), two);
    expect(second.report.c > oct.report.c, "second pass increases c");
    expect(second.report.d > oct.report.d, "second pass increases d");
    expect(second.report.polyhedral, "second pass polyhedral");
    note_map(second.result);
  });

  runner.criterion(7, "theorem 3:5 at k=1 and k=2: exact proportionality to [(3k+1)x3, 3k+5]", [] {
    for (int k : {1, 2}) {
      FamilySpec spec{Family::ThreeFive, k, 1};
      auto res = realize_family(catalog_seed("octahedron"), spec);
      auto ratio = CountSeq::proportional(res.report.delta_p, spec.q());
      expect(ratio && ratio->is_integer() && ratio->num >= 1,
             "k=" + std::to_string(k) + " proportionality");
      expect(res.report.polyhedral, "k=" + std::to_string(k) + " polyhedral");
      note_map(res.result);
    }
  });

  runner.criterion(8, "theorem 3:7 at k=0 with grown PN35 as P_P; torus case if a P_F is found", [] {
    FamilySpec spec{Family::ThreeSeven, 0, 2};
    auto oct = realize_family(catalog_seed("octahedron"), spec);
    auto ratio = CountSeq::proportional(oct.report.delta_p, spec.q());
    expect(ratio && ratio->is_integer() && ratio->num >= 1, "delta p = c*[3x3, 7]");
    expect(oct.report.polyhedral, "octahedron 3:7 polyhedral");
    note_map(oct.result);

    // The catalog has no drawing for the 3:7 companion patch; run the bounded
    // search for it (this is the one slow step of the suite).
    auto o37 = catalog_patch("PN37").expansion->outer_tuple;
    SearchOutcome found = search_patch(o37, 4, {3, 7}, SearchBounds{30, 58, 80'000'000});
    if (found.patch) {
      std::cout << "  note: search found a 3:7 P_F with census {"
                << found.patch->p_vector().to_string() << "} after " << found.nodes
                << " nodes; running the torus case\n";
      RealizeOptions opts;
      opts.user_pf = found.patch;
      auto torus = realize_family(catalog_seed("torus_grid", 3, 3), spec, opts);
      auto tratio = CountSeq::proportional(torus.report.delta_p, spec.q());
      expect(tratio && tratio->is_integer() && tratio->num >= 1, "torus delta p");
      expect(torus.report.polyhedral, "torus 3:7 polyhedral");
      note_map(torus.result);
    } else {
      std::cout << "  note: no 3:7 P_F within search bounds; torus case reports MissingPF37 "
                   "as documented\n";
      RealizeOptions opts;
      opts.attempt_search = false;
      bool missing = false;
      try {
        realize_family(catalog_seed("torus_grid", 3, 3), spec, opts);
      } catch (const MissingPF37Error&) {
        missing = true;
      }
      expect(missing, "MissingPF37 reported");
    }
  });

  runner.criterion(9, "admissibility holds for every constructed map; eq6 <=> eq4 on 200+ random pairs", [] {
    expect(!g_constructed.empty(), "maps were constructed");
    for (const auto& m : g_constructed) {
      auto s = m.summarize();
      expect(s.p_vector.weighted_total() == 2 * s.num_edges, "handshake p");
      expect(s.v_vector.weighted_total() == 2 * s.num_edges, "handshake v");
      expect(check_admissible(s.p_vector, s.v_vector, s.euler_characteristic).admissible,
             "constructed map admissible");
    }
    std::mt19937 rng(987654321);
    auto random_partition = [&](long long total) {
      CountSeq s;
      long long left = total;
      while (left > 6) {
        std::uniform_int_distribution<int> pick(3, static_cast<int>(std::min<long long>(left - 3, 11)));
        int k = pick(rng);
        s.add_count(k, 1);
        left -= k;
      }
      if (left >= 3) s.add_count(static_cast<int>(left), 1);
      return s;
    };
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 220; trial++) {
      std::uniform_int_distribution<long long> size(6, 240);
      long long total = size(rng);
      CountSeq p = random_partition(total);
      CountSeq v = random_partition(total);
      if (p.weighted_total() != v.weighted_total()) continue;
      std::uniform_int_distribution<int> chi_pick(-3, 1);
      long long chi = 2 * chi_pick(rng);
      auto rep = check_admissible(p, v, chi);
      expect((rep.eq6_lhs == 6 * chi) == (rep.eq4_lhs == 4 * chi), "eq6 <=> eq4");
      checked++;
    }
    expect(checked >= 200, "enough random pairs");
  });

  runner.criterion(10, "duals swap p/v; desk-scale polyhedral maps are 3-connected", [] {
    std::vector<OrientedMap> seeds;
    for (auto name : {"tetrahedron", "cube", "octahedron", "icosahedron"})
      seeds.push_back(catalog_seed(name));
    seeds.push_back(catalog_seed("torus_grid", 3, 3));
    seeds.push_back(catalog_seed("torus_grid", 3, 4));
    for (const auto& m : seeds) {
      auto s = m.summarize();
      auto d = m.dual().summarize();
      expect(d.p_vector == s.v_vector && d.v_vector == s.p_vector, "dual swaps p and v");
      expect(d.euler_characteristic == s.euler_characteristic, "dual preserves chi");
      expect(m.is_three_connected(), "seed 3-connected");
    }
    int checked = 0;
    for (const auto& m : g_constructed) {
      if (2 * m.num_edges() > 10000) continue;  // brute force is for desk scale
      expect(m.is_polyhedral(), "constructed map polyhedral");
      expect(m.is_three_connected(), "constructed polyhedral map 3-connected");
      checked++;
    }
    expect(checked >= 10, "enough constructed maps checked");
  });

  runner.criterion(11, "serialization round trips; CLI exit codes follow the 0/1/2 contract", [] {
    for (auto name : catalog_patch_names()) {
      CatalogPatch entry = catalog_patch(name);
      MapFile mf = entry.expansion ? map_file_of(*entry.expansion, entry.patch.markers(), {name})
                                   : map_file_of(entry.patch, {name});
      std::string text = write_map_file(mf);
      expect(write_map_file(parse_map_file(text)) == text, std::string(name) + " round trip");
    }
    std::ostringstream out, err;
    auto run = [&](std::vector<std::string> args) {
      out.str("");
      err.str("");
      return run_cli(std::move(args), out, err);
    };
    std::string dir = "/tmp";
    std::string cube = dir + "/polymap_acc_cube.map";
    expect(run({"admissible", "--chi", "2", "--p", "3:4", "--v", "3:4"}) == 0, "admissible true -> 0");
    expect(run({"admissible", "--chi", "2", "--p", "3:1", "--v", "3:1"}) == 1, "admissible false -> 1");
    expect(run({"admissible", "--chi", "1", "--p", "3:1", "--v", "3:1"}) == 2, "bad chi -> 2");
    expect(run({"frobnicate"}) == 2, "unknown command -> 2");
    write_map_file(map_file_of(catalog_seed("cube"), {}), cube);
    expect(run({"validate", cube}) == 0, "validate ok -> 0");
    expect(run({"summary", cube}) == 0, "summary -> 0");
    expect(run({"polyhedral-check", cube}) == 0, "polyhedral true -> 0");
    expect(run({"dual", cube, dir + "/polymap_acc_dual.map"}) == 0, "dual -> 0");
    expect(run({"catalog", "list"}) == 0, "catalog list -> 0");
    expect(run({"catalog", "show", "H"}) == 0, "catalog show -> 0");
    expect(run({"catalog", "show", "nope"}) == 2, "catalog unknown -> 2");
    expect(run({"export-adj", cube}) == 0, "export-adj -> 0");
    expect(run({"search", "--outer", "2,2", "--r", "4", "--gons", "4", "--max-faces", "12"}) == 0,
           "search found -> 0");
    expect(run({"search", "--outer", "2,1", "--r", "3", "--gons", "6", "--max-faces", "10"}) == 1,
           "search none -> 1");
    expect(run({"grow", "--patch", "PN35", "--marker", "0", "--op", "square", "--k", "1",
                "--out", dir + "/polymap_acc_grown.patch"}) == 0, "grow -> 0");
    expect(run({"expand", "--seed", "octahedron", "--patch", "PN35", "--out",
                dir + "/polymap_acc_exp.map"}) == 0, "expand -> 0");
    expect(run({"realize", "--seed", "octahedron", "--family", "3:5", "--k", "0", "--passes",
                "1", "--report", dir + "/polymap_acc_rep.txt"}) == 0, "realize -> 0");
    expect(out.str().find("c=96") != std::string::npos, "realize reports c=96");
    for (auto p : {"/polymap_acc_cube.map", "/polymap_acc_dual.map", "/polymap_acc_grown.patch",
                   "/polymap_acc_exp.map", "/polymap_acc_rep.txt"})
      std::remove((dir + p).c_str());
  });

  return runner.exit_code();
}
