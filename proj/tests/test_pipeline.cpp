#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polymap/pipeline.hpp"

using namespace polymap;

TEST_CASE("admissibility arithmetic") {
  auto tetra = check_admissible(CountSeq::bracket({{4, 3}}), CountSeq::bracket({{4, 3}}), 2);
  CHECK(tetra.admissible);
  CHECK(tetra.eq6_lhs == 12);
  CHECK(tetra.eq4_lhs == 8);

  auto torus = check_admissible(CountSeq::bracket({{16, 4}}), CountSeq::bracket({{16, 4}}), 0);
  CHECK(torus.admissible);
  CHECK(torus.eq6_lhs == 0);

  auto bad = check_admissible(CountSeq::bracket({{1, 3}}), CountSeq::bracket({{1, 3}}), 2);
  CHECK(!bad.admissible);
  CHECK(bad.eq6_lhs == 3);

  CHECK_THROWS_AS(check_admissible({}, {}, 1), BadChiError);
  CHECK_THROWS_AS(check_admissible({}, {}, 4), BadChiError);
}

TEST_CASE("eq6 and eq4 are equivalent given equal weighted sums") {
  std::mt19937 rng(20240817);
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
  for (int trial = 0; trial < 250; trial++) {
    std::uniform_int_distribution<long long> size(6, 200);
    long long total = size(rng);
    CountSeq p = random_partition(total);
    CountSeq v = random_partition(total);
    if (p.weighted_total() != v.weighted_total()) continue;  // partition may fall short
    std::uniform_int_distribution<int> chi_pick(-3, 1);
    long long chi = 2 * chi_pick(rng);
    auto rep = check_admissible(p, v, chi);
    REQUIRE(rep.sum_faces_eq_sum_vertices_weighted);
    CHECK((rep.eq6_lhs == 6 * chi) == (rep.eq4_lhs == 4 * chi));
    checked++;
  }
  CHECK(checked >= 200);
}

TEST_CASE("expand_map replaces every face by its patch") {
  auto Q2 = *catalog_patch("Q2").expansion;
  Patch ring_q2_4 = ring(Q2, 4);
  auto cube = catalog_seed("cube");
  auto res = expand_map(cube, Q2.outer_tuple, [&](int, int k) -> const Patch* {
    return k == 4 ? &ring_q2_4 : nullptr;
  });
  auto s = res.map.summarize();
  CHECK(s.p_vector == CountSeq::bracket({{54, 4}}));
  CHECK(s.euler_characteristic == 2);
  // v-vector = v(seed) + d * [4]
  CHECK(s.v_vector.at(3) == 8);
  CHECK(s.v_vector.at(4) == s.num_vertices - 8);
  CHECK(s.v_vector.support_size() == 2);
  // seed vertices keep their valences
  for (int v : res.seed_vertex_ids) CHECK(res.map.degree(v) == 3);

  // the r = 3 generic path: tetrahedron with the hexagon ring
  auto H = *catalog_patch("H").expansion;
  Patch ring_h_3 = ring(H, 3);
  auto tetra = catalog_seed("tetrahedron");
  auto res3 = expand_map(tetra, H.outer_tuple, [&](int, int) { return &ring_h_3; });
  auto s3 = res3.map.summarize();
  CHECK(s3.p_vector == 4 * ring_h_3.p_vector());
  for (int v = 0; v < res3.map.num_vertices(); v++) CHECK(res3.map.degree(v) == 3);
  CHECK(s3.euler_characteristic == 2);
}

TEST_CASE("expand_map rejects bad inputs") {
  auto cube = catalog_seed("cube");
  auto Q2 = *catalog_patch("Q2").expansion;
  Patch ring_q2_4 = ring(Q2, 4);
  CHECK_THROWS_AS(expand_map(cube, {1, 1}, [&](int, int) { return &ring_q2_4; }),
                  NotSelfFittingError);
  // patch does not match the tuple
  Patch ring_q2_3 = ring(Q2, 3);
  CHECK_THROWS_AS(expand_map(cube, Q2.outer_tuple, [&](int, int) { return &ring_q2_3; }),
                  PatchShapeMismatchError);
  CHECK_THROWS_AS(expand_map(cube, Q2.outer_tuple, [&](int, int) -> const Patch* { return nullptr; }),
                  PatchShapeMismatchError);
}

TEST_CASE("expand_polyhedral produces verified polyhedral maps") {
  auto PN35 = *catalog_patch("PN35").expansion;
  auto oct = catalog_seed("octahedron");
  auto res = expand_polyhedral(oct, PN35);
  auto s = res.expanded.map.summarize();
  CHECK(s.p_vector == CountSeq::bracket({{104, 3}, {96, 5}}));
  CHECK(s.v_vector.support_size() == 1);
  CHECK(s.v_vector.at(4) == s.num_vertices);  // octahedron vertices are 4-valent too

  // all 4-gonal faces served by the o-4-gonal companion patch
  Patch PF35 = catalog_patch("PF35").patch;
  auto torus = catalog_seed("torus_grid", 3, 3);
  auto res2 = expand_polyhedral(torus, PN35, &PF35);
  auto s2 = res2.expanded.map.summarize();
  CHECK(s2.p_vector == CountSeq::bracket({{72, 3}, {72, 5}}));
  CHECK(s2.euler_characteristic == 0);

  auto Q2 = *catalog_patch("Q2").expansion;
  auto cube = catalog_seed("cube");
  auto res3 = expand_polyhedral(cube, Q2);
  CHECK(res3.expanded.map.summarize().p_vector == CountSeq::bracket({{54, 4}}));
}

TEST_CASE("every constructed map is admissible") {
  auto PN35 = *catalog_patch("PN35").expansion;
  std::vector<OrientedMap> maps;
  maps.push_back(expand_polyhedral(catalog_seed("octahedron"), PN35).expanded.map);
  maps.push_back(expand_polyhedral(catalog_seed("tetrahedron"), PN35).expanded.map);
  Patch PF35 = catalog_patch("PF35").patch;
  maps.push_back(expand_polyhedral(catalog_seed("torus_grid", 3, 3), PN35, &PF35).expanded.map);
  for (const auto& m : maps) {
    auto s = m.summarize();
    CHECK(check_admissible(s.p_vector, s.v_vector, s.euler_characteristic).admissible);
  }
}

TEST_CASE("realize_family 3:5 at k = 0") {
  FamilySpec spec{Family::ThreeFive, 0, 1};
  auto res = realize_family(catalog_seed("octahedron"), spec);
  CHECK(res.report.c == 96);
  CHECK(res.report.d > 0);
  CHECK(res.report.polyhedral);
  CHECK(res.report.seed_admissible);
  CHECK(res.report.delta_p == CountSeq::bracket({{96, 3}, {96, 5}}));
  CHECK(res.result.is_polyhedral());

  auto torus = realize_family(catalog_seed("torus_grid", 3, 3), spec);
  CHECK(torus.report.c == 72);
  CHECK(torus.report.delta_p == CountSeq::bracket({{72, 3}, {72, 5}}));
  CHECK(torus.report.result_summary.euler_characteristic == 0);
}

TEST_CASE("a second pass strictly increases c and d") {
  FamilySpec one{Family::ThreeFive, 0, 1};
  FamilySpec two{Family::ThreeFive, 0, 2};
  auto r1 = realize_family(catalog_seed("octahedron"), one);
  auto r2 = realize_family(catalog_seed("octahedron"), two);
  CHECK(r2.report.c > r1.report.c);
  CHECK(r2.report.d > r1.report.d);
  CHECK(r2.report.passes_used == 2);
}

TEST_CASE("realize_family 3:5 at k = 1 and k = 2") {
  for (int k : {1, 2}) {
    FamilySpec spec{Family::ThreeFive, k, 1};
    auto res = realize_family(catalog_seed("octahedron"), spec);
    auto ratio = CountSeq::proportional(res.report.delta_p, spec.q());
    REQUIRE(ratio);
    CHECK(ratio->is_integer());
    CHECK(ratio->num == res.report.c);
    CHECK(res.report.c > 0);
    CHECK(res.report.polyhedral);
  }
}

TEST_CASE("realize_family 3:7 on a seed without 4-gons") {
  FamilySpec spec{Family::ThreeSeven, 0, 1};
  auto res = realize_family(catalog_seed("octahedron"), spec);
  CHECK(res.report.polyhedral);
  auto ratio = CountSeq::proportional(res.report.delta_p, spec.q());
  REQUIRE(ratio);
  CHECK(ratio->is_integer());
  CHECK(res.report.c == 96);  // rings of the grown PN35 with p = 4q over 2e = 24

  FamilySpec two{Family::ThreeSeven, 0, 2};
  auto res2 = realize_family(catalog_seed("octahedron"), two);
  CHECK(res2.report.c > res.report.c);
  CHECK(res2.report.polyhedral);
}

TEST_CASE("realize_family 3:7 on a 4-gon seed needs a found or supplied P_F") {
  FamilySpec spec{Family::ThreeSeven, 0, 2};
  RealizeOptions opts;
  opts.attempt_search = false;
  CHECK_THROWS_AS(realize_family(catalog_seed("torus_grid", 3, 3), spec, opts), MissingPF37Error);
  FamilySpec zero{Family::ThreeFive, 0, 0};
  CHECK_THROWS_AS(realize_family(catalog_seed("octahedron"), zero), BadParamsError);
}

TEST_CASE("growth schedules match the family q-vectors") {
  for (int k : {0, 1, 2}) {
    FamilySpec spec35{Family::ThreeFive, k, 1};
    auto patches = build_family_patches(spec35);
    CHECK(patches.pn.p_vector() == 4 * spec35.q());
    REQUIRE(patches.pf);
    CHECK(patches.pf->p_vector() == 8 * spec35.q());
    CHECK(is_w_k_gonal(*patches.pf, patches.pn.outer_tuple, 4, 4));

    FamilySpec spec37{Family::ThreeSeven, k, 1};
    auto p37 = build_family_patches(spec37);
    CHECK(p37.pn.p_vector() == 2 * spec37.q());
    CHECK(p37.pp.p_vector() == 4 * spec37.q());
  }
}
