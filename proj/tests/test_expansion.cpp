#include <catch2/catch_amalgamated.hpp>

#include "polymap/catalog.hpp"
#include "polymap/expansion.hpp"

using namespace polymap;

TEST_CASE("catalog expansion patches carry the expected outer tuples") {
  auto H = catalog_patch("H");
  REQUIRE(H.expansion);
  CHECK(H.expansion->outer_tuple == std::vector<int>{2, 1});
  CHECK(H.expansion->r() == 3);

  auto Q2 = catalog_patch("Q2");
  REQUIRE(Q2.expansion);
  CHECK(Q2.expansion->outer_tuple == std::vector<int>{2, 2});

  auto PN35 = catalog_patch("PN35");
  REQUIRE(PN35.expansion);
  CHECK(PN35.expansion->outer_tuple == std::vector<int>{1, 2, 1, 3, 2, 3});
  CHECK(PN35.patch.p_vector() == CountSeq::bracket({{4, 3}, {4, 5}}));

  auto PN37 = catalog_patch("PN37");
  REQUIRE(PN37.expansion);
  CHECK(PN37.expansion->outer_tuple == std::vector<int>{2, 2, 3, 2, 1, 3, 2, 1, 2, 2});
  CHECK(PN37.patch.p_vector() == CountSeq::bracket({{6, 3}, {2, 7}}));

  auto PF35 = catalog_patch("PF35");
  CHECK(!PF35.expansion);
  CHECK(PF35.patch.p_vector() == CountSeq::bracket({{8, 3}, {8, 5}}));
  CHECK(is_w_k_gonal(PF35.patch, PN35.expansion->outer_tuple, 4, 4));
}

TEST_CASE("outer tuples are self-fitting under the definition's re-rooting") {
  for (auto name : {"H", "Q2", "PN35", "PN37"}) {
    auto entry = catalog_patch(name);
    REQUIRE(entry.expansion);
    CHECK(is_self_fitting(entry.expansion->outer_tuple, entry.patch.r()));
  }
}

TEST_CASE("role validation rejects broken assignments") {
  auto Q2 = catalog_patch("Q2");
  ExpansionRoles roles = Q2.expansion->roles;
  SECTION("swapped i and ip") {
    std::swap(roles.i, roles.ip);
    CHECK_THROWS_AS(validate_expansion_patch(Q2.patch, roles), Error);
  }
  SECTION("wrong s") {
    roles.s = 1;  // w(o_1) = 2 != 1
    CHECK_THROWS_AS(validate_expansion_patch(Q2.patch, roles), OsNotOneError);
  }
  SECTION("m = 0") {
    roles.i = {roles.i[1]};
    roles.ip = {roles.ip[1]};
    CHECK_THROWS_AS(validate_expansion_patch(Q2.patch, roles), I0ConditionError);
  }
}

TEST_CASE("ring construction matches [k] + k * p for every catalog patch") {
  for (auto name : {"H", "Q2", "PN35", "PN37"}) {
    auto entry = catalog_patch(name);
    const auto& ep = *entry.expansion;
    for (int k = 3; k <= 8; k++) {
      Patch rk = ring(ep, k);
      // census from the built dart structure
      CountSeq census;
      for (int f = 0; f < rk.map().num_faces(); f++)
        if (f != rk.outer_face()) census.add_count(rk.map().face_size(f), 1);
      CHECK(census == CountSeq::single(k) + k * ep.p_vector());
      CHECK(is_w_k_gonal(rk, ep.outer_tuple, k, ep.r()));
    }
  }
  CHECK_THROWS_AS(ring(*catalog_patch("H").expansion, 2), KTooSmallError);
}

TEST_CASE("specific ring censuses") {
  CHECK(ring(*catalog_patch("H").expansion, 6).p_vector() == CountSeq::bracket({{7, 6}}));
  CHECK(ring(*catalog_patch("Q2").expansion, 4).p_vector() == CountSeq::bracket({{9, 4}}));
  CHECK(ring(*catalog_patch("PN35").expansion, 3).p_vector() ==
        CountSeq::bracket({{13, 3}, {12, 5}}));
}

TEST_CASE("edge patches glue four copies") {
  auto H = catalog_patch("H");
  Patch eh = edge_patch(*H.expansion);
  CHECK(eh.p_vector() == CountSeq::bracket({{4, 6}}));

  auto Q2 = catalog_patch("Q2");
  CHECK(edge_patch(*Q2.expansion).p_vector() == CountSeq::bracket({{8, 4}}));

  auto PN35 = catalog_patch("PN35");
  Patch ep = edge_patch(*PN35.expansion);
  CHECK(ep.p_vector() == CountSeq::bracket({{16, 3}, {16, 5}}));

  // boundary weights of an edge patch stay legal for r
  for (int w : ep.boundary_weights()) {
    CHECK(w >= 1);
    CHECK(w <= 3);
  }
}

TEST_CASE("polyhedral property verdicts") {
  CHECK(has_polyhedral_property(*catalog_patch("H").expansion).ok);
  CHECK(has_polyhedral_property(*catalog_patch("Q2").expansion).ok);
  CHECK(has_polyhedral_property(*catalog_patch("PN35").expansion).ok);
  // PN37's edge patch contains improperly meeting heptagons, which is why the
  // 3:7 family borrows its P_P from the grown PN35.
  auto rep = has_polyhedral_property(*catalog_patch("PN37").expansion);
  CHECK(!rep.ok);
  CHECK(rep.witness_f1 >= 0);
}
