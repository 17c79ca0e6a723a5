#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubetop/presentation_fixtures.hpp"

using namespace cubetop;

TEST_CASE("coset enumeration closes finite quotients") {
  // cyclic of order six
  auto t = todd_coxeter(1, {{{0, false}, {0, false}, {0, false}, {0, false}, {0, false},
                             {0, false}}},
                        {}, 1 << 12);
  REQUIRE(t.has_value());
  CHECK(t->live() == 6);
  // symmetric group on three letters
  GroupWord a2 = {{0, false}, {0, false}};
  GroupWord b2 = {{1, false}, {1, false}};
  GroupWord abab = {{0, false}, {1, false}, {0, false}, {1, false}, {0, false}, {1, false}};
  auto s3 = group_order(2, {a2, b2, abab}, 1 << 12);
  REQUIRE(s3.has_value());
  CHECK(*s3 == 6);
  // the free group does not close
  CHECK(!todd_coxeter(2, {}, {{{0, false}}}, 256).has_value());
}

TEST_CASE("schreier tables measure subgroup index in free groups") {
  std::vector<GroupWord> idx3 = {
      {{0, false}, {0, false}},
      {{0, false}, {1, false}, {0, true}},
      {{1, false}, {0, false}, {1, true}},
      {{1, false}, {1, false}}};
  auto t = schreier_table(2, idx3);
  auto idx = schreier_index(t);
  REQUIRE(idx.has_value());
  CHECK(*idx == 3);
  CHECK(schreier_member(t, {{0, false}, {0, false}}));
  CHECK(!schreier_member(t, {{0, false}}));
  auto ta = schreier_table(2, {{{0, false}}});
  CHECK(!schreier_index(ta).has_value());
}

TEST_CASE("the edge cones of the triangle have no nontrivial pieces") {
  auto P = fixtures::c3_abc_edges();
  for (int i = 0; i < 3; ++i)
    for (const auto& p : enumerate_pieces(P, i)) {
      CHECK(!p.infinite);
      CHECK(p.diameter == 0);
    }
  for (const auto& alpha : {Fraction{1, 6}, Fraction{1, 12}, Fraction{1, 24}}) {
    auto rep = check_small_cancellation(P, alpha, 12);
    CHECK(rep.verdict == "pass");
  }
}

TEST_CASE("the injective path cones of the triangle also pass all alphas") {
  for (auto P : {fixtures::c3_abc_path(), fixtures::c3_ab_c()}) {
    for (const auto& alpha : {Fraction{1, 6}, Fraction{1, 12}, Fraction{1, 24}}) {
      auto rep = check_small_cancellation(P, alpha, 12);
      CHECK(rep.verdict == "pass");
    }
  }
}

TEST_CASE("the six-cycle cone has no pieces and systole six") {
  auto P = fixtures::wedge2_cyc6();
  auto pieces = enumerate_pieces(P, 0);
  int nontrivial = 0;
  for (const auto& p : pieces)
    if (p.diameter != 0 || p.infinite) ++nontrivial;
  CHECK(nontrivial == 0);
  auto s = systole(P, 0, 24);
  CHECK(s.exact);
  CHECK(s.value == 6);
  auto rep = check_small_cancellation(P, {1, 24}, 12);
  CHECK(rep.verdict == "pass");
  CHECK(rep.cones[0].max_piece_diameter == 0);
}

TEST_CASE("the repeated prefix produces a long cone-piece") {
  auto P = fixtures::wedge2_a6b();
  auto pieces = enumerate_pieces(P, 0);
  int d = 0;
  for (const auto& p : pieces) {
    CHECK(!p.infinite);
    d = std::max(d, p.diameter);
  }
  CHECK(d == 5);
  auto s = systole(P, 0, 24);
  CHECK(s.exact);
  CHECK(s.value == 7);
  auto rep = check_small_cancellation(P, {1, 24}, 12);
  CHECK(rep.verdict == "fail");
  CHECK(rep.cones[0].max_piece_diameter == 5);
  CHECK(rep.cones[0].witness_piece >= 0);
}

TEST_CASE("wall-pieces of the six-cycle cone are single vertices") {
  auto P = fixtures::wedge2_cyc6();
  int wall_pieces = 0;
  for (const auto& p : enumerate_pieces(P, 0))
    if (p.kind == "wall") {
      ++wall_pieces;
      CHECK(p.diameter == 0);
    }
  CHECK(wall_pieces > 0);
}

TEST_CASE("piece diameters are symmetric between host cones") {
  CubicalPresentation P;
  P.base = make_complex(shapes::wedge2());
  P.cones.push_back({fixtures::cycle_member(P.base, "aaaaaab", "a6b"), 1});
  P.cones.push_back({fixtures::cycle_member(P.base, "aaab", "a3b"), 1});
  auto against = [&](int i, int j) {
    std::multiset<int> out;
    for (const auto& p : enumerate_pieces(P, i))
      if (p.kind == "cone" && p.other == j) out.insert(p.diameter);
    return out;
  };
  CHECK(against(0, 1) == against(1, 0));
}

TEST_CASE("a tree cone reports an infinite systole") {
  CubicalPresentation P;
  P.base = make_complex(shapes::wedge2());
  P.cones.push_back({fixtures::path_member(P.base, "ab", "seg"), 1});
  auto s = systole(P, 0, 10);
  CHECK(s.exact);
  CHECK(s.infinite);
}

TEST_CASE("the graded subpresentation kills the six-cycle") {
  auto P = fixtures::wedge2_graded();
  auto s = systole(P, 1, 24);
  CHECK(s.bounded_mode);
  CHECK(s.exact);
  CHECK(s.infinite);  // the double cover kills every loop of the six-cycle
}

TEST_CASE("liftable shells pass for the cone itself and disjoint loops") {
  auto P = fixtures::wedge2_cyc6();
  auto self = check_liftable_shells(P.cones[0].member, P);
  CHECK(self.verdict == "pass");
  auto b = fixtures::cycle_member(P.base, "b", "loop_b");
  auto rep = check_liftable_shells(b, P);
  CHECK(rep.verdict == "pass");
  for (const auto& led : rep.components) {
    CHECK(led.diameter == 0);
    CHECK(led.pi1_trivial);
  }
}

TEST_CASE("a proper cover of the cone fails the shell dichotomy") {
  auto P = fixtures::wedge2_cyc6();
  auto a12 = fixtures::cycle_member(P.base, "aaaaaaaaaaaa", "cyc12");
  auto rep = check_liftable_shells(a12, P);
  CHECK(rep.verdict == "fail");
  bool witness = false;
  for (const auto& led : rep.components)
    if (led.verdict == "fail") witness = true;
  CHECK(witness);
}

TEST_CASE("the three triangle presentations fail the three nested conditions") {
  auto X = shapes::c3();
  {
    auto P = fixtures::c3_abc_path();
    auto rep = check_helly({P.cones[0].member}, *P.base);
    CHECK(!rep.injective);
    CHECK(rep.injectivity_cone == 0);
  }
  {
    auto P = fixtures::c3_ab_c();
    std::vector<FamilyMember> cones{P.cones[0].member, P.cones[1].member};
    auto rep = check_helly(cones, *P.base);
    CHECK(rep.injective);
    CHECK(!rep.pairwise_connected);
    CHECK(rep.pair_witness == std::pair<int, int>{0, 1});
  }
  {
    auto P = fixtures::c3_abc_edges();
    std::vector<FamilyMember> cones{P.cones[0].member, P.cones[1].member, P.cones[2].member};
    auto rep = check_helly(cones, *P.base);
    CHECK(rep.injective);
    CHECK(rep.pairwise_connected);
    CHECK(!rep.triple_intersection);
  }
}
