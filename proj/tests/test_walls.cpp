#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubetop/shapes.hpp"
#include "cubetop/walls.hpp"

using namespace cubetop;

namespace {

// independent parallelism closure: repeatedly merge midcube sets
int naive_wall_count(const CubeComplex& X) {
  std::vector<std::set<int>> classes;
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e) classes.push_back({e});
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& sq : X.squares)
      for (auto [x, y] : {std::pair{sq.side[0].edge, sq.side[2].edge},
                          std::pair{sq.side[1].edge, sq.side[3].edge}}) {
        int ix = -1, iy = -1;
        for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
          if (classes[i].count(x)) ix = i;
          if (classes[i].count(y)) iy = i;
        }
        if (ix != iy) {
          classes[ix].insert(classes[iy].begin(), classes[iy].end());
          classes.erase(classes.begin() + iy);
          changed = true;
        }
      }
  }
  return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("graphs have one point wall per edge") {
  auto W = shapes::wedge2();
  auto walls = compute_walls(W);
  CHECK(walls.size() == 2);
  for (const auto& w : walls) {
    CHECK(w.dual_edges.size() == 1);
    CHECK(w.two_sided);
  }
}

TEST_CASE("torus has two circular walls") {
  auto T = shapes::torus();
  auto walls = compute_walls(T);
  CHECK(walls.size() == 2);
  CHECK(walls.size() == static_cast<size_t>(naive_wall_count(T)));
  for (const auto& w : walls) {
    CHECK(w.dual_edges.size() == 1);
    CHECK(w.midsquares.size() == 1);
    CHECK(w.two_sided);
  }
}

TEST_CASE("a free-standing square has two arc walls") {
  CubeComplex X;
  X.num_vertices = 4;
  X.edges.push_back({0, 1, "a"});
  X.edges.push_back({1, 2, "b"});
  X.edges.push_back({2, 3, "c"});
  X.edges.push_back({3, 0, "d"});
  X.squares.push_back({{Dart{0, false}, Dart{1, false}, Dart{2, false}, Dart{3, false}}});
  auto walls = compute_walls(X);
  CHECK(walls.size() == 2);
  CHECK(walls.size() == static_cast<size_t>(naive_wall_count(X)));
}

TEST_CASE("wall counts match the exhaustive closure on fixtures") {
  for (const CubeComplex& X : {shapes::mobius(), shapes::rotation_torus(),
                               shapes::subdivided_torus(), shapes::interosc(),
                               shapes::corner3()}) {
    CHECK(compute_walls(X).size() == static_cast<size_t>(naive_wall_count(X)));
  }
}

TEST_CASE("the torus and trees are special") {
  CHECK(check_special(shapes::torus()).special);
  CHECK(check_special(shapes::c3()).special);
  CHECK(check_special(shapes::wedge2()).special);
  CHECK(check_special(shapes::rotation_torus()).special);
  CHECK(check_special(shapes::subdivided_torus()).special);
  CHECK(check_special(shapes::interosc()).special);
}

TEST_CASE("the moebius band has a one-sided wall") {
  auto M = shapes::mobius();
  auto rep = check_special(M);
  CHECK(!rep.special);
  REQUIRE(rep.walls.size() == 3);
  int one_sided = -1;
  for (const auto& p : rep.pathologies)
    if (p.kind == "one-sided") one_sided = p.wall;
  REQUIRE(one_sided >= 0);
  CHECK(rep.walls[one_sided].dual_edges == std::vector<int>{4, 5});
  CHECK(rep.inter_osculations.empty());
}

TEST_CASE("carrier maps of special complexes are locally convex") {
  for (const CubeComplex& X :
       {shapes::torus(), shapes::rotation_torus(), shapes::interosc()}) {
    for (const auto& w : compute_walls(X)) {
      auto car = build_carrier(X, w);
      CHECK(validate_complex(*car.complex).empty());
      CHECK(check_local_isometry(car.map).pass);
    }
  }
}

TEST_CASE("the carrier of the moebius core wall is the whole band") {
  auto M = shapes::mobius();
  auto walls = compute_walls(M);
  const Wall& core = walls[2];
  REQUIRE(core.dual_edges == std::vector<int>{4, 5});
  auto car = build_carrier(M, core);
  CHECK(car.complex->squares.size() == 2);
  CHECK(validate_complex(*car.complex).empty());
}

TEST_CASE("wall pair inter-osculation is detected") {
  // square a b q r' plus a torus-like square: the walls through a and b
  // cross in one square and touch without a corner elsewhere
  CubeComplex X;
  X.num_vertices = 2;               // v, w
  X.edges.push_back({0, 0, "a"});   // 0
  X.edges.push_back({0, 0, "b"});   // 1
  X.edges.push_back({0, 1, "q"});   // 2
  X.edges.push_back({0, 1, "r"});   // 3
  X.squares.push_back({{Dart{0, false}, Dart{1, false}, Dart{2, false}, Dart{3, true}}});
  REQUIRE(validate_complex(X).empty());
  REQUIRE(check_npc(X).pass);
  auto rep = check_special(X);
  CHECK(!rep.special);
  CHECK(!rep.inter_osculations.empty());
}

TEST_CASE("a wall inter-osculates an embedded cycle through its pendant edge") {
  auto X = shapes::interosc();
  auto walls = compute_walls(X);
  int wb = -1;
  for (const auto& w : walls)
    if (w.dual_pos(0) >= 0) wb = w.id;
  REQUIRE(wb >= 0);
  CHECK(walls[wb].dual_edges == std::vector<int>{0, 4});

  auto tri = shapes::c3();
  CombinatorialMap incl;
  incl.source = &tri;
  incl.target = &X;
  incl.vertex_map = {0, 1, 2};
  incl.edge_map = {{0, false}, {1, false}, {2, false}};
  require_map(incl);
  auto rep = inter_osculates(X, walls[wb], incl);
  CHECK(rep.inter_osculates);
  CHECK(rep.crossing_edge == 0);
  CHECK(rep.witness_edge == 4);

  // the whole complex is met by every dual edge in two vertices or inside
  auto whole = identity_map(X);
  auto rep2 = inter_osculates(X, walls[wb], whole);
  CHECK(!rep2.inter_osculates);

  // a wall not crossing the cycle reports false
  int wsr = -1;
  for (const auto& w : walls)
    if (w.dual_pos(3) >= 0) wsr = w.id;
  REQUIRE(wsr >= 0);
  CHECK(!inter_osculates(X, walls[wsr], incl).inter_osculates);
}

TEST_CASE("a torus wall does not inter-osculate the other loop") {
  auto T = shapes::torus();
  auto walls = compute_walls(T);
  auto L = shapes::circle("b");
  CombinatorialMap incl;
  incl.source = &L;
  incl.target = &T;
  incl.vertex_map = {0};
  incl.edge_map = {{1, false}};
  require_map(incl);
  int wa = walls[0].dual_pos(0) >= 0 ? 0 : 1;
  CHECK(!inter_osculates(T, walls[wa], incl).inter_osculates);
}

TEST_CASE("a one-sided wall becomes two-sided in the cocycle double cover") {
  auto M = shapes::mobius();
  auto walls = compute_walls(M);
  const Wall& core = walls[2];
  REQUIRE(!core.two_sided);
  auto spec = one_sided_double_cover(M, core);
  REQUIRE(spec.has_value());
  auto cov = build_cover(*spec);
  CHECK(check_npc(*cov.total).pass);
  auto cover_walls = compute_walls(*cov.total);
  bool found = false;
  for (const auto& w : cover_walls) {
    bool over_core = false;
    for (int e : w.dual_edges)
      if (cov.projection.edge_map[e].edge == 4 || cov.projection.edge_map[e].edge == 5)
        over_core = true;
    if (over_core) {
      found = true;
      CHECK(w.two_sided);
    }
  }
  CHECK(found);
}
