#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubetop/ball.hpp"
#include "cubetop/cube_complex.hpp"
#include "cubetop/shapes.hpp"

using namespace cubetop;

TEST_CASE("validation accepts the standard fixtures") {
  CHECK(validate_complex(shapes::torus()).empty());
  CHECK(validate_complex(shapes::mobius()).empty());
  CHECK(validate_complex(shapes::corner3()).empty());
  CHECK(validate_complex(shapes::c3()).empty());
  CHECK(validate_complex(shapes::interosc()).empty());
  CHECK(validate_complex(shapes::rotation_torus()).empty());
  auto t = shapes::torus();
  CHECK(t.num_vertices == 1);
  CHECK(t.edges.size() == 2);
  CHECK(t.squares.size() == 1);
}

TEST_CASE("a square with a non-closed boundary is rejected") {
  CubeComplex X;
  X.num_vertices = 2;
  X.edges.push_back({0, 0, "a"});
  X.edges.push_back({0, 1, "b"});
  X.squares.push_back({{Dart{0, false}, Dart{1, false}, Dart{0, true}, Dart{1, true}}});
  auto v = validate_complex(X);
  REQUIRE(!v.empty());
  CHECK(v.front().code == "InconsistentAttachment");
  CHECK(v.front().cell.dim == 2);
}

TEST_CASE("torus link is a 4-cycle") {
  auto X = shapes::torus();
  auto L = vertex_link(X, 0);
  CHECK(L.vertices.size() == 4);
  CHECK(L.simplices.size() == 4);
  for (const auto& [simp, mult] : L.simplices) {
    CHECK(simp.size() == 2);
    CHECK(mult == 1);
  }
}

TEST_CASE("wedge link is discrete") {
  auto X = shapes::wedge2();
  auto L = vertex_link(X, 0);
  CHECK(L.vertices.size() == 4);
  CHECK(L.simplices.empty());
}

TEST_CASE("corner3 central link is an empty triangle") {
  auto X = shapes::corner3();
  auto L = vertex_link(X, 0);
  CHECK(L.vertices.size() == 3);
  CHECK(L.simplices.size() == 3);
  auto rep = check_npc(X);
  CHECK(!rep.pass);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures.front().kind == "non-flag");
  CHECK(rep.failures.front().vertex == 0);
}

TEST_CASE("graphs and the torus are nonpositively curved") {
  CHECK(check_npc(shapes::wedge2()).pass);
  CHECK(check_npc(shapes::c3()).pass);
  CHECK(check_npc(shapes::torus()).pass);
  CHECK(check_npc(shapes::mobius()).pass);
  CHECK(check_npc(shapes::interosc()).pass);
  CHECK(check_npc(shapes::rotation_torus()).pass);
  CHECK(check_npc(shapes::subdivided_torus()).pass);
}

TEST_CASE("doubled corners are flagged non-simplicial") {
  // two squares glued along two consecutive sides
  CubeComplex X;
  X.num_vertices = 4;
  X.edges.push_back({0, 1, "a"});
  X.edges.push_back({1, 2, "b"});
  X.edges.push_back({2, 3, "c"});
  X.edges.push_back({3, 0, "d"});
  X.edges.push_back({2, 3, "e"});
  X.edges.push_back({3, 0, "f"});
  X.squares.push_back({{Dart{0, false}, Dart{1, false}, Dart{2, false}, Dart{3, false}}});
  X.squares.push_back({{Dart{0, false}, Dart{1, false}, Dart{4, false}, Dart{5, false}}});
  auto rep = check_npc(X);
  CHECK(!rep.pass);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures.front().kind == "non-simplicial");
}

TEST_CASE("universal cover ball of the circle is a path") {
  auto X = shapes::circle();
  auto B = universal_cover_ball(X, 0, 3, 1 << 20);
  CHECK(B.complex->num_vertices == 7);
  CHECK(B.complex->edges.size() == 6);
  CHECK(B.complex->squares.empty());
}

TEST_CASE("universal cover ball of the wedge is a 4-regular tree") {
  auto X = shapes::wedge2();
  auto B = universal_cover_ball(X, 0, 2, 1 << 20);
  CHECK(B.complex->num_vertices == 17);
  CHECK(B.complex->edges.size() == 16);
}

TEST_CASE("universal cover ball of the torus develops four squares") {
  auto X = shapes::torus();
  auto B = universal_cover_ball(X, 0, 1, 1 << 20);
  CHECK(B.complex->squares.size() == 4);
  CHECK(B.complex->num_vertices == 9);
  CHECK(B.complex->edges.size() == 12);
  // interior of the radius-1 ball is the star of the center
  int interior_sq = 0;
  for (bool b : B.square_boundary)
    if (!b) ++interior_sq;
  CHECK(interior_sq == 4);
  CHECK(check_npc(*B.complex).pass);
  // monotone development: the smaller ball embeds in the bigger one
  auto B2 = universal_cover_ball(X, 0, 2, 1 << 20);
  CHECK(B2.complex->num_vertices > B.complex->num_vertices);
  auto incl = find_morphisms(B.projection, B2.projection);
  CHECK(!incl.empty());
}

TEST_CASE("ball development respects the cell cap") {
  auto X = shapes::wedge2();
  CHECK_THROWS_AS(universal_cover_ball(X, 0, 12, 100), Error);
}
