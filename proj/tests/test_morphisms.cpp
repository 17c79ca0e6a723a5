#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubetop/cover.hpp"
#include "cubetop/cylinder.hpp"
#include "cubetop/shapes.hpp"

using namespace cubetop;

namespace {

// map of graphs given by vertex images and darts
CombinatorialMap graph_map(const CubeComplex& Y, const CubeComplex& X, std::vector<int> vm,
                           std::vector<EdgeImage> em) {
  CombinatorialMap f;
  f.source = &Y;
  f.target = &X;
  f.vertex_map = std::move(vm);
  f.edge_map = std::move(em);
  require_map(f);
  return f;
}

}  // namespace

TEST_CASE("inclusion of a loop into the wedge is a local isometry") {
  auto W = shapes::wedge2();
  auto L = shapes::circle();
  auto f = graph_map(L, W, {0}, {{0, false}});
  CHECK(check_local_isometry(f).pass);
}

TEST_CASE("an unfolded graph map is not a local isometry") {
  auto W = shapes::wedge2();
  CubeComplex Y;
  Y.num_vertices = 3;
  Y.edges.push_back({0, 1, "a"});
  Y.edges.push_back({0, 2, "a"});
  auto f = graph_map(Y, W, {0, 0, 0}, {{0, false}, {0, false}});
  auto rep = check_local_isometry(f);
  CHECK(!rep.pass);
  CHECK(rep.failures.front().kind == "not-injective");
}

TEST_CASE("a path through the torus vertex is not locally convex") {
  auto T = shapes::torus();
  CubeComplex P;  // path a then b
  P.num_vertices = 3;
  P.edges.push_back({0, 1, "a"});
  P.edges.push_back({1, 2, "b"});
  auto f = graph_map(P, T, {0, 0, 0}, {{0, false}, {1, false}});
  auto rep = check_local_isometry(f);
  CHECK(!rep.pass);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures.front().kind == "not-full");
  CHECK(rep.failures.front().vertex == 1);
}

TEST_CASE("local isometries compose") {
  auto W = shapes::wedge2();
  auto C6 = shapes::cyc(6);
  auto C2 = shapes::cyc(2);
  std::vector<EdgeImage> em6(6, {0, false});
  auto f = graph_map(C6, W, {0, 0, 0, 0, 0, 0}, em6);
  // degree-3 covering cyc6 -> cyc2
  std::vector<int> vm{0, 1, 0, 1, 0, 1};
  std::vector<EdgeImage> em{{0, false}, {1, false}, {0, false}, {1, false}, {0, false}, {1, false}};
  CombinatorialMap g;
  g.source = &C6;
  g.target = &C2;
  g.vertex_map = vm;
  g.edge_map = em;
  require_map(g);
  auto h = graph_map(C2, W, {0, 0}, {{0, false}, {0, false}});
  CHECK(check_local_isometry(g).pass);
  CHECK(check_local_isometry(h).pass);
  CHECK(check_local_isometry(compose(h, g)).pass);
  CHECK(compose(h, g).vertex_map == f.vertex_map);
}

TEST_CASE("cover of the circle of degree 2 is the 2-cycle") {
  auto C = shapes::circle();
  CoverSpec spec{&C, 2, {{1, 0}}};
  auto cov = build_cover(spec);
  CHECK(cov.total->num_vertices == 2);
  CHECK(cov.total->edges.size() == 2);
  CHECK(check_local_isometry(cov.projection).pass);
  CHECK(connected_vertex_components(*cov.total) == std::vector<int>{0, 0});
}

TEST_CASE("torus covers validate the square relation") {
  auto T = shapes::torus();
  CoverSpec good{&T, 2, {{1, 0}, {0, 1}}};
  CHECK(!validate_cover_spec(good));
  auto cov = build_cover(good);
  CHECK(cov.total->squares.size() == 2);
  CHECK(check_npc(*cov.total).pass);
  CHECK(check_local_isometry(cov.projection).pass);

  CoverSpec bad{&T, 3, {{1, 0, 2}, {2, 1, 0}}};
  auto viol = validate_cover_spec(bad);
  REQUIRE(viol.has_value());
  CHECK(viol->square == 0);
  CHECK_THROWS_AS(build_cover(bad), Error);
}

TEST_CASE("elevation of a loop across a transitive cover is the full cycle") {
  auto W = shapes::wedge2();
  auto L = shapes::circle();
  auto f = graph_map(L, W, {0}, {{0, false}});
  CoverSpec spec{&W, 2, {{1, 0}, {0, 1}}};
  auto cov = build_cover(spec);
  auto el = elevation(f, cov, spec, 0, 0);
  CHECK(el.degree == 2);
  CHECK(el.domain->num_vertices == 2);
  CHECK(el.domain->edges.size() == 2);
  CHECK(check_local_isometry(el.elevated).pass);
}

TEST_CASE("elevations split when the loop acts trivially") {
  auto W = shapes::wedge2();
  auto L = shapes::circle();
  auto f = graph_map(L, W, {0}, {{0, false}});
  CoverSpec spec{&W, 2, {{0, 1}, {1, 0}}};
  auto cov = build_cover(spec);
  auto els = all_elevations(f, cov, spec, 0);
  CHECK(els.size() == 2);
  for (const auto& el : els) {
    CHECK(el.degree == 1);
    CHECK(el.domain->edges.size() == 1);
  }
}

TEST_CASE("elevation degrees partition the covering degree") {
  auto W = shapes::wedge2();
  auto C2 = shapes::cyc(2);
  CombinatorialMap f;
  f.source = &C2;
  f.target = &W;
  f.vertex_map = {0, 0};
  f.edge_map = {{0, false}, {0, false}};
  require_map(f);
  CoverSpec spec{&W, 4, {{1, 2, 3, 0}, {0, 1, 2, 3}}};
  auto cov = build_cover(spec);
  auto els = all_elevations(f, cov, spec, 0);
  int total = 0;
  for (const auto& el : els) total += el.degree;
  CHECK(total == 4);
}

TEST_CASE("identity mapping cylinder of the circle is the annulus") {
  auto C = shapes::circle();
  auto f = identity_map(C);
  auto cyl = mapping_cylinder(f);
  CHECK(cyl.complex->num_vertices == 2);
  CHECK(cyl.complex->edges.size() == 3);
  CHECK(cyl.complex->squares.size() == 1);
  CHECK(check_npc(*cyl.complex).pass);
  CHECK(check_local_isometry(cyl.source_end).pass);
  CHECK(check_local_isometry(cyl.target_end).pass);
  CHECK(cyl.pi1_verified);
}

TEST_CASE("cylinder over a loop in the wedge is an annular flap") {
  auto W = shapes::wedge2();
  auto L = shapes::circle();
  CombinatorialMap f;
  f.source = &L;
  f.target = &W;
  f.vertex_map = {0};
  f.edge_map = {{0, false}};
  require_map(f);
  auto cyl = mapping_cylinder(f);
  CHECK(check_npc(*cyl.complex).pass);
  CHECK(check_local_isometry(cyl.target_end).pass);
  CHECK(cyl.pi1_verified);
}

TEST_CASE("cylinder of the double cover of the circle") {
  auto C = shapes::circle();
  auto C2 = shapes::cyc(2);
  CombinatorialMap f;
  f.source = &C2;
  f.target = &C;
  f.vertex_map = {0, 0};
  f.edge_map = {{0, false}, {0, false}};
  require_map(f);
  auto cyl = mapping_cylinder(f);
  CHECK(check_npc(*cyl.complex).pass);
  CHECK(check_local_isometry(cyl.source_end).pass);
  CHECK(cyl.pi1_verified);
}

TEST_CASE("cylinder of the identity on the torus has three-dimensional cells") {
  auto T = shapes::torus();
  auto f = identity_map(T);
  auto cyl = mapping_cylinder(f);
  CHECK(cyl.complex->higher.size() == 1);
  CHECK(validate_complex(*cyl.complex).empty());
  CHECK(check_npc(*cyl.complex).pass);
  CHECK(cyl.pi1_verified);  // collapse works in any dimension
}
