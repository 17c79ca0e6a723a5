#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubetop/gog_fixtures.hpp"

using namespace cubetop;

TEST_CASE("the circle-over-circle assembly is a subdivided torus") {
  auto G = fixtures::torus_gog();
  auto A = assemble_total_space(G);
  CHECK(A.total->num_vertices == 2);
  CHECK(A.total->edges.size() == 4);
  CHECK(A.total->squares.size() == 2);
  CHECK(check_npc(*A.total).pass);
  CHECK(check_special(*A.total).special);
  CHECK(check_local_isometry(A.vertex_embed[0]).pass);
  CHECK(check_local_isometry(A.edge_embed[0]).pass);
}

TEST_CASE("the wedge-over-wedge assembly has four squares") {
  auto G = fixtures::f2z_gog();
  auto A = assemble_total_space(G);
  CHECK(A.total->num_vertices == 2);
  CHECK(A.total->edges.size() == 6);
  CHECK(A.total->squares.size() == 4);
  CHECK(check_npc(*A.total).pass);
}

TEST_CASE("an empty edge set assembles to the disjoint vertex spaces") {
  GraphOfComplexes G;
  G.vertices.push_back({"v", make_complex(shapes::torus())});
  G.vertices.push_back({"w", make_complex(shapes::wedge2())});
  auto A = assemble_total_space(G);
  CHECK(A.total->num_vertices == 2);
  CHECK(A.total->edges.size() == 4);
  CHECK(A.total->squares.size() == 1);
}

TEST_CASE("assembly restricted to a vertex space is the identity on cells") {
  auto G = fixtures::free_hnn_gog();
  auto A = assemble_total_space(G);
  const auto& emb = A.vertex_embed[0];
  for (int v = 0; v < G.vertices[0].space->num_vertices; ++v) CHECK(emb.vertex_map[v] == v);
  CHECK(check_npc(*A.total).pass);
}

TEST_CASE("a two-dimensional edge space assembles through prisms") {
  GraphOfComplexes G;
  auto t = make_complex(shapes::torus());
  G.vertices.push_back({"v", t});
  GogEdge e;
  e.id = "e";
  e.space = t;
  e.iota_vertex = e.tau_vertex = 0;
  e.iota = identity_map(*t);
  e.tau = identity_map(*t);
  G.edges.push_back(std::move(e));
  auto A = assemble_total_space(G);
  CHECK(A.total->higher.size() == 2);
  CHECK(validate_complex(*A.total).empty());
  CHECK(check_npc(*A.total).pass);
}

TEST_CASE("a broken attachment is rejected") {
  GraphOfComplexes G;
  auto t = make_complex(shapes::torus());
  auto p = make_complex([] {
    CubeComplex P;
    P.num_vertices = 3;
    P.edges.push_back({0, 1, "a"});
    P.edges.push_back({1, 2, "b"});
    return P;
  }());
  G.vertices.push_back({"v", t});
  GogEdge e;
  e.id = "e";
  e.space = p;
  e.iota_vertex = e.tau_vertex = 0;
  e.iota = fixtures::graph_map(p, t, {0, 0, 0}, {{0, false}, {1, false}});
  e.tau = fixtures::graph_map(p, t, {0, 0, 0}, {{0, false}, {1, false}});
  G.edges.push_back(std::move(e));
  CHECK_THROWS_AS(assemble_total_space(G), Error);
}

TEST_CASE("augmentation adds one vertex and edge per map") {
  auto G = fixtures::f2z_gog();
  auto carrier_member = [&] {
    auto dom = make_complex(shapes::circle());
    CombinatorialMap f;
    f.source = dom.get();
    f.target = G.vertices[0].space.get();
    f.vertex_map = {0};
    f.edge_map = {{0, false}};
    require_map(f);
    return make_member(dom, f, "carrier_a");
  }();
  std::vector<AugmentExtra> extras;
  extras.push_back({0, carrier_member, "carrier_a"});
  extras.push_back({0, make_member(G.vertices[0].space, identity_map(*G.vertices[0].space), "id"),
                    "thick"});
  auto res = augment(G, extras);
  CHECK(res.gog.vertices.size() == 3);
  CHECK(res.gog.edges.size() == 3);
  CHECK(res.homotopy_verified);
  auto A = assemble_total_space(res.gog);
  CHECK(check_npc(*A.total).pass);
}

TEST_CASE("augmentation with no extras is the identity") {
  auto G = fixtures::torus_gog();
  auto res = augment(G, {});
  CHECK(res.gog.vertices.size() == 1);
  CHECK(res.gog.edges.size() == 1);
  CHECK(res.homotopy_verified);
}

TEST_CASE("an augmentation map outside its vertex space is rejected") {
  auto G = fixtures::torus_gog();
  auto dom = make_complex(shapes::circle("b"));
  CombinatorialMap f;  // a loop labeled b has no image in the circle over a
  f.source = dom.get();
  f.target = dom.get();
  f.vertex_map = {0};
  f.edge_map = {{0, false}};
  std::vector<AugmentExtra> extras;
  extras.push_back({0, make_member(dom, f, "bad"), "bad"});
  CHECK_THROWS_AS(augment(G, extras), Error);
}

TEST_CASE("the subdivided torus assembly satisfies the gluing criterion") {
  auto G = fixtures::torus_gog();
  auto rep = check_gluing_criterion(G);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.pass);
}

TEST_CASE("merged wall images fail the second gluing condition") {
  auto G = fixtures::wallmerge_gog();
  auto rep = check_gluing_criterion(G);
  CHECK(rep.hypothesis_ok);
  CHECK(!rep.pass);
  bool cond2 = false;
  for (const auto& f : rep.failures) {
    CHECK(f.condition == 2);
    if (f.condition == 2) cond2 = true;
  }
  CHECK(cond2);
}

TEST_CASE("a pendant wall extension fails the fourth gluing condition") {
  auto G = fixtures::interosc_gog();
  auto rep = check_gluing_criterion(G);
  CHECK(rep.hypothesis_ok);
  CHECK(!rep.pass);
  bool cond4 = false;
  for (const auto& f : rep.failures) {
    CHECK(f.condition == 4);
    if (f.condition == 4) {
      cond4 = true;
      REQUIRE(f.witness.size() == 2);
      CHECK(f.witness[1] == 4);  // the pendant edge
    }
  }
  CHECK(cond4);
}

TEST_CASE("a non-special vertex space is a hypothesis failure") {
  GraphOfComplexes G;
  auto m = make_complex(shapes::mobius());
  auto c = make_complex(shapes::circle("r0"));
  G.vertices.push_back({"v", m});
  GogEdge e;
  e.id = "e";
  e.space = c;
  e.iota_vertex = e.tau_vertex = 0;
  // r0 is not a loop; use a length-four cycle onto the band boundary instead
  auto cyc4 = make_complex(shapes::cyc(4, "c"));
  e.space = cyc4;
  e.iota = fixtures::graph_map(cyc4, m, {0, 1, 2, 3},
                               {{0, false}, {2, false}, {1, false}, {3, false}});
  e.tau = e.iota;
  G.edges.push_back(std::move(e));
  auto rep = check_gluing_criterion(G);
  CHECK(!rep.hypothesis_ok);
  CHECK(rep.hypothesis_witness == "vertex space v");
}
