#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubetop/gog_fixtures.hpp"
#include "cubetop/stature.hpp"

using namespace cubetop;

namespace {

SubgroupRep words_rep(const CubeComplex& X, const std::vector<std::string>& words) {
  std::vector<std::vector<Dart>> ws;
  for (const auto& w : words) ws.push_back(parse_word(X, w));
  return rep_from_words(X, 0, ws);
}

}  // namespace

TEST_CASE("height of a free factor is one") {
  auto W = shapes::wedge2();
  auto rep = words_rep(W, {"a"});
  auto h = height(rep.immersion, 6);
  CHECK(h.certified);
  CHECK(h.height == 1);
}

TEST_CASE("height of the square of a generator is two") {
  auto W = shapes::wedge2();
  auto rep = words_rep(W, {"aa"});
  auto h = height(rep.immersion, 6);
  CHECK(h.certified);
  CHECK(h.height == 2);
}

TEST_CASE("height of the trivial subgroup is zero") {
  auto W = shapes::wedge2();
  auto rep = trivial_rep(&W);
  CubeComplex point;
  point.num_vertices = 1;
  auto dom = make_complex(point);
  CombinatorialMap f;
  f.source = dom.get();
  f.target = &W;
  f.vertex_map = {0};
  auto h = height(f, 4);
  CHECK(h.certified);
  CHECK(h.height == 0);
  (void)rep;
}

TEST_CASE("height of the whole group is one") {
  auto W = shapes::wedge2();
  auto id = identity_map(W);
  auto h = height(id, 4);
  CHECK(h.certified);
  CHECK(h.height == 1);
}

TEST_CASE("a tight budget reports an uncertified floor") {
  auto W = shapes::wedge2();
  auto rep = words_rep(W, {"aa"});
  auto h = height(rep.immersion, 1);
  CHECK(!h.certified);
  CHECK(h.height >= 1);
}

TEST_CASE("commensurable depth of one circle subgroup is one") {
  auto C = shapes::circle();
  auto r = words_rep(C, {"a"});
  auto d = depth({r}, true, 4);
  CHECK(d.certified);
  CHECK(d.depth == 1);
}

TEST_CASE("commensurable depth of the squares and cubes is two") {
  auto C = shapes::circle();
  auto r2 = words_rep(C, {"aa"});
  auto r3 = words_rep(C, {"aaa"});
  auto d = depth({r2, r3}, true, 6);
  CHECK(d.certified);
  CHECK(d.depth == 2);
  REQUIRE(d.chain.size() == 2);
  // the chain bottom is the sixth-power class
  auto r6 = words_rep(C, {"aaaaaa"});
  CHECK(d.chain.front() == conjugacy_key(r6));
  // plain depth rejects the finite-index step
  auto dp = depth({r2, r3}, false, 6);
  CHECK(dp.depth == 1);
}

TEST_CASE("plain depth of the trivial family is zero") {
  auto C = shapes::circle();
  auto d = depth({trivial_rep(&C)}, false, 3);
  CHECK(d.depth == 0);
}

TEST_CASE("stature of the subdivided torus is one class") {
  auto G = fixtures::torus_gog();
  auto s = stature(G, 3, 3);
  CHECK(s.finite);
  CHECK(!s.exceeded);
  REQUIRE(s.classes.size() == 1);
  CHECK(s.classes[0].lowest);
  auto base = words_rep(*G.vertices[0].space, {"a"});
  CHECK(s.classes[0].key == conjugacy_key(base));
}

TEST_CASE("stature of the product gog is one class") {
  auto G = fixtures::f2z_gog();
  auto s = stature(G, 3, 3);
  CHECK(s.finite);
  REQUIRE(s.classes.size() == 1);
  auto whole = words_rep(*G.vertices[0].space, {"a", "b"});
  CHECK(s.classes[0].key == conjugacy_key(whole));
}

TEST_CASE("stature of the letter-exchanging extension has the two loop classes") {
  auto G = fixtures::free_hnn_gog();
  auto s = stature(G, 3, 3);
  CHECK(s.finite);
  REQUIRE(s.classes.size() == 2);
  auto ra = words_rep(*G.vertices[0].space, {"a"});
  auto rb = words_rep(*G.vertices[0].space, {"b"});
  std::set<std::string> keys{s.classes[0].key, s.classes[1].key};
  CHECK(keys.count(conjugacy_key(ra)));
  CHECK(keys.count(conjugacy_key(rb)));
  for (const auto& c : s.classes) CHECK(c.lowest);
}

TEST_CASE("the stress candidate keeps producing classes") {
  auto G = fixtures::irr_candidate_gog();
  auto s = stature(G, 4, 4);
  CHECK(s.exceeded);
  REQUIRE(s.class_counts.size() == 4);
  for (size_t i = 1; i < s.class_counts.size(); ++i)
    CHECK(s.class_counts[i] > s.class_counts[i - 1]);
}

TEST_CASE("big-trees of the subdivided torus stay open with a stable class") {
  auto G = fixtures::torus_gog();
  std::string key;
  for (int radius : {1, 2, 3, 4}) {
    auto bt = enumerate_big_trees(G, radius, 16);
    REQUIRE(bt.records.size() == 1);
    CHECK(!bt.records[0].maximal_certified);
    if (key.empty()) key = bt.records[0].stab_key;
    CHECK(bt.records[0].stab_key == key);
  }
}

TEST_CASE("big-trees of the letter-exchanging extension are single edges") {
  auto G = fixtures::free_hnn_gog();
  auto bt = enumerate_big_trees(G, 3, 16);
  REQUIRE(bt.records.size() == 1);
  CHECK(bt.records[0].maximal_certified);
  CHECK(bt.records[0].nodes.size() == 2);
  auto ra = words_rep(*G.vertices[0].space, {"a"});
  CHECK(bt.records[0].stab_key == conjugacy_key(ra));
  CHECK(bt.records[0].lowest);
}

TEST_CASE("a contractible edge space seeds no big-tree") {
  GraphOfComplexes G;
  auto w = make_complex(shapes::wedge2());
  CubeComplex seg;
  seg.num_vertices = 2;
  seg.edges.push_back({0, 1, "a"});
  auto segp = make_complex(std::move(seg));
  G.vertices.push_back({"v", w});
  GogEdge e;
  e.id = "e";
  e.space = segp;
  e.iota_vertex = e.tau_vertex = 0;
  e.iota = fixtures::graph_map(segp, w, {0, 0}, {{0, false}});
  e.tau = fixtures::graph_map(segp, w, {0, 0}, {{1, false}});
  G.edges.push_back(std::move(e));
  auto bt = enumerate_big_trees(G, 3, 16);
  CHECK(bt.records.empty());
}

TEST_CASE("stabilizers are independent of the growth order") {
  auto G = fixtures::free_hnn_gog();
  for (int radius : {1, 2, 3}) {
    auto bt = enumerate_big_trees(G, radius, 16);
    for (const auto& rec : bt.records)
      for (const auto& n : rec.nodes) CHECK(conjugacy_key(n.rep) == n.key);
  }
}

TEST_CASE("finite stature bounds the commensurable depth by the class count") {
  for (auto G : {fixtures::torus_gog(), fixtures::f2z_gog(), fixtures::free_hnn_gog()}) {
    auto s = stature(G, 3, 3);
    REQUIRE(s.finite);
    std::map<int, std::vector<SubgroupRep>> by_vertex;
    for (const auto& c : s.classes) by_vertex[c.vertex].push_back(c.rep);
    for (auto& [v, fam] : by_vertex) {
      auto d = depth(fam, true, 6);
      CHECK(d.certified);
      CHECK(d.depth <= static_cast<int>(s.classes.size()));
    }
  }
}
