#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubetop/fiber_ops.hpp"
#include "cubetop/shapes.hpp"

using namespace cubetop;

namespace {

FamilyMember cyc_over_circle(const CubeComplex& circle, int n) {
  auto dom = make_complex(shapes::cyc(n));
  CombinatorialMap f;
  f.source = dom.get();
  f.target = &circle;
  f.vertex_map.assign(n, 0);
  f.edge_map.assign(n, {0, false});
  require_map(f);
  return make_member(dom, f, "cyc" + std::to_string(n));
}

FamilyMember loop_in_wedge(const CubeComplex& wedge, int which) {
  auto dom = make_complex(shapes::circle());
  CombinatorialMap f;
  f.source = dom.get();
  f.target = &wedge;
  f.vertex_map = {0};
  f.edge_map = {{which, false}};
  require_map(f);
  return make_member(dom, f, which == 0 ? "loop_a" : "loop_b");
}

FamilyMember words_member(const CubeComplex& X, const std::vector<std::string>& words,
                          std::string name) {
  std::vector<std::vector<Dart>> ws;
  for (const auto& w : words) ws.push_back(parse_word(X, w));
  SubgroupRep rep = rep_from_words(X, 0, ws);
  return make_member(rep.core, rep.immersion, std::move(name));
}

}  // namespace

TEST_CASE("fiber product of the two and three cycles is the six cycle") {
  auto C = shapes::circle();
  auto a2 = cyc_over_circle(C, 2);
  auto a3 = cyc_over_circle(C, 3);
  auto comps = fiber_components(a2.map, a3.map);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].complex->num_vertices == 6);
  CHECK(comps[0].complex->edges.size() == 6);
  CHECK(comps[0].essential);
  CHECK(check_local_isometry(comps[0].to_a).pass);
  CHECK(check_local_isometry(comps[0].to_b).pass);
}

TEST_CASE("fiber product with the identity returns the other factor") {
  auto T = shapes::torus();
  auto id = identity_map(T);
  auto comps = fiber_components(id, id);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].to_a_iso);
  CHECK(comps[0].to_b_iso);
  CHECK(comps[0].complex->squares.size() == 1);
}

TEST_CASE("labels keep off-diagonal components of the triangle apart") {
  // the triangle collapsed onto a wedge of three labeled loops
  auto W = shapes::wedge({"a", "b", "c"});
  auto dom = make_complex(shapes::c3());
  CombinatorialMap id;
  id.source = dom.get();
  id.target = &W;
  id.vertex_map = {0, 0, 0};
  id.edge_map = {{0, false}, {1, false}, {2, false}};
  require_map(id);
  auto comps = fiber_components(id, id);
  // the diagonal triangle plus six isolated vertices
  CHECK(comps.size() == 7);
  int essential = 0, vertices_only = 0;
  for (const auto& K : comps) {
    if (K.essential) ++essential;
    if (K.complex->edges.empty()) ++vertices_only;
  }
  CHECK(essential == 1);
  CHECK(vertices_only == 6);
}

TEST_CASE("multiple fiber product of coprime cycles is cyclic of the product order") {
  auto C = shapes::circle();
  std::vector<FamilyMember> fam{cyc_over_circle(C, 2), cyc_over_circle(C, 3),
                                cyc_over_circle(C, 5)};
  // direct iterated product: components of ((2x3)x5)
  auto c6 = fiber_components(fam[0].map, fam[1].map);
  REQUIRE(c6.size() == 1);
  auto left = compose(fam[0].map, c6[0].to_a);
  auto full = fiber_components(left, fam[2].map);
  REQUIRE(full.size() == 1);
  CHECK(full[0].complex->num_vertices == 30);
  // association independence
  auto c15 = fiber_components(fam[1].map, fam[2].map);
  REQUIRE(c15.size() == 1);
  auto right = compose(fam[1].map, c15[0].to_a);
  auto full2 = fiber_components(fam[0].map, right);
  REQUIRE(full2.size() == 1);
  CHECK(canonical_form(compose(left, full[0].to_a)) ==
        canonical_form(compose(fam[0].map, full2[0].to_a)));
}

TEST_CASE("loops over the wedge intersect trivially") {
  auto W = shapes::wedge2();
  auto a = loop_in_wedge(W, 0);
  auto b = loop_in_wedge(W, 1);
  auto comps = fiber_components(a.map, b.map);
  REQUIRE(comps.size() == 1);
  CHECK(!comps[0].essential);
  CHECK(comps[0].complex->num_vertices == 1);
  CHECK(comps[0].complex->edges.empty());
}

TEST_CASE("automorphisms of the six cycle over the circle form the cyclic group") {
  auto C = shapes::circle();
  auto a6 = cyc_over_circle(C, 6);
  CHECK(automorphisms(a6.map).size() == 6);
}

TEST_CASE("automorphism groups of labeled and rigid maps are trivial") {
  auto X = shapes::c3();
  CHECK(automorphisms(identity_map(X)).size() == 1);
  auto W = shapes::wedge2();
  auto a = loop_in_wedge(W, 0);
  CHECK(automorphisms(a.map).size() == 1);
}

TEST_CASE("the double cover of the circle is symmetric") {
  auto C = shapes::circle();
  auto a2 = cyc_over_circle(C, 2);
  auto rep = is_symmetric(a2.map);
  CHECK(rep.symmetric);
  CHECK(rep.components == 2);
}

TEST_CASE("whole-space identities are symmetric") {
  auto T = shapes::torus();
  CHECK(is_symmetric(identity_map(T)).symmetric);
}

TEST_CASE("a nonnormal finite-index subgroup is not symmetric") {
  // index-3 subgroup of the free group on a, b from the permutation action
  // a -> (1 2), b -> (1 3): finite index but not normal
  auto W = shapes::wedge2();
  auto H = words_member(W, {"aa", "ab a'", "b a b'", "bb"}, "index3");
  auto deg = subgroup_index(H.map);
  CHECK(deg.finite);
  CHECK(deg.degree == 3);
  auto rep = is_symmetric(H.map);
  CHECK(!rep.symmetric);
  CHECK(rep.witness_index > 1);
}

TEST_CASE("the dumbbell core is symmetric despite sharing letters") {
  auto W = shapes::wedge2();
  auto H = words_member(W, {"a", "b a b'"}, "dumbbell");
  CHECK(H.domain->num_vertices == 2);
  CHECK(H.domain->edges.size() == 3);
  CHECK(is_symmetric(H.map).symmetric);
}

TEST_CASE("principal components of coprime cycles collapse to the full cycle") {
  auto C = shapes::circle();
  std::vector<FamilyMember> fam{cyc_over_circle(C, 2), cyc_over_circle(C, 3)};
  auto res = principal_components(fam, 3);
  CHECK(res.certified);
  REQUIRE(res.reps.size() == 1);
  CHECK(res.reps[0].complex->num_vertices == 6);
}

TEST_CASE("disjoint loops are their own principal representatives") {
  auto W = shapes::wedge2();
  std::vector<FamilyMember> fam{loop_in_wedge(W, 0), loop_in_wedge(W, 1)};
  auto res = principal_components(fam, 3);
  CHECK(res.certified);
  REQUIRE(res.reps.size() == 2);
}

TEST_CASE("a single symmetric member is its own principal representative") {
  auto C = shapes::circle();
  std::vector<FamilyMember> fam{cyc_over_circle(C, 2)};
  auto res = principal_components(fam, 3);
  CHECK(res.certified);
  REQUIRE(res.reps.size() == 1);
  CHECK(res.reps[0].complex->num_vertices == 2);
}

TEST_CASE("disjoint loops over the wedge are stable with kappa zero") {
  auto W = shapes::wedge2();
  std::vector<FamilyMember> fam{loop_in_wedge(W, 0), loop_in_wedge(W, 1)};
  auto rep = check_stable(fam);
  CHECK(rep.stable);
  CHECK(rep.kappa == 0);
}

TEST_CASE("the double cover of the circle is stable alone") {
  auto C = shapes::circle();
  std::vector<FamilyMember> fam{cyc_over_circle(C, 2)};
  CHECK(check_stable(fam).stable);
}

TEST_CASE("nested powers of a loop are unstable") {
  auto W = shapes::wedge2();
  auto a1 = words_member(W, {"a"}, "a");
  auto a2 = words_member(W, {"aa"}, "a2");
  auto rep = check_stable({a1, a2});
  CHECK(!rep.stable);
  bool clause2 = false;
  for (const auto& v : rep.violations)
    if (v.clause == 2) clause2 = true;
  CHECK(clause2);
}

TEST_CASE("intersections of circle subgroups compose through offsets") {
  auto C = shapes::circle();
  auto a2 = cyc_over_circle(C, 2);
  auto a3 = cyc_over_circle(C, 3);
  SubgroupRep r2{a2.domain, a2.map, -1};
  SubgroupRep r3{a3.domain, a3.map, -1};
  auto meet = intersect_reps(r2, r3, 0, 0);
  CHECK(meet.core->num_vertices == 6);
  CHECK(conjugacy_key(meet) != conjugacy_key(r2));
  auto self = intersect_reps(r2, r2, 0, 0);
  CHECK(conjugacy_key(self) == conjugacy_key(r2));
}

TEST_CASE("conjugate subgroups share a key and powers do not") {
  auto W = shapes::wedge2();
  auto a = words_member(W, {"a"}, "");
  auto conj = words_member(W, {"b a b'"}, "");
  auto sq = words_member(W, {"aa"}, "");
  SubgroupRep ra{a.domain, a.map, -1};
  SubgroupRep rc{conj.domain, conj.map, -1};
  SubgroupRep rs{sq.domain, sq.map, -1};
  CHECK(conjugacy_key(ra) == conjugacy_key(rc));
  CHECK(conjugacy_key(ra) != conjugacy_key(rs));
  CHECK(conjugacy_key(trivial_rep(&W)) == "trivial");
}
