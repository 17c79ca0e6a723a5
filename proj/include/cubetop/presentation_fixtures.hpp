#pragma once

#include "cubetop/shapes.hpp"
#include "cubetop/small_cancellation.hpp"

namespace cubetop::fixtures {

/// Immersed path spelling a word in the base, as a family member.
inline FamilyMember path_member(ComplexPtr base, const std::string& word, std::string name) {
  auto darts = parse_word(*base, word);
  CubeComplex P;
  P.num_vertices = static_cast<int>(darts.size()) + 1;
  CombinatorialMap f;
  f.target = base.get();
  f.vertex_map.push_back(base->tail_of(darts.front()));
  for (size_t i = 0; i < darts.size(); ++i) {
    const Dart& d = darts[i];
    if (d.rev)
      P.edges.push_back({static_cast<int>(i) + 1, static_cast<int>(i),
                         base->edges[d.edge].label});
    else
      P.edges.push_back({static_cast<int>(i), static_cast<int>(i) + 1,
                         base->edges[d.edge].label});
    f.edge_map.push_back({d.edge, false});
    f.vertex_map.push_back(base->head_of(d));
  }
  auto dom = make_complex(std::move(P));
  f.source = dom.get();
  require_map(f);
  return make_member(dom, f, std::move(name));
}

/// Immersed cycle spelling a closed word in the base.
inline FamilyMember cycle_member(ComplexPtr base, const std::string& word, std::string name) {
  auto darts = parse_word(*base, word);
  CubeComplex P;
  int n = static_cast<int>(darts.size());
  P.num_vertices = n;
  CombinatorialMap f;
  f.target = base.get();
  for (int i = 0; i < n; ++i) f.vertex_map.push_back(base->tail_of(darts[i]));
  for (int i = 0; i < n; ++i) {
    const Dart& d = darts[i];
    if (d.rev)
      P.edges.push_back({(i + 1) % n, i, base->edges[d.edge].label});
    else
      P.edges.push_back({i, (i + 1) % n, base->edges[d.edge].label});
    f.edge_map.push_back({d.edge, false});
  }
  auto dom = make_complex(std::move(P));
  f.source = dom.get();
  require_map(f);
  return make_member(dom, f, std::move(name));
}

/// The path cone whose endpoints collide: injectivity fails.
inline CubicalPresentation c3_abc_path() {
  CubicalPresentation P;
  P.base = make_complex(shapes::c3());
  P.cones.push_back({path_member(P.base, "abc", "abc"), 1});
  return P;
}

/// Two cones meeting in two vertices: connectivity fails.
inline CubicalPresentation c3_ab_c() {
  CubicalPresentation P;
  P.base = make_complex(shapes::c3());
  P.cones.push_back({path_member(P.base, "ab", "ab"), 1});
  P.cones.push_back({path_member(P.base, "c", "c"), 1});
  return P;
}

/// Three edge cones meeting pairwise with empty triple intersection.
inline CubicalPresentation c3_abc_edges() {
  CubicalPresentation P;
  P.base = make_complex(shapes::c3());
  P.cones.push_back({path_member(P.base, "a", "a"), 1});
  P.cones.push_back({path_member(P.base, "b", "b"), 1});
  P.cones.push_back({path_member(P.base, "c", "c"), 1});
  return P;
}

/// The six-fold cover of one loop: no nontrivial pieces.
inline CubicalPresentation wedge2_cyc6() {
  CubicalPresentation P;
  P.base = make_complex(shapes::wedge2());
  P.cones.push_back({cycle_member(P.base, "aaaaaa", "cyc6"), 1});
  return P;
}

/// The relator with a long repeated prefix: a piece of diameter five.
inline CubicalPresentation wedge2_a6b() {
  CubicalPresentation P;
  P.base = make_complex(shapes::wedge2());
  P.cones.push_back({cycle_member(P.base, "aaaaaab", "a6b"), 1});
  return P;
}

/// Graded presentation: the six-cycle above a double cover of the loop.
inline CubicalPresentation wedge2_graded() {
  CubicalPresentation P;
  P.base = make_complex(shapes::wedge2());
  P.cones.push_back({cycle_member(P.base, "aa", "cyc2"), 1});
  P.cones.push_back({cycle_member(P.base, "aaaaaa", "cyc6"), 2});
  return P;
}

}  // namespace cubetop::fixtures
