#pragma once

#include "cubetop/gog.hpp"
#include "cubetop/shapes.hpp"

namespace cubetop::fixtures {

inline CombinatorialMap graph_map(ComplexPtr dom, ComplexPtr target, std::vector<int> vm,
                                  std::vector<EdgeImage> em) {
  CombinatorialMap f;
  f.source = dom.get();
  f.target = target.get();
  f.vertex_map = std::move(vm);
  f.edge_map = std::move(em);
  require_map(f);
  return f;
}

/// Circle vertex space, circle edge space, both attachments the identity:
/// assembles to a torus with the transverse direction subdivided in two.
inline GraphOfComplexes torus_gog() {
  GraphOfComplexes G;
  auto circle = make_complex(shapes::circle());
  auto edge = make_complex(shapes::circle("c"));
  G.vertices.push_back({"v", circle});
  GogEdge e;
  e.id = "e";
  e.space = edge;
  e.iota_vertex = e.tau_vertex = 0;
  e.iota = graph_map(edge, circle, {0}, {{0, false}});
  e.tau = graph_map(edge, circle, {0}, {{0, false}});
  G.edges.push_back(std::move(e));
  return G;
}

/// Wedge vertex space, wedge edge space, identity attachments: the total
/// space carries the product of a free group with the integers.
inline GraphOfComplexes f2z_gog() {
  GraphOfComplexes G;
  auto w = make_complex(shapes::wedge2());
  auto ew = make_complex(shapes::wedge({"c", "d"}));
  G.vertices.push_back({"v", w});
  GogEdge e;
  e.id = "e";
  e.space = ew;
  e.iota_vertex = e.tau_vertex = 0;
  e.iota = graph_map(ew, w, {0}, {{0, false}, {1, false}});
  e.tau = graph_map(ew, w, {0}, {{0, false}, {1, false}});
  G.edges.push_back(std::move(e));
  return G;
}

/// Wedge vertex space with a circle edge space glued to the two loops: the
/// extension identifying the loops by a stable letter.
inline GraphOfComplexes free_hnn_gog() {
  GraphOfComplexes G;
  auto w = make_complex(shapes::wedge2());
  auto c = make_complex(shapes::circle("c"));
  G.vertices.push_back({"v", w});
  GogEdge e;
  e.id = "e";
  e.space = c;
  e.iota_vertex = e.tau_vertex = 0;
  e.iota = graph_map(c, w, {0}, {{0, false}});
  e.tau = graph_map(c, w, {0}, {{1, false}});
  G.edges.push_back(std::move(e));
  return G;
}

/// Triangle edge space included in the mapping torus of the rotation: all
/// three edge-space walls land on the single long wall of the vertex space.
inline GraphOfComplexes wallmerge_gog() {
  GraphOfComplexes G;
  auto rt = make_complex(shapes::rotation_torus());
  auto tri = make_complex(shapes::c3());
  G.vertices.push_back({"v", rt});
  GogEdge e;
  e.id = "e";
  e.space = tri;
  e.iota_vertex = e.tau_vertex = 0;
  e.iota = graph_map(tri, rt, {0, 1, 2}, {{0, false}, {1, false}, {2, false}});
  e.tau = graph_map(tri, rt, {0, 1, 2}, {{0, false}, {1, false}, {2, false}});
  G.edges.push_back(std::move(e));
  return G;
}

/// Triangle edge space included in the complex whose wall through the
/// triangle returns as a pendant edge: the inter-osculation failure case.
inline GraphOfComplexes interosc_gog() {
  GraphOfComplexes G;
  auto X = make_complex(shapes::interosc());
  auto tri = make_complex(shapes::c3());
  G.vertices.push_back({"v", X});
  G.vertices.push_back({"w", tri});
  GogEdge e;
  e.id = "e";
  e.space = tri;
  e.iota_vertex = 1;
  e.tau_vertex = 0;
  e.iota = identity_map(*tri);
  e.tau = graph_map(tri, X, {0, 1, 2}, {{0, false}, {1, false}, {2, false}});
  G.edges.push_back(std::move(e));
  return G;
}

/// Double cover of the wedge as edge space with two different covering
/// attachments, one of them exchanging the letters. A stress case whose
/// transection closure keeps producing new classes.
inline GraphOfComplexes irr_candidate_gog() {
  GraphOfComplexes G;
  auto w = make_complex(shapes::wedge2());
  CubeComplex M;
  M.num_vertices = 2;
  M.edges.push_back({0, 1, "a0"});  // 0
  M.edges.push_back({1, 0, "a1"});  // 1
  M.edges.push_back({0, 0, "b0"});  // 2
  M.edges.push_back({1, 1, "b1"});  // 3
  auto Mp = make_complex(std::move(M));
  G.vertices.push_back({"v", w});
  GogEdge e;
  e.id = "e";
  e.space = Mp;
  e.iota_vertex = e.tau_vertex = 0;
  e.iota = graph_map(Mp, w, {0, 0},
                     {{0, false}, {0, false}, {1, false}, {1, false}});
  e.tau = graph_map(Mp, w, {0, 0},
                    {{1, false}, {1, false}, {0, false}, {0, false}});
  G.edges.push_back(std::move(e));
  return G;
}

}  // namespace cubetop::fixtures
