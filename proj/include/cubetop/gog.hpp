#pragma once

#include "cubetop/cylinder.hpp"
#include "cubetop/fiber_ops.hpp"
#include "cubetop/walls.hpp"

namespace cubetop {

struct GogVertex {
  std::string id;
  ComplexPtr space;
};

/// Directed edge of the underlying graph with its edge space and the two
/// attaching maps (both local isometries into the end vertex spaces).
struct GogEdge {
  std::string id;
  ComplexPtr space;
  int iota_vertex = 0;
  int tau_vertex = 0;
  CombinatorialMap iota;
  CombinatorialMap tau;
};

struct GraphOfComplexes {
  std::vector<GogVertex> vertices;
  std::vector<GogEdge> edges;
};

inline void validate_gog(const GraphOfComplexes& G) {
  for (const auto& e : G.edges) {
    if (e.iota.source != e.space.get() || e.tau.source != e.space.get() ||
        e.iota.target != G.vertices[e.iota_vertex].space.get() ||
        e.tau.target != G.vertices[e.tau_vertex].space.get())
      throw Error("MalformedInput", "attaching maps do not match edge data");
    if (!check_local_isometry(e.iota).pass || !check_local_isometry(e.tau).pass)
      throw Error("AttachmentNotLocalIsometry", "edge " + e.id);
  }
}

/// Total space: vertex spaces plus a thickened band per edge, the band being
/// two layers of prisms over the edge space around a middle copy.
struct AssembledSpace {
  ComplexPtr total;
  std::vector<CombinatorialMap> vertex_embed;  // X_v -> total
  std::vector<CombinatorialMap> edge_embed;    // X_e -> total, middle level
  // owner tags: (-1 - v) for vertex space v, edge index for bands
  std::vector<int> owner_vertex, owner_edge, owner_square, owner_higher;
};

inline AssembledSpace assemble_total_space(const GraphOfComplexes& G) {
  validate_gog(G);
  for (const auto& e : G.edges)
    if (!e.space->higher.empty())
      throw Error("UnsupportedDimension", "edge spaces of dimension <= 2");
  AssembledSpace out;
  CubeComplex C;
  std::vector<int> voff(G.vertices.size()), eoff(G.vertices.size()), soff(G.vertices.size()),
      hoff(G.vertices.size());
  for (size_t v = 0; v < G.vertices.size(); ++v) {
    const auto& X = *G.vertices[v].space;
    voff[v] = C.num_vertices;
    eoff[v] = static_cast<int>(C.edges.size());
    soff[v] = static_cast<int>(C.squares.size());
    hoff[v] = static_cast<int>(C.higher.size());
    C.num_vertices += X.num_vertices;
    for (const auto& e : X.edges)
      C.edges.push_back({voff[v] + e.tail, voff[v] + e.head, e.label});
    for (const auto& s : X.squares) {
      SquareCell c;
      for (int j = 0; j < 4; ++j) c.side[j] = {eoff[v] + s.side[j].edge, s.side[j].rev};
      C.squares.push_back(c);
    }
    for (const auto& h : X.higher) {
      HigherCell c = h;
      for (auto& f : c.facets)
        f.cell.index += f.cell.dim == 1 ? eoff[v] : f.cell.dim == 2 ? soff[v] : hoff[v];
      C.higher.push_back(c);
    }
    for (int i = 0; i < X.num_vertices; ++i) out.owner_vertex.push_back(-1 - static_cast<int>(v));
    for (size_t i = 0; i < X.edges.size(); ++i) out.owner_edge.push_back(-1 - static_cast<int>(v));
    for (size_t i = 0; i < X.squares.size(); ++i)
      out.owner_square.push_back(-1 - static_cast<int>(v));
    for (size_t i = 0; i < X.higher.size(); ++i)
      out.owner_higher.push_back(-1 - static_cast<int>(v));
  }
  std::vector<CombinatorialMap> edge_embed_raw;
  for (size_t k = 0; k < G.edges.size(); ++k) {
    const auto& ge = G.edges[k];
    const auto& E = *ge.space;
    int mid_v = C.num_vertices;
    int mid_e = static_cast<int>(C.edges.size());
    int mid_s = static_cast<int>(C.squares.size());
    C.num_vertices += E.num_vertices;
    for (const auto& e : E.edges)
      C.edges.push_back({mid_v + e.tail, mid_v + e.head, e.label});
    for (const auto& s : E.squares) {
      SquareCell c;
      for (int j = 0; j < 4; ++j) c.side[j] = {mid_e + s.side[j].edge, s.side[j].rev};
      C.squares.push_back(c);
    }
    for (int i = 0; i < E.num_vertices; ++i) out.owner_vertex.push_back(static_cast<int>(k));
    for (size_t i = 0; i < E.edges.size() + 0; ++i) out.owner_edge.push_back(static_cast<int>(k));
    for (size_t i = 0; i < E.squares.size(); ++i) out.owner_square.push_back(static_cast<int>(k));
    // two layers of verticals / squares / prisms
    for (int layer = 0; layer < 2; ++layer) {
      const CombinatorialMap& att = layer == 0 ? ge.iota : ge.tau;
      int att_voff = voff[layer == 0 ? ge.iota_vertex : ge.tau_vertex];
      int att_eoff = eoff[layer == 0 ? ge.iota_vertex : ge.tau_vertex];
      int att_soff = soff[layer == 0 ? ge.iota_vertex : ge.tau_vertex];
      int vert0 = static_cast<int>(C.edges.size());
      for (int v = 0; v < E.num_vertices; ++v) {
        C.edges.push_back({mid_v + v, att_voff + att.vertex_map[v], "|"});
        out.owner_edge.push_back(static_cast<int>(k));
      }
      int band_s0 = static_cast<int>(C.squares.size());
      for (int e = 0; e < static_cast<int>(E.edges.size()); ++e) {
        Dart im = att.dart_image({e, false});
        SquareCell c;
        c.side[0] = {mid_e + e, false};
        c.side[1] = {vert0 + E.edges[e].head, false};
        c.side[2] = {att_eoff + im.edge, !im.rev};
        c.side[3] = {vert0 + E.edges[e].tail, true};
        C.squares.push_back(c);
        out.owner_square.push_back(static_cast<int>(k));
      }
      for (int s = 0; s < static_cast<int>(E.squares.size()); ++s) {
        const auto& sq = E.squares[s];
        HigherCell cell;
        cell.dim = 3;
        cell.facets.resize(6);
        auto side_of = [](int axis, int sign) {
          if (axis == 1 && sign < 0) return 0;
          if (axis == 0 && sign > 0) return 1;
          if (axis == 1 && sign > 0) return 2;
          return 3;
        };
        for (int axis = 0; axis < 2; ++axis)
          for (int sg : {-1, 1}) {
            int j = side_of(axis, sg);
            const Dart& d = sq.side[j];
            bool along = j == 0 || j == 1;
            SignedPerm p = SignedPerm::identity(2);
            p.sign[0] = static_cast<int8_t>((along != d.rev) ? 1 : -1);
            cell.facets[2 * axis + (sg > 0)] = {CellRef{2, band_s0 + d.edge}, p};
          }
        cell.facets[4] = {CellRef{2, mid_s + s}, SignedPerm::identity(2)};
        cell.facets[5] = {CellRef{2, att_soff + att.square_map[s].square},
                          square_sym_to_perm(att.square_map[s].sym)};
        C.higher.push_back(cell);
        out.owner_higher.push_back(static_cast<int>(k));
      }
    }
    CombinatorialMap emb;
    emb.source = ge.space.get();
    for (int v = 0; v < E.num_vertices; ++v) emb.vertex_map.push_back(mid_v + v);
    for (int e = 0; e < static_cast<int>(E.edges.size()); ++e)
      emb.edge_map.push_back({mid_e + e, false});
    for (int s = 0; s < static_cast<int>(E.squares.size()); ++s)
      emb.square_map.push_back({mid_s + s, {}});
    edge_embed_raw.push_back(std::move(emb));
  }
  out.total = make_complex(std::move(C));
  require_valid(*out.total);
  for (size_t v = 0; v < G.vertices.size(); ++v) {
    const auto& X = *G.vertices[v].space;
    CombinatorialMap emb;
    emb.source = G.vertices[v].space.get();
    emb.target = out.total.get();
    for (int i = 0; i < X.num_vertices; ++i) emb.vertex_map.push_back(voff[v] + i);
    for (size_t i = 0; i < X.edges.size(); ++i)
      emb.edge_map.push_back({eoff[v] + static_cast<int>(i), false});
    for (size_t i = 0; i < X.squares.size(); ++i)
      emb.square_map.push_back({soff[v] + static_cast<int>(i), {}});
    require_map(emb);
    out.vertex_embed.push_back(std::move(emb));
  }
  for (auto& emb : edge_embed_raw) {
    emb.target = out.total.get();
    require_map(emb);
    out.edge_embed.push_back(std::move(emb));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Augmentation

struct AugmentExtra {
  int vertex = 0;       // target vertex of the new edge
  FamilyMember map;     // local isometry into that vertex space
  std::string name;
};

struct AugmentResult {
  GraphOfComplexes gog;
  bool homotopy_verified = false;  // augmented total collapses onto the old one
};

/// Attach one mapping cylinder per extra map: a new vertex carrying the
/// domain and a new edge whose attaching maps are the identity and the map.
inline AugmentResult augment(const GraphOfComplexes& G, const std::vector<AugmentExtra>& extras) {
  AugmentResult out;
  out.gog = G;
  for (const auto& ex : extras) {
    if (!check_local_isometry(ex.map.map).pass)
      throw Error("NotLocalIsometry", "augmentation map " + ex.name);
    if (ex.map.map.target != G.vertices[ex.vertex].space.get())
      throw Error("NotLocalIsometry", "augmentation map misses its vertex space");
    GogVertex nv;
    nv.id = ex.name.empty() ? ("aug" + std::to_string(out.gog.vertices.size())) : ex.name;
    nv.space = ex.map.domain;
    out.gog.vertices.push_back(nv);
    GogEdge ne;
    ne.id = nv.id + "_edge";
    ne.space = ex.map.domain;
    ne.iota_vertex = static_cast<int>(out.gog.vertices.size()) - 1;
    ne.tau_vertex = ex.vertex;
    ne.iota = identity_map(*ex.map.domain);
    ne.tau = ex.map.map;
    out.gog.edges.push_back(std::move(ne));
  }
  if (extras.empty()) {
    out.homotopy_verified = true;
    return out;
  }
  // the new chunks collapse onto the original total space
  AssembledSpace after = assemble_total_space(out.gog);
  const auto& C = *after.total;
  auto keep = [&](int owner) {
    if (owner < 0) return -1 - owner < static_cast<int>(G.vertices.size());
    return owner < static_cast<int>(G.edges.size());
  };
  std::vector<bool> kv, ke, ks, kh;
  for (int o : after.owner_vertex) kv.push_back(keep(o));
  for (int o : after.owner_edge) ke.push_back(keep(o));
  for (int o : after.owner_square) ks.push_back(keep(o));
  for (int o : after.owner_higher) kh.push_back(keep(o));
  out.homotopy_verified = detail::collapses_onto(C, kv, ke, ks, kh);
  return out;
}

// ---------------------------------------------------------------------------
// Gluing criterion

struct CriterionFailure {
  std::string edge_id;
  std::string end;  // "iota" or "tau"
  int condition = 0;
  std::string detail;
  std::vector<int> witness;  // cell or wall ids in the relevant space
};

struct CriterionReport {
  bool hypothesis_ok = true;   // all vertex and edge spaces special
  std::string hypothesis_witness;
  bool pass = true;
  std::vector<CriterionFailure> failures;
};

namespace detail {

inline std::set<std::pair<int, int>> crossing_pairs(const CubeComplex& X,
                                                    const std::vector<Wall>& walls) {
  std::vector<int> wall_of_edge(X.edges.size(), -1);
  for (const auto& w : walls)
    for (int e : w.dual_edges) wall_of_edge[e] = w.id;
  std::set<std::pair<int, int>> out;
  for (const auto& sq : X.squares) {
    int wa = wall_of_edge[sq.side[0].edge];
    int wb = wall_of_edge[sq.side[1].edge];
    if (wa != wb) out.insert(std::minmax(wa, wb));
  }
  return out;
}

}  // namespace detail

/// The four gluing conditions, evaluated on both ends of every edge:
/// injective locally isometric attachments, distinct wall images, crossing
/// preserved in the reverse direction, and no inter-osculation against the
/// image.
inline CriterionReport check_gluing_criterion(const GraphOfComplexes& G) {
  validate_gog(G);
  CriterionReport rep;
  for (const auto& v : G.vertices) {
    if (!check_special(*v.space).special) {
      rep.hypothesis_ok = false;
      rep.hypothesis_witness = "vertex space " + v.id;
      return rep;
    }
  }
  for (const auto& e : G.edges) {
    if (!check_special(*e.space).special) {
      rep.hypothesis_ok = false;
      rep.hypothesis_witness = "edge space " + e.id;
      return rep;
    }
  }
  for (const auto& ge : G.edges) {
    auto ewalls = compute_walls(*ge.space);
    auto ecross = detail::crossing_pairs(*ge.space, ewalls);
    for (const auto& [end, att, vspace] :
         {std::tuple{"iota", &ge.iota, G.vertices[ge.iota_vertex].space.get()},
          std::tuple{"tau", &ge.tau, G.vertices[ge.tau_vertex].space.get()}}) {
      auto vwalls = compute_walls(*vspace);
      std::vector<int> wall_of_edge(vspace->edges.size(), -1);
      for (const auto& w : vwalls)
        for (int de : w.dual_edges) wall_of_edge[de] = w.id;
      bool injective = is_injective_on_cells(*att);
      if (!injective) {
        rep.pass = false;
        rep.failures.push_back({ge.id, end, 1, "attaching map is not injective", {}});
      }
      // wall images
      std::vector<int> image_wall(ewalls.size(), -1);
      for (const auto& w : ewalls)
        image_wall[w.id] = wall_of_edge[att->edge_map[w.dual_edges.front()].edge];
      std::map<int, int> seen;
      for (const auto& w : ewalls) {
        auto [it, fresh] = seen.emplace(image_wall[w.id], w.id);
        if (!fresh) {
          rep.pass = false;
          rep.failures.push_back({ge.id, end, 2, "two walls merge in the vertex space",
                                  {it->second, w.id, image_wall[w.id]}});
        }
      }
      // noncrossing preserved
      auto vcross = detail::crossing_pairs(*vspace, vwalls);
      for (size_t u = 0; u < ewalls.size(); ++u)
        for (size_t w = u + 1; w < ewalls.size(); ++w) {
          if (ecross.count({static_cast<int>(u), static_cast<int>(w)})) continue;
          auto im = std::minmax(image_wall[u], image_wall[w]);
          if (im.first != im.second && vcross.count(im)) {
            rep.pass = false;
            rep.failures.push_back({ge.id, end, 3,
                                    "noncrossing walls cross in the vertex space",
                                    {static_cast<int>(u), static_cast<int>(w)}});
          }
        }
      // inter-osculation against the image
      if (injective) {
        for (const auto& w : vwalls) {
          auto io = inter_osculates(*vspace, w, *att);
          if (io.inter_osculates) {
            rep.pass = false;
            rep.failures.push_back({ge.id, end, 4, "a wall inter-osculates the edge space",
                                    {w.id, io.witness_edge}});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace cubetop
