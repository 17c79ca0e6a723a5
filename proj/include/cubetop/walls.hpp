#pragma once

#include "cubetop/core_graph.hpp"
#include "cubetop/cover.hpp"

namespace cubetop {

/// Midcube of a square: axis 0 joins sides 0 and 2, axis 1 joins sides 1
/// and 3.
struct MidSquare {
  int square = -1;
  int axis = 0;
  friend auto operator<=>(const MidSquare&, const MidSquare&) = default;
};

/// Immersed hyperplane: an equivalence class of midcubes. Nodes of the
/// carrier are the (dual edge, end) pairs; sides are classes of nodes under
/// the transport across crossed squares.
struct Wall {
  int id = -1;
  std::vector<int> dual_edges;       // sorted
  std::vector<MidSquare> midsquares;
  bool two_sided = false;
  std::vector<int> node_side;        // per node (2 per dual edge): 0/1, or -1 when one-sided

  int node_of(int dual_pos, bool head) const { return 2 * dual_pos + (head ? 1 : 0); }
  int dual_pos(int edge) const {
    auto it = std::lower_bound(dual_edges.begin(), dual_edges.end(), edge);
    if (it == dual_edges.end() || *it != edge) return -1;
    return static_cast<int>(it - dual_edges.begin());
  }
};

namespace detail {

// transports induced by one midsquare: two node pairs, with the carrier edge
// each rides on
struct Transport {
  EdgeEnd from;  // end of one dual edge
  EdgeEnd to;    // end of the other dual edge
  Dart along;    // boundary side realizing the transport
};

inline std::array<Transport, 2> midsquare_transports(const CubeComplex& X, const MidSquare& m) {
  const auto& sq = X.squares[m.square];
  int a = m.axis;
  const Dart& pi = sq.side[a];
  const Dart& pk = sq.side[a + 2];
  return {Transport{X.in_end(pi), X.out_end(pk), sq.side[(a + 1) % 4]},
          Transport{X.out_end(pi), X.in_end(pk), sq.side[(a + 3) % 4]}};
}

}  // namespace detail

/// Partition of all midcubes into walls; ids ordered by smallest dual edge.
inline std::vector<Wall> compute_walls(const CubeComplex& X) {
  if (!X.higher.empty()) throw Error("UnsupportedDimension", "walls need dimension <= 2");
  UnionFind uf(static_cast<int>(X.edges.size()));
  for (const auto& sq : X.squares) {
    uf.unite(sq.side[0].edge, sq.side[2].edge);
    uf.unite(sq.side[1].edge, sq.side[3].edge);
  }
  std::map<int, int> wall_of_root;
  std::vector<Wall> walls;
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e) {
    int r = uf.find(e);
    if (!wall_of_root.count(r)) {
      wall_of_root[r] = static_cast<int>(walls.size());
      walls.push_back({});
      walls.back().id = static_cast<int>(walls.size()) - 1;
    }
    walls[wall_of_root[r]].dual_edges.push_back(e);
  }
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s)
    for (int axis : {0, 1}) {
      int w = wall_of_root[uf.find(X.squares[s].side[axis].edge)];
      walls[w].midsquares.push_back({s, axis});
    }
  // sidedness: nodes are (dual edge, end); crossing a square preserves sides
  for (auto& w : walls) {
    UnionFind nodes(2 * static_cast<int>(w.dual_edges.size()));
    for (const auto& m : w.midsquares)
      for (const auto& t : detail::midsquare_transports(X, m)) {
        int a = w.node_of(w.dual_pos(t.from.edge), t.from.head);
        int b = w.node_of(w.dual_pos(t.to.edge), t.to.head);
        nodes.unite(a, b);
      }
    std::set<int> classes;
    for (int n = 0; n < 2 * static_cast<int>(w.dual_edges.size()); ++n)
      classes.insert(nodes.find(n));
    w.two_sided = classes.size() == 2;
    w.node_side.assign(2 * w.dual_edges.size(), -1);
    if (w.two_sided) {
      int first = nodes.find(0);
      for (int n = 0; n < 2 * static_cast<int>(w.dual_edges.size()); ++n)
        w.node_side[n] = nodes.find(n) == first ? 0 : 1;
    }
  }
  return walls;
}

/// Carrier of a wall as its own complex with a combinatorial map to X.
struct Carrier {
  ComplexPtr complex;
  CombinatorialMap map;
  std::vector<bool> vertical_edge;  // dual edges of the wall inside the carrier
};

inline Carrier build_carrier(const CubeComplex& X, const Wall& w) {
  Carrier out;
  CubeComplex C;
  CombinatorialMap f;
  f.target = &X;
  int n = static_cast<int>(w.dual_edges.size());
  C.num_vertices = 2 * n;
  for (int i = 0; i < 2 * n; ++i)
    f.vertex_map.push_back(X.vertex_of({w.dual_edges[i / 2], i % 2 == 1}));
  for (int i = 0; i < n; ++i) {
    C.edges.push_back({w.node_of(i, false), w.node_of(i, true), X.edges[w.dual_edges[i]].label});
    f.edge_map.push_back({w.dual_edges[i], false});
    out.vertical_edge.push_back(true);
  }
  // horizontal edges and carrier squares per crossed square
  for (const auto& m : w.midsquares) {
    auto tr = detail::midsquare_transports(X, m);
    std::array<int, 2> horiz;
    for (int t = 0; t < 2; ++t) {
      int from = w.node_of(w.dual_pos(tr[t].from.edge), tr[t].from.head);
      int to = w.node_of(w.dual_pos(tr[t].to.edge), tr[t].to.head);
      // the carrier edge copies tr.along oriented as the underlying edge
      int tail = tr[t].along.rev ? to : from;
      int head = tr[t].along.rev ? from : to;
      if (t == 1) std::swap(tail, head);  // second transport runs against the side
      horiz[t] = static_cast<int>(C.edges.size());
      C.edges.push_back({tail, head, X.edges[tr[t].along.edge].label});
      f.edge_map.push_back({tr[t].along.edge, false});
      out.vertical_edge.push_back(false);
    }
    const auto& sq = X.squares[m.square];
    SquareCell c;
    c.side[m.axis] = {w.dual_pos(sq.side[m.axis].edge), sq.side[m.axis].rev};
    c.side[m.axis + 2] = {w.dual_pos(sq.side[m.axis + 2].edge), sq.side[m.axis + 2].rev};
    c.side[(m.axis + 1) % 4] = {horiz[0], sq.side[(m.axis + 1) % 4].rev};
    c.side[(m.axis + 3) % 4] = {horiz[1], sq.side[(m.axis + 3) % 4].rev};
    C.squares.push_back(c);
    f.square_map.push_back({m.square, {}});
  }
  out.complex = make_complex(std::move(C));
  f.source = out.complex.get();
  out.map = std::move(f);
  if (!validate_map(out.map).empty())
    throw Error("InternalError", "carrier map is not combinatorial");
  return out;
}

// ---------------------------------------------------------------------------
// Pathologies

struct WallPathology {
  int wall = -1;
  std::string kind;  // self-crossing, one-sided, side-not-embedded, self-osculating
  std::vector<int> cells;  // witness cell ids (square, edge or vertex ids)
  bool direct = true;      // for osculation: same-side contact
};

struct InterOsculation {
  int wall_a = -1;
  int wall_b = -1;
  int crossing_square = -1;
  int vertex = -1;
  int edge_a = -1;
  int edge_b = -1;
};

struct SpecialnessReport {
  bool special = true;
  std::vector<Wall> walls;
  std::vector<WallPathology> pathologies;
  std::vector<InterOsculation> inter_osculations;
};

namespace detail {

using CornerCatalog = std::set<std::pair<EdgeEnd, EdgeEnd>>;

inline CornerCatalog corner_catalog(const CubeComplex& X) {
  CornerCatalog out;
  for (const auto& sq : X.squares)
    for (int i = 0; i < 4; ++i) {
      EdgeEnd a = X.in_end(sq.side[i]);
      EdgeEnd b = X.out_end(sq.side[(i + 1) % 4]);
      out.insert({std::min(a, b), std::max(a, b)});
    }
  return out;
}

inline bool corner_joins(const CornerCatalog& cat, const EdgeEnd& a, const EdgeEnd& b) {
  return cat.count({std::min(a, b), std::max(a, b)}) > 0;
}

// unjoined contact points between dual edges of two (possibly equal) walls
inline std::vector<std::array<int, 3>> osculation_points(const CubeComplex& X,
                                                         const CornerCatalog& cat,
                                                         const std::vector<int>& duals_a,
                                                         const std::vector<int>& duals_b) {
  std::vector<std::array<int, 3>> out;  // vertex, edge_a, edge_b
  for (int ea : duals_a)
    for (int eb : duals_b) {
      if (ea == eb) continue;
      for (bool ha : {false, true})
        for (bool hb : {false, true}) {
          EdgeEnd enda{ea, ha}, endb{eb, hb};
          if (X.vertex_of(enda) != X.vertex_of(endb)) continue;
          if (!corner_joins(cat, enda, endb)) out.push_back({X.vertex_of(enda), ea, eb});
        }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// The four pathologies: self-crossing, one-sidedness, carrier sides failing
/// to embed (direct self-osculation), and inter-osculation of wall pairs.
/// The overall verdict asks every wall to be embedded and two-sided with
/// embedded sides, and no pair to inter-osculate.
inline SpecialnessReport check_special(const CubeComplex& X) {
  if (!check_npc(X).pass) throw Error("NotNpc", "specialness needs nonpositive curvature");
  SpecialnessReport rep;
  rep.walls = compute_walls(X);
  auto cat = detail::corner_catalog(X);
  std::vector<int> wall_of_edge(X.edges.size(), -1);
  for (const auto& w : rep.walls)
    for (int e : w.dual_edges) wall_of_edge[e] = w.id;

  for (const auto& w : rep.walls) {
    // self-crossing: both midcubes of one square in the same wall
    std::set<int> crossed;
    for (const auto& m : w.midsquares) {
      if (!crossed.insert(m.square).second) {
        rep.special = false;
        rep.pathologies.push_back({w.id, "self-crossing", {m.square}});
      }
    }
    if (!w.two_sided) {
      rep.special = false;
      rep.pathologies.push_back({w.id, "one-sided", {w.dual_edges.front()}});
    } else {
      // side embeddings: nodes of one side meet distinct vertices, side
      // edges of one side meet distinct edges
      for (int side = 0; side < 2; ++side) {
        std::map<int, int> seen_vertex;  // vertex -> node
        for (int i = 0; i < static_cast<int>(w.dual_edges.size()); ++i)
          for (bool h : {false, true}) {
            int node = w.node_of(i, h);
            if (w.node_side[node] != side) continue;
            int v = X.vertex_of({w.dual_edges[i], h});
            auto [it, fresh] = seen_vertex.emplace(v, node);
            if (!fresh) {
              rep.special = false;
              rep.pathologies.push_back(
                  {w.id, "side-not-embedded", {v, w.dual_edges[it->second / 2], w.dual_edges[i]}});
            }
          }
      }
    }
    // contact without a corner, direct or indirect
    for (const auto& osc : detail::osculation_points(X, cat, w.dual_edges, w.dual_edges)) {
      if (osc[1] > osc[2]) continue;  // one order suffices
      bool direct = true;
      if (w.two_sided) {
        direct = false;
        for (bool ha : {false, true})
          for (bool hb : {false, true}) {
            EdgeEnd ea{osc[1], ha}, eb{osc[2], hb};
            if (X.vertex_of(ea) != osc[0] || X.vertex_of(eb) != osc[0]) continue;
            if (detail::corner_joins(cat, ea, eb)) continue;
            if (w.node_side[w.node_of(w.dual_pos(osc[1]), ha)] ==
                w.node_side[w.node_of(w.dual_pos(osc[2]), hb)])
              direct = true;
          }
      }
      rep.pathologies.push_back({w.id, "self-osculating", {osc[0], osc[1], osc[2]}, direct});
    }
  }
  // inter-osculation: crossing somewhere, osculating elsewhere
  std::map<std::pair<int, int>, int> crossing;  // wall pair -> witness square
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s) {
    int wa = wall_of_edge[X.squares[s].side[0].edge];
    int wb = wall_of_edge[X.squares[s].side[1].edge];
    if (wa != wb) crossing.emplace(std::minmax(wa, wb), s);
  }
  for (const auto& [pair, square] : crossing) {
    const Wall& wa = rep.walls[pair.first];
    const Wall& wb = rep.walls[pair.second];
    auto pts = detail::osculation_points(X, cat, wa.dual_edges, wb.dual_edges);
    if (!pts.empty()) {
      rep.special = false;
      rep.inter_osculations.push_back(
          {wa.id, wb.id, square, pts.front()[0], pts.front()[1], pts.front()[2]});
    }
  }
  return rep;
}

/// Whether a wall both crosses an embedded locally convex subcomplex and is
/// dual to an edge meeting it in a single vertex.
struct InterOsculateReport {
  bool inter_osculates = false;
  int crossing_edge = -1;  // dual edge inside the subcomplex
  int witness_edge = -1;   // dual edge meeting it in one vertex
};

inline InterOsculateReport inter_osculates(const CubeComplex& X, const Wall& w,
                                           const CombinatorialMap& inclusion) {
  if (!check_local_isometry(inclusion).pass || !is_injective_on_cells(inclusion))
    throw Error("NotLocallyConvex", "subcomplex must be embedded and locally convex");
  std::set<int> averts, aedges;
  for (int v : inclusion.vertex_map) averts.insert(v);
  for (const auto& e : inclusion.edge_map) aedges.insert(e.edge);
  InterOsculateReport rep;
  for (int e : w.dual_edges)
    if (aedges.count(e)) {
      rep.crossing_edge = e;
      break;
    }
  if (rep.crossing_edge < 0) return rep;
  for (int e : w.dual_edges) {
    if (aedges.count(e)) continue;
    std::set<int> met;
    if (averts.count(X.edges[e].tail)) met.insert(X.edges[e].tail);
    if (averts.count(X.edges[e].head)) met.insert(X.edges[e].head);
    if (met.size() == 1) {
      rep.inter_osculates = true;
      rep.witness_edge = e;
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Double cover turning a one-sided wall two-sided

/// Builds a degree-2 cover from the wall's side cocycle when one exists: a
/// mod-2 edge labelling that is a cocycle on squares and restricts to the
/// side monodromy on carrier loops.
inline std::optional<CoverSpec> one_sided_double_cover(const CubeComplex& X, const Wall& w) {
  Carrier car = build_carrier(X, w);
  const auto& C = *car.complex;
  // side potential along a spanning tree: vertical edges flip, horizontal keep
  std::vector<int> parent_edge(C.num_vertices, -1), pot(C.num_vertices, -1), order;
  pot[0] = 0;
  order.push_back(0);
  std::vector<std::array<int, 3>> loops;  // non-tree edge constraints (edge, flip expected)
  std::vector<bool> in_tree(C.edges.size(), false);
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int e = 0; e < static_cast<int>(C.edges.size()); ++e) {
      int other = -1;
      if (C.edges[e].tail == v) other = C.edges[e].head;
      else if (C.edges[e].head == v) other = C.edges[e].tail;
      else continue;
      int flip = car.vertical_edge[e] ? 1 : 0;
      if (pot[other] < 0) {
        pot[other] = (pot[v] + flip) % 2;
        parent_edge[other] = e;
        in_tree[e] = true;
        order.push_back(other);
      }
    }
  }
  // GF(2) system over X-edge variables
  int ne = static_cast<int>(X.edges.size());
  std::vector<std::vector<int>> rows;  // coefficients + rhs at index ne
  for (const auto& sq : X.squares) {
    std::vector<int> row(ne + 1, 0);
    for (int j = 0; j < 4; ++j) row[sq.side[j].edge] ^= 1;
    rows.push_back(row);
  }
  for (int e = 0; e < static_cast<int>(C.edges.size()); ++e) {
    if (in_tree[e]) continue;
    // loop: tree path tail -> root -> head, then this edge back
    std::vector<int> row(ne + 1, 0);
    int parity = car.vertical_edge[e] ? 1 : 0;
    row[car.map.edge_map[e].edge] ^= 1;
    for (int v : {C.edges[e].tail, C.edges[e].head}) {
      int u = v;
      while (parent_edge[u] >= 0) {
        int pe = parent_edge[u];
        row[car.map.edge_map[pe].edge] ^= 1;
        u = C.edges[pe].tail == u ? C.edges[pe].head : C.edges[pe].tail;
      }
    }
    parity ^= (pot[C.edges[e].tail] ^ pot[C.edges[e].head]);
    row[ne] = parity;
    rows.push_back(row);
  }
  // Gaussian elimination
  std::vector<int> pivot_of_row;
  size_t r = 0;
  for (int c = 0; c < ne && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c])
        for (int j = 0; j <= ne; ++j) rows[i][j] ^= rows[r][j];
    pivot_of_row.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows.size(); ++i)
    if (rows[i][ne]) return std::nullopt;  // inconsistent
  std::vector<int> c_val(ne, 0);
  for (size_t i = 0; i < r; ++i) c_val[pivot_of_row[i]] = rows[i][ne];
  CoverSpec spec;
  spec.base = &X;
  spec.degree = 2;
  spec.edge_perm.resize(ne);
  for (int e = 0; e < ne; ++e) spec.edge_perm[e] = c_val[e] ? std::vector<int>{1, 0}
                                                            : std::vector<int>{0, 1};
  if (validate_cover_spec(spec)) return std::nullopt;
  return spec;
}

}  // namespace cubetop
