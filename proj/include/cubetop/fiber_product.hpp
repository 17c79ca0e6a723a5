#pragma once

#include <tuple>

#include "cubetop/cover.hpp"
#include "cubetop/morphism.hpp"

namespace cubetop {

/// Fiber product of two combinatorial maps over a common target: cells are
/// pairs of cells with the same image, with the induced cube structure.
struct FiberProduct {
  ComplexPtr total;
  std::vector<std::pair<int, int>> vertex_pair;  // product vertex -> (a, b)
  std::vector<std::pair<int, int>> edge_pair;
  std::vector<bool> edge_relflip;                // orientation of b relative to a
  std::vector<std::pair<int, int>> square_pair;
  CombinatorialMap to_a;  // projections
  CombinatorialMap to_b;
};

inline FiberProduct fiber_product(const CombinatorialMap& f, const CombinatorialMap& g) {
  const auto& A = *f.source;
  const auto& B = *g.source;
  FiberProduct P;
  CubeComplex T;
  std::map<std::pair<int, int>, int> vid;
  for (int a = 0; a < A.num_vertices; ++a)
    for (int b = 0; b < B.num_vertices; ++b)
      if (f.vertex_map[a] == g.vertex_map[b]) {
        vid[{a, b}] = T.num_vertices++;
        P.vertex_pair.push_back({a, b});
      }
  std::map<std::pair<int, int>, int> eid;
  for (int ea = 0; ea < static_cast<int>(A.edges.size()); ++ea)
    for (int eb = 0; eb < static_cast<int>(B.edges.size()); ++eb) {
      if (f.edge_map[ea].edge != g.edge_map[eb].edge) continue;
      bool relflip = f.edge_map[ea].rev != g.edge_map[eb].rev;
      int tail = vid.at({A.edges[ea].tail, relflip ? B.edges[eb].head : B.edges[eb].tail});
      int head = vid.at({A.edges[ea].head, relflip ? B.edges[eb].tail : B.edges[eb].head});
      eid[{ea, eb}] = static_cast<int>(T.edges.size());
      T.edges.push_back({tail, head, A.edges[ea].label});
      P.edge_pair.push_back({ea, eb});
      P.edge_relflip.push_back(relflip);
    }
  for (int sa = 0; sa < static_cast<int>(A.squares.size()); ++sa)
    for (int sb = 0; sb < static_cast<int>(B.squares.size()); ++sb) {
      const auto& ia = f.square_map[sa];
      const auto& ib = g.square_map[sb];
      if (ia.square != ib.square) continue;
      SquareSym rel = ib.sym.inverse().compose(ia.sym);  // A-side index -> B-side index
      SquareCell sq;
      bool ok = true;
      for (int j = 0; j < 4 && ok; ++j) {
        Dart da = A.squares[sa].side[j];
        Dart db = B.squares[sb].side[rel.side_image(j)];
        if (rel.flip) db.rev = !db.rev;
        auto it = eid.find({da.edge, db.edge});
        if (it == eid.end()) { ok = false; break; }
        int pe = it->second;
        // db must agree with da through the pair's relative flip
        if ((da.rev != db.rev) != static_cast<bool>(P.edge_relflip[pe])) { ok = false; break; }
        sq.side[j] = {pe, da.rev};
      }
      if (!ok) continue;
      T.squares.push_back(sq);
      P.square_pair.push_back({sa, sb});
    }
  P.total = make_complex(std::move(T));
  auto proj = [&](bool first) {
    CombinatorialMap h;
    h.source = P.total.get();
    h.target = first ? f.source : g.source;
    for (auto& [a, b] : P.vertex_pair) h.vertex_map.push_back(first ? a : b);
    for (size_t e = 0; e < P.edge_pair.size(); ++e)
      h.edge_map.push_back(first ? EdgeImage{P.edge_pair[e].first, false}
                                 : EdgeImage{P.edge_pair[e].second, P.edge_relflip[e]});
    for (size_t s = 0; s < P.square_pair.size(); ++s) {
      if (first) {
        h.square_map.push_back({P.square_pair[s].first, {}});
      } else {
        const auto& ia = f.square_map[P.square_pair[s].first];
        const auto& ib = g.square_map[P.square_pair[s].second];
        h.square_map.push_back({P.square_pair[s].second, ib.sym.inverse().compose(ia.sym)});
      }
    }
    return h;
  };
  P.to_a = proj(true);
  P.to_b = proj(false);
  return P;
}

/// One connected component of a fiber product, with its projections.
struct FiberComponent {
  ComplexPtr complex;
  CombinatorialMap to_a;
  CombinatorialMap to_b;
  std::vector<std::pair<int, int>> vertex_pair;  // component vertex -> (a, b)
  bool essential = false;  // graph case: core has a cycle
  bool to_a_iso = false;   // projection is an isomorphism over the base
  bool to_b_iso = false;
};

namespace detail {

inline bool has_cycle_after_coring(const CubeComplex& G) {
  // iterated removal of valence-1 vertices; a surviving edge means a cycle
  std::vector<int> deg(G.num_vertices, 0);
  for (const auto& e : G.edges) {
    deg[e.tail]++;
    deg[e.head]++;
  }
  std::vector<bool> removed_v(G.num_vertices, false), removed_e(G.edges.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < G.num_vertices; ++v) {
      if (removed_v[v] || deg[v] != 1) continue;
      for (int e = 0; e < static_cast<int>(G.edges.size()); ++e) {
        if (removed_e[e]) continue;
        if (G.edges[e].tail == v || G.edges[e].head == v) {
          removed_e[e] = true;
          deg[G.edges[e].tail]--;
          deg[G.edges[e].head]--;
          break;
        }
      }
      removed_v[v] = true;
      changed = true;
    }
  }
  for (int e = 0; e < static_cast<int>(G.edges.size()); ++e)
    if (!removed_e[e]) return true;
  return false;
}

}  // namespace detail

/// All connected components, ordered by smallest (a, b) vertex pair.
inline std::vector<FiberComponent> fiber_components(const CombinatorialMap& f,
                                                    const CombinatorialMap& g) {
  FiberProduct P = fiber_product(f, g);
  auto comp = connected_vertex_components(*P.total);
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<int> order(ncomp, -1);
  {
    std::vector<int> first(ncomp, -1);
    for (int v = 0; v < P.total->num_vertices; ++v)
      if (first[comp[v]] < 0) first[comp[v]] = v;
    std::vector<int> ids(ncomp);
    for (int i = 0; i < ncomp; ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](int x, int y) { return first[x] < first[y]; });
    for (int i = 0; i < ncomp; ++i) order[ids[i]] = i;
  }
  std::vector<FiberComponent> out(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<bool> keep(P.total->num_vertices);
    for (int v = 0; v < P.total->num_vertices; ++v) keep[v] = comp[v] == c;
    Subcomplex sub = restrict_to_vertices(*P.total, keep);
    FiberComponent& K = out[order[c]];
    K.complex = sub.complex;
    for (int v : sub.vertex_of) K.vertex_pair.push_back(P.vertex_pair[v]);
    K.to_a.source = K.complex.get();
    K.to_a.target = f.source;
    K.to_b.source = K.complex.get();
    K.to_b.target = g.source;
    for (int v : sub.vertex_of) {
      K.to_a.vertex_map.push_back(P.vertex_pair[v].first);
      K.to_b.vertex_map.push_back(P.vertex_pair[v].second);
    }
    for (int e : sub.edge_of) {
      K.to_a.edge_map.push_back({P.edge_pair[e].first, false});
      K.to_b.edge_map.push_back({P.edge_pair[e].second, P.edge_relflip[e]});
    }
    for (int s : sub.square_of) {
      K.to_a.square_map.push_back(P.to_a.square_map[s]);
      K.to_b.square_map.push_back(P.to_b.square_map[s]);
    }
    K.essential = detail::has_cycle_after_coring(*K.complex);
    K.to_a_iso = is_isomorphism(K.to_a);
    K.to_b_iso = is_isomorphism(K.to_b);
  }
  return out;
}

/// Component of the fiber product containing a chosen vertex pair.
inline std::optional<FiberComponent> fiber_component_at(const CombinatorialMap& f,
                                                        const CombinatorialMap& g, int a, int b) {
  if (f.vertex_map[a] != g.vertex_map[b]) return std::nullopt;
  for (auto& K : fiber_components(f, g))
    for (auto& [pa, pb] : K.vertex_pair)
      if (pa == a && pb == b) return K;
  return std::nullopt;
}

}  // namespace cubetop
