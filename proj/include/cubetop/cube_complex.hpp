#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubetop/parallel.hpp"

namespace cubetop {

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct CellRef {
  int dim = 0;
  int index = 0;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// Signed coordinate permutation of a standard cube: coordinate i of the
/// source maps to coordinate perm[i] of the target with sign sign[i].
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int8_t> sign;

  int dim() const { return static_cast<int>(perm.size()); }

  static SignedPerm identity(int k) {
    SignedPerm p;
    p.perm.resize(k);
    p.sign.assign(k, 1);
    for (int i = 0; i < k; ++i) p.perm[i] = i;
    return p;
  }

  bool valid() const {
    if (sign.size() != perm.size()) return false;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size())) return false;
      if (seen[perm[i]]) return false;
      seen[perm[i]] = true;
      if (sign[i] != 1 && sign[i] != -1) return false;
    }
    return true;
  }

  // this after inner
  SignedPerm compose(const SignedPerm& inner) const {
    SignedPerm r;
    r.perm.resize(inner.dim());
    r.sign.resize(inner.dim());
    for (int i = 0; i < inner.dim(); ++i) {
      r.perm[i] = perm[inner.perm[i]];
      r.sign[i] = static_cast<int8_t>(sign[inner.perm[i]] * inner.sign[i]);
    }
    return r;
  }

  std::vector<int8_t> apply(const std::vector<int8_t>& desc) const {
    std::vector<int8_t> out(desc.size(), 0);
    for (size_t i = 0; i < desc.size(); ++i)
      out[perm[i]] = static_cast<int8_t>(sign[i] * desc[i]);
    return out;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.perm == b.perm && a.sign == b.sign;
  }
};

struct EdgeCell {
  int tail = 0;
  int head = 0;
  std::string label;
};

/// Oriented traversal of a 1-cube.
struct Dart {
  int edge = -1;
  bool rev = false;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// A square is stored as its boundary path p0 p1 p2 p3 with
/// head(p_i) == tail(p_{i+1 mod 4}).
struct SquareCell {
  std::array<Dart, 4> side{};
};

struct FacetRef {
  CellRef cell;
  SignedPerm sym;
};

/// Cube cell of dimension >= 3; facet index 2*axis + (sign > 0).
struct HigherCell {
  int dim = 3;
  std::vector<FacetRef> facets;
};

/// End of an edge at a vertex; link vertices are such ends.
struct EdgeEnd {
  int edge = -1;
  bool head = false;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

class CubeComplex {
 public:
  int num_vertices = 0;
  std::vector<EdgeCell> edges;
  std::vector<SquareCell> squares;
  std::vector<HigherCell> higher;

  int dimension() const {
    if (!higher.empty()) {
      int d = 0;
      for (const auto& c : higher) d = std::max(d, c.dim);
      return d;
    }
    if (!squares.empty()) return 2;
    if (!edges.empty()) return 1;
    return 0;
  }

  int tail_of(const Dart& d) const { return d.rev ? edges[d.edge].head : edges[d.edge].tail; }
  int head_of(const Dart& d) const { return d.rev ? edges[d.edge].tail : edges[d.edge].head; }
  // end of the underlying edge at the dart's final vertex
  EdgeEnd in_end(const Dart& d) const { return {d.edge, !d.rev}; }
  // end of the underlying edge at the dart's initial vertex
  EdgeEnd out_end(const Dart& d) const { return {d.edge, d.rev}; }
  int vertex_of(const EdgeEnd& e) const { return e.head ? edges[e.edge].head : edges[e.edge].tail; }

  size_t cell_count() const {
    return static_cast<size_t>(num_vertices) + edges.size() + squares.size() + higher.size();
  }

  std::vector<EdgeEnd> ends_at(int v) const {
    std::vector<EdgeEnd> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (edges[e].tail == v) out.push_back({e, false});
      if (edges[e].head == v) out.push_back({e, true});
    }
    return out;
  }

  /// Facet of a cell in the signed-permutation view. For an edge the two
  /// facets are its endpoints; for a square they are derived from the
  /// boundary path; higher cells store facets explicitly.
  FacetRef facet(CellRef c, int axis, int s) const {
    if (c.dim == 1) {
      const auto& e = edges[c.index];
      return {CellRef{0, s < 0 ? e.tail : e.head}, SignedPerm::identity(0)};
    }
    if (c.dim == 2) {
      const auto& sq = squares[c.index];
      Dart d;
      bool along = false;  // facet canonical direction traverses the dart forward
      if (axis == 1 && s < 0) { d = sq.side[0]; along = true; }
      else if (axis == 0 && s > 0) { d = sq.side[1]; along = true; }
      else if (axis == 1 && s > 0) { d = sq.side[2]; along = false; }
      else { d = sq.side[3]; along = false; }  // axis == 0, s < 0
      SignedPerm p = SignedPerm::identity(1);
      p.sign[0] = static_cast<int8_t>((along != d.rev) ? 1 : -1);
      return {CellRef{1, d.edge}, p};
    }
    const auto& h = higher[c.index];
    return h.facets[2 * axis + (s > 0 ? 1 : 0)];
  }

  struct ResolvedFace {
    CellRef cell;
    SignedPerm ident;  // free coordinates of the descriptor -> cell coords
  };

  /// Resolve a face of a cell given by a descriptor in {-1,0,+1}^dim
  /// (0 marks a free coordinate). Descends through facet attachments.
  ResolvedFace resolve_face(CellRef c, std::vector<int8_t> desc) const {
    int d = -1;
    for (size_t i = 0; i < desc.size(); ++i)
      if (desc[i] != 0) { d = static_cast<int>(i); break; }
    if (d < 0) return {c, SignedPerm::identity(static_cast<int>(desc.size()))};
    FacetRef f = facet(c, d, desc[d]);
    // rewrite descriptor in facet coordinates (drop coordinate d), track the
    // free-coordinate positions
    std::vector<int8_t> facet_desc(desc.size() - 1);
    std::vector<int> free_src;  // positions of zeros in desc, in order
    {
      int j = 0;
      for (size_t i = 0; i < desc.size(); ++i) {
        if (static_cast<int>(i) == d) continue;
        facet_desc[j++] = desc[i];
      }
      for (size_t i = 0; i < desc.size(); ++i)
        if (desc[i] == 0) free_src.push_back(static_cast<int>(i));
    }
    std::vector<int8_t> cell_desc = f.sym.apply(facet_desc);
    ResolvedFace sub = resolve_face(f.cell, cell_desc);
    // identification: free coords of desc -> facet coords -> cell coords -> sub
    SignedPerm ident;
    ident.perm.resize(free_src.size());
    ident.sign.resize(free_src.size());
    for (size_t k = 0; k < free_src.size(); ++k) {
      int pos = free_src[k];
      int facet_pos = pos - (pos > d ? 1 : 0);
      int cell_pos = f.sym.perm[facet_pos];
      // position of cell_pos among the zeros of cell_desc
      int rank = 0;
      for (int i = 0; i < cell_pos; ++i)
        if (cell_desc[i] == 0) ++rank;
      ident.perm[k] = sub.ident.perm[rank];
      ident.sign[k] = static_cast<int8_t>(f.sym.sign[facet_pos] * sub.ident.sign[rank]);
    }
    return {sub.cell, ident};
  }
};

/// Complexes that travel together with maps into them are heap-owned so the
/// maps' pointers stay valid across moves.
using ComplexPtr = std::shared_ptr<CubeComplex>;
inline ComplexPtr make_complex(CubeComplex c) {
  return std::make_shared<CubeComplex>(std::move(c));
}

struct Violation {
  std::string code;
  CellRef cell;
  int detail = -1;  // facet/side index when applicable
  std::string message;
};

/// Structural validation: facet references resolve, square boundaries close,
/// higher-cell attachments agree on codimension-2 faces.
inline std::vector<Violation> validate_complex(const CubeComplex& X) {
  std::vector<Violation> out;
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e) {
    if (X.edges[e].tail < 0 || X.edges[e].tail >= X.num_vertices ||
        X.edges[e].head < 0 || X.edges[e].head >= X.num_vertices)
      out.push_back({"InconsistentAttachment", {1, e}, -1, "edge endpoint out of range"});
  }
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s) {
    const auto& sq = X.squares[s];
    for (int i = 0; i < 4; ++i) {
      if (sq.side[i].edge < 0 || sq.side[i].edge >= static_cast<int>(X.edges.size())) {
        out.push_back({"InconsistentAttachment", {2, s}, i, "side references missing edge"});
        return out;
      }
    }
    for (int i = 0; i < 4; ++i) {
      if (X.head_of(sq.side[i]) != X.tail_of(sq.side[(i + 1) % 4]))
        out.push_back({"InconsistentAttachment", {2, s}, i, "boundary path does not close"});
    }
  }
  for (int h = 0; h < static_cast<int>(X.higher.size()); ++h) {
    const auto& c = X.higher[h];
    CellRef ref{c.dim, h};
    if (static_cast<int>(c.facets.size()) != 2 * c.dim) {
      out.push_back({"InconsistentAttachment", ref, -1, "wrong facet count"});
      continue;
    }
    bool facets_ok = true;
    for (int f = 0; f < 2 * c.dim; ++f) {
      const auto& fr = c.facets[f];
      bool ok = fr.sym.valid() && fr.sym.dim() == c.dim - 1 && fr.cell.dim == c.dim - 1;
      if (ok) {
        int n = fr.cell.dim == 1   ? static_cast<int>(X.edges.size())
                : fr.cell.dim == 2 ? static_cast<int>(X.squares.size())
                                   : static_cast<int>(X.higher.size());
        ok = fr.cell.index >= 0 && fr.cell.index < n;
        if (ok && fr.cell.dim >= 3) ok = X.higher[fr.cell.index].dim == fr.cell.dim;
      }
      if (!ok) {
        out.push_back({"InconsistentAttachment", ref, f, "bad facet reference"});
        facets_ok = false;
      }
    }
    if (!facets_ok) continue;
    // codimension-2 compatibility: resolving through either facet agrees
    for (int d1 = 0; d1 < c.dim; ++d1)
      for (int d2 = d1 + 1; d2 < c.dim; ++d2)
        for (int s1 : {-1, 1})
          for (int s2 : {-1, 1}) {
            std::vector<int8_t> desc(c.dim, 0);
            desc[d1] = static_cast<int8_t>(s1);
            desc[d2] = static_cast<int8_t>(s2);
            auto descend = [&](int dfirst) {
              FacetRef fr = c.facets[2 * dfirst + (desc[dfirst] > 0 ? 1 : 0)];
              std::vector<int8_t> fd(c.dim - 1);
              int j = 0;
              for (int i = 0; i < c.dim; ++i)
                if (i != dfirst) fd[j++] = desc[i];
              return X.resolve_face(fr.cell, fr.sym.apply(fd));
            };
            auto a = descend(d1), b = descend(d2);
            if (a.cell != b.cell || !(a.ident == b.ident))
              out.push_back({"InconsistentAttachment", ref, 2 * d1 + (s1 > 0),
                             "facet attachments disagree on a codim-2 face"});
          }
  }
  return out;
}

inline void require_valid(const CubeComplex& X) {
  auto v = validate_complex(X);
  if (!v.empty()) throw Error("InvalidComplex", v.front().code + ": " + v.front().message);
}

// ---------------------------------------------------------------------------
// Links

struct LinkComplex {
  std::vector<EdgeEnd> vertices;  // sorted by (edge, end)
  // simplex (as sorted link-vertex indices) -> multiplicity and one witness
  std::map<std::vector<int>, int> simplices;
  std::map<std::vector<int>, CellRef> witness;
  bool corner_with_repeat = false;
  CellRef repeat_witness{};

  int vertex_index(const EdgeEnd& e) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
    if (it == vertices.end() || !(*it == e)) return -1;
    return static_cast<int>(it - vertices.begin());
  }
};

/// Link of a 0-cube: vertices are edge ends, simplices come from the corners
/// of higher-dimensional cubes.
inline LinkComplex vertex_link(const CubeComplex& X, int v) {
  if (v < 0 || v >= X.num_vertices) throw Error("UnknownCell", "no such vertex");
  LinkComplex L;
  L.vertices = X.ends_at(v);
  std::sort(L.vertices.begin(), L.vertices.end());

  auto add_corner = [&](const std::vector<EdgeEnd>& ends, CellRef source) {
    std::vector<int> ids;
    ids.reserve(ends.size());
    for (const auto& e : ends) ids.push_back(L.vertex_index(e));
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      L.corner_with_repeat = true;
      L.repeat_witness = source;
      return;
    }
    auto [it, fresh] = L.simplices.emplace(ids, 0);
    it->second += 1;
    if (fresh) L.witness[ids] = source;
  };

  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s) {
    const auto& sq = X.squares[s];
    for (int i = 0; i < 4; ++i) {
      if (X.head_of(sq.side[i]) != v) continue;
      add_corner({X.in_end(sq.side[i]), X.out_end(sq.side[(i + 1) % 4])}, {2, s});
    }
  }
  for (int h = 0; h < static_cast<int>(X.higher.size()); ++h) {
    const auto& c = X.higher[h];
    CellRef ref{c.dim, h};
    std::vector<int8_t> corner(c.dim, -1);
    for (;;) {
      auto rv = X.resolve_face(ref, corner);
      if (rv.cell.index == v) {
        std::vector<EdgeEnd> ends;
        bool ok = true;
        for (int d = 0; d < c.dim; ++d) {
          auto desc = corner;
          desc[d] = 0;
          auto re = X.resolve_face(ref, desc);
          if (re.cell.dim != 1) { ok = false; break; }
          ends.push_back({re.cell.index, re.ident.sign[0] * corner[d] > 0});
        }
        if (ok) add_corner(ends, ref);
      }
      int d = 0;
      while (d < c.dim && corner[d] == 1) corner[d++] = -1;
      if (d == c.dim) break;
      corner[d] = 1;
    }
  }
  return L;
}

struct NpcFailure {
  int vertex = -1;
  std::string kind;  // "non-simplicial" or "non-flag"
  std::vector<EdgeEnd> simplex;
  CellRef witness{};
};

struct NpcReport {
  bool pass = true;
  std::vector<NpcFailure> failures;
};

namespace detail {

// All faces (sub-simplices) of the link simplices, plus the adjacency matrix.
inline void link_skeleton(const LinkComplex& L, std::set<std::vector<int>>& faces,
                          std::vector<std::vector<bool>>& adj, int& max_dim) {
  int n = static_cast<int>(L.vertices.size());
  adj.assign(n, std::vector<bool>(n, false));
  max_dim = 0;
  for (const auto& [simp, mult] : L.simplices) {
    max_dim = std::max(max_dim, static_cast<int>(simp.size()));
    int m = static_cast<int>(simp.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<int> f;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) f.push_back(simp[i]);
      faces.insert(f);
    }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) adj[simp[i]][simp[j]] = adj[simp[j]][simp[i]] = true;
  }
}

inline bool find_nonflag_clique(const LinkComplex& L, std::vector<int>& out) {
  std::set<std::vector<int>> faces;
  std::vector<std::vector<bool>> adj;
  int max_dim = 0;
  link_skeleton(L, faces, adj, max_dim);
  int n = static_cast<int>(L.vertices.size());
  // grow cliques; any clique of size >= 3 must appear as a face
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[i][j]) frontier.push_back({i, j});
  int cap = max_dim + 1;  // one more than the largest simplex size
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier) {
      for (int v = c.back() + 1; v < n; ++v) {
        bool all = true;
        for (int u : c)
          if (!adj[u][v]) { all = false; break; }
        if (!all) continue;
        std::vector<int> bigger = c;
        bigger.push_back(v);
        if (!faces.count(bigger)) { out = bigger; return true; }
        if (static_cast<int>(bigger.size()) <= cap) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace detail

/// Nonpositive curvature: every vertex link is simplicial and flag. Links
/// are examined in parallel with one result slot per vertex, so reports are
/// identical for any worker count.
inline NpcReport check_npc(const CubeComplex& X) {
  NpcReport rep;
  std::vector<std::vector<NpcFailure>> slots(X.num_vertices);
  parallel_for(X.num_vertices, [&](int v) {
    LinkComplex L = vertex_link(X, v);
    if (L.corner_with_repeat) {
      slots[v].push_back({v, "non-simplicial", {}, L.repeat_witness});
      return;
    }
    for (const auto& [simp, mult] : L.simplices) {
      if (mult > 1) {
        std::vector<EdgeEnd> ends;
        for (int i : simp) ends.push_back(L.vertices[i]);
        slots[v].push_back({v, "non-simplicial", ends, L.witness.at(simp)});
        return;
      }
    }
    std::vector<int> clique;
    if (detail::find_nonflag_clique(L, clique)) {
      std::vector<EdgeEnd> ends;
      for (int i : clique) ends.push_back(L.vertices[i]);
      slots[v].push_back({v, "non-flag", ends, {}});
    }
  });
  for (auto& s : slots)
    for (auto& f : s) {
      rep.pass = false;
      rep.failures.push_back(std::move(f));
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Small helpers shared across modules

inline std::vector<int> bfs_distances(const CubeComplex& X, int base) {
  std::vector<int> dist(X.num_vertices, -1);
  std::vector<int> queue{base};
  dist[base] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (const auto& end : X.ends_at(v)) {
      int w = X.vertex_of({end.edge, !end.head});
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline int graph_diameter(const CubeComplex& X) {
  int d = 0;
  for (int v = 0; v < X.num_vertices; ++v)
    for (int x : bfs_distances(X, v)) {
      if (x < 0) return -1;  // disconnected
      d = std::max(d, x);
    }
  return d;
}

inline std::vector<int> connected_vertex_components(const CubeComplex& X) {
  std::vector<int> comp(X.num_vertices, -1);
  int c = 0;
  for (int v = 0; v < X.num_vertices; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> queue{v};
    comp[v] = c;
    for (size_t i = 0; i < queue.size(); ++i)
      for (const auto& end : X.ends_at(queue[i])) {
        int w = X.vertex_of({end.edge, !end.head});
        if (comp[w] < 0) {
          comp[w] = c;
          queue.push_back(w);
        }
      }
    ++c;
  }
  return comp;
}

}  // namespace cubetop
