#pragma once

#include "cubetop/morphism.hpp"

namespace cubetop {

/// Finite cover described by one permutation of sheets per base edge.
struct CoverSpec {
  const CubeComplex* base = nullptr;
  int degree = 1;
  std::vector<std::vector<int>> edge_perm;  // edge -> permutation of 0..degree-1

  int act(const Dart& d, int sheet) const {
    const auto& p = edge_perm[d.edge];
    if (!d.rev) return p[sheet];
    for (int i = 0; i < degree; ++i)
      if (p[i] == sheet) return i;
    throw Error("MalformedInput", "edge permutation is not a bijection");
  }
};

struct SquareInconsistency {
  int square = -1;
  std::vector<int> composite;  // nonidentity boundary monodromy
};

inline std::optional<SquareInconsistency> validate_cover_spec(const CoverSpec& c) {
  const auto& X = *c.base;
  if (static_cast<int>(c.edge_perm.size()) != static_cast<int>(X.edges.size()))
    throw Error("MalformedInput", "cover needs one permutation per edge");
  for (const auto& p : c.edge_perm) {
    if (static_cast<int>(p.size()) != c.degree) throw Error("MalformedInput", "permutation size");
    std::vector<bool> seen(c.degree, false);
    for (int v : p) {
      if (v < 0 || v >= c.degree || seen[v]) throw Error("MalformedInput", "not a permutation");
      seen[v] = true;
    }
  }
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s) {
    std::vector<int> comp(c.degree);
    for (int i = 0; i < c.degree; ++i) {
      int sheet = i;
      for (int j = 0; j < 4; ++j) sheet = c.act(X.squares[s].side[j], sheet);
      comp[i] = sheet;
    }
    for (int i = 0; i < c.degree; ++i)
      if (comp[i] != i) return SquareInconsistency{s, comp};
  }
  return std::nullopt;
}

struct BuiltCover {
  ComplexPtr total;
  CombinatorialMap projection;  // total -> base
  int degree = 1;
  // cell ids: (base cell, sheet) -> base_id * degree + sheet
  int vertex_id(int v, int sheet) const { return v * degree + sheet; }
  int edge_id(int e, int sheet) const { return e * degree + sheet; }
  int square_id(int s, int sheet) const { return s * degree + sheet; }
};

/// Degree-n cover with covering map; an n-to-1 local isometry by construction.
inline BuiltCover build_cover(const CoverSpec& c) {
  if (auto bad = validate_cover_spec(c))
    throw Error("SquareInconsistency", "square " + std::to_string(bad->square) +
                                           " has nonidentity boundary monodromy");
  const auto& X = *c.base;
  BuiltCover out;
  out.degree = c.degree;
  CubeComplex T;
  T.num_vertices = X.num_vertices * c.degree;
  T.edges.resize(X.edges.size() * c.degree);
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e)
    for (int k = 0; k < c.degree; ++k) {
      auto& ec = T.edges[out.edge_id(e, k)];
      ec.tail = out.vertex_id(X.edges[e].tail, k);
      ec.head = out.vertex_id(X.edges[e].head, c.edge_perm[e][k]);
      ec.label = X.edges[e].label;
    }
  T.squares.resize(X.squares.size() * c.degree);
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s)
    for (int k = 0; k < c.degree; ++k) {
      auto& sc = T.squares[out.square_id(s, k)];
      int sheet = k;
      for (int j = 0; j < 4; ++j) {
        Dart d = X.squares[s].side[j];
        int next = c.act(d, sheet);
        sc.side[j] = {out.edge_id(d.edge, d.rev ? next : sheet), d.rev};
        sheet = next;
      }
    }
  out.total = make_complex(std::move(T));
  auto& pr = out.projection;
  pr.source = out.total.get();
  pr.target = c.base;
  pr.vertex_map.resize(out.total->num_vertices);
  for (int v = 0; v < X.num_vertices; ++v)
    for (int k = 0; k < c.degree; ++k) pr.vertex_map[out.vertex_id(v, k)] = v;
  pr.edge_map.resize(out.total->edges.size());
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e)
    for (int k = 0; k < c.degree; ++k) pr.edge_map[out.edge_id(e, k)] = {e, false};
  pr.square_map.resize(out.total->squares.size());
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s)
    for (int k = 0; k < c.degree; ++k) pr.square_map[out.square_id(s, k)] = {s, {}};
  return out;
}

// ---------------------------------------------------------------------------
// Restriction to a set of cells, keeping the original ids.

struct Subcomplex {
  ComplexPtr complex;
  std::vector<int> vertex_of;  // new -> old
  std::vector<int> edge_of;
  std::vector<int> square_of;

  CombinatorialMap inclusion(const CubeComplex& ambient) const {
    CombinatorialMap f;
    f.source = complex.get();
    f.target = &ambient;
    f.vertex_map = vertex_of;
    f.edge_map.reserve(edge_of.size());
    for (int e : edge_of) f.edge_map.push_back({e, false});
    f.square_map.reserve(square_of.size());
    for (int s : square_of) f.square_map.push_back({s, {}});
    return f;
  }
};

inline Subcomplex restrict_to_vertices(const CubeComplex& X, const std::vector<bool>& keep) {
  Subcomplex out;
  CubeComplex C;
  std::vector<int> vmap(X.num_vertices, -1);
  for (int v = 0; v < X.num_vertices; ++v)
    if (keep[v]) {
      vmap[v] = C.num_vertices++;
      out.vertex_of.push_back(v);
    }
  std::vector<int> emap(X.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e)
    if (keep[X.edges[e].tail] && keep[X.edges[e].head]) {
      emap[e] = static_cast<int>(C.edges.size());
      C.edges.push_back({vmap[X.edges[e].tail], vmap[X.edges[e].head], X.edges[e].label});
      out.edge_of.push_back(e);
    }
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s) {
    const auto& sq = X.squares[s];
    bool all = true;
    for (int j = 0; j < 4; ++j)
      if (emap[sq.side[j].edge] < 0) all = false;
    if (!all) continue;
    SquareCell c;
    for (int j = 0; j < 4; ++j) c.side[j] = {emap[sq.side[j].edge], sq.side[j].rev};
    out.square_of.push_back(s);
    C.squares.push_back(c);
  }
  out.complex = make_complex(std::move(C));
  return out;
}

/// Connected component of a vertex, as a subcomplex.
inline Subcomplex component_of(const CubeComplex& X, int v) {
  auto comp = connected_vertex_components(X);
  std::vector<bool> keep(X.num_vertices);
  for (int u = 0; u < X.num_vertices; ++u) keep[u] = comp[u] == comp[v];
  return restrict_to_vertices(X, keep);
}

// ---------------------------------------------------------------------------
// Elevations

struct Elevation {
  ComplexPtr domain;          // the elevated space
  CombinatorialMap elevated;  // domain -> cover total space
  CombinatorialMap covering;  // domain -> Y (the original source)
  int degree = 0;             // covering degree onto Y
  int basepoint = 0;          // vertex of domain over (y0, sheet)
};

namespace detail {

inline CoverSpec induced_cover_spec(const CombinatorialMap& f, const CoverSpec& spec) {
  CoverSpec induced;
  induced.base = f.source;
  induced.degree = spec.degree;
  induced.edge_perm.resize(f.source->edges.size());
  for (int e = 0; e < static_cast<int>(f.source->edges.size()); ++e) {
    const auto& im = f.edge_map[e];
    induced.edge_perm[e].resize(spec.degree);
    for (int s = 0; s < spec.degree; ++s) induced.edge_perm[e][s] = spec.act({im.edge, im.rev}, s);
  }
  return induced;
}

}  // namespace detail

/// Elevation of f : Y -> X across a cover of X, at a chosen basepoint sheet.
/// The elevated space is a component of the cover of Y induced by pulling the
/// sheet permutations back along f.
inline Elevation elevation(const CombinatorialMap& f, const BuiltCover& cover,
                           const CoverSpec& spec, int y0, int sheet) {
  CoverSpec induced = detail::induced_cover_spec(f, spec);
  BuiltCover yc = build_cover(induced);
  Subcomplex comp = component_of(*yc.total, yc.vertex_id(y0, sheet));

  Elevation out;
  out.domain = comp.complex;
  for (int v = 0; v < out.domain->num_vertices; ++v)
    if (comp.vertex_of[v] == yc.vertex_id(y0, sheet)) out.basepoint = v;
  out.covering.source = out.domain.get();
  out.covering.target = f.source;
  for (int v : comp.vertex_of) out.covering.vertex_map.push_back(v / spec.degree);
  for (int e : comp.edge_of) out.covering.edge_map.push_back({e / spec.degree, false});
  for (int s : comp.square_of) out.covering.square_map.push_back({s / spec.degree, {}});
  out.elevated.source = out.domain.get();
  out.elevated.target = cover.total.get();
  for (int v : comp.vertex_of)
    out.elevated.vertex_map.push_back(
        cover.vertex_id(f.vertex_map[v / spec.degree], v % spec.degree));
  for (int e : comp.edge_of) {
    int ye = e / spec.degree, k = e % spec.degree;
    const auto& im = f.edge_map[ye];
    // for a reversed image the lift starts at the head side, so pull the
    // sheet back through the permutation
    int xsheet = im.rev ? spec.act({im.edge, true}, k) : k;
    out.elevated.edge_map.push_back({cover.edge_id(im.edge, xsheet), im.rev});
  }
  for (size_t i = 0; i < comp.square_of.size(); ++i) {
    int s = comp.square_of[i];
    int ys = s / spec.degree;
    const auto& im = f.square_map[ys];
    // the image lift is the unique sheet whose sides match the elevated darts
    const auto& dq = out.domain->squares[i];
    int found = -1;
    for (int k2 = 0; k2 < spec.degree && found < 0; ++k2) {
      const auto& tq = cover.total->squares[cover.square_id(im.square, k2)];
      bool match = true;
      for (int j = 0; j < 4; ++j) {
        Dart expect = tq.side[im.sym.side_image(j)];
        if (im.sym.flip) expect.rev = !expect.rev;
        Dart got = dq.side[j];
        const auto& ei = out.elevated.edge_map[got.edge];
        Dart image{ei.edge, got.rev != ei.rev};
        if (!(image == expect)) { match = false; break; }
      }
      if (match) found = k2;
    }
    if (found < 0) throw Error("InternalError", "elevated square has no lift");
    out.elevated.square_map.push_back({cover.square_id(im.square, found), im.sym});
  }
  int fiber = 0;
  for (int v : comp.vertex_of)
    if (v / spec.degree == y0) ++fiber;
  out.degree = fiber;
  if (!validate_map(out.elevated).empty())
    throw Error("InternalError", "elevation failed to commute");
  return out;
}

/// Unbased elevation list: one per orbit of sheets, ordered by smallest
/// sheet index.
inline std::vector<Elevation> all_elevations(const CombinatorialMap& f, const BuiltCover& cover,
                                             const CoverSpec& spec, int y0) {
  CoverSpec induced = detail::induced_cover_spec(f, spec);
  BuiltCover yc = build_cover(induced);
  auto comps = connected_vertex_components(*yc.total);
  std::vector<Elevation> out;
  std::vector<bool> used(spec.degree, false);
  for (int k = 0; k < spec.degree; ++k) {
    if (used[k]) continue;
    for (int s = k; s < spec.degree; ++s)
      if (comps[yc.vertex_id(y0, s)] == comps[yc.vertex_id(y0, k)]) used[s] = true;
    out.push_back(elevation(f, cover, spec, y0, k));
  }
  return out;
}

}  // namespace cubetop
