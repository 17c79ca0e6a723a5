#pragma once

#include <optional>

#include "cubetop/cube_complex.hpp"

namespace cubetop {

/// Symmetry of a square: side j of the source maps to side (r + j) mod 4 of
/// the target when flip is false, and to side (r - j) mod 4 traversed
/// backwards when flip is true.
struct SquareSym {
  int r = 0;
  bool flip = false;

  int side_image(int j) const { return ((flip ? r - j : r + j) % 4 + 4) % 4; }

  SquareSym compose(const SquareSym& inner) const {
    auto eval = [&](int j) { return side_image(inner.side_image(j)); };
    SquareSym out;
    out.r = eval(0);
    out.flip = (eval(1) != (out.r + 1) % 4);
    return out;
  }
  SquareSym inverse() const {
    SquareSym out;
    out.flip = flip;
    out.r = flip ? r : (4 - r) % 4;
    return out;
  }
  friend auto operator<=>(const SquareSym&, const SquareSym&) = default;
};

struct EdgeImage {
  int edge = -1;
  bool rev = false;
  friend auto operator<=>(const EdgeImage&, const EdgeImage&) = default;
};

struct SquareImage {
  int square = -1;
  SquareSym sym;
};

struct CombinatorialMap {
  const CubeComplex* source = nullptr;
  const CubeComplex* target = nullptr;
  std::vector<int> vertex_map;
  std::vector<EdgeImage> edge_map;
  std::vector<SquareImage> square_map;

  Dart dart_image(const Dart& d) const {
    const auto& ei = edge_map[d.edge];
    return {ei.edge, d.rev != ei.rev};
  }
  EdgeEnd end_image(const EdgeEnd& e) const {
    const auto& ei = edge_map[e.edge];
    return {ei.edge, e.head != ei.rev};
  }
};

inline CombinatorialMap identity_map(const CubeComplex& X) {
  CombinatorialMap f;
  f.source = f.target = &X;
  f.vertex_map.resize(X.num_vertices);
  for (int v = 0; v < X.num_vertices; ++v) f.vertex_map[v] = v;
  f.edge_map.resize(X.edges.size());
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e) f.edge_map[e] = {e, false};
  f.square_map.resize(X.squares.size());
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s) f.square_map[s] = {s, {}};
  return f;
}

/// Checks that the map sends open cubes to open cubes respecting facets.
inline std::vector<Violation> validate_map(const CombinatorialMap& f) {
  std::vector<Violation> out;
  const auto& Y = *f.source;
  const auto& X = *f.target;
  if (static_cast<int>(f.vertex_map.size()) != Y.num_vertices ||
      f.edge_map.size() != Y.edges.size() || f.square_map.size() != Y.squares.size()) {
    out.push_back({"NotCombinatorial", {}, -1, "cell assignment size mismatch"});
    return out;
  }
  for (int v = 0; v < Y.num_vertices; ++v)
    if (f.vertex_map[v] < 0 || f.vertex_map[v] >= X.num_vertices)
      out.push_back({"NotCombinatorial", {0, v}, -1, "vertex image out of range"});
  for (int e = 0; e < static_cast<int>(Y.edges.size()); ++e) {
    const auto& ei = f.edge_map[e];
    if (ei.edge < 0 || ei.edge >= static_cast<int>(X.edges.size())) {
      out.push_back({"NotCombinatorial", {1, e}, -1, "edge image out of range"});
      continue;
    }
    Dart im = f.dart_image({e, false});
    if (f.vertex_map[Y.edges[e].tail] != X.tail_of(im) ||
        f.vertex_map[Y.edges[e].head] != X.head_of(im))
      out.push_back({"NotCombinatorial", {1, e}, -1, "edge image endpoints disagree"});
  }
  for (int s = 0; s < static_cast<int>(Y.squares.size()); ++s) {
    const auto& si = f.square_map[s];
    if (si.square < 0 || si.square >= static_cast<int>(X.squares.size())) {
      out.push_back({"NotCombinatorial", {2, s}, -1, "square image out of range"});
      continue;
    }
    const auto& sq = Y.squares[s];
    const auto& tq = X.squares[si.square];
    for (int j = 0; j < 4; ++j) {
      Dart expect = tq.side[si.sym.side_image(j)];
      if (si.sym.flip) expect.rev = !expect.rev;
      if (!(f.dart_image(sq.side[j]) == expect))
        out.push_back({"NotCombinatorial", {2, s}, j, "square side image disagrees"});
    }
  }
  return out;
}

inline void require_map(const CombinatorialMap& f) {
  auto v = validate_map(f);
  if (!v.empty()) throw Error("NotCombinatorial", v.front().message);
}

inline CombinatorialMap compose(const CombinatorialMap& g, const CombinatorialMap& f) {
  if (f.target != g.source) throw Error("NotCombinatorial", "composition endpoints disagree");
  CombinatorialMap h;
  h.source = f.source;
  h.target = g.target;
  h.vertex_map.resize(f.vertex_map.size());
  for (size_t v = 0; v < f.vertex_map.size(); ++v) h.vertex_map[v] = g.vertex_map[f.vertex_map[v]];
  h.edge_map.resize(f.edge_map.size());
  for (size_t e = 0; e < f.edge_map.size(); ++e) {
    const auto& a = f.edge_map[e];
    const auto& b = g.edge_map[a.edge];
    h.edge_map[e] = {b.edge, a.rev != b.rev};
  }
  h.square_map.resize(f.square_map.size());
  for (size_t s = 0; s < f.square_map.size(); ++s) {
    const auto& a = f.square_map[s];
    const auto& b = g.square_map[a.square];
    h.square_map[s] = {b.square, b.sym.compose(a.sym)};
  }
  return h;
}

// ---------------------------------------------------------------------------
// Local isometries

struct LocalIsometryFailure {
  int vertex = -1;
  std::string kind;  // "not-injective" or "not-full"
  std::vector<EdgeEnd> simplex;  // source link vertices involved
};

struct LocalIsometryReport {
  bool pass = true;
  std::vector<LocalIsometryFailure> failures;
};

/// A combinatorial map is a local isometry when every induced link map is
/// injective with full image.
inline LocalIsometryReport check_local_isometry(const CombinatorialMap& f) {
  require_map(f);
  LocalIsometryReport rep;
  const auto& Y = *f.source;
  const auto& X = *f.target;
  for (int v = 0; v < Y.num_vertices; ++v) {
    LinkComplex LY = vertex_link(Y, v);
    LinkComplex LX = vertex_link(X, f.vertex_map[v]);
    std::map<int, EdgeEnd> image_seen;  // target link vertex -> source end
    bool injective = true;
    for (const auto& end : LY.vertices) {
      EdgeEnd im = f.end_image(end);
      int ix = LX.vertex_index(im);
      auto [it, fresh] = image_seen.emplace(ix, end);
      if (!fresh) {
        rep.pass = false;
        injective = false;
        rep.failures.push_back({v, "not-injective", {it->second, end}});
      }
    }
    if (!injective) continue;
    // fullness: any target simplex spanned by image vertices pulls back
    for (const auto& [simp, mult] : LX.simplices) {
      std::vector<int> pre;
      bool all = true;
      for (int ix : simp) {
        auto it = image_seen.find(ix);
        if (it == image_seen.end()) { all = false; break; }
        pre.push_back(LY.vertex_index(it->second));
      }
      if (!all) continue;
      std::sort(pre.begin(), pre.end());
      if (!LY.simplices.count(pre)) {
        rep.pass = false;
        std::vector<EdgeEnd> ends;
        for (int i : pre) ends.push_back(LY.vertices[i]);
        rep.failures.push_back({v, "not-full", ends});
      }
    }
  }
  return rep;
}

inline bool is_local_isometry(const CombinatorialMap& f) { return check_local_isometry(f).pass; }

inline bool is_injective_on_cells(const CombinatorialMap& f) {
  std::set<int> vs(f.vertex_map.begin(), f.vertex_map.end());
  if (vs.size() != f.vertex_map.size()) return false;
  std::set<int> es;
  for (const auto& ei : f.edge_map) es.insert(ei.edge);
  if (es.size() != f.edge_map.size()) return false;
  std::set<int> ss;
  for (const auto& si : f.square_map) ss.insert(si.square);
  return ss.size() == f.square_map.size();
}

inline bool is_isomorphism(const CombinatorialMap& f) {
  return is_injective_on_cells(f) &&
         static_cast<int>(f.vertex_map.size()) == f.target->num_vertices &&
         f.edge_map.size() == f.target->edges.size() &&
         f.square_map.size() == f.target->squares.size();
}

// ---------------------------------------------------------------------------
// Morphism search between maps over a common base

namespace detail {

/// Directed-edge lookup: at target vertex v, find the unique dart with the
/// given image dart under g. Requires g to be an immersion.
inline std::optional<Dart> lift_dart(const CombinatorialMap& g, int v, const Dart& image) {
  const auto& Z = *g.source;
  std::optional<Dart> found;
  for (const auto& end : Z.ends_at(v)) {
    Dart d{end.edge, end.head};  // dart leaving v along this end
    if (g.dart_image(d) == image) {
      if (found) return std::nullopt;  // not an immersion at v
      found = d;
    }
  }
  return found;
}

}  // namespace detail

/// All morphisms h : Y -> Z with g∘h = f, for connected Y and an immersion g.
/// Propagation from a basepoint image is unique, so there are at most as many
/// morphisms as candidate images of the basepoint.
inline std::vector<CombinatorialMap> find_morphisms(const CombinatorialMap& f,
                                                    const CombinatorialMap& g) {
  const auto& Y = *f.source;
  const auto& Z = *g.source;
  std::vector<CombinatorialMap> out;
  if (Y.num_vertices == 0) return out;
  for (int z0 = 0; z0 < Z.num_vertices; ++z0) {
    if (g.vertex_map[z0] != f.vertex_map[0]) continue;
    CombinatorialMap h;
    h.source = &Y;
    h.target = &Z;
    h.vertex_map.assign(Y.num_vertices, -1);
    h.edge_map.assign(Y.edges.size(), {-1, false});
    h.square_map.assign(Y.squares.size(), {-1, {}});
    h.vertex_map[0] = z0;
    std::vector<int> queue{0};
    bool ok = true;
    for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
      int y = queue[qi];
      for (const auto& end : Y.ends_at(y)) {
        Dart d{end.edge, end.head};  // leaves y
        auto lifted = detail::lift_dart(g, h.vertex_map[y], f.dart_image(d));
        if (!lifted) { ok = false; break; }
        EdgeImage im{lifted->edge, lifted->rev != d.rev};
        if (h.edge_map[d.edge].edge >= 0) {
          if (!(h.edge_map[d.edge] == im)) { ok = false; break; }
        } else {
          h.edge_map[d.edge] = im;
        }
        int yh = Y.head_of(d);
        int zh = Z.head_of(*lifted);
        if (h.vertex_map[yh] < 0) {
          h.vertex_map[yh] = zh;
          queue.push_back(yh);
        } else if (h.vertex_map[yh] != zh) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    for (int v = 0; v < Y.num_vertices && ok; ++v)
      if (h.vertex_map[v] < 0) ok = false;  // Y must be connected
    // squares: image square is forced by the side darts
    for (int s = 0; s < static_cast<int>(Y.squares.size()) && ok; ++s) {
      const auto& sq = Y.squares[s];
      Dart d0 = h.dart_image(sq.side[0]);
      bool found = false;
      for (int t = 0; t < static_cast<int>(Z.squares.size()) && !found; ++t) {
        const auto& tq = Z.squares[t];
        for (int r = 0; r < 4 && !found; ++r)
          for (int flip = 0; flip < 2 && !found; ++flip) {
            SquareSym sym{r, flip != 0};
            bool match = true;
            for (int j = 0; j < 4; ++j) {
              Dart expect = tq.side[sym.side_image(j)];
              if (sym.flip) expect.rev = !expect.rev;
              if (!(h.dart_image(sq.side[j]) == expect)) { match = false; break; }
            }
            if (match && g.square_map[t].square == f.square_map[s].square) {
              SquareSym total = g.square_map[t].sym.compose(sym);
              if (total == f.square_map[s].sym) {
                h.square_map[s] = {t, sym};
                found = true;
              }
            }
          }
      }
      (void)d0;
      if (!found) ok = false;
    }
    if (ok && validate_map(h).empty()) out.push_back(std::move(h));
  }
  return out;
}

/// Morphisms h with g∘h = f that are isomorphisms of maps over the base.
inline std::vector<CombinatorialMap> find_isomorphisms(const CombinatorialMap& f,
                                                       const CombinatorialMap& g) {
  std::vector<CombinatorialMap> out;
  for (auto& h : find_morphisms(f, g))
    if (is_isomorphism(h)) out.push_back(std::move(h));
  return out;
}

/// Automorphism group of a map over its base, as explicit cell permutations.
inline std::vector<CombinatorialMap> automorphisms(const CombinatorialMap& f) {
  return find_isomorphisms(f, f);
}

}  // namespace cubetop
