#pragma once

#include <sstream>

#include "cubetop/fiber_product.hpp"

namespace cubetop {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // keep the smaller id as representative
    return true;
  }
};

/// Pointed or unpointed representative of a subgroup conjugacy class: a
/// folded core graph immersed in its ambient complex.
struct SubgroupRep {
  ComplexPtr core;
  CombinatorialMap immersion;  // core -> ambient
  int basepoint = -1;          // -1 when unpointed

  bool trivial() const { return core == nullptr || core->edges.empty(); }
  const CubeComplex* ambient() const { return immersion.target; }
};

// ---------------------------------------------------------------------------
// Folding (graphs only)

/// Stallings folding: quotients the source graph until the map is an
/// immersion. The fundamental-group image is unchanged.
inline SubgroupRep fold(const CubeComplex& G, const CombinatorialMap& f, int basepoint) {
  if (!G.squares.empty() || !G.higher.empty())
    throw Error("UnsupportedDimension", "folding works on graphs");
  UnionFind vu(G.num_vertices);
  UnionFind eu(static_cast<int>(G.edges.size()));
  bool changed = true;
  while (changed) {
    changed = false;
    // darts leaving each vertex class, grouped by image dart
    std::map<std::pair<int, std::pair<int, bool>>, Dart> seen;
    for (int e = 0; e < static_cast<int>(G.edges.size()); ++e) {
      if (eu.find(e) != e) continue;
      for (bool rev : {false, true}) {
        Dart d{e, rev};
        int at = vu.find(G.tail_of(d));
        Dart im = f.dart_image(d);
        auto key = std::make_pair(at, std::make_pair(im.edge, im.rev));
        auto [it, fresh] = seen.emplace(key, d);
        if (fresh) continue;
        Dart other = it->second;
        changed |= vu.unite(vu.find(G.head_of(d)), vu.find(G.head_of(other)));
        changed |= eu.unite(d.edge, other.edge);
        if (changed) break;
      }
      if (changed) break;
    }
  }
  // quotient graph
  CubeComplex Q;
  std::vector<int> vmap(G.num_vertices, -1);
  for (int v = 0; v < G.num_vertices; ++v)
    if (vu.find(v) == v) vmap[v] = Q.num_vertices++;
  for (int v = 0; v < G.num_vertices; ++v) vmap[v] = vmap[vu.find(v)];
  CombinatorialMap h;
  h.target = f.target;
  std::vector<int> emap(G.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(G.edges.size()); ++e) {
    if (eu.find(e) != e) continue;
    emap[e] = static_cast<int>(Q.edges.size());
    Q.edges.push_back({vmap[G.edges[e].tail], vmap[G.edges[e].head], G.edges[e].label});
    h.edge_map.push_back(f.edge_map[e]);
  }
  h.vertex_map.resize(Q.num_vertices);
  for (int v = 0; v < G.num_vertices; ++v) h.vertex_map[vmap[v]] = f.vertex_map[v];
  SubgroupRep rep;
  rep.core = make_complex(std::move(Q));
  h.source = rep.core.get();
  rep.immersion = std::move(h);
  rep.basepoint = basepoint >= 0 ? vmap[basepoint] : -1;
  return rep;
}

/// Core: iterated removal of valence-1 vertices (keeping the basepoint of a
/// pointed rep). The trivial subgroup yields an empty core.
inline SubgroupRep core_of(const SubgroupRep& in) {
  const auto& G = *in.core;
  std::vector<int> deg(G.num_vertices, 0);
  for (const auto& e : G.edges) {
    deg[e.tail]++;
    deg[e.head]++;
  }
  std::vector<bool> keep_v(G.num_vertices, true), keep_e(G.edges.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < G.num_vertices; ++v) {
      if (!keep_v[v] || v == in.basepoint || deg[v] != 1) continue;
      for (int e = 0; e < static_cast<int>(G.edges.size()); ++e) {
        if (!keep_e[e]) continue;
        if (G.edges[e].tail == v || G.edges[e].head == v) {
          keep_e[e] = false;
          deg[G.edges[e].tail]--;
          deg[G.edges[e].head]--;
          break;
        }
      }
      keep_v[v] = false;
      changed = true;
    }
  }
  // isolated vertices other than the basepoint also go
  for (int v = 0; v < G.num_vertices; ++v)
    if (deg[v] == 0 && v != in.basepoint) keep_v[v] = false;
  CubeComplex C;
  std::vector<int> vmap(G.num_vertices, -1);
  CombinatorialMap h;
  h.target = in.immersion.target;
  for (int v = 0; v < G.num_vertices; ++v)
    if (keep_v[v]) {
      vmap[v] = C.num_vertices++;
      h.vertex_map.push_back(in.immersion.vertex_map[v]);
    }
  for (int e = 0; e < static_cast<int>(G.edges.size()); ++e)
    if (keep_e[e]) {
      C.edges.push_back({vmap[G.edges[e].tail], vmap[G.edges[e].head], G.edges[e].label});
      h.edge_map.push_back(in.immersion.edge_map[e]);
    }
  SubgroupRep rep;
  rep.core = make_complex(std::move(C));
  h.source = rep.core.get();
  rep.immersion = std::move(h);
  rep.basepoint = in.basepoint >= 0 ? vmap[in.basepoint] : -1;
  return rep;
}

/// Rep of the subgroup generated by loops at a basepoint, each loop given as
/// a word of darts in the ambient complex.
inline SubgroupRep rep_from_words(const CubeComplex& X, int base,
                                  const std::vector<std::vector<Dart>>& words) {
  CubeComplex G;
  CombinatorialMap f;
  f.target = &X;
  G.num_vertices = 1;
  f.vertex_map.push_back(base);
  for (const auto& w : words) {
    int prev = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? 0 : G.num_vertices;
      if (i + 1 != w.size()) {
        G.num_vertices++;
        f.vertex_map.push_back(X.head_of(w[i]));
      }
      if (w[i].rev) {
        G.edges.push_back({next, prev, X.edges[w[i].edge].label});
      } else {
        G.edges.push_back({prev, next, X.edges[w[i].edge].label});
      }
      f.edge_map.push_back({w[i].edge, false});
      prev = next;
    }
  }
  f.source = &G;
  SubgroupRep folded = fold(G, f, 0);
  return core_of(folded);
}

/// Parse a word like "a b' c" or "ab'c" over single-letter edge labels.
inline std::vector<Dart> parse_word(const CubeComplex& X, const std::string& word) {
  std::map<std::string, int> by_label;
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e) by_label[X.edges[e].label] = e;
  std::vector<Dart> out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (word[i] == ' ') continue;
    std::string lab(1, word[i]);
    auto it = by_label.find(lab);
    if (it == by_label.end()) throw Error("MalformedInput", "unknown edge label " + lab);
    bool rev = i + 1 < word.size() && (word[i + 1] == '\'' || word[i + 1] == '-');
    if (rev) ++i;
    out.push_back({it->second, rev});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical keys

/// Canonical byte string of an unpointed core, invariant under conjugation:
/// the minimal traversal serialization over all start vertices. Folded cores
/// traverse deterministically because ends at a vertex carry distinct image
/// darts.
inline std::string conjugacy_key(const SubgroupRep& in) {
  if (in.trivial()) return "trivial";
  SubgroupRep unpointed{in.core, in.immersion, -1};
  SubgroupRep rep = core_of(unpointed);
  if (rep.trivial()) return "trivial";
  const auto& G = *rep.core;
  const auto& f = rep.immersion;
  std::string best;
  for (int start = 0; start < G.num_vertices; ++start) {
    std::vector<int> number(G.num_vertices, -1);
    std::vector<int> order;
    number[start] = 0;
    order.push_back(start);
    std::ostringstream os;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
      // ends sorted by image dart
      std::vector<std::pair<std::pair<int, bool>, Dart>> ends;
      for (const auto& end : G.ends_at(v)) {
        Dart d{end.edge, end.head};
        Dart im = f.dart_image(d);
        ends.push_back({{im.edge, im.rev}, d});
      }
      std::sort(ends.begin(), ends.end());
      os << "|";
      for (auto& [im, d] : ends) {
        int w = G.head_of(d);
        if (number[w] < 0) {
          number[w] = static_cast<int>(order.size());
          order.push_back(w);
        }
        os << im.first << (im.second ? "-" : "+") << number[w] << ",";
      }
    }
    if (static_cast<int>(order.size()) != G.num_vertices) {
      // disconnected core: serialize remaining components from their minima
      os << "#disconnected";
    }
    std::string s = os.str();
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Index and containment

/// Covering degree of an immersion between finite core graphs: defined when
/// the map is locally bijective and surjective, otherwise the index is
/// infinite and nullopt is returned.
inline std::optional<int> covering_degree(const CombinatorialMap& f) {
  const auto& K = *f.source;
  const auto& Y = *f.target;
  if (K.num_vertices == 0) return Y.num_vertices == 0 ? std::optional<int>(1) : std::nullopt;
  std::vector<int> fiber(Y.num_vertices, 0);
  for (int v = 0; v < K.num_vertices; ++v) {
    // local bijectivity: image ends at v cover the ends at f(v) exactly once
    std::set<std::pair<int, bool>> im;
    for (const auto& end : K.ends_at(v)) {
      EdgeEnd e = f.end_image(end);
      if (!im.insert({e.edge, e.head}).second) return std::nullopt;
    }
    if (im.size() != Y.ends_at(f.vertex_map[v]).size()) return std::nullopt;
    fiber[f.vertex_map[v]]++;
  }
  int d = fiber[f.vertex_map[0]];
  for (int v = 0; v < Y.num_vertices; ++v)
    if (fiber[v] != d) return std::nullopt;
  return d;
}

/// Whether some conjugate of A's subgroup is contained in B's: equivalent to
/// a morphism between the cores over the ambient complex.
inline bool conj_contained(const SubgroupRep& A, const SubgroupRep& B) {
  if (A.trivial()) return true;
  if (B.trivial()) return false;
  return !find_morphisms(A.immersion, B.immersion).empty();
}

inline bool conj_equal(const SubgroupRep& A, const SubgroupRep& B) {
  if (A.trivial() || B.trivial()) return A.trivial() == B.trivial();
  return conjugacy_key(A) == conjugacy_key(B);
}

// ---------------------------------------------------------------------------
// Intersections

inline SubgroupRep trivial_rep(const CubeComplex* ambient) {
  SubgroupRep rep;
  rep.core = make_complex({});
  rep.immersion.source = rep.core.get();
  rep.immersion.target = ambient;
  return rep;
}

/// Intersection of two subgroup reps at a coset offset given by a vertex
/// pair (a in A's core, b in B's core) with equal image. The result is the
/// core of the fiber-product component through that pair.
inline SubgroupRep intersect_reps(const SubgroupRep& A, const SubgroupRep& B, int a, int b) {
  if (A.ambient() != B.ambient())
    throw Error("MalformedInput", "reps live over different complexes");
  if (A.trivial() || B.trivial()) return trivial_rep(A.ambient());
  auto K = fiber_component_at(A.immersion, B.immersion, a, b);
  if (!K) throw Error("MalformedInput", "offset pair has mismatched images");
  SubgroupRep raw;
  raw.core = K->complex;
  raw.immersion = compose(A.immersion, K->to_a);
  return core_of(raw);
}

/// All essential pairwise intersections (over every coset offset), as
/// unpointed reps.
inline std::vector<SubgroupRep> all_essential_intersections(const SubgroupRep& A,
                                                            const SubgroupRep& B) {
  std::vector<SubgroupRep> out;
  if (A.trivial() || B.trivial()) return out;
  for (const auto& K : fiber_components(A.immersion, B.immersion)) {
    if (!K.essential) continue;
    SubgroupRep raw;
    raw.core = K.complex;
    raw.immersion = compose(A.immersion, K.to_a);
    out.push_back(core_of(raw));
  }
  return out;
}

}  // namespace cubetop
