#pragma once

#include "cubetop/core_graph.hpp"

namespace cubetop {

/// Map over a base complex together with ownership of its domain.
struct FamilyMember {
  ComplexPtr domain;
  CombinatorialMap map;
  std::string name;
};

inline FamilyMember make_member(ComplexPtr domain, CombinatorialMap map, std::string name = "") {
  FamilyMember m;
  m.domain = std::move(domain);
  m.map = std::move(map);
  m.map.source = m.domain.get();
  m.name = std::move(name);
  return m;
}

/// Canonical serialization of a connected immersed complex over its base;
/// equal strings mean isomorphic as maps over the base.
inline std::string canonical_form(const CombinatorialMap& f) {
  const auto& G = *f.source;
  if (G.num_vertices == 0) return "empty";
  std::string best;
  for (int start = 0; start < G.num_vertices; ++start) {
    std::vector<int> number(G.num_vertices, -1);
    std::vector<int> order{start};
    number[start] = 0;
    std::ostringstream os;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
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
    if (static_cast<int>(order.size()) != G.num_vertices) os << "#disconnected";
    std::vector<std::string> sqs;
    for (int s = 0; s < static_cast<int>(G.squares.size()); ++s) {
      std::ostringstream ss;
      for (int j = 0; j < 4; ++j) {
        const Dart& d = G.squares[s].side[j];
        ss << number[G.tail_of(d)] << (d.rev ? "-" : "+") << f.square_map[s].square << ";";
      }
      sqs.push_back(ss.str());
    }
    std::sort(sqs.begin(), sqs.end());
    std::ostringstream all;
    all << os.str() << "$";
    for (auto& s : sqs) all << s;
    std::string str = all.str();
    if (best.empty() || str < best) best = str;
  }
  return best;
}

/// Index of the image subgroup of an immersion between connected complexes:
/// finite with a degree exactly when the induced map between cores is a
/// covering.
struct IndexResult {
  bool finite = false;
  int degree = 0;
};

inline IndexResult subgroup_index(const CombinatorialMap& incl) {
  SubgroupRep sub;
  sub.core = make_complex(*incl.source);
  sub.immersion = incl;
  sub.immersion.source = sub.core.get();
  sub = core_of(sub);
  SubgroupRep sup;
  sup.core = make_complex(*incl.target);
  sup.immersion = identity_map(*incl.target);
  sup.immersion.source = sup.core.get();
  sup.immersion.target = incl.target;
  sup = core_of(sup);
  if (sub.trivial()) return {sup.trivial(), sup.trivial() ? 1 : 0};
  // rebuild the induced map between cores
  CombinatorialMap between;
  between.source = sub.core.get();
  between.target = sup.core.get();
  // cores keep the immersion data; translate via images in the common target
  // by matching cells of the target complex
  std::vector<int> core_vertex_of_target(incl.target->num_vertices, -1);
  for (int v = 0; v < sup.core->num_vertices; ++v)
    core_vertex_of_target[sup.immersion.vertex_map[v]] = v;
  std::vector<int> core_edge_of_target(incl.target->edges.size(), -1);
  std::vector<bool> core_edge_rev(incl.target->edges.size(), false);
  for (int e = 0; e < static_cast<int>(sup.core->edges.size()); ++e) {
    core_edge_of_target[sup.immersion.edge_map[e].edge] = e;
    core_edge_rev[sup.immersion.edge_map[e].edge] = sup.immersion.edge_map[e].rev;
  }
  for (int v = 0; v < sub.core->num_vertices; ++v) {
    int tv = sub.immersion.vertex_map[v];
    if (core_vertex_of_target[tv] < 0) return {false, 0};
    between.vertex_map.push_back(core_vertex_of_target[tv]);
  }
  for (const auto& ei : sub.immersion.edge_map) {
    if (core_edge_of_target[ei.edge] < 0) return {false, 0};
    between.edge_map.push_back(
        {core_edge_of_target[ei.edge], ei.rev != core_edge_rev[ei.edge]});
  }
  auto deg = covering_degree(between);
  if (!deg) return {false, 0};
  return {true, *deg};
}

// ---------------------------------------------------------------------------
// Multiple fiber products

struct MultiComponent {
  ComplexPtr complex;
  CombinatorialMap to_base;
  std::vector<int> factors;  // indices into the family, in product order
  bool essential = false;
  std::string key;  // canonical form over the base
};

/// Components of all iterated fiber products with up to `depth` factors,
/// deduplicated up to isomorphism over the base.
inline std::vector<MultiComponent> multi_product_components(
    const std::vector<FamilyMember>& family, int depth) {
  std::vector<MultiComponent> pool;
  std::set<std::string> seen;
  std::vector<MultiComponent> frontier;
  for (int i = 0; i < static_cast<int>(family.size()); ++i) {
    MultiComponent c;
    c.complex = family[i].domain;
    c.to_base = family[i].map;
    c.factors = {i};
    c.essential = detail::has_cycle_after_coring(*c.complex);
    c.key = canonical_form(c.to_base);
    if (seen.insert(c.key).second) {
      pool.push_back(c);
      frontier.push_back(c);
    }
  }
  for (int level = 2; level <= depth; ++level) {
    std::vector<MultiComponent> next;
    for (const auto& c : frontier)
      for (int i = 0; i < static_cast<int>(family.size()); ++i) {
        for (const auto& K : fiber_components(c.to_base, family[i].map)) {
          MultiComponent n;
          n.complex = K.complex;
          n.to_base = compose(c.to_base, K.to_a);
          n.factors = c.factors;
          n.factors.push_back(i);
          n.essential = K.essential;
          n.key = canonical_form(n.to_base);
          if (seen.insert(n.key).second) {
            pool.push_back(n);
            next.push_back(n);
          }
        }
      }
    frontier = std::move(next);
  }
  return pool;
}

// ---------------------------------------------------------------------------
// Symmetric maps

struct SymmetricReport {
  bool symmetric = true;
  // witness: a self-product component of finite index that is not an
  // isomorphism onto both copies
  int witness_component = -1;
  int witness_index = 0;
  int components = 0;
};

/// A connected immersion is symmetric when every self-product component maps
/// isomorphically to both copies or has infinite index.
inline SymmetricReport is_symmetric(const CombinatorialMap& f) {
  SymmetricReport rep;
  auto comps = fiber_components(f, f);
  rep.components = static_cast<int>(comps.size());
  for (int k = 0; k < static_cast<int>(comps.size()); ++k) {
    const auto& K = comps[k];
    if (K.to_a_iso && K.to_b_iso) continue;
    auto ia = subgroup_index(K.to_a);
    auto ib = subgroup_index(K.to_b);
    if (ia.finite || ib.finite) {
      rep.symmetric = false;
      rep.witness_component = k;
      rep.witness_index = ia.finite ? ia.degree : ib.degree;
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Principal components

struct PrincipalResult {
  std::vector<MultiComponent> reps;  // essential principal components
  bool certified = false;            // pool closed below the budget
  int depth_used = 0;
  std::vector<std::string> frontier;  // keys of unresolved last-level classes
};

inline PrincipalResult principal_components(const std::vector<FamilyMember>& family, int depth) {
  PrincipalResult out;
  out.depth_used = depth;
  auto pool = multi_product_components(family, depth);
  auto pool_plus = multi_product_components(family, depth + 1);
  out.certified = pool_plus.size() == pool.size();
  if (!out.certified)
    for (const auto& c : pool_plus) {
      bool found = false;
      for (const auto& d : pool)
        if (d.key == c.key) found = true;
      if (!found) out.frontier.push_back(c.key);
    }
  for (const auto& Z : pool) {
    if (!Z.essential) continue;
    if (!is_symmetric(Z.to_base).symmetric) continue;
    bool principal = true;
    for (const auto& W : pool) {
      bool same_class = false;
      for (const auto& K : fiber_components(Z.to_base, W.to_base)) {
        if (!K.essential) continue;
        // no intersection subgroup sits properly inside Z with finite index
        auto ia = subgroup_index(K.to_a);
        if (ia.finite && ia.degree > 1) {
          principal = false;
          break;
        }
        if (ia.finite && ia.degree == 1) {
          auto ib = subgroup_index(K.to_b);
          if (ib.finite && ib.degree == 1) same_class = true;
        }
      }
      if (!principal) break;
      // components carrying the same subgroup class receive a morphism
      if (same_class && find_morphisms(Z.to_base, W.to_base).empty()) {
        principal = false;
        break;
      }
    }
    if (principal) out.reps.push_back(Z);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stability

struct StabilityViolation {
  int clause = 0;  // 1, 2 or 3
  int member_i = -1;
  int member_j = -1;
  std::string component_key;
  std::string detail;
};

struct StabilityReport {
  bool stable = true;
  int kappa = 0;  // Hausdorff bound over clause-3 components
  std::vector<StabilityViolation> violations;
};

namespace detail {

// directed Hausdorff distance from all vertices of K to a vertex subset
inline int hausdorff_to(const CubeComplex& K, const std::vector<int>& subset) {
  std::vector<int> dist(K.num_vertices, -1);
  std::vector<int> queue;
  for (int v : subset)
    if (dist[v] < 0) {
      dist[v] = 0;
      queue.push_back(v);
    }
  for (size_t i = 0; i < queue.size(); ++i)
    for (const auto& end : K.ends_at(queue[i])) {
      int w = K.vertex_of({end.edge, !end.head});
      if (dist[w] < 0) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
    }
  int m = 0;
  for (int d : dist) m = std::max(m, d);
  return m;
}

// smallest eccentricity over vertices (radius of the complex)
inline int center_radius(const CubeComplex& K) {
  int best = -1;
  for (int v = 0; v < K.num_vertices; ++v) {
    int ecc = 0;
    for (int d : bfs_distances(K, v)) ecc = std::max(ecc, d);
    if (best < 0 || ecc < best) best = ecc;
  }
  return std::max(best, 0);
}

}  // namespace detail

/// The three stability clauses for a family of local isometries over one
/// base. Contractible components count as received by the implicit trivial
/// member, contributing their center radius to kappa.
inline StabilityReport check_stable(const std::vector<FamilyMember>& family) {
  StabilityReport rep;
  for (int i = 0; i < static_cast<int>(family.size()); ++i) {
    auto sym = is_symmetric(family[i].map);
    if (!sym.symmetric) {
      rep.stable = false;
      rep.violations.push_back({1, i, -1, "", "member is not symmetric"});
    }
  }
  for (int i = 0; i < static_cast<int>(family.size()); ++i)
    for (int j = 0; j < static_cast<int>(family.size()); ++j) {
      if (i == j) continue;
      for (const auto& m : find_morphisms(family[i].map, family[j].map)) {
        if (is_isomorphism(m)) continue;
        auto idx = subgroup_index(m);
        if (idx.finite) {
          rep.stable = false;
          rep.violations.push_back({2, i, j, "",
                                    "proper factorization of finite index " +
                                        std::to_string(idx.degree)});
        }
        break;  // one morphism decides the clause for this pair
      }
    }
  for (int i = 0; i < static_cast<int>(family.size()); ++i)
    for (int j = i; j < static_cast<int>(family.size()); ++j) {
      for (const auto& K : fiber_components(family[i].map, family[j].map)) {
        if (K.to_a_iso || K.to_b_iso) continue;
        CombinatorialMap to_base = compose(family[i].map, K.to_a);
        if (!K.essential) {
          rep.kappa = std::max(rep.kappa, detail::center_radius(*K.complex));
          continue;
        }
        bool received = false;
        for (int k = 0; k < static_cast<int>(family.size()) && !received; ++k) {
          for (const auto& m : find_morphisms(family[k].map, to_base)) {
            auto idx = subgroup_index(m);
            if (idx.finite) {
              received = true;
              std::vector<int> image(m.vertex_map.begin(), m.vertex_map.end());
              rep.kappa = std::max(rep.kappa, detail::hausdorff_to(*K.complex, image));
              break;
            }
          }
        }
        if (!received) {
          rep.stable = false;
          rep.violations.push_back(
              {3, i, j, canonical_form(to_base), "no member factors through with finite index"});
        }
      }
    }
  return rep;
}

}  // namespace cubetop
