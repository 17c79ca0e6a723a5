#pragma once

#include "cubetop/fiber_ops.hpp"
#include "cubetop/gog.hpp"

namespace cubetop {

// ---------------------------------------------------------------------------
// Height

struct HeightResult {
  bool certified = false;
  int height = 0;
  // canonical form of a maximizing intersection component over the base
  std::string witness;
};

/// Height of the subgroup carried by a compact core over a graph: the
/// largest number of pairwise distinct cosets whose conjugates intersect in
/// an infinite subgroup. Computed by iterated fiber products keeping
/// components whose coordinates stay pairwise distinct.
inline HeightResult height(const CombinatorialMap& f, int budget) {
  HeightResult out;
  struct Tuple {
    ComplexPtr complex;
    CombinatorialMap to_base;
    std::vector<std::vector<int>> coord;  // coordinate -> component vertex -> Y vertex
  };
  const auto& Y = *f.source;
  if (!detail::has_cycle_after_coring(Y)) {
    out.certified = true;
    out.height = 0;
    return out;
  }
  std::vector<Tuple> level;
  {
    Tuple t;
    t.complex = make_complex(Y);
    t.to_base = f;
    t.to_base.source = t.complex.get();
    std::vector<int> id(Y.num_vertices);
    for (int v = 0; v < Y.num_vertices; ++v) id[v] = v;
    t.coord = {id};
    level.push_back(std::move(t));
  }
  out.height = 1;
  out.witness = canonical_form(f);
  for (int h = 2; h <= budget + 1; ++h) {
    std::vector<Tuple> next;
    std::set<std::string> seen;
    for (const auto& t : level) {
      for (const auto& K : fiber_components(t.to_base, f)) {
        if (!K.essential) continue;
        // the new coordinate must differ from every old one somewhere
        bool distinct = true;
        for (const auto& c : t.coord)
          if (c[K.vertex_pair[0].first] == K.vertex_pair[0].second) distinct = false;
        if (!distinct) continue;
        Tuple n;
        n.complex = K.complex;
        n.to_base = compose(t.to_base, K.to_a);
        for (const auto& c : t.coord) {
          std::vector<int> nc(K.complex->num_vertices);
          for (int v = 0; v < K.complex->num_vertices; ++v) nc[v] = c[K.to_a.vertex_map[v]];
          n.coord.push_back(std::move(nc));
        }
        n.coord.push_back(K.to_b.vertex_map);
        std::string key = canonical_form(n.to_base);
        if (seen.insert(key).second) next.push_back(std::move(n));
      }
    }
    if (next.empty()) {
      out.certified = true;
      return out;
    }
    out.height = h;
    out.witness = canonical_form(next.front().to_base);
    level = std::move(next);
    if (h == budget + 1) break;
  }
  out.certified = false;  // ran out of budget with intersections still alive
  return out;
}

// ---------------------------------------------------------------------------
// Depth

struct DepthResult {
  bool certified = false;
  int depth = 0;
  std::vector<std::string> chain;  // conjugacy keys, smallest subgroup first
  std::vector<int> class_counts;   // closure size per round
};

/// Longest strictly increasing chain of intersections of conjugates of the
/// family. The commensurable variant allows finite members and finite-index
/// steps; the plain variant requires an infinite bottom and infinite-index
/// steps.
inline DepthResult depth(const std::vector<SubgroupRep>& family, bool commensurable, int budget) {
  DepthResult out;
  std::map<std::string, SubgroupRep> classes;
  for (const auto& rep : family) classes.emplace(conjugacy_key(rep), rep);
  bool stabilized = false;
  for (int round = 0; round < budget && !stabilized; ++round) {
    stabilized = true;
    auto snapshot = classes;
    for (const auto& [ka, A] : snapshot)
      for (const auto& [kb, B] : snapshot) {
        if (ka > kb) continue;
        if (A.trivial() || B.trivial()) continue;
        for (const auto& K : fiber_components(A.immersion, B.immersion)) {
          SubgroupRep raw;
          raw.core = K.complex;
          raw.immersion = compose(A.immersion, K.to_a);
          SubgroupRep C = core_of(raw);
          std::string key = conjugacy_key(C);
          if (classes.emplace(key, std::move(C)).second) stabilized = false;
        }
      }
    out.class_counts.push_back(static_cast<int>(classes.size()));
  }
  out.certified = stabilized;
  // longest chain in the proper-containment order
  std::vector<std::string> keys;
  std::vector<SubgroupRep> reps;
  for (auto& [k, r] : classes) {
    if (!commensurable && r.trivial()) continue;
    keys.push_back(k);
    reps.push_back(r);
  }
  int n = static_cast<int>(keys.size());
  std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!conj_contained(reps[i], reps[j]) || conj_contained(reps[j], reps[i])) continue;
      if (!commensurable) {
        // require an infinite-index step
        if (reps[i].trivial()) continue;
        auto ms = find_morphisms(reps[i].immersion, reps[j].immersion);
        if (!ms.empty() && subgroup_index(ms.front()).finite) continue;
      }
      step[i][j] = true;
    }
  std::vector<int> best(n, 1), nxt(n, -1);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (step[i][j] && best[j] + 1 > best[i]) {
          best[i] = best[j] + 1;
          nxt[i] = j;
          improved = true;
        }
  }
  for (int i = 0; i < n; ++i) {
    if (best[i] > out.depth) {
      out.depth = best[i];
      out.chain.clear();
      for (int j = i; j >= 0; j = nxt[j]) {
        out.chain.push_back(keys[j]);
        if (nxt[j] < 0) break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stature closure

struct TransectionClass {
  int vertex = 0;
  std::string key;
  SubgroupRep rep;
  bool lowest = false;
  int depth_cost = 0;
  int radius_cost = 0;
};

struct StatureResult {
  bool finite = false;     // certified: closure stabilized under unbudgeted ops
  bool exceeded = false;   // budgeted closure still growing
  std::vector<TransectionClass> classes;
  std::vector<int> class_counts;  // classes with cost <= (k, k), k = 1..
  int depth_budget = 0;
  int radius_budget = 0;
};

namespace detail {

struct StatureState {
  // (vertex, key) -> class record
  std::map<std::pair<int, std::string>, TransectionClass> classes;

  bool add(int vertex, SubgroupRep rep, int d, int r) {
    if (rep.trivial()) return false;
    if (!has_cycle_after_coring(*rep.core)) return false;
    std::string key = conjugacy_key(rep);
    auto it = classes.find({vertex, key});
    if (it == classes.end()) {
      classes.emplace(std::pair{vertex, key},
                      TransectionClass{vertex, key, std::move(rep), false, d, r});
      return true;
    }
    if (d < it->second.depth_cost || r < it->second.radius_cost) {
      it->second.depth_cost = std::min(it->second.depth_cost, d);
      it->second.radius_cost = std::min(it->second.radius_cost, r);
      return true;
    }
    return false;
  }
};

inline SubgroupRep attachment_rep(const GogEdge& e, bool iota_end) {
  const CombinatorialMap& att = iota_end ? e.iota : e.tau;
  SubgroupRep raw;
  raw.core = e.space;
  raw.immersion = att;
  return core_of(raw);
}

/// Transfers a class across an edge: intersect with the near attachment
/// image, then read the component off through the far attachment.
inline std::vector<SubgroupRep> transfer_across(const TransectionClass& cls, const GogEdge& e,
                                                bool enter_iota) {
  std::vector<SubgroupRep> out;
  const CombinatorialMap& near = enter_iota ? e.iota : e.tau;
  const CombinatorialMap& far = enter_iota ? e.tau : e.iota;
  for (const auto& K : fiber_components(cls.rep.immersion, near)) {
    if (!K.essential) continue;
    SubgroupRep raw;
    raw.core = K.complex;
    raw.immersion = compose(far, K.to_b);
    out.push_back(core_of(raw));
  }
  return out;
}

}  // namespace detail

inline StatureResult stature(const GraphOfComplexes& G, int depth_budget, int radius_budget) {
  validate_gog(G);
  for (const auto& v : G.vertices)
    if (!v.space->squares.empty() || !v.space->higher.empty())
      throw Error("UnsupportedDimension", "exact stature needs graph vertex spaces");
  StatureResult out;
  out.depth_budget = depth_budget;
  out.radius_budget = radius_budget;
  detail::StatureState st;
  for (const auto& e : G.edges) {
    st.add(e.iota_vertex, detail::attachment_rep(e, true), 0, 0);
    st.add(e.tau_vertex, detail::attachment_rep(e, false), 0, 0);
  }
  auto run_round = [&](int dcap, int rcap) {
    bool changed = false;
    auto snapshot = st.classes;
    for (const auto& [ka, A] : snapshot)
      for (const auto& [kb, B] : snapshot) {
        if (A.vertex != B.vertex || ka > kb) continue;
        int d = std::max(A.depth_cost, B.depth_cost) + 1;
        int r = std::max(A.radius_cost, B.radius_cost);
        if (d > dcap) continue;
        for (auto& C : all_essential_intersections(A.rep, B.rep))
          changed |= st.add(A.vertex, std::move(C), d, r);
      }
    for (const auto& [k, A] : snapshot)
      for (int ei = 0; ei < static_cast<int>(G.edges.size()); ++ei) {
        const auto& e = G.edges[ei];
        for (bool enter_iota : {true, false}) {
          int near_v = enter_iota ? e.iota_vertex : e.tau_vertex;
          int far_v = enter_iota ? e.tau_vertex : e.iota_vertex;
          if (A.vertex != near_v) continue;
          if (A.radius_cost + 1 > rcap) continue;
          for (auto& C : detail::transfer_across(A, e, enter_iota))
            changed |= st.add(far_v, std::move(C), A.depth_cost, A.radius_cost + 1);
        }
      }
    return changed;
  };
  while (run_round(depth_budget, radius_budget)) {
  }
  // certification: one unbudgeted round from the fixed point
  size_t before = st.classes.size();
  run_round(depth_budget + 1, radius_budget + 1);
  if (st.classes.size() == before) {
    out.finite = true;
  } else {
    out.exceeded = true;
  }
  for (int k = 1; k <= std::min(depth_budget, radius_budget); ++k) {
    int count = 0;
    for (const auto& [key, c] : st.classes)
      if (c.depth_cost <= k && c.radius_cost <= k) ++count;
    out.class_counts.push_back(count);
  }
  for (auto& [key, c] : st.classes) out.classes.push_back(c);
  // lowest flags: no other class at the same vertex sits properly inside
  for (auto& c : out.classes) {
    c.lowest = true;
    for (const auto& d : out.classes) {
      if (d.vertex != c.vertex || d.key == c.key) continue;
      if (conj_contained(d.rep, c.rep) && !conj_contained(c.rep, d.rep)) c.lowest = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Big trees

struct BigTreeNode {
  int gog_vertex = 0;
  std::string key;
  SubgroupRep rep;
  int parent = -1;
  int via_edge = -1;
  int depth = 0;
};

struct BigTreeRecord {
  int seed_edge = 0;
  std::string stab_key;     // class of the pointwise stabilizer at the seed end
  std::vector<BigTreeNode> nodes;
  bool maximal_certified = false;
  int radius = 0;
  bool lowest = false;
};

struct BigTreeResult {
  std::vector<BigTreeRecord> records;
  bool class_budget_exceeded = false;
};

/// Orbit representatives of big-trees: grow the fixed tree of each seed edge
/// stabilizer by adjoining adjacent edges that preserve it, up to the radius
/// budget. Preserved edges at a node are counted through the components of
/// the fiber product with the attachment image.
inline BigTreeResult enumerate_big_trees(const GraphOfComplexes& G, int radius_budget,
                                         int class_budget) {
  validate_gog(G);
  BigTreeResult out;
  for (int seed = 0; seed < static_cast<int>(G.edges.size()); ++seed) {
    const auto& e = G.edges[seed];
    SubgroupRep r_iota = detail::attachment_rep(e, true);
    if (!detail::has_cycle_after_coring(*r_iota.core)) continue;  // finite stabilizer
    BigTreeRecord rec;
    rec.seed_edge = seed;
    rec.stab_key = conjugacy_key(r_iota);
    rec.radius = radius_budget;
    rec.maximal_certified = true;
    SubgroupRep r_tau = detail::attachment_rep(e, false);
    rec.nodes.push_back({e.iota_vertex, conjugacy_key(r_iota), r_iota, -1, seed, 0});
    rec.nodes.push_back({e.tau_vertex, conjugacy_key(r_tau), r_tau, 0, seed, 0});
    // slot expectations: node 0 entered through (seed, iota), node 1 through
    // (seed, tau)
    std::vector<std::pair<int, bool>> entered{{seed, true}, {seed, false}};
    for (size_t n = 0; n < rec.nodes.size(); ++n) {
      if (rec.nodes[n].depth >= radius_budget) {
        // growth beyond the budget leaves the record open
        for (int ei = 0; ei < static_cast<int>(G.edges.size()); ++ei)
          for (bool enter_iota : {true, false}) {
            int near_v = enter_iota ? G.edges[ei].iota_vertex : G.edges[ei].tau_vertex;
            if (rec.nodes[n].gog_vertex != near_v) continue;
            int expected = (entered[n] == std::make_pair(ei, enter_iota)) ? 1 : 0;
            int preserved = 0;
            for (const auto& K :
                 fiber_components(rec.nodes[n].rep.immersion,
                                  enter_iota ? G.edges[ei].iota : G.edges[ei].tau)) {
              if (!K.essential) continue;
              auto idx = subgroup_index(K.to_a);
              if (idx.finite && idx.degree == 1) ++preserved;
            }
            if (preserved > expected) rec.maximal_certified = false;
          }
        continue;
      }
      for (int ei = 0; ei < static_cast<int>(G.edges.size()); ++ei)
        for (bool enter_iota : {true, false}) {
          const auto& ge = G.edges[ei];
          int near_v = enter_iota ? ge.iota_vertex : ge.tau_vertex;
          int far_v = enter_iota ? ge.tau_vertex : ge.iota_vertex;
          if (rec.nodes[n].gog_vertex != near_v) continue;
          int expected = (entered[n] == std::make_pair(ei, enter_iota)) ? 1 : 0;
          int preserved = 0;
          for (const auto& K : fiber_components(rec.nodes[n].rep.immersion,
                                                enter_iota ? ge.iota : ge.tau)) {
            if (!K.essential) continue;
            auto idx = subgroup_index(K.to_a);
            if (!idx.finite || idx.degree != 1) continue;
            ++preserved;
            if (preserved <= expected) continue;
            SubgroupRep raw;
            raw.core = K.complex;
            raw.immersion = compose(enter_iota ? ge.tau : ge.iota, K.to_b);
            SubgroupRep far_rep = core_of(raw);
            rec.nodes.push_back({far_v, conjugacy_key(far_rep), far_rep,
                                 static_cast<int>(n), ei, rec.nodes[n].depth + 1});
            entered.push_back({ei, !enter_iota});
          }
        }
    }
    out.records.push_back(std::move(rec));
    if (static_cast<int>(out.records.size()) > class_budget) {
      out.class_budget_exceeded = true;
      return out;
    }
  }
  // orbit dedupe: records whose node tags meet are translates of each other
  auto tags = [](const BigTreeRecord& r) {
    std::set<std::pair<int, std::string>> t;
    for (const auto& n : r.nodes) t.insert({n.gog_vertex, n.key});
    return t;
  };
  std::vector<BigTreeRecord> unique;
  for (auto& r : out.records) {
    bool dup = false;
    auto tr = tags(r);
    for (const auto& u : unique) {
      for (const auto& t : tags(u))
        if (tr.count(t)) dup = true;
      if (dup) break;
    }
    if (!dup) unique.push_back(std::move(r));
  }
  out.records = std::move(unique);
  // lowest flags via stabilizer containment at shared vertices
  for (auto& r : out.records) {
    r.lowest = true;
    for (const auto& u : out.records) {
      if (&u == &r) continue;
      for (const auto& nu : u.nodes)
        for (const auto& nr : r.nodes) {
          if (nu.gog_vertex != nr.gog_vertex || nu.key == nr.key) continue;
          if (conj_contained(nu.rep, nr.rep) && !conj_contained(nr.rep, nu.rep))
            r.lowest = false;
        }
    }
  }
  return out;
}

}  // namespace cubetop
