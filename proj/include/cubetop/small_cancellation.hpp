#pragma once

#include "cubetop/ball.hpp"
#include "cubetop/fiber_ops.hpp"
#include "cubetop/todd_coxeter.hpp"
#include "cubetop/walls.hpp"

namespace cubetop {

struct Fraction {
  long num = 1;
  long den = 24;
};

inline Fraction parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw Error("MalformedInput", "fraction like 1/24 expected");
  Fraction f;
  f.num = std::stol(s.substr(0, slash));
  f.den = std::stol(s.substr(slash + 1));
  if (f.num <= 0 || f.den <= 0 || f.num >= f.den)
    throw Error("MalformedInput", "fraction must lie in (0, 1)");
  return f;
}

struct Cone {
  FamilyMember member;
  int grade = 1;
};

struct CubicalPresentation {
  ComplexPtr base;
  std::vector<Cone> cones;
};

// ---------------------------------------------------------------------------
// Fundamental group data of a graph or square complex

struct Pi1Presentation {
  int ngens = 0;                    // non-tree edges
  std::vector<GroupWord> relators;  // square boundaries
  std::vector<int> gen_of_edge;     // edge -> generator id or -1 for tree edges
  std::vector<int> tree_parent;     // vertex -> tree edge toward the root
};

inline Pi1Presentation pi1_presentation(const CubeComplex& X, int base) {
  Pi1Presentation out;
  out.gen_of_edge.assign(X.edges.size(), -2);
  out.tree_parent.assign(X.num_vertices, -1);
  std::vector<int> order{base};
  std::vector<bool> seen(X.num_vertices, false);
  seen[base] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (const auto& end : X.ends_at(v)) {
      int w = X.vertex_of({end.edge, !end.head});
      if (out.gen_of_edge[end.edge] != -2) continue;
      if (!seen[w]) {
        seen[w] = true;
        out.gen_of_edge[end.edge] = -1;  // tree edge
        out.tree_parent[w] = end.edge;
        order.push_back(w);
      }
    }
  }
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e)
    if (out.gen_of_edge[e] == -2) out.gen_of_edge[e] = out.ngens++;
  for (const auto& sq : X.squares) {
    GroupWord w;
    for (int j = 0; j < 4; ++j) {
      int g = out.gen_of_edge[sq.side[j].edge];
      if (g >= 0) w.push_back({g, sq.side[j].rev});
    }
    out.relators.push_back(w);
  }
  return out;
}

/// Rewrite an edge path (darts in X) into the free generators.
inline GroupWord rewrite_path(const Pi1Presentation& p, const std::vector<Dart>& path) {
  GroupWord w;
  for (const auto& d : path) {
    int g = p.gen_of_edge[d.edge];
    if (g >= 0) w.push_back({g, d.rev});
  }
  return w;
}

/// Loop words of the fundamental group of a connected complex mapped into X:
/// one word per non-tree edge of the domain, written in X's generators.
inline std::vector<GroupWord> pi1_image_words(const Pi1Presentation& p,
                                              const CombinatorialMap& f) {
  const auto& K = *f.source;
  std::vector<GroupWord> out;
  if (K.num_vertices == 0) return out;
  std::vector<int> parent_vertex(K.num_vertices, -1);
  std::vector<Dart> parent_dart(K.num_vertices);
  std::vector<bool> seen(K.num_vertices, false), tree(K.edges.size(), false);
  std::vector<int> order{0};
  seen[0] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (const auto& end : K.ends_at(v)) {
      int w = K.vertex_of({end.edge, !end.head});
      if (seen[w]) continue;
      seen[w] = true;
      tree[end.edge] = true;
      parent_vertex[w] = v;
      parent_dart[w] = {end.edge, end.head};  // dart from v to w
      order.push_back(w);
    }
  }
  auto path_from_root = [&](int v) {
    std::vector<Dart> path;
    while (parent_vertex[v] >= 0) {
      path.push_back(parent_dart[v]);
      v = parent_vertex[v];
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  for (int e = 0; e < static_cast<int>(K.edges.size()); ++e) {
    if (tree[e]) continue;
    std::vector<Dart> loop = path_from_root(K.edges[e].tail);
    loop.push_back({e, false});
    auto back = path_from_root(K.edges[e].head);
    for (auto it = back.rbegin(); it != back.rend(); ++it) loop.push_back({it->edge, !it->rev});
    std::vector<Dart> image;
    for (const auto& d : loop) image.push_back(f.dart_image(d));
    out.push_back(rewrite_path(p, image));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pieces

struct Piece {
  std::string kind;  // "cone" or "wall"
  int host = 0;      // cone index
  int other = -1;    // other cone index, or wall id
  ComplexPtr complex;
  CombinatorialMap to_host;
  int diameter = 0;        // intrinsic edge-metric diameter
  bool infinite = false;   // essential piece: unbounded in the cover
  bool bounded_mode = false;
};

/// Lower-grade cones of the subpresentation of cone i, as maps into Y_i.
inline std::vector<FamilyMember> subpresentation_cones(const CubicalPresentation& P, int i) {
  std::vector<FamilyMember> out;
  for (int j = 0; j < static_cast<int>(P.cones.size()); ++j) {
    if (P.cones[j].grade >= P.cones[i].grade) continue;
    for (const auto& K : fiber_components(P.cones[i].member.map, P.cones[j].member.map)) {
      FamilyMember m;
      m.domain = K.complex;
      m.map = K.to_a;  // into Y_i
      out.push_back(std::move(m));
    }
  }
  return out;
}

/// Cone-pieces and wall-pieces of one cone. Cone-pieces are the components
/// of the products with every cone excluding those that descend to
/// morphisms; wall-pieces come from carriers of walls not crossing the cone.
inline std::vector<Piece> enumerate_pieces(const CubicalPresentation& P, int i) {
  std::vector<Piece> out;
  bool graded_nontrivial = false;
  for (const auto& m : subpresentation_cones(P, i))
    if (detail::has_cycle_after_coring(*m.domain)) graded_nontrivial = true;
  const auto& host = P.cones[i].member;
  for (int j = 0; j < static_cast<int>(P.cones.size()); ++j) {
    for (const auto& K : fiber_components(P.cones[j].member.map, host.map)) {
      if (K.to_a_iso || K.to_b_iso) continue;  // descends to a morphism
      Piece p;
      p.kind = "cone";
      p.host = i;
      p.other = j;
      p.complex = K.complex;
      p.to_host = K.to_b;
      p.infinite = K.essential;
      p.diameter = K.essential ? -1 : graph_diameter(*K.complex);
      p.bounded_mode = graded_nontrivial;
      out.push_back(std::move(p));
    }
  }
  for (const auto& w : compute_walls(*P.base)) {
    Carrier car = build_carrier(*P.base, w);
    for (const auto& K : fiber_components(host.map, car.map)) {
      // the wall crosses this copy of the cone when a vertical edge appears
      bool crosses = false;
      for (const auto& ei : K.to_b.edge_map)
        if (car.vertical_edge[ei.edge]) crosses = true;
      if (crosses) continue;
      Piece p;
      p.kind = "wall";
      p.host = i;
      p.other = w.id;
      p.complex = K.complex;
      p.to_host = K.to_a;
      p.infinite = K.essential;
      p.diameter = K.essential ? -1 : graph_diameter(*K.complex);
      p.bounded_mode = graded_nontrivial;
      out.push_back(std::move(p));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Systole

struct SystoleResult {
  bool exact = false;        // value certified
  bool infinite = false;     // no essential loop exists
  bool inconclusive = false; // search or enumeration budget ran out
  int value = -1;            // when exact
  int bound = 0;             // searched up to this length
  bool bounded_mode = false; // nontrivial lower-grade cones present
};

namespace detail {

/// Shortest loop of the complex essential in the quotient killing the given
/// subgroup words, searched up to the bound. Uses coset enumeration for the
/// quotient and distances in the induced cover.
inline SystoleResult systole_with_quotient(const CubeComplex& Y, const Pi1Presentation& p,
                                           const std::vector<GroupWord>& killed, int bound,
                                           size_t coset_cap) {
  SystoleResult out;
  out.bound = bound;
  std::vector<GroupWord> relators = p.relators;
  relators.insert(relators.end(), killed.begin(), killed.end());
  auto order = group_order(std::max(p.ngens, 1), relators, coset_cap);
  if (!order) {
    out.inconclusive = true;
    return out;
  }
  if (*order == 1) {
    out.exact = true;
    out.infinite = true;  // everything dies in the quotient
    return out;
  }
  auto table = todd_coxeter(std::max(p.ngens, 1), relators, {}, coset_cap);
  CoverSpec spec;
  spec.base = &Y;
  spec.degree = *order;
  spec.edge_perm.resize(Y.edges.size());
  for (int e = 0; e < static_cast<int>(Y.edges.size()); ++e) {
    spec.edge_perm[e].resize(*order);
    int g = p.gen_of_edge[e];
    for (int q = 0; q < *order; ++q)
      spec.edge_perm[e][q] = g < 0 ? q : table->get(q, g, false);
  }
  auto cov = build_cover(spec);
  int best = -1;
  for (int v = 0; v < Y.num_vertices; ++v) {
    auto dist = bfs_distances(*cov.total, cov.vertex_id(v, 0));
    for (int q = 1; q < *order; ++q) {
      int d = dist[cov.vertex_id(v, q)];
      if (d >= 0 && (best < 0 || d < best)) best = d;
    }
  }
  if (best < 0) {
    out.exact = true;
    out.infinite = true;
  } else if (best <= bound) {
    out.exact = true;
    out.value = best;
  } else {
    out.inconclusive = true;  // shortest essential loop exceeds the bound
    out.value = best;
  }
  return out;
}

/// Shortest essential loop through developments of the universal cover.
inline SystoleResult systole_in_cover(const CubeComplex& Y, int bound, size_t cell_cap) {
  SystoleResult out;
  out.bound = bound;
  int best = -1;
  for (int v = 0; v < Y.num_vertices; ++v) {
    BallComplex ball = universal_cover_ball(Y, v, bound, cell_cap);
    for (int u = 0; u < ball.complex->num_vertices; ++u) {
      if (ball.projection.vertex_map[u] != v || ball.vertex_dist[u] == 0) continue;
      int d = ball.vertex_dist[u];
      if (best < 0 || d < best) best = d;
    }
  }
  if (best >= 0 && best <= bound) {
    out.exact = true;
    out.value = best;
  } else {
    // no second lift within the bound: the development is either complete
    // (simply connected) or every loop is longer
    bool complete = true;
    for (int v = 0; v < Y.num_vertices && complete; ++v) {
      BallComplex ball = universal_cover_ball(Y, v, bound, cell_cap);
      for (bool b : ball.vertex_boundary)
        if (b) complete = false;
    }
    if (complete) {
      out.exact = true;
      out.infinite = true;
    } else {
      out.inconclusive = true;
    }
  }
  return out;
}

}  // namespace detail

/// Systole of a cone relative to its subpresentation: the shortest closed
/// path essential after killing the lower-grade cones.
inline SystoleResult systole(const CubicalPresentation& P, int i, int bound,
                             size_t coset_cap = 1 << 16, size_t cell_cap = 1 << 20) {
  const auto& Y = *P.cones[i].member.domain;
  auto lower = subpresentation_cones(P, i);
  bool nontrivial = false;
  for (const auto& m : lower)
    if (detail::has_cycle_after_coring(*m.domain)) nontrivial = true;
  if (!nontrivial) {
    return detail::systole_in_cover(Y, bound, cell_cap);
  }
  Pi1Presentation p = pi1_presentation(Y, 0);
  std::vector<GroupWord> killed;
  for (const auto& m : lower)
    for (auto& w : pi1_image_words(p, m.map)) killed.push_back(std::move(w));
  SystoleResult out = detail::systole_with_quotient(Y, p, killed, bound, coset_cap);
  out.bounded_mode = true;
  return out;
}

// ---------------------------------------------------------------------------
// Small cancellation

struct ConeVerdict {
  int cone = 0;
  int max_piece_diameter = 0;  // -1 when some piece is infinite
  int piece_count = 0;
  SystoleResult systole;
  std::string verdict;  // pass, fail, inconclusive
  int witness_piece = -1;
  std::string note;
};

struct SCReport {
  std::string verdict = "pass";  // fail or inconclusive when any cone is
  Fraction alpha;
  std::vector<ConeVerdict> cones;
};

/// Piece diameters against the systole: every piece must be shorter than
/// alpha times the systole of its host cone's subpresentation.
inline SCReport check_small_cancellation(const CubicalPresentation& P, Fraction alpha,
                                         int systole_bound = 0) {
  SCReport rep;
  rep.alpha = alpha;
  for (int i = 0; i < static_cast<int>(P.cones.size()); ++i) {
    ConeVerdict cv;
    cv.cone = i;
    auto pieces = enumerate_pieces(P, i);
    cv.piece_count = static_cast<int>(pieces.size());
    int d = 0;
    for (int k = 0; k < static_cast<int>(pieces.size()); ++k) {
      if (pieces[k].infinite) {
        d = -1;
        cv.witness_piece = k;
        break;
      }
      if (pieces[k].diameter > d) {
        d = pieces[k].diameter;
        cv.witness_piece = k;
      }
    }
    cv.max_piece_diameter = d;
    // search far enough to certify d < alpha * systole
    int need = d < 0 ? systole_bound
                     : static_cast<int>((static_cast<long>(d) * alpha.den) / alpha.num + 1);
    int bound = std::max(need, systole_bound);
    cv.systole = systole(P, i, bound);
    if (d < 0) {
      // an unbounded piece fails against any finite systole
      if (cv.systole.infinite) {
        cv.verdict = "pass";
        cv.note = "unbounded piece in a cone with no essential loop";
      } else {
        cv.verdict = "fail";
      }
    } else if (cv.systole.infinite) {
      cv.verdict = "pass";
      cv.note = "no essential loop";
    } else if (cv.systole.exact) {
      bool ok = static_cast<long>(d) * alpha.den < alpha.num * static_cast<long>(cv.systole.value);
      cv.verdict = ok ? "pass" : "fail";
    } else if (cv.systole.inconclusive && cv.systole.value < 0) {
      cv.verdict = "inconclusive";
    } else {
      // no essential loop up to the certification bound
      cv.verdict = "pass";
      cv.note = "no essential loop within " + std::to_string(bound);
    }
    if (cv.verdict == "fail") rep.verdict = "fail";
    if (cv.verdict == "inconclusive" && rep.verdict == "pass") rep.verdict = "inconclusive";
    rep.cones.push_back(std::move(cv));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Liftable shells

struct ShellLedger {
  int cone = 0;
  std::string component;  // canonical form over the base
  bool iso = false;
  int diameter = -1;
  bool pi1_trivial = false;
  bool pi1_exact = true;
  std::string verdict;  // pass, fail, inconclusive
};

struct ShellReport {
  std::string verdict = "pass";
  std::vector<ShellLedger> components;
};

/// The liftable-shell dichotomy: every component of A against a cone either
/// maps isomorphically to the cone, or is small (at most half the systole)
/// with trivial image in the subpresentation quotient.
inline ShellReport check_liftable_shells(const FamilyMember& A, const CubicalPresentation& P,
                                         Fraction alpha = {1, 24}, int systole_bound = 24,
                                         size_t coset_cap = 1 << 16) {
  auto sc = check_small_cancellation(P, alpha, systole_bound);
  if (sc.verdict == "fail")
    throw Error("HypothesisFailure", "presentation is not small cancellation");
  ShellReport rep;
  for (int i = 0; i < static_cast<int>(P.cones.size()); ++i) {
    auto lower = subpresentation_cones(P, i);
    Pi1Presentation p = pi1_presentation(*P.cones[i].member.domain, 0);
    for (const auto& K : fiber_components(A.map, P.cones[i].member.map)) {
      ShellLedger led;
      led.cone = i;
      led.component = canonical_form(compose(A.map, K.to_a));
      if (K.to_b_iso) {
        led.iso = true;
        led.verdict = "pass";
        rep.components.push_back(std::move(led));
        continue;
      }
      led.diameter = K.essential ? -1 : graph_diameter(*K.complex);
      // half-systole bound
      bool small = false;
      if (led.diameter >= 0) {
        const auto& sv = sc.cones[i].systole;
        if (sv.infinite)
          small = true;
        else if (sv.exact)
          small = 2 * led.diameter <= sv.value;
        else {
          auto s2 = systole(P, i, 2 * led.diameter);
          small = s2.infinite || (!s2.exact && s2.inconclusive && s2.value < 0) ||
                  (s2.exact && 2 * led.diameter <= s2.value);
          small = small && !(s2.exact && 2 * led.diameter > s2.value);
        }
      }
      // triviality of the component in its induced presentation
      if (!K.essential) {
        led.pi1_trivial = true;
      } else if (lower.empty()) {
        led.pi1_trivial = false;
      } else {
        Pi1Presentation pk = pi1_presentation(*K.complex, 0);
        std::vector<GroupWord> rel = pk.relators;
        for (const auto& m : lower)
          for (const auto& L : fiber_components(K.to_b, m.map))
            for (auto& w : pi1_image_words(pk, L.to_a)) rel.push_back(std::move(w));
        auto order = group_order(std::max(pk.ngens, 1), rel, coset_cap);
        if (!order) {
          led.pi1_exact = false;
        } else {
          led.pi1_trivial = *order == 1;
        }
      }
      if (!led.pi1_exact) {
        led.verdict = "inconclusive";
      } else {
        led.verdict = (small && led.pi1_trivial) ? "pass" : "fail";
      }
      if (led.verdict == "fail") rep.verdict = "fail";
      if (led.verdict == "inconclusive" && rep.verdict == "pass") rep.verdict = "inconclusive";
      rep.components.push_back(std::move(led));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Helly conditions

struct HellyReport {
  bool injective = true;
  bool pairwise_connected = true;
  bool triple_intersection = true;
  // witnesses
  int injectivity_cone = -1;
  std::pair<int, int> pair_witness{-1, -1};
  std::array<int, 3> triple_witness{-1, -1, -1};
  bool pass() const { return injective && pairwise_connected && triple_intersection; }
};

/// Injectivity of the cones, connectivity of pairwise image intersections,
/// and the triple intersection property.
inline HellyReport check_helly(const std::vector<FamilyMember>& cones, const CubeComplex& X) {
  HellyReport rep;
  for (int i = 0; i < static_cast<int>(cones.size()); ++i)
    if (!is_injective_on_cells(cones[i].map)) {
      rep.injective = false;
      if (rep.injectivity_cone < 0) rep.injectivity_cone = i;
    }
  auto vertex_image = [&](int i) {
    std::set<int> s(cones[i].map.vertex_map.begin(), cones[i].map.vertex_map.end());
    return s;
  };
  auto edge_image = [&](int i) {
    std::set<int> s;
    for (const auto& e : cones[i].map.edge_map) s.insert(e.edge);
    return s;
  };
  for (int i = 0; i < static_cast<int>(cones.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(cones.size()); ++j) {
      std::set<int> vi = vertex_image(i), vj = vertex_image(j);
      std::set<int> ei = edge_image(i), ej = edge_image(j);
      std::vector<bool> keep(X.num_vertices, false);
      int count = 0;
      for (int v : vi)
        if (vj.count(v)) {
          keep[v] = true;
          ++count;
        }
      if (count == 0) continue;
      // connectivity within the intersection subcomplex
      std::set<int> common_edges;
      for (int e : ei)
        if (ej.count(e)) common_edges.insert(e);
      std::vector<int> first;
      for (int v = 0; v < X.num_vertices; ++v)
        if (keep[v]) first.push_back(v);
      // BFS over common cells
      std::map<int, int> comp;
      int c = 0;
      for (int v : first) {
        if (comp.count(v)) continue;
        std::vector<int> queue{v};
        comp[v] = c;
        for (size_t q = 0; q < queue.size(); ++q)
          for (int e : common_edges) {
            int t = X.edges[e].tail, h = X.edges[e].head;
            int other = -1;
            if (t == queue[q]) other = h;
            else if (h == queue[q]) other = t;
            else continue;
            if (!comp.count(other)) {
              comp[other] = c;
              queue.push_back(other);
            }
          }
        ++c;
      }
      if (c > 1) {
        rep.pairwise_connected = false;
        if (rep.pair_witness.first < 0) rep.pair_witness = {i, j};
      }
    }
  for (int i = 0; i < static_cast<int>(cones.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(cones.size()); ++j)
      for (int k = j + 1; k < static_cast<int>(cones.size()); ++k) {
        auto vi = vertex_image(i), vj = vertex_image(j), vk = vertex_image(k);
        auto meets = [](const std::set<int>& a, const std::set<int>& b) {
          for (int x : a)
            if (b.count(x)) return true;
          return false;
        };
        if (!meets(vi, vj) || !meets(vj, vk) || !meets(vi, vk)) continue;
        bool triple = false;
        for (int v : vi)
          if (vj.count(v) && vk.count(v)) triple = true;
        if (!triple) {
          rep.triple_intersection = false;
          if (rep.triple_witness[0] < 0) rep.triple_witness = {i, j, k};
        }
      }
  return rep;
}

}  // namespace cubetop
