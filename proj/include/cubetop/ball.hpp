#pragma once

#include "cubetop/morphism.hpp"

namespace cubetop {

/// Finite window on the universal cover: the ball of combinatorial radius r
/// around a lift of a base vertex, together with the projection. Interior
/// cells (those meeting a vertex of distance < r) develop exactly.
struct BallComplex {
  ComplexPtr complex;
  CombinatorialMap projection;
  int radius = 0;
  std::vector<int> vertex_dist;
  std::vector<bool> vertex_boundary;
  std::vector<bool> edge_boundary;
  std::vector<bool> square_boundary;
};

namespace detail {

struct BallBuilder {
  const CubeComplex& X;
  size_t cap;

  struct V {
    int image;
    int dist;
    bool alive = true;
    int repl = -1;  // forwarding pointer when folded away
  };
  struct E {
    int image;
    int tail, head;
    bool alive = true;
    int repl = -1;
  };
  struct S {
    int image;
    std::array<Dart, 4> side;  // darts over builder edges, rev as in the image
  };
  std::vector<V> verts;
  std::vector<E> edges;
  std::vector<S> squares;

  explicit BallBuilder(const CubeComplex& x, size_t c) : X(x), cap(c) {}

  int vfind(int v) {
    while (verts[v].repl >= 0) v = verts[v].repl;
    return v;
  }
  int efind(int e) {
    while (edges[e].repl >= 0) e = edges[e].repl;
    return e;
  }

  size_t live_cells() const {
    size_t n = squares.size();
    for (const auto& v : verts) n += v.alive;
    for (const auto& e : edges) n += e.alive;
    return n;
  }

  void check_cap() {
    if (live_cells() > cap) throw Error("BudgetExceeded", "ball development exceeded cell cap");
  }

  int new_vertex(int image, int dist) {
    verts.push_back({image, dist});
    check_cap();
    return static_cast<int>(verts.size()) - 1;
  }
  int new_edge(int image, int tail, int head) {
    edges.push_back({image, tail, head});
    check_cap();
    return static_cast<int>(edges.size()) - 1;
  }

  // lifted edge at vertex u with the given image end, if any
  std::optional<int> edge_at(int u, const EdgeEnd& end) {
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (!edges[e].alive || edges[e].image != end.edge) continue;
      int at = end.head ? vfind(edges[e].head) : vfind(edges[e].tail);
      if (at == u) return e;
    }
    return std::nullopt;
  }

  void fold() {
    bool changed = true;
    while (changed) {
      changed = false;
      // merge duplicate ends
      for (int u = 0; u < static_cast<int>(verts.size()) && !changed; ++u) {
        if (!verts[u].alive || verts[u].repl >= 0) continue;
        std::map<std::pair<int, bool>, int> seen;
        for (int e = 0; e < static_cast<int>(edges.size()) && !changed; ++e) {
          if (!edges[e].alive) continue;
          for (bool h : {false, true}) {
            int at = vfind(h ? edges[e].head : edges[e].tail);
            if (at != u) continue;
            auto key = std::make_pair(edges[e].image, h);
            auto [it, fresh] = seen.emplace(key, e);
            if (!fresh && efind(it->second) != efind(e)) {
              identify_edges(efind(it->second), efind(e));
              changed = true;
              break;
            }
          }
        }
      }
    }
  }

  void identify_vertices(int a, int b) {
    a = vfind(a);
    b = vfind(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    verts[b].alive = false;
    verts[b].repl = a;
    verts[a].dist = std::min(verts[a].dist, verts[b].dist);
  }

  void identify_edges(int a, int b) {
    a = efind(a);
    b = efind(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    identify_vertices(vfind(edges[a].tail), vfind(edges[b].tail));
    identify_vertices(vfind(edges[a].head), vfind(edges[b].head));
    edges[b].alive = false;
    edges[b].repl = a;
  }

  void recompute_dists(int base) {
    for (auto& v : verts)
      if (v.alive) v.dist = -1;
    verts[vfind(base)].dist = 0;
    std::vector<int> queue{vfind(base)};
    for (size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (!edges[e].alive) continue;
        int t = vfind(edges[e].tail), h = vfind(edges[e].head);
        int w = -1;
        if (t == u) w = h;
        else if (h == u) w = t;
        else continue;
        if (verts[w].dist < 0) {
          verts[w].dist = verts[u].dist + 1;
          queue.push_back(w);
        }
      }
    }
  }

  // lift the dart d of X starting at builder vertex u; creates cells as needed
  Dart lift_dart_from(int u, const Dart& d) {
    EdgeEnd start = X.out_end(d);
    if (auto e = edge_at(u, start)) return {*e, d.rev};
    int far = new_vertex(d.rev ? X.edges[d.edge].tail : X.edges[d.edge].head,
                         verts[u].dist + 1);
    int e = d.rev ? new_edge(d.edge, far, u) : new_edge(d.edge, u, far);
    return {e, d.rev};
  }

  int dart_head(const Dart& d) { return vfind(d.rev ? edges[d.edge].tail : edges[d.edge].head); }
  int dart_tail(const Dart& d) { return vfind(d.rev ? edges[d.edge].head : edges[d.edge].tail); }

  bool corner_covered(int u, int s, int i) {
    for (const auto& sq : squares) {
      if (sq.image != s) continue;
      if (dart_head(sq.side[i]) == u) return true;
    }
    return false;
  }

  // fill the lift of square s whose corner i (at head of side i) sits at u
  void fill_square(int u, int s, int i) {
    const auto& sq = X.squares[s];
    auto in_lift = edge_at(u, X.in_end(sq.side[i]));
    auto out_lift = edge_at(u, X.out_end(sq.side[(i + 1) % 4]));
    if (!in_lift || !out_lift) return;
    S rec;
    rec.image = s;
    rec.side[i] = {*in_lift, sq.side[i].rev};
    rec.side[(i + 1) % 4] = {*out_lift, sq.side[(i + 1) % 4].rev};
    // walk forward to lift side i+2
    int x = dart_head(rec.side[(i + 1) % 4]);
    rec.side[(i + 2) % 4] = lift_dart_from(x, sq.side[(i + 2) % 4]);
    // the last side must join y = head(side i+2) to z = tail(side i)
    int y = dart_head(rec.side[(i + 2) % 4]);
    int z = dart_tail(rec.side[i]);
    Dart last = sq.side[(i + 3) % 4];
    auto from_y = edge_at(y, X.out_end(last));
    auto into_z = edge_at(z, X.in_end(last));
    if (from_y && into_z) {
      if (efind(*from_y) != efind(*into_z)) identify_edges(efind(*from_y), efind(*into_z));
      rec.side[(i + 3) % 4] = {efind(*from_y), last.rev};
    } else if (from_y) {
      identify_vertices(dart_head(Dart{*from_y, last.rev}), z);
      rec.side[(i + 3) % 4] = {*from_y, last.rev};
    } else if (into_z) {
      identify_vertices(dart_tail(Dart{*into_z, last.rev}), y);
      rec.side[(i + 3) % 4] = {*into_z, last.rev};
    } else {
      int e = last.rev ? new_edge(last.edge, z, y) : new_edge(last.edge, y, z);
      rec.side[(i + 3) % 4] = {e, last.rev};
    }
    squares.push_back(rec);
    check_cap();
    fold();
  }
};

}  // namespace detail

inline BallComplex universal_cover_ball(const CubeComplex& X, int base, int r, size_t cell_cap) {
  if (!X.higher.empty())
    throw Error("UnsupportedDimension", "ball development handles dimension <= 2");
  if (!check_npc(X).pass) throw Error("NotNpc", "base complex is not nonpositively curved");
  if (base < 0 || base >= X.num_vertices) throw Error("UnknownCell", "no such vertex");

  detail::BallBuilder b(X, cell_cap);
  b.new_vertex(base, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    size_t before = b.squares.size() + b.edges.size() + b.verts.size();
    // expand full stars of interior vertices
    for (int u = 0; u < static_cast<int>(b.verts.size()); ++u) {
      if (!b.verts[u].alive || b.verts[u].repl >= 0 || b.verts[u].dist >= r) continue;
      for (const auto& end : X.ends_at(b.verts[u].image))
        if (!b.edge_at(u, end)) {
          int far = b.new_vertex(b.X.vertex_of({end.edge, !end.head}), b.verts[u].dist + 1);
          if (end.head)
            b.new_edge(end.edge, far, u);
          else
            b.new_edge(end.edge, u, far);
        }
    }
    b.fold();
    // fill square corners at interior vertices
    for (int u = 0; u < static_cast<int>(b.verts.size()); ++u) {
      if (!b.verts[u].alive || b.verts[u].repl >= 0 || b.verts[u].dist >= r) continue;
      for (int s = 0; s < static_cast<int>(X.squares.size()); ++s)
        for (int i = 0; i < 4; ++i) {
          if (X.head_of(X.squares[s].side[i]) != b.verts[u].image) continue;
          if (b.corner_covered(u, s, i)) continue;
          if (!b.edge_at(u, X.in_end(X.squares[s].side[i])) ||
              !b.edge_at(u, X.out_end(X.squares[s].side[(i + 1) % 4])))
            continue;
          b.fill_square(u, s, i);
        }
    }
    b.recompute_dists(0);
    if (b.squares.size() + b.edges.size() + b.verts.size() != before) changed = true;
  }

  // compact into a complex
  BallComplex out;
  out.radius = r;
  CubeComplex C;
  CombinatorialMap pr;
  pr.target = &X;
  std::vector<int> vmap(b.verts.size(), -1);
  for (int v = 0; v < static_cast<int>(b.verts.size()); ++v) {
    if (!b.verts[v].alive || b.verts[v].repl >= 0) continue;
    vmap[v] = C.num_vertices++;
    pr.vertex_map.push_back(b.verts[v].image);
    out.vertex_dist.push_back(b.verts[v].dist);
    out.vertex_boundary.push_back(b.verts[v].dist >= r);
  }
  std::vector<int> emap(b.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(b.edges.size()); ++e) {
    if (!b.edges[e].alive || b.edges[e].repl >= 0) continue;
    emap[e] = static_cast<int>(C.edges.size());
    C.edges.push_back({vmap[b.vfind(b.edges[e].tail)], vmap[b.vfind(b.edges[e].head)],
                       X.edges[b.edges[e].image].label});
    pr.edge_map.push_back({b.edges[e].image, false});
    bool interior = b.verts[b.vfind(b.edges[e].tail)].dist < r ||
                    b.verts[b.vfind(b.edges[e].head)].dist < r;
    out.edge_boundary.push_back(!interior);
  }
  for (const auto& sq : b.squares) {
    SquareCell c;
    bool interior = false;
    for (int j = 0; j < 4; ++j) {
      int be = b.efind(sq.side[j].edge);
      c.side[j] = {emap[be], sq.side[j].rev};
      int corner = sq.side[j].rev ? b.edges[be].head : b.edges[be].tail;
      if (b.verts[b.vfind(corner)].dist < r) interior = true;
    }
    C.squares.push_back(c);
    pr.square_map.push_back({sq.image, {}});
    out.square_boundary.push_back(!interior);
  }
  out.complex = make_complex(std::move(C));
  pr.source = out.complex.get();
  out.projection = std::move(pr);
  if (!validate_map(out.projection).empty())
    throw Error("InternalError", "ball projection is not combinatorial");
  return out;
}

}  // namespace cubetop
