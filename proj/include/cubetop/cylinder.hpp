#pragma once

#include "cubetop/morphism.hpp"

namespace cubetop {

/// Square symmetry as a signed permutation of the square's two coordinates.
/// Sides in coordinate terms: 0 = (axis1,-), 1 = (axis0,+), 2 = (axis1,+),
/// 3 = (axis0,-).
inline SignedPerm square_sym_to_perm(const SquareSym& s) {
  auto axis_sign = [](int side) {
    switch (side) {
      case 0: return std::pair<int, int>{1, -1};
      case 1: return std::pair<int, int>{0, 1};
      case 2: return std::pair<int, int>{1, 1};
      default: return std::pair<int, int>{0, -1};
    }
  };
  SignedPerm p = SignedPerm::identity(2);
  {
    auto [a, sg] = axis_sign(s.side_image(1));  // image of side (0,+)
    p.perm[0] = a;
    p.sign[0] = static_cast<int8_t>(sg);
  }
  {
    auto [a, sg] = axis_sign(s.side_image(2));  // image of side (1,+)
    p.perm[1] = a;
    p.sign[1] = static_cast<int8_t>(sg);
  }
  return p;
}

struct MappingCylinder {
  ComplexPtr complex;
  CombinatorialMap source_end;  // Y included at the free end
  CombinatorialMap target_end;  // X included at the attached end
  bool pi1_verified = false;    // the cylinder collapses onto the X copy
  std::string pi1_method;
};

namespace detail {

/// Free-face collapse of everything outside a marked subcomplex, top
/// dimension first. Returns true when only marked cells remain.
inline bool collapses_onto(const CubeComplex& C, const std::vector<bool>& keep_v,
                           const std::vector<bool>& keep_e, const std::vector<bool>& keep_s,
                           const std::vector<bool>& keep_h) {
  std::vector<bool> av(C.num_vertices, true), ae(C.edges.size(), true), as(C.squares.size(), true),
      ah(C.higher.size(), true);
  // (square, 3-cell) collapses
  auto square_in_cells = [&](int s) {
    int count = 0;
    for (int h = 0; h < static_cast<int>(C.higher.size()); ++h) {
      if (!ah[h]) continue;
      for (const auto& f : C.higher[h].facets)
        if (f.cell.dim == 2 && f.cell.index == s) ++count;
    }
    return count;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (int s = 0; s < static_cast<int>(C.squares.size()); ++s) {
      if (!as[s] || keep_s[s] || square_in_cells(s) != 1) continue;
      for (int h = 0; h < static_cast<int>(C.higher.size()); ++h) {
        if (!ah[h]) continue;
        bool uses = false;
        for (const auto& f : C.higher[h].facets)
          if (f.cell.dim == 2 && f.cell.index == s) uses = true;
        if (uses && !keep_h[h]) {
          ah[h] = false;
          as[s] = false;
          progress = true;
          break;
        }
      }
    }
  }
  for (int h = 0; h < static_cast<int>(C.higher.size()); ++h)
    if (ah[h] && !keep_h[h]) return false;
  // (edge, square) collapses
  auto edge_in_squares = [&](int e) {
    int count = 0;
    for (int s = 0; s < static_cast<int>(C.squares.size()); ++s) {
      if (!as[s]) continue;
      for (int j = 0; j < 4; ++j)
        if (C.squares[s].side[j].edge == e) ++count;
    }
    return count;
  };
  progress = true;
  while (progress) {
    progress = false;
    for (int e = 0; e < static_cast<int>(C.edges.size()); ++e) {
      if (!ae[e] || keep_e[e] || edge_in_squares(e) != 1) continue;
      for (int s = 0; s < static_cast<int>(C.squares.size()); ++s) {
        if (!as[s] || keep_s[s]) continue;
        bool uses = false;
        for (int j = 0; j < 4; ++j)
          if (C.squares[s].side[j].edge == e) uses = true;
        if (uses) {
          as[s] = false;
          ae[e] = false;
          progress = true;
          break;
        }
      }
    }
  }
  for (int s = 0; s < static_cast<int>(C.squares.size()); ++s)
    if (as[s] && !keep_s[s]) return false;
  // (vertex, edge) collapses
  auto vertex_in_edges = [&](int v) {
    int count = 0;
    for (int e = 0; e < static_cast<int>(C.edges.size()); ++e) {
      if (!ae[e]) continue;
      if (C.edges[e].tail == v) ++count;
      if (C.edges[e].head == v) ++count;
    }
    return count;
  };
  progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < C.num_vertices; ++v) {
      if (!av[v] || keep_v[v] || vertex_in_edges(v) != 1) continue;
      for (int e = 0; e < static_cast<int>(C.edges.size()); ++e) {
        if (!ae[e] || keep_e[e]) continue;
        if (C.edges[e].tail == v || C.edges[e].head == v) {
          ae[e] = false;
          av[v] = false;
          progress = true;
          break;
        }
      }
    }
  }
  for (int e = 0; e < static_cast<int>(C.edges.size()); ++e)
    if (ae[e] && !keep_e[e]) return false;
  for (int v = 0; v < C.num_vertices; ++v)
    if (av[v] && !keep_v[v]) return false;
  return true;
}

}  // namespace detail

/// Mapping cylinder of a local isometry f : Y -> X. Cells of X keep their
/// ids; Y cells, vertical edges, connecting squares and prisms follow.
inline MappingCylinder mapping_cylinder(const CombinatorialMap& f) {
  if (!check_local_isometry(f).pass)
    throw Error("NotLocalIsometry", "cylinder needs a local isometry");
  const auto& Y = *f.source;
  const auto& X = *f.target;
  if (!Y.higher.empty()) throw Error("UnsupportedDimension", "cylinder source of dimension <= 2");

  CubeComplex C;
  C.num_vertices = X.num_vertices + Y.num_vertices;
  auto yv = [&](int v) { return X.num_vertices + v; };
  C.edges = X.edges;
  int ye0 = static_cast<int>(C.edges.size());
  auto ye = [&](int e) { return ye0 + e; };
  for (const auto& e : Y.edges) C.edges.push_back({yv(e.tail), yv(e.head), e.label});
  int vert0 = static_cast<int>(C.edges.size());
  auto vert = [&](int v) { return vert0 + v; };
  for (int v = 0; v < Y.num_vertices; ++v)
    C.edges.push_back({yv(v), f.vertex_map[v], "|" });
  C.squares = X.squares;
  int ys0 = static_cast<int>(C.squares.size());
  auto ys = [&](int s) { return ys0 + s; };
  for (const auto& s : Y.squares) {
    SquareCell c;
    for (int j = 0; j < 4; ++j) c.side[j] = {ye(s.side[j].edge), s.side[j].rev};
    C.squares.push_back(c);
  }
  int cs0 = static_cast<int>(C.squares.size());
  auto cs = [&](int e) { return cs0 + e; };
  for (int e = 0; e < static_cast<int>(Y.edges.size()); ++e) {
    Dart im = f.dart_image({e, false});
    SquareCell c;
    c.side[0] = {ye(e), false};
    c.side[1] = {vert(Y.edges[e].head), false};
    c.side[2] = {im.edge, !im.rev};
    c.side[3] = {vert(Y.edges[e].tail), true};
    C.squares.push_back(c);
  }
  C.higher = X.higher;
  for (int s = 0; s < static_cast<int>(Y.squares.size()); ++s) {
    const auto& sq = Y.squares[s];
    HigherCell cell;
    cell.dim = 3;
    cell.facets.resize(6);
    // side facets: (axis,sign) -> boundary side of the square
    auto side_of = [](int axis, int sign) {
      if (axis == 1 && sign < 0) return 0;
      if (axis == 0 && sign > 0) return 1;
      if (axis == 1 && sign > 0) return 2;
      return 3;
    };
    for (int axis = 0; axis < 2; ++axis)
      for (int sg : {-1, 1}) {
        int j = side_of(axis, sg);
        const Dart& d = sq.side[j];
        // canonical in-plane direction of the side; + when it traverses the
        // edge forward (sides 0,1 run along the path, 2,3 against it)
        bool along = j == 0 || j == 1;
        SignedPerm p = SignedPerm::identity(2);
        p.sign[0] = static_cast<int8_t>((along != d.rev) ? 1 : -1);
        cell.facets[2 * axis + (sg > 0)] = {CellRef{2, cs(d.edge)}, p};
      }
    cell.facets[2 * 2 + 0] = {CellRef{2, ys(s)}, SignedPerm::identity(2)};
    cell.facets[2 * 2 + 1] = {CellRef{2, f.square_map[s].square},
                              square_sym_to_perm(f.square_map[s].sym)};
    C.higher.push_back(cell);
  }

  MappingCylinder out;
  out.complex = make_complex(std::move(C));
  require_valid(*out.complex);

  out.source_end.source = f.source;
  out.source_end.target = out.complex.get();
  for (int v = 0; v < Y.num_vertices; ++v) out.source_end.vertex_map.push_back(yv(v));
  for (int e = 0; e < static_cast<int>(Y.edges.size()); ++e)
    out.source_end.edge_map.push_back({ye(e), false});
  for (int s = 0; s < static_cast<int>(Y.squares.size()); ++s)
    out.source_end.square_map.push_back({ys(s), {}});

  out.target_end.source = f.target;
  out.target_end.target = out.complex.get();
  for (int v = 0; v < X.num_vertices; ++v) out.target_end.vertex_map.push_back(v);
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e)
    out.target_end.edge_map.push_back({e, false});
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s)
    out.target_end.square_map.push_back({s, {}});

  // the X end receives a deformation retraction; verified by free-face
  // collapse of everything outside the X copy
  const auto& CC = *out.complex;
  std::vector<bool> kv(CC.num_vertices, false), ke(CC.edges.size(), false),
      ks(CC.squares.size(), false), kh(CC.higher.size(), false);
  for (int v = 0; v < X.num_vertices; ++v) kv[v] = true;
  for (int e = 0; e < static_cast<int>(X.edges.size()); ++e) ke[e] = true;
  for (int s = 0; s < static_cast<int>(X.squares.size()); ++s) ks[s] = true;
  for (int h = 0; h < static_cast<int>(X.higher.size()); ++h) kh[h] = true;
  out.pi1_verified = detail::collapses_onto(CC, kv, ke, ks, kh);
  out.pi1_method = "collapse";
  return out;
}

}  // namespace cubetop
