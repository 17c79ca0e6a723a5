#pragma once

#include "cubetop/cube_complex.hpp"

namespace cubetop::shapes {

/// Circle with one vertex and one loop labeled "a".
inline CubeComplex circle(const std::string& label = "a") {
  CubeComplex X;
  X.num_vertices = 1;
  X.edges.push_back({0, 0, label});
  return X;
}

/// Cycle of length n with edges labeled `label` (a subdivided circle).
inline CubeComplex cyc(int n, const std::string& label = "a") {
  CubeComplex X;
  X.num_vertices = n;
  for (int i = 0; i < n; ++i) X.edges.push_back({i, (i + 1) % n, label});
  return X;
}

/// Cycle spelling out a word: labels[i] with an orientation flag.
inline CubeComplex cycle_word(const std::vector<std::pair<std::string, bool>>& word) {
  CubeComplex X;
  int n = static_cast<int>(word.size());
  X.num_vertices = n;
  for (int i = 0; i < n; ++i) {
    if (word[i].second)
      X.edges.push_back({(i + 1) % n, i, word[i].first});
    else
      X.edges.push_back({i, (i + 1) % n, word[i].first});
  }
  return X;
}

/// Wedge of loops at a single vertex.
inline CubeComplex wedge(const std::vector<std::string>& labels) {
  CubeComplex X;
  X.num_vertices = 1;
  for (const auto& l : labels) X.edges.push_back({0, 0, l});
  return X;
}

inline CubeComplex wedge2() { return wedge({"a", "b"}); }

/// Triangle graph with edges a, b, c so that a b c is a closed path.
inline CubeComplex c3() {
  CubeComplex X;
  X.num_vertices = 3;
  X.edges.push_back({0, 1, "a"});
  X.edges.push_back({1, 2, "b"});
  X.edges.push_back({2, 0, "c"});
  return X;
}

/// Torus: one vertex, loops a and b, square with boundary a b a' b'.
inline CubeComplex torus() {
  CubeComplex X;
  X.num_vertices = 1;
  X.edges.push_back({0, 0, "a"});
  X.edges.push_back({0, 0, "b"});
  X.squares.push_back({{Dart{0, false}, Dart{1, false}, Dart{0, true}, Dart{1, true}}});
  return X;
}

/// Two-square Moebius band. Its middle wall (dual to the rungs r0, r1) is
/// one-sided.
inline CubeComplex mobius() {
  CubeComplex X;
  X.num_vertices = 4;  // u0, u1, v0, v1
  enum { u0, u1, v0, v1 };
  X.edges.push_back({u0, u1, "b0"});  // 0
  X.edges.push_back({v0, v1, "t0"});  // 1
  X.edges.push_back({u1, v0, "b1"});  // 2
  X.edges.push_back({v1, u0, "t1"});  // 3
  X.edges.push_back({u0, v0, "r0"});  // 4
  X.edges.push_back({u1, v1, "r1"});  // 5
  X.squares.push_back({{Dart{0, false}, Dart{5, false}, Dart{1, true}, Dart{4, true}}});
  X.squares.push_back({{Dart{2, false}, Dart{4, true}, Dart{3, true}, Dart{5, true}}});
  return X;
}

/// Three squares around a central vertex: valid but not nonpositively curved
/// (the link at the center is an empty triangle).
inline CubeComplex corner3() {
  CubeComplex X;
  X.num_vertices = 7;  // center 0; spokes 1,2,3; outer 4,5,6
  X.edges.push_back({0, 1, "x"});   // 0
  X.edges.push_back({0, 2, "y"});   // 1
  X.edges.push_back({0, 3, "z"});   // 2
  X.edges.push_back({1, 4, "u0"});  // 3
  X.edges.push_back({2, 4, "w0"});  // 4
  X.edges.push_back({2, 5, "u1"});  // 5
  X.edges.push_back({3, 5, "w1"});  // 6
  X.edges.push_back({3, 6, "u2"});  // 7
  X.edges.push_back({1, 6, "w2"});  // 8
  X.squares.push_back({{Dart{0, false}, Dart{3, false}, Dart{4, true}, Dart{1, true}}});
  X.squares.push_back({{Dart{1, false}, Dart{5, false}, Dart{6, true}, Dart{2, true}}});
  X.squares.push_back({{Dart{2, false}, Dart{7, false}, Dart{8, true}, Dart{0, true}}});
  return X;
}

/// Triangle b0 b1 b2 with one square attached along b0 whose opposite side p
/// sticks out of the triangle at one endpoint. The wall through b0 is dual to
/// p, so it both crosses the triangle and osculates it. The complex itself is
/// special.
inline CubeComplex interosc() {
  CubeComplex X;
  X.num_vertices = 4;  // q0, q1, q2, y
  X.edges.push_back({0, 1, "b0"});  // 0
  X.edges.push_back({1, 2, "b1"});  // 1
  X.edges.push_back({2, 0, "b2"});  // 2
  X.edges.push_back({1, 3, "s"});   // 3
  X.edges.push_back({2, 3, "p"});   // 4  the pendant
  X.edges.push_back({0, 2, "r"});   // 5
  X.squares.push_back({{Dart{0, false}, Dart{3, false}, Dart{4, true}, Dart{5, true}}});
  return X;
}

/// Torus with both directions subdivided in two; special, nine walls merge
/// into three.
inline CubeComplex subdivided_torus() {
  CubeComplex X;
  X.num_vertices = 2;  // v0, v1
  X.edges.push_back({0, 0, "a0"});  // 0
  X.edges.push_back({1, 1, "a1"});  // 1
  X.edges.push_back({0, 1, "b0"});  // 2
  X.edges.push_back({1, 0, "b1"});  // 3
  X.squares.push_back({{Dart{0, false}, Dart{2, false}, Dart{1, true}, Dart{2, true}}});
  X.squares.push_back({{Dart{1, false}, Dart{3, false}, Dart{0, true}, Dart{3, true}}});
  return X;
}

/// Mapping torus of the rotation of a 3-cycle: a torus built from three
/// squares whose three horizontal edges lie on one wall.
inline CubeComplex rotation_torus() {
  CubeComplex X;
  X.num_vertices = 3;
  for (int j = 0; j < 3; ++j) X.edges.push_back({j, (j + 1) % 3, "b" + std::to_string(j)});
  for (int j = 0; j < 3; ++j) X.edges.push_back({j, (j + 1) % 3, "v" + std::to_string(j)});
  for (int j = 0; j < 3; ++j) {
    X.squares.push_back({{Dart{j, false}, Dart{3 + (j + 1) % 3, false},
                          Dart{(j + 1) % 3, true}, Dart{3 + j, true}}});
  }
  return X;
}

}  // namespace cubetop::shapes
