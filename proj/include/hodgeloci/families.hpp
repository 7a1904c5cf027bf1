#pragma once

// The shipped example geometries: arrangements of the worked families and a
// small corpus of presentations.

#include <string>
#include <vector>

#include "hodgeloci/arrangement.hpp"
#include "hodgeloci/presentation.hpp"

namespace hodgeloci::families {

/// r + 1 lines (1 : i : i^2), i = 1..r+1, no three concurrent; the last is
/// at infinity.
inline Arrangement generic_lines(std::size_t r) {
  std::vector<std::vector<long>> h;
  for (long i = 1; i <= static_cast<long>(r) + 1; ++i) h.push_back({1, i, i * i});
  return Arrangement(2, h, r);
}

/// Triangle x, y, z with cevians x - y, y - z, x - z, plus a transversal
/// line 2x + 3y + 7z at infinity (index 6).
inline Arrangement ceva() {
  return Arrangement(2, std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {1, 0, -1}, {2, 3, 7}}, 6);
}

/// Cone in P^3 over r + 1 generic lines: planes (1 : i : i^2 : 0) through
/// (0:0:0:1), and w = 0 at infinity (index r + 1).
inline Arrangement generic_cone(std::size_t r) {
  std::vector<std::vector<long>> h;
  for (long i = 1; i <= static_cast<long>(r) + 1; ++i) h.push_back({1, i, i * i, 0});
  h.push_back({0, 0, 0, 1});
  return Arrangement(3, h, r + 1);
}

/// D_{8,4}: x +- y, y +- z, z +- w, w +- x, meeting four at a time in the
/// points (+-1 : +-1 : +-1 : 1); x + 2y + 3z + 5w at infinity (index 8).
inline Arrangement d84() {
  Arrangement a(3,
                std::vector<std::vector<long>>{{1, -1, 0, 0}, {1, 1, 0, 0}, {0, 1, -1, 0}, {0, 1, 1, 0}, {0, 0, 1, -1},
                                               {0, 0, 1, 1}, {-1, 0, 0, 1}, {1, 0, 0, 1}, {1, 2, 3, 5}},
                8);
  // the base points of the net; the coordinate points also carry four planes
  std::vector<ProjectiveVector> base;
  for (long x : {1, -1})
    for (long y : {1, -1})
      for (long z : {1, -1}) base.push_back({Integer(x), Integer(y), Integer(z), Integer(1)});
  a.set_base_locus(std::move(base));
  return a;
}

/// Free group of rank r (P^1 minus r + 1 points).
inline GroupPresentation free_group(std::size_t r) { return GroupPresentation(r, {}, {}, 1 - static_cast<long>(r)); }

/// <a, b | aba = bab>, H_1 = Z generated by the meridian.
inline GroupPresentation trefoil() { return GroupPresentation(2, {{1, 2, 1, -2, -1, -2}}, {{1}, {1}}, 0); }

/// <a, b | a w = w b>, w = b a^-1 b^-1 a.
inline GroupPresentation figure_eight() {
  return GroupPresentation(2, {{1, 2, -1, -2, 1, -2, -1, 2, 1, -2}}, {{1}, {1}}, 0);
}

/// 2-skeleton of the r-torus: generators x_i and relators [x_i, x_j]; the
/// complement of r + 1 generic lines has this homotopy type.
inline GroupPresentation torus_skeleton(std::size_t r) {
  std::vector<Word> rel;
  for (int i = 1; i <= static_cast<int>(r); ++i)
    for (int j = i + 1; j <= static_cast<int>(r); ++j) rel.push_back({i, j, -i, -j});
  return GroupPresentation::with_complex_euler(r, std::move(rel));
}

}  // namespace hodgeloci::families
