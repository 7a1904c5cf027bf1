#pragma once

// Shared helpers for the test suites: data paths, seeded randomness and a
// plain Gauss elimination used as an oracle against the Bareiss code.

#include <random>
#include <string>
#include <vector>

#include "hodgeloci/matrix.hpp"
#include "hodgeloci/rational.hpp"
#include "hodgeloci/torus.hpp"

namespace testing_support {

inline std::string data_path(const std::string& rel) { return std::string(HODGELOCI_DATA_DIR) + "/" + rel; }

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20260514);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random point of [0,1)^r with denominators up to max_den.
inline hodgeloci::WeightVector random_weights(std::size_t r, long max_den) {
  std::vector<hodgeloci::Rational> v;
  for (std::size_t i = 0; i < r; ++i) {
    const long d = uniform(1, max_den);
    v.emplace_back(uniform(0, d - 1), d);
  }
  return hodgeloci::WeightVector(std::move(v));
}

/// Random character of order dividing n with no trivial coordinate.
inline hodgeloci::Character random_nowhere_trivial_character(std::size_t r, long n) {
  std::vector<hodgeloci::RootOfUnity> c;
  for (std::size_t i = 0; i < r; ++i) c.push_back(hodgeloci::RootOfUnity::of(n, uniform(1, n - 1)));
  return hodgeloci::Character(std::move(c));
}

inline hodgeloci::Character random_character(std::size_t r, long n) {
  std::vector<hodgeloci::RootOfUnity> c;
  for (std::size_t i = 0; i < r; ++i) c.push_back(hodgeloci::RootOfUnity::of(n, uniform(0, n - 1)));
  return hodgeloci::Character(std::move(c));
}

/// Rank by textbook Gauss-Jordan with division, no fraction-free tricks.
template <class T>
std::size_t gauss_rank(std::vector<std::vector<T>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == T(0)) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == T(0)) continue;
      const T f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

template <class T>
std::vector<std::vector<T>> rows_of(const hodgeloci::Matrix<T>& m) {
  std::vector<std::vector<T>> out(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace testing_support
