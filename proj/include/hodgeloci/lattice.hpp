#pragma once

// Integer lattices: row Hermite normal form with transform, integer kernels.

#include <utility>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/rational.hpp"

namespace hodgeloci {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix to_int_matrix(const std::vector<std::vector<long>>& m) {
  IntMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Integer> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return r;
}

inline std::vector<std::vector<long>> to_long_matrix(const IntMatrix& m) {
  std::vector<std::vector<long>> r;
  for (const auto& row : m) {
    std::vector<long> v;
    for (const auto& x : row) {
      if (!x.fits_slong_p()) throw PreconditionError("lattice entry exceeds machine integer range");
      v.push_back(x.get_si());
    }
    r.push_back(std::move(v));
  }
  return r;
}

struct HermiteResult {
  IntMatrix form;       // H = U * M, echelon, positive pivots, reduced above pivots
  IntMatrix transform;  // unimodular U
  std::size_t rank = 0;
};

/// Row-style Hermite normal form of an m x n integer matrix.
inline HermiteResult hermite_normal_form(IntMatrix a, std::size_t cols) {
  const std::size_t m = a.size();
  IntMatrix u(m, std::vector<Integer>(m, Integer(0)));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
  auto sub_row = [&](std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) a[target][j] -= q * a[source][j];
    for (std::size_t j = 0; j < m; ++j) u[target][j] -= q * u[source][j];
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m; ++col) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (a[i][col] == 0) continue;
        if (best == m || abs(a[i][col]) < abs(a[best][col])) best = i;
      }
      if (best == m) break;
      std::swap(a[best], a[row]);
      std::swap(u[best], u[row]);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
        sub_row(i, row, q);
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0) {
      for (auto& x : a[row]) x = -x;
      for (auto& x : u[row]) x = -x;
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
      sub_row(i, row, q);
    }
    ++row;
  }
  return {std::move(a), std::move(u), row};
}

/// Basis (in Hermite form) of the saturated lattice {x in Z^n : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t n) {
  // Work on A^T: U A^T = H, rows of U facing zero rows of H span the kernel.
  IntMatrix at(n, std::vector<Integer>(a.size(), Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) at[j][i] = a[i][j];
  const auto h = hermite_normal_form(at, a.size());
  IntMatrix basis(h.transform.begin() + static_cast<long>(h.rank), h.transform.end());
  if (basis.empty()) return basis;
  auto reduced = hermite_normal_form(basis, n);
  reduced.form.resize(reduced.rank);
  return reduced.form;
}

}  // namespace hodgeloci
