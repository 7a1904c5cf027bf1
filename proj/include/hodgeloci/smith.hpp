#pragma once

// Smith normal form over the PID K[t, 1/t] and the homology of short chain
// complexes of free K[t, 1/t]-modules.

#include <utility>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/laurent.hpp"
#include "hodgeloci/matrix.hpp"

namespace hodgeloci {

using LaurentMatrix = Matrix<Laurent1>;

struct SmithForm {
  // Diagonal entries d_0 | d_1 | ... of length min(rows, cols), normalized;
  // zero entries come last.
  std::vector<Laurent1> diagonal;
  std::size_t rank = 0;
  // A * q is row-equivalent to the diagonal form; q_inv = q^{-1}.
  LaurentMatrix q;
  LaurentMatrix q_inv;
};

namespace detail {

class SmithReducer {
 public:
  explicit SmithReducer(LaurentMatrix a)
      : a_(std::move(a)), q_(LaurentMatrix::identity(a_.cols())), q_inv_(LaurentMatrix::identity(a_.cols())) {}

  SmithForm run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!move_smallest_to(t)) break;
      while (true) {
        clear_column(t);
        if (!clear_row(t)) continue;
        if (enforce_divisibility(t)) break;
      }
    }
    SmithForm out;
    out.rank = t;
    for (std::size_t i = 0; i < std::min(m, n); ++i) out.diagonal.push_back(a_(i, i).normalized());
    out.q = std::move(q_);
    out.q_inv = std::move(q_inv_);
    return out;
  }

 private:
  bool move_smallest_to(std::size_t t) {
    std::size_t bi = a_.rows(), bj = a_.cols();
    long best = -1;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const auto& x = a_(i, j);
        if (x.is_zero()) continue;
        if (best < 0 || x.span() < best) {
          best = x.span();
          bi = i;
          bj = j;
        }
      }
    if (best < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Eliminates below the pivot; on a nonzero remainder, moves it to the pivot and repeats.
  void clear_column(std::size_t t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t).is_zero()) continue;
        const auto q = divmod(a_(i, t), a_(t, t)).first;
        for (std::size_t j = t; j < a_.cols(); ++j) a_(i, j) -= q * a_(t, j);
        if (!a_(i, t).is_zero()) {
          swap_rows(t, i);
          dirty = true;
        }
      }
    }
  }

  // Returns false if the column became dirty again.
  bool clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j).is_zero()) continue;
      const auto q = divmod(a_(t, j), a_(t, t)).first;
      add_col_multiple(j, t, -q);
      if (!a_(t, j).is_zero()) {
        swap_cols(t, j);
        return false;
      }
    }
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (!a_(i, t).is_zero()) return false;
    return true;
  }

  // Pivot must divide the rest of the submatrix; otherwise fold the offending row in.
  bool enforce_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, t).divides(a_(i, j))) continue;
        for (std::size_t k = t; k < a_.cols(); ++k) a_(t, k) += a_(i, k);
        return false;
      }
    return true;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    for (std::size_t i = 0; i < q_.rows(); ++i) std::swap(q_(i, j), q_(i, k));
    for (std::size_t i = 0; i < q_inv_.cols(); ++i) std::swap(q_inv_(j, i), q_inv_(k, i));
  }
  // column j += c * column t
  void add_col_multiple(std::size_t j, std::size_t t, const Laurent1& c) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (!a_(i, t).is_zero()) a_(i, j) += c * a_(i, t);
    for (std::size_t i = 0; i < q_.rows(); ++i)
      if (!q_(i, t).is_zero()) q_(i, j) += c * q_(i, t);
    for (std::size_t i = 0; i < q_inv_.cols(); ++i)
      if (!q_inv_(j, i).is_zero()) q_inv_(t, i) -= c * q_inv_(j, i);
  }

  LaurentMatrix a_;
  LaurentMatrix q_;
  LaurentMatrix q_inv_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const LaurentMatrix& a) { return detail::SmithReducer(a).run(); }

/// Normalized invariant factors of a one-variable Laurent matrix, length
/// min(rows, cols), forming a divisibility chain (zeros last).
inline std::vector<Laurent1> elementary_divisors_univariate(const LaurentMatrix& a) {
  return smith_normal_form(a).diagonal;
}

/// Finitely generated K[t, 1/t]-module: free rank plus nonunit torsion factors.
struct ModuleStructure {
  std::size_t free_rank = 0;
  std::vector<Laurent1> torsion;
  /// Product of the torsion factors (1 when torsion-free).
  Laurent1 order() const {
    Laurent1 p(1);
    for (const auto& d : torsion) p *= d;
    return p.normalized();
  }
};

/// Cokernel of a presentation matrix (generators = rows).
inline ModuleStructure cokernel_structure(const LaurentMatrix& a) {
  ModuleStructure out;
  if (a.cols() == 0) {
    out.free_rank = a.rows();
    return out;
  }
  const auto s = smith_normal_form(a);
  out.free_rank = a.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (!s.diagonal[i].is_unit()) out.torsion.push_back(s.diagonal[i]);
  return out;
}

/// Homology H_0, H_1, H_2 of C_2 --d2--> C_1 --d1--> C_0 (column convention:
/// d1 is dim C_0 x dim C_1, d2 is dim C_1 x dim C_2, d1 d2 = 0).
inline std::vector<ModuleStructure> chain_homology(const LaurentMatrix& d1, const LaurentMatrix& d2) {
  const std::size_t n1 = d1.cols();
  if (d2.rows() != n1) throw PreconditionError("chain complex dimensions do not compose");
  if (!(d1 * d2).is_zero()) throw InvariantError("d1 * d2 != 0");
  std::vector<ModuleStructure> h(3);
  h[0] = cokernel_structure(d1);

  std::size_t rank1 = 0;
  LaurentMatrix q_inv = LaurentMatrix::identity(n1);
  if (d1.rows() > 0 && n1 > 0) {
    auto s = smith_normal_form(d1);
    rank1 = s.rank;
    q_inv = std::move(s.q_inv);
  }
  // ker d1 has basis given by columns rank1.. of q; im d2 in those coordinates:
  const auto image = q_inv * d2;
  const std::size_t k = n1 - rank1;
  LaurentMatrix sub(k, d2.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d2.cols(); ++j) sub(i, j) = image(rank1 + i, j);
  for (std::size_t i = 0; i < rank1; ++i)
    for (std::size_t j = 0; j < d2.cols(); ++j)
      if (!image(i, j).is_zero()) throw InvariantError("image of d2 leaves ker d1");
  h[1] = cokernel_structure(sub);

  std::size_t rank2 = 0;
  if (d2.rows() > 0 && d2.cols() > 0) rank2 = smith_normal_form(d2).rank;
  h[2].free_rank = d2.cols() - rank2;
  return h;
}

}  // namespace hodgeloci
