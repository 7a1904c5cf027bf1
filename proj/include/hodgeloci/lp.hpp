#pragma once

// Exact two-phase simplex over the rationals (Bland's rule), enough for
// feasibility, optimization and implicit-equality detection on the small
// polytopes of the character torus. Variables are nonnegative.

#include <optional>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/rational.hpp"

namespace hodgeloci::lp {

enum class Sense { le, ge, eq };

struct Row {
  std::vector<Rational> a;
  Sense sense = Sense::le;
  Rational b;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t nvars, const std::vector<Row>& rows) : n_(nvars) {
    const std::size_t m = rows.size();
    // column layout: original | slack/surplus (one per inequality) | artificial
    std::size_t slack_count = 0, art_count = 0;
    for (const auto& r : rows) {
      if (r.a.size() != nvars) throw PreconditionError("constraint length mismatch");
      const bool flip = r.b.sign() < 0;
      Sense s = r.sense;
      if (flip && s != Sense::eq) s = s == Sense::le ? Sense::ge : Sense::le;
      if (s != Sense::eq) ++slack_count;
      if (s != Sense::le) ++art_count;
    }
    slack0_ = n_;
    art0_ = n_ + slack_count;
    cols_ = art0_ + art_count;
    t_.assign(m, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(m, 0);
    std::size_t si = slack0_, ai = art0_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& r = rows[i];
      const bool flip = r.b.sign() < 0;
      Sense s = r.sense;
      if (flip && s != Sense::eq) s = s == Sense::le ? Sense::ge : Sense::le;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -r.a[j] : r.a[j];
      t_[i][cols_] = flip ? -r.b : r.b;
      if (s == Sense::le) {
        t_[i][si] = Rational(1);
        basis_[i] = si++;
      } else if (s == Sense::ge) {
        t_[i][si++] = Rational(-1);
        t_[i][ai] = Rational(1);
        basis_[i] = ai++;
      } else {
        t_[i][ai] = Rational(1);
        basis_[i] = ai++;
      }
    }
  }

  Solution solve(const std::vector<Rational>& objective, bool maximize) {
    // phase 1: minimize the sum of artificials (maximize its negative)
    if (art0_ < cols_) {
      std::vector<Rational> c(cols_, Rational(0));
      for (std::size_t j = art0_; j < cols_; ++j) c[j] = Rational(-1);
      if (run(c, cols_) != Status::optimal) throw InvariantError("phase one of the simplex is unbounded");
      if (current_value(c).sign() < 0) return {Status::infeasible, Rational(0), {}};
      drive_out_artificials();
    }
    std::vector<Rational> c(cols_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) c[j] = maximize ? objective[j] : -objective[j];
    const auto status = run(c, art0_);
    if (status == Status::unbounded) return {Status::unbounded, Rational(0), {}};
    Solution s;
    s.status = Status::optimal;
    s.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < n_) s.x[basis_[i]] = t_[i][cols_];
    s.value = Rational(0);
    for (std::size_t j = 0; j < n_; ++j) s.value += objective[j] * s.x[j];
    return s;
  }

 private:
  Rational current_value(const std::vector<Rational>& c) const {
    Rational v(0);
    for (std::size_t i = 0; i < basis_.size(); ++i) v += c[basis_[i]] * t_[i][cols_];
    return v;
  }

  // Maximizes c over the columns [0, allowed); Bland's rule avoids cycling.
  Status run(const std::vector<Rational>& c, std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = c[j];
        for (std::size_t i = 0; i < basis_.size(); ++i)
          if (!t_[i][j].is_zero()) reduced -= c[basis_[i]] * t_[i][j];
        if (reduced.sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return Status::optimal;
      std::size_t leave = basis_.size();
      Rational best;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        const Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == basis_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == basis_.size()) return Status::unbounded;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < art0_) continue;
      for (std::size_t j = 0; j < art0_; ++j) {
        if (!t_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
      // a row with no usable entry is redundant; its artificial stays at 0
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(std::size_t r, std::size_t col) {
    const Rational inv = t_[r][col].inverse();
    for (auto& x : t_[r]) x *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][col].is_zero()) continue;
      const Rational f = t_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = col;
  }

  std::size_t n_, slack0_ = 0, art0_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Optimizes objective . x over {x >= 0 : rows}.
inline Solution optimize(std::size_t nvars, const std::vector<Row>& rows, const std::vector<Rational>& objective,
                         bool maximize = true) {
  if (objective.size() != nvars) throw PreconditionError("objective length mismatch");
  return detail::Tableau(nvars, rows).solve(objective, maximize);
}

/// Some x >= 0 satisfying the rows, if any.
inline std::optional<std::vector<Rational>> feasible_point(std::size_t nvars, const std::vector<Row>& rows) {
  auto s = optimize(nvars, rows, std::vector<Rational>(nvars, Rational(0)));
  if (s.status != Status::optimal) return std::nullopt;
  return s.x;
}

}  // namespace hodgeloci::lp
