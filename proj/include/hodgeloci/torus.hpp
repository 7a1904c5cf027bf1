#pragma once

// The unitary character torus: its fundamental domain U = [0,1)^r, half-open
// polytopes cut out of U by integer affine functionals, and translated
// subtori {x : x^m = tau}.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hodgeloci/cyclotomic.hpp"
#include "hodgeloci/errors.hpp"
#include "hodgeloci/lattice.hpp"
#include "hodgeloci/lp.hpp"
#include "hodgeloci/matrix.hpp"
#include "hodgeloci/rational.hpp"

namespace hodgeloci {

/// A point of U: every coordinate in [0, 1).
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> alphas) : a_(std::move(alphas)) {
    for (const auto& x : a_)
      if (x.sign() < 0 || x >= Rational(1)) throw PreconditionError("weight " + x.str() + " outside [0,1)");
  }
  /// Reduces arbitrary rationals into U.
  static WeightVector reduced(const std::vector<Rational>& v) {
    std::vector<Rational> r;
    for (const auto& x : v) r.push_back(x.frac());
    return WeightVector(std::move(r));
  }
  std::size_t size() const { return a_.size(); }
  const Rational& operator[](std::size_t i) const { return a_[i]; }
  const std::vector<Rational>& alphas() const { return a_; }
  Rational sum() const {
    Rational s(0);
    for (const auto& x : a_) s += x;
    return s;
  }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> a_;
};

/// Unitary character of finite order, coordinates stored as roots of unity.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<RootOfUnity> coords) : x_(std::move(coords)) {}
  static Character trivial(std::size_t r) { return Character(std::vector<RootOfUnity>(r)); }

  std::size_t size() const { return x_.size(); }
  const RootOfUnity& operator[](std::size_t i) const { return x_[i]; }
  const std::vector<RootOfUnity>& coords() const { return x_; }
  long order() const {
    long n = 1;
    for (const auto& c : x_) n = std::lcm(n, c.order());
    return n;
  }
  std::vector<CyclotomicNumber> values() const {
    std::vector<CyclotomicNumber> v;
    for (const auto& c : x_) v.push_back(c.value());
    return v;
  }
  bool is_trivial() const {
    for (const auto& c : x_)
      if (!c.is_one()) return false;
    return true;
  }
  /// chi^m
  RootOfUnity monomial(const std::vector<long>& m) const {
    if (m.size() != x_.size()) throw PreconditionError("exponent vector has wrong length");
    Rational angle(0);
    for (std::size_t i = 0; i < m.size(); ++i) angle += x_[i].angle() * Rational(m[i]);
    return RootOfUnity(angle);
  }
  /// The unique log in U.
  WeightVector log() const {
    std::vector<Rational> a;
    for (const auto& c : x_) a.push_back(c.angle());
    return WeightVector(std::move(a));
  }
  Character operator*(const Character& o) const {
    if (o.size() != size()) throw PreconditionError("characters of different rank");
    std::vector<RootOfUnity> v;
    for (std::size_t i = 0; i < size(); ++i) v.push_back(x_[i] * o.x_[i]);
    return Character(std::move(v));
  }
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character& a, const Character& b) { return a.x_ <=> b.x_; }

 private:
  std::vector<RootOfUnity> x_;
};

inline Character exp_map(const WeightVector& u) {
  std::vector<RootOfUnity> v;
  for (const auto& a : u.alphas()) v.emplace_back(a);
  return Character(std::move(v));
}

/// All characters of order dividing n on Z^r, in lexicographic order of logs.
inline std::vector<Character> characters_of_order_dividing(std::size_t r, long n) {
  std::vector<Character> out;
  std::vector<long> k(r, 0);
  while (true) {
    std::vector<RootOfUnity> v;
    for (long ki : k) v.push_back(RootOfUnity::of(n, ki));
    out.emplace_back(std::move(v));
    std::size_t i = r;
    while (i > 0 && k[i - 1] == n - 1) k[--i] = 0;
    if (i == 0) break;
    ++k[i - 1];
  }
  return out;
}

/// L(u) = sum coeffs_i u_i + shift
struct LinearFunctional {
  std::vector<long> coeffs;
  Rational shift;

  Rational operator()(const std::vector<Rational>& u) const {
    if (u.size() != coeffs.size()) throw PreconditionError("functional evaluated at a point of wrong dimension");
    Rational s = shift;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) s += Rational(coeffs[i]) * u[i];
    return s;
  }
  Rational operator()(const WeightVector& u) const { return (*this)(u.alphas()); }
  /// Range of L over the closed unit cube.
  std::pair<Rational, Rational> range_on_cube() const {
    Rational lo = shift, hi = shift;
    for (long c : coeffs) (c < 0 ? lo : hi) += Rational(c);
    return {lo, hi};
  }
  static LinearFunctional coordinate(std::size_t r, std::size_t i) {
    LinearFunctional f{std::vector<long>(r, 0), Rational(0)};
    f.coeffs[i] = 1;
    return f;
  }
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// lower (<|<=) L (<|<=) upper, either bound optional.
struct Constraint {
  LinearFunctional functional;
  std::optional<Rational> lower;
  bool lower_strict = false;
  std::optional<Rational> upper;
  bool upper_strict = false;

  bool satisfied_by(const Rational& v) const {
    if (lower && (lower_strict ? !(v > *lower) : v < *lower)) return false;
    if (upper && (upper_strict ? !(v < *upper) : v > *upper)) return false;
    return true;
  }
  static Constraint equality(LinearFunctional f, const Rational& value) {
    return {std::move(f), value, false, value, false};
  }
  /// s - 1 < L <= s
  static Constraint upper_closed_cell(LinearFunctional f, const Rational& s) {
    return {std::move(f), s - Rational(1), true, s, false};
  }
  /// s <= L < s + 1
  static Constraint lower_closed_cell(LinearFunctional f, const Rational& s) {
    return {std::move(f), s, false, s + Rational(1), true};
  }
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Intersection of U with half-open constraints.
struct Polytope {
  std::size_t dim = 0;
  std::vector<Constraint> constraints;

  bool contains(const WeightVector& u) const {
    if (u.size() != dim) throw PreconditionError("polytope membership: dimension mismatch");
    for (const auto& c : constraints) {
      if (c.functional.coeffs.size() != dim) throw PreconditionError("polytope constraint has wrong dimension");
      if (!c.satisfied_by(c.functional(u))) return false;
    }
    return true;
  }

  /// A rational point of the polytope (inside U), or nothing when empty.
  std::optional<WeightVector> witness() const;
  bool is_empty() const { return !witness().has_value(); }

  friend bool operator==(const Polytope&, const Polytope&) = default;
};

inline bool polytope_membership(const Polytope& p, const WeightVector& u) { return p.contains(u); }

namespace detail {

// LP rows for the polytope in variables alpha_1..alpha_r (plus t when
// with_t): each strict inequality a.x < b becomes a.x + t <= b, so that
// max t > 0 certifies a point. Without t, strict rows are closed.
inline std::vector<lp::Row> polytope_rows(const Polytope& p, bool with_t) {
  const std::size_t r = p.dim;
  std::vector<lp::Row> rows;
  auto add = [&](std::vector<Rational> a, lp::Sense s, Rational b, bool strict) {
    if (with_t) a.push_back(strict ? Rational(1) : Rational(0));
    rows.push_back({std::move(a), s, std::move(b)});
  };
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> a(r, Rational(0));
    a[i] = Rational(1);
    add(a, lp::Sense::le, Rational(1), true);
  }
  for (const auto& c : p.constraints) {
    if (c.functional.coeffs.size() != r) throw PreconditionError("polytope constraint has wrong dimension");
    std::vector<Rational> a;
    for (long x : c.functional.coeffs) a.emplace_back(x);
    if (c.lower) {
      // L >= lower  <=>  -a.x <= shift - lower
      std::vector<Rational> neg;
      for (const auto& x : a) neg.push_back(-x);
      add(neg, lp::Sense::le, c.functional.shift - *c.lower, c.lower_strict);
    }
    if (c.upper) add(a, lp::Sense::le, *c.upper - c.functional.shift, c.upper_strict);
  }
  if (with_t) {
    std::vector<Rational> a(r + 1, Rational(0));
    a[r] = Rational(1);
    rows.push_back({std::move(a), lp::Sense::le, Rational(1)});
  }
  return rows;
}

}  // namespace detail

inline std::optional<WeightVector> Polytope::witness() const {
  const auto rows = detail::polytope_rows(*this, true);
  std::vector<Rational> obj(dim + 1, Rational(0));
  obj[dim] = Rational(1);
  const auto s = lp::optimize(dim + 1, rows, obj, true);
  if (s.status != lp::Status::optimal || s.value.sign() <= 0) return std::nullopt;
  std::vector<Rational> x(s.x.begin(), s.x.begin() + static_cast<long>(dim));
  return WeightVector(std::move(x));
}

struct SubtorusEquation {
  std::vector<long> m;
  RootOfUnity tau;
  friend bool operator==(const SubtorusEquation&, const SubtorusEquation&) = default;
};

/// {x in (C^*)^r : x^m = tau for every equation}, equations in Hermite form.
class TranslatedSubtorus {
 public:
  TranslatedSubtorus() = default;
  TranslatedSubtorus(std::size_t dim, const std::vector<SubtorusEquation>& equations) : dim_(dim) {
    IntMatrix m;
    for (const auto& e : equations) {
      if (e.m.size() != dim) throw PreconditionError("subtorus equation has wrong length");
      std::vector<Integer> row;
      for (long x : e.m) row.emplace_back(x);
      m.push_back(std::move(row));
    }
    const auto h = hermite_normal_form(m, dim);
    for (std::size_t k = 0; k < h.form.size(); ++k) {
      Rational angle(0);
      for (std::size_t j = 0; j < equations.size(); ++j) angle += equations[j].tau.angle() * Rational(h.transform[k][j]);
      const RootOfUnity tau(angle);
      if (k >= h.rank) {
        if (!tau.is_one()) throw PreconditionError("inconsistent subtorus equations (empty locus)");
        continue;
      }
      std::vector<long> row;
      for (const auto& x : h.form[k]) {
        if (!x.fits_slong_p()) throw PreconditionError("subtorus exponent out of range");
        row.push_back(x.get_si());
      }
      eq_.push_back({std::move(row), tau});
    }
  }
  static TranslatedSubtorus whole(std::size_t dim) { return TranslatedSubtorus(dim, {}); }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<SubtorusEquation>& equations() const { return eq_; }
  /// Dimension of the locus as a variety.
  std::size_t dimension() const { return dim_ - eq_.size(); }

  bool contains(const Character& chi) const {
    if (chi.size() != dim_) throw PreconditionError("subtorus membership: dimension mismatch");
    for (const auto& e : eq_)
      if (!(chi.monomial(e.m) == e.tau)) return false;
    return true;
  }

  friend bool operator==(const TranslatedSubtorus&, const TranslatedSubtorus&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<SubtorusEquation> eq_;
};

inline bool subtorus_membership(const TranslatedSubtorus& t, const Character& chi) { return t.contains(chi); }

inline long torsion_translation_order(const TranslatedSubtorus& t) {
  long n = 1;
  for (const auto& e : t.equations()) n = std::lcm(n, e.tau.order());
  return n;
}

/// Rows (a, b) with a.alpha = b describing the affine hull of the polytope.
/// A point of the polytope may be supplied to save one LP.
inline std::vector<std::pair<std::vector<Rational>, Rational>> affine_hull_equations(
    const Polytope& p, const std::optional<WeightVector>& known_point = std::nullopt) {
  const auto point = known_point ? known_point : p.witness();
  if (!point || !p.contains(*point)) throw PreconditionError("affine hull of an empty polytope");
  const auto rows = detail::polytope_rows(p, false);
  std::vector<lp::Row> closed = rows;
  // also alpha >= 0, which the simplex imposes implicitly
  for (std::size_t i = 0; i < p.dim; ++i) {
    std::vector<Rational> a(p.dim, Rational(0));
    a[i] = Rational(-1);
    closed.push_back({std::move(a), lp::Sense::le, Rational(0)});
  }
  auto value = [](const lp::Row& row, const std::vector<Rational>& x) {
    Rational v(0);
    for (std::size_t i = 0; i < row.a.size(); ++i)
      if (!row.a[i].is_zero()) v += row.a[i] * x[i];
    return v;
  };
  // A row with slack at any point of the closure is not an implicit equality.
  std::vector<bool> slack(closed.size(), false);
  auto mark = [&](const std::vector<Rational>& x) {
    for (std::size_t k = 0; k < closed.size(); ++k)
      if (!slack[k] && value(closed[k], x) < closed[k].b) slack[k] = true;
  };
  mark(point->alphas());
  std::vector<std::pair<std::vector<Rational>, Rational>> eqs;
  for (std::size_t k = 0; k < closed.size(); ++k) {
    if (slack[k]) continue;
    // a.x <= b is an implicit equality iff min a.x = b over the closure
    const auto s = lp::optimize(p.dim, rows, closed[k].a, false);
    if (s.status != lp::Status::optimal) throw InvariantError("affine hull LP failed on a nonempty polytope");
    if (s.value == closed[k].b) {
      eqs.emplace_back(closed[k].a, closed[k].b);
    } else {
      mark(std::vector<Rational>(s.x.begin(), s.x.begin() + static_cast<long>(p.dim)));
    }
  }
  return eqs;
}

/// exp of the affine space anchor + span(directions); directions are
/// rational vectors of length r (possibly none).
inline TranslatedSubtorus exponentiate_affine_span(std::size_t r, const std::vector<std::vector<Rational>>& directions,
                                                   const std::vector<Rational>& anchor) {
  if (anchor.size() != r) throw PreconditionError("anchor has wrong dimension");
  IntMatrix lattice;
  if (directions.empty()) {
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Integer> row(r, Integer(0));
      row[i] = 1;
      lattice.push_back(std::move(row));
    }
  } else {
    IntMatrix dir;
    for (const auto& v : directions) {
      if (v.size() != r) throw PreconditionError("direction has wrong dimension");
      Integer den = 1;
      for (const auto& x : v) den = lcm(den, x.denominator());
      std::vector<Integer> row;
      for (const auto& x : v) row.push_back(x.numerator() * (den / x.denominator()));
      dir.push_back(std::move(row));
    }
    lattice = integer_kernel(dir, r);
  }
  std::vector<SubtorusEquation> out;
  for (const auto& row : lattice) {
    SubtorusEquation eq;
    Rational value(0);
    for (std::size_t j = 0; j < r; ++j) {
      if (!row[j].fits_slong_p()) throw PreconditionError("subtorus exponent out of range");
      eq.m.push_back(row[j].get_si());
      value += Rational(row[j]) * anchor[j];
    }
    eq.tau = RootOfUnity(value);
    out.push_back(std::move(eq));
  }
  return TranslatedSubtorus(r, out);
}

/// Exponentiated affine hull of a nonempty polytope, anchored at a point of it.
inline TranslatedSubtorus zariski_closure_of_polytope(const Polytope& p, const WeightVector& anchor) {
  if (!p.contains(anchor)) {
    if (p.is_empty()) throw PreconditionError("Zariski closure of an empty polytope");
    throw PreconditionError("anchor does not lie in the polytope");
  }
  const std::size_t r = p.dim;
  const auto eqs = affine_hull_equations(p, anchor);
  if (eqs.empty()) return TranslatedSubtorus::whole(r);
  RationalMatrix e(eqs.size(), r);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) e(i, j) = eqs[i].first[j];
  return exponentiate_affine_span(r, kernel(e), anchor.alphas());
}

}  // namespace hodgeloci
