#pragma once

#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hodgeloci/cyclotomic.hpp"
#include "hodgeloci/errors.hpp"
#include "hodgeloci/upoly.hpp"

namespace hodgeloci {

using CPoly = UPoly<CyclotomicNumber>;

/// Univariate Laurent polynomial t^low * p(t) with p(0) != 0, coefficients in
/// a cyclotomic field. K[t, 1/t] is Euclidean with norm = span (high - low).
class Laurent1 {
 public:
  Laurent1() = default;
  Laurent1(const CyclotomicNumber& c) : poly_(c.is_zero() ? CPoly() : CPoly::constant(c)) {}  // NOLINT
  Laurent1(long c) : Laurent1(CyclotomicNumber(c)) {}                                         // NOLINT
  Laurent1(long low, const CPoly& p) : low_(low), poly_(p) { normalize(); }

  static Laurent1 monomial(const CyclotomicNumber& c, long exponent) { return Laurent1(exponent, CPoly::constant(c)); }
  static Laurent1 t() { return monomial(CyclotomicNumber(1), 1); }
  /// Monic-normalized class representative from integer coefficients listed from t^0 upward.
  static Laurent1 from_coefficients(const std::vector<long>& coeffs, long low = 0) {
    std::vector<CyclotomicNumber> v(coeffs.begin(), coeffs.end());
    return Laurent1(low, CPoly(std::move(v)));
  }

  bool is_zero() const { return poly_.is_zero(); }
  bool is_unit() const { return !is_zero() && poly_.degree() == 0; }
  long low() const { return low_; }
  long high() const { return low_ + poly_.degree(); }
  long span() const { return is_zero() ? -1 : poly_.degree(); }
  const CPoly& poly() const { return poly_; }

  CyclotomicNumber coefficient(long exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return CyclotomicNumber(0);
    return poly_.coeff(static_cast<std::size_t>(exponent - low_));
  }

  /// Representative of the associate class: no negative exponents, nonzero
  /// constant term, leading coefficient 1. Zero stays zero.
  Laurent1 normalized() const {
    if (is_zero()) return *this;
    return Laurent1(0, poly_.monic());
  }
  /// Unit u with *this = u * normalized().
  Laurent1 unit_part() const {
    if (is_zero()) throw PreconditionError("unit part of zero");
    return monomial(poly_.leading(), low_);
  }
  Laurent1 inverse_unit() const {
    if (!is_unit()) throw PreconditionError("inverse of a non-unit Laurent polynomial");
    return monomial(CyclotomicNumber(1) / poly_.leading(), -low_);
  }

  CyclotomicNumber eval(const CyclotomicNumber& x) const {
    if (is_zero()) return CyclotomicNumber(0);
    return poly_.eval(x) * x.pow(low_);
  }
  /// p(s t)
  Laurent1 scaled(const CyclotomicNumber& s) const {
    if (is_zero()) return *this;
    return Laurent1(low_, poly_.scaled(s)) * monomial(s.pow(low_), 0);
  }

  Laurent1 operator-() const {
    Laurent1 r = *this;
    r.poly_ = -poly_;
    return r;
  }
  friend Laurent1 operator+(const Laurent1& a, const Laurent1& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long low = std::min(a.low_, b.low_);
    return Laurent1(low, a.shifted_poly(low) + b.shifted_poly(low));
  }
  friend Laurent1 operator-(const Laurent1& a, const Laurent1& b) { return a + (-b); }
  friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
    if (a.is_zero() || b.is_zero()) return Laurent1();
    return Laurent1(a.low_ + b.low_, a.poly_ * b.poly_);
  }
  Laurent1& operator+=(const Laurent1& o) { return *this = *this + o; }
  Laurent1& operator-=(const Laurent1& o) { return *this = *this - o; }
  Laurent1& operator*=(const Laurent1& o) { return *this = *this * o; }
  friend bool operator==(const Laurent1& a, const Laurent1& b) {
    return a.poly_ == b.poly_ && (a.is_zero() || a.low_ == b.low_);
  }

  /// a = q b + r with span(r) < span(b).
  friend std::pair<Laurent1, Laurent1> divmod(const Laurent1& a, const Laurent1& b) {
    if (b.is_zero()) throw PreconditionError("Laurent division by zero");
    if (a.is_zero()) return {Laurent1(), Laurent1()};
    auto [q, r] = divmod(a.poly_, b.poly_);
    return {Laurent1(a.low_ - b.low_, q), Laurent1(a.low_, r)};
  }
  bool divides(const Laurent1& other) const { return divmod(other, *this).second.is_zero(); }
  /// Exact quotient; b must divide a.
  friend Laurent1 operator/(const Laurent1& a, const Laurent1& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvariantError("inexact Laurent division");
    return q;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = high(); e >= low_; --e) {
      const auto c = coefficient(e);
      if (c.is_zero()) continue;
      std::string cs = c.str();
      bool negative = c.is_rational() && c.as_rational().sign() < 0;
      if (negative) cs = (-c).str();
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const bool unit_coeff = cs == "1";
      if (e == 0) {
        os << cs;
      } else {
        if (!unit_coeff) os << cs << "*";
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  CPoly shifted_poly(long new_low) const {
    if (is_zero()) return CPoly();
    return CPoly::monomial(CyclotomicNumber(1), static_cast<std::size_t>(low_ - new_low)) * poly_;
  }
  void normalize() {
    if (poly_.is_zero()) {
      low_ = 0;
      return;
    }
    std::size_t k = 0;
    while (poly_.coeffs()[k].is_zero()) ++k;
    if (k > 0) {
      std::vector<CyclotomicNumber> v(poly_.coeffs().begin() + static_cast<long>(k), poly_.coeffs().end());
      poly_ = CPoly(std::move(v));
      low_ += static_cast<long>(k);
    }
  }

  long low_ = 0;
  CPoly poly_;
};

inline std::ostream& operator<<(std::ostream& os, const Laurent1& p) { return os << p.str(); }

/// Sparse Laurent polynomial in r variables: an element of C[Z^r].
class LaurentPoly {
 public:
  using Exponent = std::vector<long>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static LaurentPoly monomial(std::size_t nvars, Exponent e, const CyclotomicNumber& c) {
    if (e.size() != nvars) throw PreconditionError("monomial exponent length mismatch");
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }
  static LaurentPoly constant(std::size_t nvars, const CyclotomicNumber& c) {
    return monomial(nvars, Exponent(nvars, 0), c);
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, CyclotomicNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const CyclotomicNumber& c) {
    if (e.size() != nvars_) throw PreconditionError("exponent length mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    check_same(a, b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same(a, b);
    LaurentPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.nvars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Value at the point whose i-th coordinate is the root of unity x[i].
  CyclotomicNumber evaluate(std::span<const RootOfUnity> x) const {
    if (x.size() != nvars_) throw PreconditionError("evaluation point has wrong dimension");
    long order = 1;
    for (const auto& xi : x) order = std::lcm(order, xi.order());
    std::vector<Rational> bucket(static_cast<std::size_t>(order), Rational(0));
    CyclotomicNumber irrational_part(0);
    for (const auto& [e, c] : terms_) {
      Rational angle(0);
      for (std::size_t i = 0; i < nvars_; ++i) angle += x[i].angle() * Rational(e[i]);
      const RootOfUnity value(angle);
      if (c.is_rational()) {
        bucket[static_cast<std::size_t>(value.power() * (order / value.order()))] += c.as_rational();
      } else {
        irrational_part = irrational_part + c * value.value();
      }
    }
    return CyclotomicNumber(order, bucket) + irrational_part;
  }

  /// Requires nvars() == 1.
  Laurent1 to_univariate() const {
    if (nvars_ != 1) throw PreconditionError("not a one-variable Laurent polynomial");
    if (terms_.empty()) return Laurent1();
    const long low = terms_.begin()->first[0];
    const long high = terms_.rbegin()->first[0];
    std::vector<CyclotomicNumber> v(static_cast<std::size_t>(high - low + 1), CyclotomicNumber(0));
    for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e[0] - low)] = c;
    return Laurent1(low, CPoly(std::move(v)));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        os << "*t" << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  static void check_same(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) throw PreconditionError("Laurent polynomials in different variable counts");
  }

  std::size_t nvars_;
  std::map<Exponent, CyclotomicNumber> terms_;
};

}  // namespace hodgeloci
