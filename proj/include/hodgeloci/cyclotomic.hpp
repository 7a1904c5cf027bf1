#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element of order N is stored in the power basis 1, z, ..., z^(phi(N)-1)
// of Q(z) with z = zeta_N = exp(2 pi i / N), reduced modulo Phi_N. The
// embedding into C is fixed once and for all by that choice of z, so complex
// conjugation is z -> z^(N-1). Binary operations on elements of different
// orders are carried out in Q(zeta_L) with L the lcm of the two orders.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/rational.hpp"
#include "hodgeloci/upoly.hpp"

namespace hodgeloci {

namespace detail {

struct CyclotomicField {
  long order = 1;
  std::size_t phi = 1;
  UPoly<Rational> modulus;
  // powers[j] = coordinates of z^j, 0 <= j < order; all entries are integers.
  std::vector<std::vector<long>> powers;
};

inline std::shared_ptr<const CyclotomicField> make_cyclotomic_field(long n) {
  auto f = std::make_shared<CyclotomicField>();
  f->order = n;
  f->modulus = cyclotomic_polynomial(n);
  f->phi = static_cast<std::size_t>(f->modulus.degree());
  std::vector<long> mod_int(f->phi + 1);
  for (std::size_t i = 0; i <= f->phi; ++i) mod_int[i] = f->modulus.coeff(i).to_long();
  f->powers.assign(static_cast<std::size_t>(n), std::vector<long>(f->phi, 0));
  std::vector<long> cur(f->phi, 0);
  cur[0] = 1;
  for (long j = 0; j < n; ++j) {
    f->powers[static_cast<std::size_t>(j)] = cur;
    // multiply by z: shift up and fold the overflow with z^phi = -sum mod_i z^i
    const long top = cur[f->phi - 1];
    for (std::size_t i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < f->phi; ++i) cur[i] -= top * mod_int[i];
  }
  return f;
}

inline std::shared_ptr<const CyclotomicField> cyclotomic_field(long n) {
  if (n < 1) throw PreconditionError("cyclotomic field of non-positive order");
  static std::mutex mutex;
  static std::map<long, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto f = make_cyclotomic_field(n);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, f).first->second;
}

}  // namespace detail

class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(Rational(0)) {}
  CyclotomicNumber(long value) : CyclotomicNumber(Rational(value)) {}  // NOLINT
  CyclotomicNumber(const Rational& value)                              // NOLINT
      : field_(detail::cyclotomic_field(1)), c_{value} {}

  /// Element sum_j coeffs[j] z_N^j; any number of coefficients, reduced mod Phi_N.
  CyclotomicNumber(long order, const std::vector<Rational>& coeffs) : field_(detail::cyclotomic_field(order)) {
    c_ = reduce(*field_, coeffs);
  }

  /// z_order^power
  static CyclotomicNumber root_of_unity(long order, long power) {
    CyclotomicNumber r;
    r.field_ = detail::cyclotomic_field(order);
    const long p = ((power % order) + order) % order;
    const auto& row = r.field_->powers[static_cast<std::size_t>(p)];
    r.c_.assign(row.begin(), row.end());
    return r;
  }

  long order() const { return field_->order; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Rational as_rational() const {
    if (!is_rational()) throw PreconditionError("cyclotomic number " + str() + " is not rational");
    return c_[0];
  }
  bool is_one() const { return is_rational() && c_[0].is_one(); }

  /// The same number written in Q(zeta_M); M must be a multiple of order().
  CyclotomicNumber lifted(long multiple) const {
    if (multiple == order()) return *this;
    if (multiple % order() != 0) throw PreconditionError("cannot lift Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" + std::to_string(multiple) + ")");
    CyclotomicNumber r;
    r.field_ = detail::cyclotomic_field(multiple);
    r.c_.assign(r.field_->phi, Rational(0));
    const long step = multiple / order();
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j].is_zero()) continue;
      const auto& row = r.field_->powers[static_cast<std::size_t>((static_cast<long>(j) * step) % multiple)];
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) r.c_[i] += c_[j] * Rational(row[i]);
    }
    return r;
  }

  /// Complex conjugate under z -> exp(2 pi i / N).
  CyclotomicNumber conj() const {
    std::vector<Rational> v(static_cast<std::size_t>(order()), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) v[(static_cast<std::size_t>(order()) - j) % static_cast<std::size_t>(order())] += c_[j];
    return CyclotomicNumber(order(), v);
  }

  CyclotomicNumber inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero cyclotomic number");
    if (is_rational()) {
      CyclotomicNumber r = *this;
      r.c_[0] = c_[0].inverse();
      return r;
    }
    auto [g, s, u] = extended_gcd(UPoly<Rational>(c_), field_->modulus);
    if (g.degree() != 0) throw InvariantError("cyclotomic element not invertible");
    CyclotomicNumber r;
    r.field_ = field_;
    r.c_ = reduce(*field_, s.coeffs());
    return r;
  }

  CyclotomicNumber pow(long e) const {
    CyclotomicNumber base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    CyclotomicNumber acc = CyclotomicNumber(1).lifted(order());
    while (k > 0) {
      if (k & 1UL) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  CyclotomicNumber operator-() const {
    CyclotomicNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() != b.order()) {
      const long l = std::lcm(a.order(), b.order());
      return a.lifted(l) + b.lifted(l);
    }
    CyclotomicNumber r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() != b.order()) {
      if (a.is_rational()) return b.scaled(a.c_[0]);
      if (b.is_rational()) return a.scaled(b.c_[0]);
      const long l = std::lcm(a.order(), b.order());
      return a.lifted(l) * b.lifted(l);
    }
    if (a.order() == 1) {
      CyclotomicNumber r = a;
      r.c_[0] *= b.c_[0];
      return r;
    }
    std::vector<Rational> prod(2 * a.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    CyclotomicNumber r;
    r.field_ = a.field_;
    r.c_ = reduce(*a.field_, prod);
    return r;
  }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (b.is_rational()) return a.scaled(b.as_rational().inverse());
    return a * b.inverse();
  }
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() == b.order()) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    const long l = std::lcm(a.order(), b.order());
    return a.lifted(l).c_ == b.lifted(l).c_;
  }

  CyclotomicNumber scaled(const Rational& s) const {
    CyclotomicNumber r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  std::string str() const {
    if (is_rational()) return c_[0].str();
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j].is_zero()) continue;
      std::string term;
      const std::string z = "z" + std::to_string(order()) + (j == 1 ? "" : "^" + std::to_string(j));
      if (j == 0) {
        term = c_[j].str();
      } else if (c_[j] == Rational(1)) {
        term = z;
      } else if (c_[j] == Rational(-1)) {
        term = "-" + z;
      } else {
        term = c_[j].str() + "*" + z;
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return "(" + out + ")";
  }

 private:
  static std::vector<Rational> reduce(const detail::CyclotomicField& f, const std::vector<Rational>& v) {
    std::vector<Rational> out(f.phi, Rational(0));
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      if (j < f.phi) {
        out[j] += v[j];
        continue;
      }
      const auto& row = f.powers[j % static_cast<std::size_t>(f.order)];
      for (std::size_t i = 0; i < f.phi; ++i)
        if (row[i] != 0) out[i] += v[j] * Rational(row[i]);
    }
    return out;
  }

  std::shared_ptr<const detail::CyclotomicField> field_;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) { return os << z.str(); }

/// A root of unity exp(2 pi i a), stored by its angle a in [0, 1).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  explicit RootOfUnity(const Rational& angle) : angle_(angle.frac()) {}
  static RootOfUnity of(long order, long power) { return RootOfUnity(Rational(power, order)); }

  const Rational& angle() const { return angle_; }
  long order() const { return angle_.denominator_long(); }
  /// Exponent k with value = z_order^k.
  long power() const { return angle_.numerator().get_si(); }
  bool is_one() const { return angle_.is_zero(); }
  CyclotomicNumber value() const { return CyclotomicNumber::root_of_unity(order(), power()); }

  RootOfUnity operator*(const RootOfUnity& o) const { return RootOfUnity(angle_ + o.angle_); }
  RootOfUnity pow(long e) const { return RootOfUnity(angle_ * Rational(e)); }
  RootOfUnity inverse() const { return RootOfUnity(-angle_); }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity& a, const RootOfUnity& b) { return a.angle_ <=> b.angle_; }

  std::string str() const { return "exp(2pi i " + angle_.str() + ")"; }

 private:
  Rational angle_;
};

}  // namespace hodgeloci
