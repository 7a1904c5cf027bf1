#pragma once

// Dense univariate polynomials over an exact field K, plus the rational
// cyclotomic polynomials Phi_n.

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/rational.hpp"

namespace hodgeloci {

template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const K& c) { return UPoly(std::vector<K>{c}); }
  static UPoly monomial(const K& c, std::size_t degree) {
    std::vector<K> v(degree + 1, K(0));
    v[degree] = c;
    return UPoly(std::move(v));
  }
  /// t - root
  static UPoly linear(const K& root) { return UPoly(std::vector<K>{K(0) - root, K(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& leading() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    const K inv = K(1) / leading();
    UPoly r = *this;
    for (auto& x : r.c_) x = x * inv;
    return r;
  }

  K eval(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(s t)
  UPoly scaled(const K& s) const {
    std::vector<K> v = c_;
    K power(1);
    for (auto& x : v) {
      x = x * power;
      power = power * s;
    }
    return UPoly(std::move(v));
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = K(0) - x;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  friend UPoly operator*(const K& s, const UPoly& p) {
    UPoly r = p;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division a = q b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<K> rem = a.c_;
    std::vector<K> quo(a.c_.size() - b.c_.size() + 1, K(0));
    const K inv = K(1) / b.leading();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      const K f = rem[k + db] * inv;
      quo[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - f * b.c_[j];
    }
    rem.resize(db);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[k] << ")";
      if (k > 0) os << "*" << var << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, u) with s a + u b = g, g monic.
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> extended_gcd(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(K(1)), s1;
  UPoly<K> u0, u1 = UPoly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  const K inv = K(1) / r0.leading();
  return {inv * r0, inv * s0, inv * u0};
}

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// The n-th cyclotomic polynomial over Q (integer coefficients, monic).
inline UPoly<Rational> cyclotomic_polynomial(long n) {
  if (n < 1) throw PreconditionError("cyclotomic polynomial of non-positive order");
  static std::mutex mutex;
  static std::map<long, UPoly<Rational>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
  v[0] = Rational(-1);
  v[static_cast<std::size_t>(n)] = Rational(1);
  UPoly<Rational> p(std::move(v));
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) p = divmod(p, cyclotomic_polynomial(d)).first;
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(n, p);
  return p;
}

}  // namespace hodgeloci
