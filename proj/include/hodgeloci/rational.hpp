#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "hodgeloci/errors.hpp"

namespace hodgeloci {

using Integer = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed).
  static Rational parse(std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) trimmed.remove_prefix(1);
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t')) trimmed.remove_suffix(1);
    if (trimmed.empty()) throw ParseError("empty rational");
    const auto slash = trimmed.find('/');
    auto check_digits = [&](std::string_view part, bool allow_sign) {
      std::size_t start = 0;
      if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
      if (start >= part.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
      for (std::size_t i = start; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
      }
    };
    std::string num(trimmed.substr(0, slash));
    check_digits(num, true);
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num, 10);
    if (slash == std::string_view::npos) return Rational(n);
    std::string den(trimmed.substr(slash + 1));
    check_digits(den, false);
    Integer d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }

  const mpq_class& raw() const { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer not above the value.
  Integer floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  /// Smallest integer not below the value.
  Integer ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  /// Representative of the class modulo Z in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  long to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) throw PreconditionError("rational " + str() + " is not a machine integer");
    return q_.get_num().get_si();
  }
  long denominator_long() const {
    if (!q_.get_den().fits_slong_p()) throw PreconditionError("denominator too large");
    return q_.get_den().get_si();
  }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const { return Rational(1) / *this; }

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace hodgeloci
