#pragma once

// Sieving a one-variable Laurent polynomial against the cyclotomic
// polynomials Phi_d.

#include <numeric>
#include <string>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/laurent.hpp"

namespace hodgeloci {

struct CyclotomicFactor {
  long d = 1;
  // gcd with Phi_d over the coefficient field; equals Phi_d when p is rational.
  Laurent1 factor;
  long multiplicity = 1;
  bool is_full() const;
};

struct CyclotomicFactorization {
  std::vector<CyclotomicFactor> factors;  // ascending d
  Laurent1 remainder;                     // normalized
  bool exhausted() const { return remainder.is_unit(); }
};

inline Laurent1 cyclotomic_laurent(long d) {
  const auto phi = cyclotomic_polynomial(d);
  std::vector<CyclotomicNumber> v(phi.coeffs().begin(), phi.coeffs().end());
  return Laurent1(0, CPoly(std::move(v)));
}

inline bool CyclotomicFactor::is_full() const { return factor == cyclotomic_laurent(d); }

inline long coefficient_field_order(const Laurent1& p) {
  long order = 1;
  for (const auto& c : p.poly().coeffs()) order = std::lcm(order, c.order());
  return order;
}

/// Bound on d beyond which no Phi_d can share a root with p: over Q(zeta_N) a
/// degree-n factor forces phi(lcm(d, N)) <= n phi(N), and d <= 2 phi(d)^2.
inline long default_cyclotomic_bound(const Laurent1& p) {
  const long n = p.span();
  const long phi_n = euler_phi(coefficient_field_order(p));
  return std::max<long>(1, 4 * n * n * phi_n * phi_n);
}

/// Maximal factorization against Phi_d for d = 1..bound (bound 0 = default).
inline CyclotomicFactorization cyclotomic_factor(const Laurent1& p, long bound = 0) {
  if (p.is_zero()) throw PreconditionError("cyclotomic factorization of the zero polynomial");
  if (bound <= 0) bound = default_cyclotomic_bound(p);
  const long field = coefficient_field_order(p);
  const long phi_field = euler_phi(field);
  CyclotomicFactorization out;
  Laurent1 rem = p.normalized();
  for (long d = 1; d <= bound && !rem.is_unit(); ++d) {
    if (euler_phi(std::lcm(d, field)) > rem.span() * phi_field) continue;
    const auto phi_d = cyclotomic_laurent(d);
    while (!rem.is_unit()) {
      const auto g = Laurent1(0, gcd(rem.poly(), phi_d.poly()));
      if (g.is_unit()) break;
      rem = divmod(rem, g).first.normalized();
      if (!out.factors.empty() && out.factors.back().d == d && out.factors.back().factor == g) {
        ++out.factors.back().multiplicity;
      } else {
        out.factors.push_back({d, g, 1});
      }
    }
  }
  out.remainder = rem;
  return out;
}

struct CyclotomicRootCertificate {
  bool all_roots_cyclotomic = false;
  CyclotomicFactorization factorization;
  std::string describe() const {
    std::string s;
    for (const auto& f : factorization.factors) {
      if (!s.empty()) s += " ";
      s += f.is_full() ? "Phi" + std::to_string(f.d) : "gcd(Phi" + std::to_string(f.d) + "," + f.factor.str() + ")";
      if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
    }
    if (!factorization.remainder.is_unit()) s += (s.empty() ? "" : " ") + std::string("rest=") + factorization.remainder.str();
    return s.empty() ? "1" : s;
  }
};

/// True iff every root of p is a root of unity of order <= bound.
inline CyclotomicRootCertificate cyclotomic_root_check(const Laurent1& p, long bound = 0) {
  CyclotomicRootCertificate c;
  c.factorization = cyclotomic_factor(p, bound);
  c.all_roots_cyclotomic = c.factorization.exhausted();
  return c;
}

}  // namespace hodgeloci
