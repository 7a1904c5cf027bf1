#pragma once

// Dimensions of rank-one local-system cohomology by independent engines:
// the Aomoto complex of the Orlik-Solomon algebra, the truncated Koszul
// complex of the torus 2-skeleton, Fox calculus on a presentation, and the
// K^{a,b} complex for torus bundles.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hodgeloci/arrangement.hpp"
#include "hodgeloci/errors.hpp"
#include "hodgeloci/matrix.hpp"
#include "hodgeloci/presentation.hpp"
#include "hodgeloci/torus.hpp"

namespace hodgeloci {

using Betti = std::array<long, 3>;

/// Orlik-Solomon algebra of the affine part of an arrangement in P^2, up to degree 2.
struct OSAlgebra {
  std::vector<std::size_t> lines;  // hyperplane index of each generator e_i
  struct Pair {
    std::size_t point;  // index into incidence()
    std::size_t first;  // smallest generator through the point
    std::size_t other;
  };
  std::vector<Pair> degree2;  // nbc basis e_first e_other
  // products[i][j] for i < j: A^2 coordinates of e_i e_j (sparse)
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, long>>> products;

  std::array<std::size_t, 3> dims() const { return {1, lines.size(), degree2.size()}; }

  /// e_i e_j as a dense vector over the degree-2 basis (graded commutative).
  std::vector<long> product(std::size_t i, std::size_t j) const {
    std::vector<long> v(degree2.size(), 0);
    if (i == j) return v;
    const long sign = i < j ? 1 : -1;
    auto it = products.find({std::min(i, j), std::max(i, j)});
    if (it == products.end()) return v;
    for (auto [k, c] : it->second) v[k] += sign * c;
    return v;
  }
};

/// The hyperplane at infinity is removed; when none is marked, the last
/// hyperplane plays that role (the complement is the same).
inline OSAlgebra os_algebra(const Arrangement& a) {
  if (a.dim() != 2) throw PreconditionError("Orlik-Solomon algebra is implemented for line arrangements only");
  const std::size_t inf = a.infinity() ? *a.infinity() : a.size() - 1;
  OSAlgebra os;
  std::map<std::size_t, std::size_t> gen_of;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == inf) continue;
    gen_of[i] = os.lines.size();
    os.lines.push_back(i);
  }
  const auto points = incidence(a);
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const auto& inc = points[pi].incident;
    if (std::count(inc.begin(), inc.end(), inf)) continue;  // parallel lines: products vanish
    std::vector<std::size_t> gens;
    for (auto h : inc) gens.push_back(gen_of.at(h));
    const std::size_t i0 = gens.front();
    std::map<std::size_t, std::size_t> basis_of;
    for (std::size_t k = 1; k < gens.size(); ++k) {
      basis_of[gens[k]] = os.degree2.size();
      os.degree2.push_back({pi, i0, gens[k]});
    }
    for (std::size_t x = 0; x < gens.size(); ++x)
      for (std::size_t y = x + 1; y < gens.size(); ++y) {
        const std::size_t i = gens[x], j = gens[y];
        if (i == i0) {
          os.products[{i, j}] = {{basis_of.at(j), 1}};
        } else {
          // e_i e_j = e_i0 e_j - e_i0 e_i
          os.products[{i, j}] = {{basis_of.at(j), 1}, {basis_of.at(i), -1}};
        }
      }
  }
  return os;
}

/// Cohomology of (A, omega_a ^ .) with omega_a = sum a_i e_i.
inline Betti aomoto_cohomology(const OSAlgebra& os, const std::vector<Rational>& a) {
  const std::size_t n = os.lines.size(), m = os.degree2.size();
  if (a.size() != n) throw PreconditionError("Aomoto complex needs one weight per affine line");
  RationalMatrix d0(n, 1), d1(m, n);
  for (std::size_t i = 0; i < n; ++i) d0(i, 0) = a[i];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      const auto v = os.product(i, j);
      for (std::size_t k = 0; k < m; ++k)
        if (v[k] != 0) d1(k, j) += a[i] * Rational(v[k]);
    }
  const long r0 = static_cast<long>(rank(d0)), r1 = static_cast<long>(rank(d1));
  return {1 - r0, static_cast<long>(n) - r0 - r1, static_cast<long>(m) - r1};
}

inline Betti aomoto_cohomology(const Arrangement& arr, const std::vector<Rational>& a) {
  return aomoto_cohomology(os_algebra(arr), a);
}

/// Rank-one cohomology on the 2-skeleton of (S^1)^r, the homotopy model of
/// the complement of r + 1 generic lines.
inline Betti koszul_generic_oracle(std::size_t r, const Character& chi) {
  if (chi.size() != r) throw PreconditionError("Koszul oracle: character has wrong rank");
  std::vector<CyclotomicNumber> c;
  for (const auto& x : chi.coords()) c.push_back(x.value() - CyclotomicNumber(1));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  CyclotomicMatrix d0(r, 1), d1(pairs.size(), r);
  for (std::size_t i = 0; i < r; ++i) d0(i, 0) = c[i];
  // d(e_j) = sum_i c_i e_i ^ e_j
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    d1(k, j) = c[i];
    d1(k, i) = -c[j];
  }
  const long r0 = static_cast<long>(rank(d0)), r1 = static_cast<long>(rank(d1));
  return {1 - r0, static_cast<long>(r) - r0 - r1, static_cast<long>(pairs.size()) - r1};
}

/// No point of the projective arrangement lies on three or more lines.
inline bool is_generic(const Arrangement& a) {
  for (const auto& p : incidence(a))
    if (p.multiplicity() > 2) return false;
  return true;
}

/// Conservative nonresonance test for Aomoto weights a (one per affine line
/// of os_algebra): a_X = sum of weights through X must be a non-integer for
/// every dense edge X of the projective closure, i.e. every line (with
/// a_infinity = -sum a_i) and every point on three or more lines.
inline bool aomoto_nonresonant(const Arrangement& arr, const std::vector<Rational>& a) {
  const auto os = os_algebra(arr);
  if (a.size() != os.lines.size()) throw PreconditionError("one weight per affine line required");
  std::vector<Rational> w(arr.size(), Rational(0));
  Rational total(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    w[os.lines[i]] = a[i];
    total += a[i];
  }
  const std::size_t inf = arr.infinity() ? *arr.infinity() : arr.size() - 1;
  w[inf] = -total;
  for (const auto& x : w)
    if (x.is_integer()) return false;
  for (const auto& p : incidence(arr)) {
    if (p.multiplicity() < 3) continue;
    Rational s(0);
    for (auto i : p.incident) s += w[i];
    if (s.is_integer()) return false;
  }
  return true;
}

struct ArrangementCohomology {
  std::string engine;  // "aomoto" or "koszul"
  Betti h{};
};

/// dim H^*(complement, L_chi) for chi = exp(2 pi i a): the Aomoto complex
/// when a is nonresonant, the Koszul model for generic arrangements
/// otherwise. Resonant weights on a non-generic arrangement need a
/// presentation and are rejected.
inline ArrangementCohomology arrangement_cohomology(const Arrangement& arr, const std::vector<Rational>& a) {
  if (aomoto_nonresonant(arr, a)) return {"aomoto", aomoto_cohomology(arr, a)};
  if (!is_generic(arr))
    throw PreconditionError("resonant weights on a non-generic arrangement: use --presentation with a Fox model");
  std::vector<RootOfUnity> chi;
  for (const auto& x : a) chi.emplace_back(x);
  return {"koszul", koszul_generic_oracle(a.size(), Character(std::move(chi)))};
}

struct FoxCohomology {
  Betti h{};
  /// R - rank J(chi): h^2 of the presentation 2-complex itself.
  long complex_h2 = 0;
};

/// Cohomology of the rank-one system chi (a character of H_1 = Z^r) from the
/// Fox Jacobian; h^2 closes the declared Euler characteristic.
inline FoxCohomology fox_cohomology_detail(const GroupPresentation& p, const Character& chi, long euler) {
  const std::size_t g = p.generators();
  std::vector<CyclotomicNumber> gen_values;
  for (std::size_t j = 0; j < g; ++j) gen_values.push_back(p.character_on_generator(chi, j).value());
  auto image = [&](std::size_t j, int sign) { return sign > 0 ? gen_values[j] : gen_values[j].inverse(); };
  const auto jac = fox_jacobian(p, CyclotomicNumber(1), CyclotomicNumber(0), image);
  CyclotomicMatrix d1(g, 1), j(jac.size(), g);
  for (std::size_t k = 0; k < g; ++k) d1(k, 0) = gen_values[k] - CyclotomicNumber(1);
  for (std::size_t i = 0; i < jac.size(); ++i)
    for (std::size_t k = 0; k < g; ++k) j(i, k) = jac[i][k];
  const long r1 = static_cast<long>(rank(d1)), rj = static_cast<long>(rank(j));
  FoxCohomology out;
  out.h[0] = 1 - r1;
  out.h[1] = static_cast<long>(g) - r1 - rj;
  out.h[2] = euler - out.h[0] + out.h[1];
  out.complex_h2 = static_cast<long>(jac.size()) - rj;
  if (out.h[2] < 0) throw PreconditionError("declared Euler characteristic forces negative h^2");
  return out;
}

inline Betti fox_cohomology(const GroupPresentation& p, const Character& chi, long euler) {
  return fox_cohomology_detail(p, chi, euler).h;
}
inline Betti fox_cohomology(const GroupPresentation& p, const Character& chi) {
  return fox_cohomology(p, chi, p.euler());
}

/// Character given on generators; it must kill every relator.
inline Betti fox_cohomology_on_generators(const GroupPresentation& p, const std::vector<RootOfUnity>& values, long euler) {
  if (values.size() != p.generators()) throw PreconditionError("one value per generator required");
  for (std::size_t k = 0; k < p.relators().size(); ++k) {
    Rational angle(0);
    for (int x : p.relators()[k]) angle += values[static_cast<std::size_t>(std::abs(x)) - 1].angle() * Rational(x > 0 ? 1 : -1);
    if (!RootOfUnity(angle).is_one()) throw PreconditionError("character does not factor through the abelianization");
  }
  // The Hermite transform U of A satisfies U A = (I_r; 0) because A is onto
  // Z^r, so its first r rows give chi from the generator values.
  const std::size_t r = p.rank();
  const auto h = hermite_normal_form(to_int_matrix(p.abelianization()), r);
  std::vector<RootOfUnity> chi(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational angle(0);
    for (std::size_t j = 0; j < p.generators(); ++j) angle += values[j].angle() * Rational(h.transform[i][j]);
    chi[i] = RootOfUnity(angle);
  }
  return fox_cohomology(p, Character(std::move(chi)), euler);
}

/// Graded-commutative algebra with basis per degree and structure constants.
struct GradedAlgebra {
  std::vector<std::size_t> dims;
  // (deg1, i, deg2, j) -> coordinates of the product in degree deg1 + deg2
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::vector<Rational>> mult;
  std::vector<std::vector<Rational>> chern;  // degree-2 classes c_1^j

  std::size_t dim(std::size_t d) const { return d < dims.size() ? dims[d] : 0; }

  std::vector<Rational> multiply(std::size_t d1, const std::vector<Rational>& x, std::size_t d2,
                                 const std::vector<Rational>& y) const {
    std::vector<Rational> out(dim(d1 + d2), Rational(0));
    if (out.empty()) return out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        auto it = mult.find({d1, i, d2, j});
        if (it == mult.end()) {
          if (d1 == 0 && dim(0) == 1) {
            out[j] += x[i] * y[j];
          } else if (d2 == 0 && dim(0) == 1) {
            out[i] += x[i] * y[j];
          }
          continue;
        }
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * y[j] * it->second[k];
      }
    }
    return out;
  }

  /// Exhaustive associativity check on basis triples.
  bool check_associativity() const {
    auto unit = [&](std::size_t d, std::size_t i) {
      std::vector<Rational> v(dim(d), Rational(0));
      v[i] = Rational(1);
      return v;
    };
    const std::size_t top = dims.size();
    for (std::size_t a = 0; a < top; ++a)
      for (std::size_t b = 0; a + b < top; ++b)
        for (std::size_t c = 0; a + b + c < top; ++c)
          for (std::size_t i = 0; i < dim(a); ++i)
            for (std::size_t j = 0; j < dim(b); ++j)
              for (std::size_t k = 0; k < dim(c); ++k) {
                const auto left = multiply(a + b, multiply(a, unit(a, i), b, unit(b, j)), c, unit(c, k));
                const auto right = multiply(a, unit(a, i), b + c, multiply(b, unit(b, j), c, unit(c, k)));
                if (left != right) return false;
              }
    return true;
  }

  static GradedAlgebra point() { return {{1}, {}, {}}; }
  /// H^*(P^1) with generator pt in degree 2.
  static GradedAlgebra p1() { return {{1, 0, 1}, {}, {}}; }
};

/// dim H^i of the total space of the principal (C^*)^k (or (S^1)^k) bundle
/// with Chern classes base.chern, via the K^{a,b} complex.
inline long torus_bundle_cohomology(const GradedAlgebra& base, std::size_t i) {
  const std::size_t k = base.chern.size();
  for (const auto& c : base.chern)
    if (c.size() != base.dim(2)) throw PreconditionError("Chern class is not a degree-2 element of the base");
  // exterior basis: subsets of {0..k-1} by size
  std::vector<std::vector<std::vector<std::size_t>>> subsets(k + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (std::size_t{1} << j)) s.push_back(j);
    subsets[s.size()].push_back(std::move(s));
  }
  auto index_of = [&](const std::vector<std::size_t>& s) {
    const auto& list = subsets[s.size()];
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), s) - list.begin());
  };
  // kappa^{a,b}: H^a (x) L^b -> H^{a+2} (x) L^{b-1}
  auto kappa = [&](std::size_t a, std::size_t b) {
    const std::size_t src_a = base.dim(a), tgt_a = base.dim(a + 2);
    const std::size_t src_b = b <= k ? subsets[b].size() : 0;
    const std::size_t tgt_b = (b >= 1 && b - 1 <= k) ? subsets[b - 1].size() : 0;
    RationalMatrix m(tgt_a * tgt_b, src_a * src_b);
    if (b == 0 || b > k) return m;
    for (std::size_t x = 0; x < src_a; ++x)
      for (std::size_t s = 0; s < src_b; ++s) {
        const auto& set = subsets[b][s];
        std::vector<Rational> ex(src_a, Rational(0));
        ex[x] = Rational(1);
        for (std::size_t pos = 0; pos < set.size(); ++pos) {
          const auto prod = base.multiply(a, ex, 2, base.chern[set[pos]]);
          auto rest = set;
          rest.erase(rest.begin() + static_cast<long>(pos));
          const std::size_t t = index_of(rest);
          const long sign = pos % 2 == 0 ? 1 : -1;
          for (std::size_t y = 0; y < tgt_a; ++y)
            if (!prod[y].is_zero()) m(y * tgt_b + t, x * src_b + s) += Rational(sign) * prod[y];
        }
      }
    return m;
  };
  long total = 0;
  for (std::size_t a = 0; a <= i; ++a) {
    const std::size_t b = i - a;
    if (b > k) continue;
    const long dim_src = static_cast<long>(base.dim(a) * subsets[b].size());
    if (dim_src == 0) continue;
    const long rk_out = static_cast<long>(rank(kappa(a, b)));
    const long rk_in = a >= 2 ? static_cast<long>(rank(kappa(a - 2, b + 1))) : 0;
    total += dim_src - rk_out - rk_in;
  }
  return total;
}

}  // namespace hodgeloci
