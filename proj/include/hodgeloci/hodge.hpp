#pragma once

// Hodge numbers dim Gr_F^p H^n of rank-one local systems for the worked
// families: points on P^1, generic line arrangements, cones over them, the
// Ceva arrangement and D_{8,4}; the Fermat triangle rule; cover aggregation.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hodgeloci/arrangement.hpp"
#include "hodgeloci/errors.hpp"
#include "hodgeloci/intersection_ring.hpp"
#include "hodgeloci/matrix.hpp"
#include "hodgeloci/torus.hpp"

namespace hodgeloci {

/// (n, p) -> dim Gr_F^p H^n; absent keys are zero.
struct GrFTable {
  std::map<std::pair<int, int>, long> entries;

  long at(int n, int p) const {
    auto it = entries.find({n, p});
    return it == entries.end() ? 0 : it->second;
  }
  long total(int n) const {
    long s = 0;
    for (const auto& [k, v] : entries)
      if (k.first == n) s += v;
    return s;
  }
  void set(int n, int p, long v) {
    if (v < 0) throw InvariantError("negative Hodge number");
    entries[{n, p}] = v;
  }
  friend bool operator==(const GrFTable&, const GrFTable&) = default;
};

struct EulerTriple {
  Rational e0, e1, e2;
};

namespace detail {

// Euler characteristics of Omega^p(log D)(-k) on P^2, D = r + 1 general lines.
inline EulerTriple euler_char_p2_any(long r, long k) {
  const auto ring = ChowRing::make(Ambient::p2);
  const auto h = ChowClass::basis(ring, "h");
  const auto one = ChowClass::one(ring);
  const auto twist = (Rational(-k) * h).exp();
  // c(Omega^1(log D)) = c(Omega^1) prod_L c(O_L) = (1 - h)^3 (1 - h)^{-(r + 1)}
  const auto one_minus_h = one - h;
  const long e = 2 - r;
  ChowClass c = e >= 0 ? one_minus_h.pow(static_cast<unsigned>(e)) : one_minus_h.unipotent_inverse().pow(static_cast<unsigned>(-e));
  const auto ch1 = chern_character({Rational(2), c});
  const auto ch2 = line_bundle_character(c.part(1));
  EulerTriple out;
  out.e0 = euler_characteristic(twist);
  out.e1 = euler_characteristic(ch1 * twist);
  out.e2 = euler_characteristic(ch2 * twist);
  return out;
}

inline long to_count(const Rational& q) {
  if (!q.is_integer()) throw InvariantError("non-integral Euler characteristic " + q.str());
  return q.to_long();
}

}  // namespace detail

/// (e(O(-k)), e(Omega^1(log D)(-k)), e(Omega^2(log D)(-k))) on P^2 for r + 1
/// lines in general position, by Riemann-Roch in the Chow ring.
inline std::array<long, 3> euler_char_p2(long r, long k) {
  if (r < 2) throw PreconditionError("euler_char_p2 needs r >= 2");
  if (k < 1 || k > r - 1) throw PreconditionError("euler_char_p2 needs 1 <= k <= r - 1");
  const auto e = detail::euler_char_p2_any(r, k);
  return {detail::to_count(e.e0), detail::to_count(e.e1), detail::to_count(e.e2)};
}

/// Chern character of Omega^p(log D)(-k) on P^2 (p = 1, 2) as h-coefficients
/// (rank, c_1 coefficient, degree-2 coefficient).
inline std::array<Rational, 3> log_forms_chern_character(long r, long k, int p) {
  const auto ring = ChowRing::make(Ambient::p2);
  const auto h = ChowClass::basis(ring, "h");
  const auto one = ChowClass::one(ring);
  const auto twist = (Rational(-k) * h).exp();
  const long e = 2 - r;
  ChowClass c = e >= 0 ? (one - h).pow(static_cast<unsigned>(e)) : (one - h).unipotent_inverse().pow(static_cast<unsigned>(-e));
  ChowClass ch(ring);
  if (p == 1) {
    ch = chern_character({Rational(2), c}) * twist;
  } else if (p == 2) {
    ch = line_bundle_character(c.part(1)) * twist;
  } else {
    throw PreconditionError("p must be 1 or 2");
  }
  return {ch.rank(), ch.coeff("h"), ch.coeff("pt")};
}

namespace detail {

inline void require_nonzero(const WeightVector& u) {
  if (u.is_zero()) throw PreconditionError("trivial character (all weights zero)");
}

}  // namespace detail

/// r + 1 generic lines in P^2 (one at infinity), weights on the r affine lines.
inline GrFTable generic_grf(long r, const WeightVector& u) {
  if (static_cast<long>(u.size()) != r) throw PreconditionError("generic_grf needs r weights");
  if (r < 2) throw PreconditionError("generic_grf needs r >= 2");
  detail::require_nonzero(u);
  for (const auto& a : u.alphas())
    if (a.is_zero()) throw PreconditionError("character must be nontrivial around every line");
  const long k = u.sum().ceil().get_si();  // k - 1 < sum <= k
  const auto e = detail::euler_char_p2_any(r, k);
  GrFTable t;
  t.set(2, 0, detail::to_count(e.e0));
  t.set(2, 1, -detail::to_count(e.e1));
  t.set(2, 2, detail::to_count(e.e2));
  return t;
}

/// r + 1 points on P^1 (one at infinity), weights on the r finite points.
inline GrFTable p1_points_grf(long r, const WeightVector& u) {
  if (static_cast<long>(u.size()) != r) throw PreconditionError("p1_points_grf needs r weights");
  detail::require_nonzero(u);
  const long k = u.sum().ceil().get_si();
  GrFTable t;
  t.set(1, 1, r - k);
  t.set(1, 0, k - 1);
  return t;
}

/// Cone over r + 1 generic lines: r + 1 planes through a point of P^3 plus a
/// transversal plane at infinity; weights on the r + 1 planes.
inline GrFTable cone_grf(long r, const WeightVector& u) {
  if (static_cast<long>(u.size()) != r + 1) throw PreconditionError("cone_grf needs r + 1 weights");
  if (!u.sum().is_integer()) throw PreconditionError("weights violate the subtorus condition (sum not an integer)");
  std::vector<Rational> induced(u.alphas().begin(), u.alphas().begin() + r);
  const auto g = generic_grf(r, WeightVector(std::move(induced)));
  GrFTable t;
  for (const auto& [key, v] : g.entries) t.set(3, key.second, v);
  return t;
}

/// Projective points in P^dim, pairwise distinct.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, const std::vector<ProjectiveVector>& points) : dim_(dim) {
    std::set<ProjectiveVector> seen;
    for (const auto& p : points) {
      if (p.size() != dim + 1) throw PreconditionError("point has wrong number of coordinates");
      auto q = primitive_projective(p);
      if (!seen.insert(q).second) throw PreconditionError("repeated point");
      pts_.push_back(std::move(q));
    }
  }
  PointSet(std::size_t dim, const std::vector<std::vector<long>>& points) : PointSet(dim, convert(points)) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  const std::vector<ProjectiveVector>& points() const { return pts_; }

 private:
  static std::vector<ProjectiveVector> convert(const std::vector<std::vector<long>>& v) {
    std::vector<ProjectiveVector> out;
    for (const auto& row : v) {
      ProjectiveVector p;
      for (long x : row) p.emplace_back(x);
      out.push_back(std::move(p));
    }
    return out;
  }
  std::size_t dim_ = 2;
  std::vector<ProjectiveVector> pts_;
};

/// Exponent vectors of all degree-d monomials in n variables, lexicographic.
inline std::vector<std::vector<unsigned>> monomials(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (n > 0) rec(0, d);
  return out;
}

/// Rows = points, columns = degree-d monomials.
inline RationalMatrix evaluation_matrix(const PointSet& b, unsigned d) {
  const auto mons = monomials(b.dim() + 1, d);
  RationalMatrix m(b.size(), mons.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) {
      Integer v = 1;
      for (std::size_t k = 0; k < mons[j].size(); ++k) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), b.points()[i][k].get_mpz_t(), mons[j][k]);
        v *= pw;
      }
      m(i, j) = Rational(v);
    }
  return m;
}

/// h^1(J_B(d)) = |B| - rank of the degree-d evaluation matrix.
inline long superabundance(const PointSet& b, long d) {
  if (d < 0) throw PreconditionError("degree must be nonnegative");
  if (b.size() == 0) return 0;
  return static_cast<long>(b.size()) - static_cast<long>(rank(evaluation_matrix(b, static_cast<unsigned>(d))));
}

/// Points of multiplicity >= dim + 1 of an arrangement (the non-normal
/// crossings), or the declared base locus when the arrangement carries one.
inline PointSet base_locus(const Arrangement& a) {
  if (a.base_locus()) return PointSet(static_cast<std::size_t>(a.dim()), *a.base_locus());
  std::vector<ProjectiveVector> pts;
  for (const auto& p : incidence(a))
    if (p.multiplicity() >= static_cast<std::size_t>(a.dim()) + 1) pts.push_back(p.point);
  return PointSet(static_cast<std::size_t>(a.dim()), pts);
}

namespace detail {

// The common value p + 1 of all base-point functionals, when there is one.
inline std::optional<long> common_point_sum(const ResidueSystem& rs, const WeightVector& u) {
  std::optional<Rational> common;
  for (const auto& f : rs.functionals) {
    if (f.kind != StratumKind::point) continue;
    const auto v = f.functional(u);
    if (common && !(*common == v)) return std::nullopt;
    common = v;
  }
  if (!common || !common->is_integer()) return std::nullopt;
  return common->to_long();
}

inline GrFTable superabundance_family(const Arrangement& a, const WeightVector& u, int n, long degree, long max_p) {
  const auto rs = residue_system(a);
  if (u.size() != rs.dim) throw PreconditionError("expected " + std::to_string(rs.dim) + " weights");
  const auto s = common_point_sum(rs, u);
  if (!s || *s < 1 || *s > max_p + 1)
    throw PreconditionError("weights are not on a jump polytope: every base-point sum must equal the same p + 1");
  GrFTable t;
  t.set(n, static_cast<int>(*s - 1), superabundance(base_locus(a), degree));
  return t;
}

}  // namespace detail

/// Ceva arrangement: on the polytope where every triple-point sum is p + 1
/// (p = 0, 1), dim Gr_F^p H^1 = h^1(J_B(1)) with B the four triple points.
inline GrFTable ceva_grf(const Arrangement& ceva, const WeightVector& u) {
  return detail::superabundance_family(ceva, u, 1, 1, 1);
}

/// D_{8,4}: on the polytope where every quadruple-point sum is p + 1
/// (p = 0, 1, 2), dim Gr_F^p H^2 = h^1(J_B(2)) with B the eight base points.
inline GrFTable d84_grf(const Arrangement& d84, const WeightVector& u) {
  return detail::superabundance_family(d84, u, 2, 2, 2);
}

/// dim Gr^1_F Gr^W_1 H^1(F_n)_chi for the Fermat curve x^n + y^n = z^n and the
/// character (a/n, b/n): the number of forms x^(a-1) y^(b-1) z^(n-1-a-b) z dx^dy / F.
inline long fermat_triangle(long n, long a_bar, long b_bar) {
  if (n < 1) throw PreconditionError("Fermat degree must be positive");
  if (a_bar < 1 || a_bar > n || b_bar < 1 || b_bar > n) throw PreconditionError("character indices out of range");
  const long a = a_bar - 1, b = b_bar - 1;
  long count = 0;
  for (long i = 0; i <= n - 3; ++i)
    for (long j = 0; i + j <= n - 3; ++j)
      if (i == a && j == b) ++count;
  return count;
}

/// Sum of f over all characters of Z/m_1 x ... x Z/m_k, in lexicographic order.
template <class F>
long cover_rank_aggregate(F f, const std::vector<long>& moduli) {
  for (long m : moduli)
    if (m < 1) throw PreconditionError("moduli must be positive");
  std::vector<long> k(moduli.size(), 0);
  long total = 0;
  while (true) {
    std::vector<RootOfUnity> c;
    for (std::size_t i = 0; i < k.size(); ++i) c.push_back(RootOfUnity::of(moduli[i], k[i]));
    total += f(Character(std::move(c)));
    std::size_t i = k.size();
    while (i > 0 && k[i - 1] == moduli[i - 1] - 1) k[--i] = 0;
    if (i == 0) break;
    ++k[i - 1];
  }
  return total;
}

}  // namespace hodgeloci
