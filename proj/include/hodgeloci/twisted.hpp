#pragma once

// Twisted Alexander polynomials, homology torsion and twisted characteristic
// varieties of a presentation (X, epsilon, rho) with rho unitary.

#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hodgeloci/cyclotomic_factor.hpp"
#include "hodgeloci/errors.hpp"
#include "hodgeloci/matrix.hpp"
#include "hodgeloci/presentation.hpp"
#include "hodgeloci/smith.hpp"
#include "hodgeloci/torus.hpp"

namespace hodgeloci {

/// rho: pi_1 -> U(N), one matrix per generator.
class UnitaryRep {
 public:
  UnitaryRep() = default;
  UnitaryRep(std::size_t dim, std::vector<CyclotomicMatrix> images) : n_(dim), m_(std::move(images)) {
    for (const auto& a : m_) {
      if (a.rows() != n_ || a.cols() != n_) throw PreconditionError("representation matrix has wrong size");
      if (!(a * conjugate_transpose(a) == CyclotomicMatrix::identity(n_)))
        throw PreconditionError("representation matrix is not unitary");
    }
  }
  /// Rank-one representation sending generator j to values[j].
  static UnitaryRep rank_one(const std::vector<RootOfUnity>& values) {
    std::vector<CyclotomicMatrix> m;
    for (const auto& v : values) m.emplace_back(1, 1, std::vector<CyclotomicNumber>{v.value()});
    return UnitaryRep(1, std::move(m));
  }
  static UnitaryRep trivial(std::size_t generators, std::size_t dim = 1) {
    return UnitaryRep(dim, std::vector<CyclotomicMatrix>(generators, CyclotomicMatrix::identity(dim)));
  }

  std::size_t dim() const { return n_; }
  std::size_t generators() const { return m_.size(); }
  const CyclotomicMatrix& image(std::size_t j) const { return m_[j]; }
  /// lcm of the cyclotomic orders of all entries.
  long field_order() const {
    long n = 1;
    for (const auto& a : m_)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) n = std::lcm(n, a(i, j).order());
    return n;
  }

  static CyclotomicMatrix conjugate_transpose(const CyclotomicMatrix& a) {
    CyclotomicMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).conj();
    return t;
  }

  /// Checks that every relator maps to the identity.
  void check_relators(const GroupPresentation& p) const {
    if (m_.size() != p.generators()) throw PreconditionError("representation needs one matrix per generator");
    for (std::size_t k = 0; k < p.relators().size(); ++k) {
      CyclotomicMatrix acc = CyclotomicMatrix::identity(n_);
      for (int x : p.relators()[k]) {
        const auto& a = m_[static_cast<std::size_t>(std::abs(x)) - 1];
        acc = acc * (x > 0 ? a : conjugate_transpose(a));
      }
      if (!(acc == CyclotomicMatrix::identity(n_)))
        throw PreconditionError("relator " + std::to_string(k + 1) + " is not sent to the identity");
    }
  }

 private:
  std::size_t n_ = 1;
  std::vector<CyclotomicMatrix> m_;
};

/// (presentation, epsilon on generators, rho) with epsilon onto Z.
struct TwistedAlexanderData {
  GroupPresentation presentation;
  std::vector<long> epsilon;
  UnitaryRep rep;

  TwistedAlexanderData(GroupPresentation p, std::vector<long> eps, UnitaryRep r)
      : presentation(std::move(p)), epsilon(std::move(eps)), rep(std::move(r)) {
    if (epsilon.size() != presentation.generators()) throw PreconditionError("epsilon needs one value per generator");
    long g = 0;
    for (long e : epsilon) g = std::gcd(g, e);
    if (g != 1) throw PreconditionError("epsilon is not onto Z");
    for (std::size_t k = 0; k < presentation.relators().size(); ++k) {
      long s = 0;
      for (int x : presentation.relators()[k]) s += x > 0 ? epsilon[static_cast<std::size_t>(x) - 1] : -epsilon[static_cast<std::size_t>(-x) - 1];
      if (s != 0) throw PreconditionError("epsilon does not vanish on relator " + std::to_string(k + 1));
    }
    rep.check_relators(presentation);
  }
};

/// epsilon = H_1 coordinate sum composed with the abelianization.
inline std::vector<long> sum_epsilon(const GroupPresentation& p) {
  std::vector<long> e;
  for (const auto& row : p.abelianization()) e.push_back(std::accumulate(row.begin(), row.end(), 0L));
  return e;
}

namespace detail {

// Phi(x_j^{+-1}) = rho(x_j)^{+-1} t^{+-eps_j} as an N x N Laurent matrix.
inline LaurentMatrix phi_image(const TwistedAlexanderData& d, std::size_t j, int sign) {
  const std::size_t n = d.rep.dim();
  const auto& a = sign > 0 ? d.rep.image(j) : UnitaryRep::conjugate_transpose(d.rep.image(j));
  const long e = sign > 0 ? d.epsilon[j] : -d.epsilon[j];
  LaurentMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!a(r, c).is_zero()) m(r, c) = Laurent1::monomial(a(r, c), e);
  return m;
}

template <class T>
Matrix<T> transpose_blocks_into(std::size_t block_rows, std::size_t block_cols, std::size_t n,
                                const std::vector<std::vector<Matrix<T>>>& blocks) {
  // result(bj * n + c, bi * n + r) = blocks[bi][bj](r, c)
  Matrix<T> out(block_cols * n, block_rows * n);
  for (std::size_t bi = 0; bi < block_rows; ++bi)
    for (std::size_t bj = 0; bj < block_cols; ++bj)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(bj * n + c, bi * n + r) = blocks[bi][bj](r, c);
  return out;
}

}  // namespace detail

struct TwistedComplex {
  LaurentMatrix d1;  // N x gN
  LaurentMatrix d2;  // gN x RN
};

/// The twisted chain complex C_2 (x) V -> C_1 (x) V -> C_0 (x) V over C[t, 1/t].
inline TwistedComplex twisted_complex(const TwistedAlexanderData& d) {
  const auto& p = d.presentation;
  const std::size_t n = d.rep.dim(), g = p.generators();
  auto image = [&](std::size_t j, int sign) { return detail::phi_image(d, j, sign); };
  const auto fox = fox_jacobian(p, LaurentMatrix::identity(n), LaurentMatrix(n, n), image);
  // d1 = [ (Phi(x_j) - I)^T ]_j, d2 block (j, i) = Phi(d r_i / d x_j)^T
  TwistedComplex c;
  c.d1 = LaurentMatrix(n, g * n);
  for (std::size_t j = 0; j < g; ++j) {
    const auto b = image(j, 1) - LaurentMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) c.d1(r, j * n + s) = b(s, r);
  }
  c.d2 = detail::transpose_blocks_into(fox.size(), g, n, fox);
  return c;
}

inline std::vector<ModuleStructure> twisted_homology(const TwistedAlexanderData& d) {
  const auto c = twisted_complex(d);
  return chain_homology(c.d1, c.d2);
}

/// Delta_k(t), k = 0, 1, 2: order of the torsion of H_k of the twisted
/// infinite cyclic cover, normalized (exponents >= 0, nonzero constant term,
/// monic).
inline Laurent1 twisted_alexander(const TwistedAlexanderData& d, int k) {
  if (k < 0 || k > 2) throw PreconditionError("twisted Alexander polynomial index must be 0, 1 or 2");
  return twisted_homology(d)[static_cast<std::size_t>(k)].order();
}

/// (Delta_1, Delta_0), kept as a formal quotient.
inline std::pair<Laurent1, Laurent1> homology_torsion(const TwistedAlexanderData& d) {
  const auto h = twisted_homology(d);
  return {h[1].order(), h[0].order()};
}

/// dim H_1(X, V (x) L_chi) for a nontrivial character chi of H_1.
inline long twisted_charvar_dim(const GroupPresentation& p, const UnitaryRep& rho, const Character& chi) {
  if (chi.is_trivial()) throw PreconditionError("twisted_charvar_dim requires a nontrivial character");
  rho.check_relators(p);
  const std::size_t n = rho.dim(), g = p.generators();
  std::vector<CyclotomicNumber> values;
  for (std::size_t j = 0; j < g; ++j) values.push_back(p.character_on_generator(chi, j).value());
  auto image = [&](std::size_t j, int sign) {
    const auto& a = sign > 0 ? rho.image(j) : UnitaryRep::conjugate_transpose(rho.image(j));
    const auto s = sign > 0 ? values[j] : values[j].inverse();
    CyclotomicMatrix m = a;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, c) * s;
    return m;
  };
  const auto fox = fox_jacobian(p, CyclotomicMatrix::identity(n), CyclotomicMatrix(n, n), image);
  CyclotomicMatrix d1(n, g * n);
  for (std::size_t j = 0; j < g; ++j) {
    const auto b = image(j, 1) - CyclotomicMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) d1(r, j * n + s) = b(s, r);
  }
  const auto d2 = detail::transpose_blocks_into(fox.size(), g, n, fox);
  return static_cast<long>(g * n) - static_cast<long>(rank(d1)) - static_cast<long>(rank(d2));
}

}  // namespace hodgeloci
