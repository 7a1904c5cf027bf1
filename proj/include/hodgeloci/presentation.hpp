#pragma once

// Finite group presentations with a chosen abelianization H_1 = Z^r, and
// Fox free differential calculus pushed through a homomorphism.

#include <cstdlib>
#include <string>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/lattice.hpp"
#include "hodgeloci/laurent.hpp"
#include "hodgeloci/torus.hpp"

namespace hodgeloci {

/// A relator letter: +k is generator k (1-based), -k its inverse.
using Word = std::vector<int>;

class GroupPresentation {
 public:
  GroupPresentation() = default;
  /// abelianization: row j is the image of generator j in Z^r; empty means
  /// the identity (r = g).
  GroupPresentation(std::size_t generators, std::vector<Word> relators, std::vector<std::vector<long>> abelianization,
                    long euler)
      : g_(generators), relators_(std::move(relators)), ab_(std::move(abelianization)), euler_(euler) {
    if (ab_.empty()) {
      ab_.assign(g_, std::vector<long>(g_, 0));
      for (std::size_t j = 0; j < g_; ++j) ab_[j][j] = 1;
    }
    if (ab_.size() != g_) throw PreconditionError("abelianization needs one row per generator");
    r_ = ab_.empty() ? 0 : ab_[0].size();
    for (const auto& row : ab_)
      if (row.size() != r_) throw PreconditionError("abelianization rows have different lengths");
    for (const auto& w : relators_)
      for (int x : w)
        if (x == 0 || static_cast<std::size_t>(std::abs(x)) > g_) throw PreconditionError("relator letter out of range");
    validate_abelianization();
  }
  /// Presentation whose declared Euler characteristic is that of its 2-complex.
  static GroupPresentation with_complex_euler(std::size_t generators, std::vector<Word> relators,
                                              std::vector<std::vector<long>> abelianization = {}) {
    const long e = 1 - static_cast<long>(generators) + static_cast<long>(relators.size());
    return GroupPresentation(generators, std::move(relators), std::move(abelianization), e);
  }

  std::size_t generators() const { return g_; }
  std::size_t rank() const { return r_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<std::vector<long>>& abelianization() const { return ab_; }
  long euler() const { return euler_; }
  long complex_euler() const { return 1 - static_cast<long>(g_) + static_cast<long>(relators_.size()); }

  /// Image of a word in H_1 = Z^r.
  std::vector<long> abelianize(const Word& w) const {
    std::vector<long> v(r_, 0);
    for (int x : w) {
      const auto& row = ab_[static_cast<std::size_t>(std::abs(x)) - 1];
      for (std::size_t i = 0; i < r_; ++i) v[i] += x > 0 ? row[i] : -row[i];
    }
    return v;
  }

  /// Value of a character of H_1 on generator j.
  RootOfUnity character_on_generator(const Character& chi, std::size_t j) const {
    if (chi.size() != r_) throw PreconditionError("character has " + std::to_string(chi.size()) + " coordinates, H_1 has rank " + std::to_string(r_));
    return chi.monomial(ab_[j]);
  }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  // The relator exponent-sum lattice must be exactly the kernel of Z^g -> Z^r
  // and the map must be onto, so that H_1 really is Z^r.
  void validate_abelianization() const {
    IntMatrix rel;
    for (const auto& w : relators_) {
      std::vector<Integer> row(g_, Integer(0));
      for (int x : w) row[static_cast<std::size_t>(std::abs(x)) - 1] += x > 0 ? 1 : -1;
      rel.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < relators_.size(); ++k)
      for (long v : abelianize(relators_[k]))
        if (v != 0) throw PreconditionError("relator " + std::to_string(k + 1) + " does not abelianize to zero");
    if (r_ > 0) {
      auto h = hermite_normal_form(to_int_matrix(ab_), r_);
      if (h.rank != r_) throw PreconditionError("abelianization is not onto Z^r");
      for (std::size_t i = 0; i < r_; ++i)
        if (h.form[i][i] != 1) throw PreconditionError("abelianization is not onto Z^r");
    }
    IntMatrix abt(r_, std::vector<Integer>(g_, Integer(0)));
    for (std::size_t j = 0; j < g_; ++j)
      for (std::size_t i = 0; i < r_; ++i) abt[i][j] = ab_[j][i];
    const auto kernel_basis = integer_kernel(abt, g_);
    IntMatrix rel_hnf;
    if (!rel.empty()) {
      auto h = hermite_normal_form(rel, g_);
      rel_hnf.assign(h.form.begin(), h.form.begin() + static_cast<long>(h.rank));
    }
    if (rel_hnf != kernel_basis) throw PreconditionError("relators do not present H_1 = Z^r (torsion or missing relations)");
  }

  std::size_t g_ = 0;
  std::vector<Word> relators_;
  std::vector<std::vector<long>> ab_;
  std::size_t r_ = 0;
  long euler_ = 1;
};

/// Fox derivatives d r_i / d x_j pushed into a ring through `image`, where
/// image(j, +1) and image(j, -1) are the images of x_j and x_j^{-1}.
/// Returns the (relators x generators) matrix.
template <class Ring, class Image>
std::vector<std::vector<Ring>> fox_jacobian(const GroupPresentation& p, const Ring& one, const Ring& zero, Image image) {
  std::vector<std::vector<Ring>> j(p.relators().size(), std::vector<Ring>(p.generators(), zero));
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    Ring prefix = one;
    for (int x : p.relators()[i]) {
      const std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
      if (x > 0) {
        j[i][g] = j[i][g] + prefix;
        prefix = prefix * image(g, 1);
      } else {
        prefix = prefix * image(g, -1);
        j[i][g] = j[i][g] - prefix;
      }
    }
  }
  return j;
}

using LaurentPolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Fox Jacobian in the group ring of H_1 = Z^r.
inline LaurentPolyMatrix fox_matrix(const GroupPresentation& p) {
  const std::size_t r = p.rank();
  auto image = [&](std::size_t g, int sign) {
    std::vector<long> e = p.abelianization()[g];
    if (sign < 0)
      for (auto& x : e) x = -x;
    return LaurentPoly::monomial(r, e, CyclotomicNumber(1));
  };
  return fox_jacobian(p, LaurentPoly::constant(r, CyclotomicNumber(1)), LaurentPoly(r), image);
}

/// Row-wise sum_j (d r / d x_j)(x_j - 1); zero for a valid presentation.
inline std::vector<LaurentPoly> fox_identity_residuals(const GroupPresentation& p, const LaurentPolyMatrix& j) {
  const std::size_t r = p.rank();
  std::vector<LaurentPoly> out;
  for (const auto& row : j) {
    LaurentPoly s(r);
    for (std::size_t g = 0; g < row.size(); ++g) {
      const auto xg = LaurentPoly::monomial(r, p.abelianization()[g], CyclotomicNumber(1));
      s = s + row[g] * (xg - LaurentPoly::constant(r, CyclotomicNumber(1)));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hodgeloci
