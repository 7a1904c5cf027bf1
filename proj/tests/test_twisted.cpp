#include <gtest/gtest.h>

#include "hodgeloci/charvar.hpp"
#include "hodgeloci/families.hpp"
#include "hodgeloci/json_io.hpp"
#include "hodgeloci/twisted.hpp"
#include "support.hpp"

using namespace hodgeloci;
using testing_support::data_path;
using testing_support::uniform;

namespace {

Laurent1 poly(const std::vector<long>& c) { return Laurent1::from_coefficients(c).normalized(); }

// p(xi t)
Laurent1 substitute_scaled(const Laurent1& p, const RootOfUnity& xi) {
  Laurent1 out;
  for (long e = p.low(); e <= p.high(); ++e) {
    const auto c = p.coefficient(e);
    if (c.is_zero()) continue;
    out = out + Laurent1::monomial(c * RootOfUnity(xi.angle() * Rational(e)).value(), e);
  }
  return out.normalized();
}

UnitaryRep load_rep(const std::string& name) { return io::decode_rep(io::load_file(data_path("reps/" + name + ".json"))); }

TwistedAlexanderData knot_data(const GroupPresentation& p, const UnitaryRep& rho) {
  return TwistedAlexanderData(p, {1, 1}, rho);
}

UnitaryRep abelian_rank_one(const std::vector<long>& eps, const RootOfUnity& xi) {
  std::vector<RootOfUnity> v;
  for (long e : eps) v.emplace_back(xi.angle() * Rational(e));
  return UnitaryRep::rank_one(v);
}

}  // namespace

TEST(FoxMatrix, Commutator) {
  const auto p = GroupPresentation::with_complex_euler(2, {{1, 2, -1, -2}});
  const auto m = fox_matrix(p);
  ASSERT_EQ(m.size(), 1u);
  ASSERT_EQ(m[0].size(), 2u);
  const auto one = LaurentPoly::constant(2, CyclotomicNumber(1));
  const auto t1 = LaurentPoly::monomial(2, {1, 0}, CyclotomicNumber(1));
  const auto t2 = LaurentPoly::monomial(2, {0, 1}, CyclotomicNumber(1));
  EXPECT_EQ(m[0][0], one - t2);
  EXPECT_EQ(m[0][1], t1 - one);
  EXPECT_TRUE(fox_matrix(families::free_group(3)).empty());
}

TEST(FoxMatrix, TrefoilRow) {
  const auto m = fox_matrix(families::trefoil());
  ASSERT_EQ(m.size(), 1u);
  const auto one = LaurentPoly::constant(1, CyclotomicNumber(1));
  const auto t = LaurentPoly::monomial(1, {1}, CyclotomicNumber(1));
  const auto delta = t * t - t + one;
  EXPECT_EQ(m[0][0], delta);
  EXPECT_EQ(m[0][1], -delta);
}

TEST(FoxMatrix, FundamentalIdentityAcrossCorpus) {
  for (const auto& name : {"free2", "free3", "cyclic", "trefoil", "figure8", "torus_skeleton3"}) {
    const auto p = io::decode_presentation(io::load_file(data_path(std::string("presentations/") + name + ".json")));
    for (const auto& r : fox_identity_residuals(p, fox_matrix(p))) EXPECT_TRUE(r.is_zero()) << name;
  }
}

TEST(TwistedAlexander, Trefoil) {
  const auto d = knot_data(families::trefoil(), load_rep("trivial1"));
  EXPECT_EQ(twisted_alexander(d, 1), poly({1, -1, 1}));
  EXPECT_EQ(twisted_alexander(d, 0), poly({-1, 1}));
  EXPECT_EQ(twisted_alexander(d, 2), Laurent1(1));
  const auto [num, den] = homology_torsion(d);
  EXPECT_EQ(num, poly({1, -1, 1}));
  EXPECT_EQ(den, poly({-1, 1}));
  // deterministic normalization
  EXPECT_EQ(twisted_alexander(d, 1).str(), twisted_alexander(d, 1).str());
  EXPECT_THROW(twisted_alexander(d, 3), PreconditionError);
}

TEST(TwistedAlexander, SignRepresentation) {
  const auto d = knot_data(families::trefoil(), load_rep("sign1"));
  EXPECT_EQ(twisted_alexander(d, 1), poly({1, 1, 1}));
  EXPECT_EQ(twisted_alexander(d, 2), Laurent1(1));
  // the substitution t -> -t of the untwisted polynomial
  EXPECT_EQ(twisted_alexander(d, 1), substitute_scaled(poly({1, -1, 1}), RootOfUnity::of(2, 1)));
}

TEST(TwistedAlexander, FigureEight) {
  const auto d = knot_data(families::figure_eight(), load_rep("trivial1"));
  EXPECT_EQ(twisted_alexander(d, 1), poly({1, -3, 1}));
  EXPECT_EQ(twisted_alexander(d, 0), poly({-1, 1}));
  EXPECT_FALSE(cyclotomic_root_check(twisted_alexander(d, 1)).all_roots_cyclotomic);
}

TEST(TwistedAlexander, FreeGroupAndDiagonalRep) {
  const auto p = families::free_group(2);
  const TwistedAlexanderData d(p, sum_epsilon(p), UnitaryRep::trivial(2));
  EXPECT_EQ(twisted_alexander(d, 1), Laurent1(1));
  EXPECT_EQ(twisted_alexander(d, 0), poly({-1, 1}));

  const auto cyc = io::decode_presentation(io::load_file(data_path("presentations/cyclic.json")));
  const TwistedAlexanderData e(cyc, {1}, load_rep("diag_zeta3"));
  const auto z = RootOfUnity::of(3, 1).value();
  const auto expected = ((Laurent1::t() - Laurent1(z)) * (Laurent1::t() - Laurent1(z.inverse()))).normalized();
  EXPECT_EQ(twisted_alexander(e, 0), expected);
  EXPECT_EQ(twisted_alexander(e, 0), poly({1, 1, 1}));
  EXPECT_EQ(twisted_alexander(e, 1), Laurent1(1));
}

TEST(TwistedAlexander, NonAbelianRepresentation) {
  const auto d = knot_data(families::trefoil(), load_rep("s3_perm"));
  const auto d1 = twisted_alexander(d, 1);
  EXPECT_FALSE(d1.is_zero());
  EXPECT_EQ(twisted_alexander(d, 2), Laurent1(1));
  // the permutation rep contains the trivial one, so Delta_0 is divisible by t - 1
  EXPECT_TRUE(poly({-1, 1}).divides(twisted_alexander(d, 0)));
}

TEST(TwistedAlexander, DataValidation) {
  const auto tre = families::trefoil();
  EXPECT_THROW(TwistedAlexanderData(tre, {1, 0}, UnitaryRep::trivial(2)), PreconditionError);
  EXPECT_THROW(TwistedAlexanderData(tre, {2, 2}, UnitaryRep::trivial(2)), PreconditionError);
  EXPECT_THROW(TwistedAlexanderData(tre, {1, 1}, UnitaryRep::trivial(3)), PreconditionError);
  // a -> -1, b -> 1 does not kill aba = bab
  EXPECT_THROW(TwistedAlexanderData(tre, {1, 1}, UnitaryRep::rank_one({RootOfUnity::of(2, 1), RootOfUnity()})), PreconditionError);
  const CyclotomicMatrix not_unitary(1, 1, std::vector<CyclotomicNumber>{CyclotomicNumber(2)});
  EXPECT_THROW(UnitaryRep(1, {not_unitary}), PreconditionError);
}

TEST(TwistedAlexander, AbelianShift) {
  for (const auto& p : {families::trefoil(), families::figure_eight()}) {
    const auto base = twisted_alexander(knot_data(p, UnitaryRep::trivial(2)), 1);
    for (int s = 0; s < 10; ++s) {
      const long n = uniform(2, 12);
      const auto xi = RootOfUnity::of(n, uniform(1, n - 1));
      const auto d = knot_data(p, abelian_rank_one({1, 1}, xi));
      const auto twisted = twisted_alexander(d, 1);
      EXPECT_EQ(twisted, substitute_scaled(base, xi));
      // every root of the twisted polynomial is xi^-1 times a root of the base one
      for (long k = 0; k < 12 * n; ++k) {
        const auto w = RootOfUnity::of(12 * n, k);
        EXPECT_EQ(twisted.eval(w.value()).is_zero(), base.eval((w * xi).value()).is_zero());
      }
    }
  }
}

TEST(CyclotomicRootCheck, Examples) {
  auto c = cyclotomic_root_check(poly({1, -1, 1}));
  EXPECT_TRUE(c.all_roots_cyclotomic);
  ASSERT_EQ(c.factorization.factors.size(), 1u);
  EXPECT_EQ(c.factorization.factors[0].d, 6);
  EXPECT_EQ(c.describe(), "Phi6");
  EXPECT_FALSE(cyclotomic_root_check(poly({-2, 1})).all_roots_cyclotomic);
  c = cyclotomic_root_check(poly({-1, 1}) * poly({-1, 1}) * poly({1, 1, 1}));
  EXPECT_TRUE(c.all_roots_cyclotomic);
  EXPECT_EQ(c.describe(), "Phi1^2 Phi3");
  EXPECT_THROW(cyclotomic_root_check(Laurent1()), PreconditionError);
}

TEST(CyclotomicRootCheck, AbelianCorpus) {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"trefoil", "trivial1"}, {"trefoil", "sign1"}, {"free2", "trivial1"}, {"free2", "sign1"}, {"torus_skeleton3", ""}};
  for (const auto& [pres, rep] : pairs) {
    const auto p = io::decode_presentation(io::load_file(data_path("presentations/" + pres + ".json")));
    const auto rho = rep.empty() ? UnitaryRep::trivial(p.generators()) : load_rep(rep);
    const auto eps = p.rank() == 1 ? std::vector<long>{p.abelianization()[0][0], p.abelianization()[1][0]} : sum_epsilon(p);
    const TwistedAlexanderData d(p, eps, rho);
    for (int k = 0; k <= 2; ++k) EXPECT_TRUE(cyclotomic_root_check(twisted_alexander(d, k)).all_roots_cyclotomic) << pres << " " << rep << " " << k;
  }
  const auto cyc = io::decode_presentation(io::load_file(data_path("presentations/cyclic.json")));
  const TwistedAlexanderData e(cyc, {1}, load_rep("diag_zeta3"));
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(cyclotomic_root_check(twisted_alexander(e, k)).all_roots_cyclotomic);
}

TEST(TwistedCharvar, Examples) {
  const auto z3 = RootOfUnity::of(3, 1);
  EXPECT_EQ(twisted_charvar_dim(families::free_group(2), UnitaryRep::trivial(2), Character({z3, z3})), 1);
  const auto tre = families::trefoil();
  EXPECT_EQ(twisted_charvar_dim(tre, UnitaryRep::trivial(2), Character({RootOfUnity::of(6, 1)})), 1);
  EXPECT_EQ(twisted_charvar_dim(tre, UnitaryRep::trivial(2), Character({RootOfUnity::of(5, 1)})), 0);
  EXPECT_THROW(twisted_charvar_dim(tre, UnitaryRep::trivial(2), Character({RootOfUnity()})), PreconditionError);
}

TEST(TwistedCharvar, DetectsRootsOfDelta) {
  for (const auto& p : {families::trefoil(), families::figure_eight()}) {
    const auto delta = twisted_alexander(knot_data(p, UnitaryRep::trivial(2)), 1);
    for (long n = 2; n <= 12; ++n)
      for (long k = 1; k < n; ++k) {
        const auto w = RootOfUnity::of(n, k);
        const long dim = twisted_charvar_dim(p, UnitaryRep::trivial(2), Character({w}));
        EXPECT_EQ(dim > 0, delta.eval(w.value()).is_zero());
      }
  }
}

TEST(Charvar, SweepOnTrefoilAndFreeGroup) {
  const auto tre = characteristic_variety_sweep(families::trefoil(), 6);
  std::size_t positive = 0;
  for (const auto& pt : tre.points) {
    EXPECT_LE(pt.chi.order(), 6);
    if (pt.depth > 0) ++positive;
  }
  // the trivial character and the two primitive sixth roots
  EXPECT_EQ(positive, 3u);
  for (const auto& c : tre.components) {
    for (const auto& pt : tre.points)
      if (c.subtorus.contains(pt.chi)) {
        EXPECT_GE(pt.depth, c.depth);
      }
  }

  // free group of rank 2: V_1 is the whole torus
  const auto f = characteristic_variety_sweep(families::free_group(2), 4);
  ASSERT_FALSE(f.components.empty());
  EXPECT_EQ(f.components[0].depth, 1);
  EXPECT_EQ(f.components[0].subtorus.dimension(), 2u);
  EXPECT_EQ(f.components[0].hits, f.points.size());
  // orders 1, 2, 3 on Z^2: 1 + 3 + 8
  EXPECT_EQ(characters_of_order_at_most(2, 3).size(), 12u);
  EXPECT_THROW(characters_of_order_at_most(2, 0), PreconditionError);
}
