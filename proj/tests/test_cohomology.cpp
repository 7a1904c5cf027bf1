#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <set>

#include "hodgeloci/cohomology.hpp"
#include "hodgeloci/families.hpp"
#include "hodgeloci/json_io.hpp"
#include "support.hpp"

using namespace hodgeloci;
using testing_support::random_character;
using testing_support::random_nowhere_trivial_character;
using testing_support::uniform;

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// dim A^2 = sum over affine intersection points of (mult - 1), points found
// by pairwise cross products.
long os_degree2_oracle(const std::vector<std::vector<long>>& lines, std::size_t inf) {
  std::map<std::vector<long>, std::set<std::size_t>> pts;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& a = lines[i];
      const auto& b = lines[j];
      std::vector<long> p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      long g = 0;
      for (long x : p) g = std::gcd(g, x);
      for (auto& x : p) x /= g;
      for (long x : p)
        if (x != 0) {
          if (x < 0)
            for (auto& y : p) y = -y;
          break;
        }
      pts[p].insert(i);
      pts[p].insert(j);
    }
  long total = 0;
  for (const auto& [p, s] : pts)
    if (!s.count(inf)) total += static_cast<long>(s.size()) - 1;
  return total;
}

std::vector<Rational> logs(const Character& chi) { return chi.log().alphas(); }

const std::vector<std::vector<long>> kCevaLines{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {1, 0, -1}};

// Gysin sequence for a circle bundle with Chern class c:
// H^i(E) = coker(c: H^{i-2} -> H^i) + ker(c: H^{i-1} -> H^{i+1}).
long gysin_oracle(const GradedAlgebra& b, std::size_t i) {
  const auto& c = b.chern.at(0);
  auto mult_rank = [&](long d) -> long {
    if (d < 0 || b.dim(static_cast<std::size_t>(d)) == 0 || b.dim(static_cast<std::size_t>(d) + 2) == 0) return 0;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t x = 0; x < b.dim(static_cast<std::size_t>(d)); ++x) {
      std::vector<Rational> e(b.dim(static_cast<std::size_t>(d)), Rational(0));
      e[x] = Rational(1);
      rows.push_back(b.multiply(static_cast<std::size_t>(d), e, 2, c));
    }
    return static_cast<long>(testing_support::gauss_rank(rows));
  };
  const long di = static_cast<long>(b.dim(i));
  const long dprev = i >= 1 ? static_cast<long>(b.dim(i - 1)) : 0;
  return (di - mult_rank(static_cast<long>(i) - 2)) + (dprev - mult_rank(static_cast<long>(i) - 1));
}

GradedAlgebra p1_times_p1(long c1, long c2) {
  GradedAlgebra g;
  g.dims = {1, 0, 2, 0, 1};
  g.mult[{2, 0, 2, 1}] = {Rational(1)};
  g.mult[{2, 1, 2, 0}] = {Rational(1)};
  g.mult[{2, 0, 2, 0}] = {Rational(0)};
  g.mult[{2, 1, 2, 1}] = {Rational(0)};
  g.chern = {{Rational(c1), Rational(c2)}};
  return g;
}

}  // namespace

TEST(OSAlgebra, Dimensions) {
  EXPECT_EQ(os_algebra(families::generic_lines(3)).dims(), (std::array<std::size_t, 3>{1, 3, 3}));
  const Arrangement one(2, std::vector<std::vector<long>>{{1, 0, 0}, {0, 0, 1}}, 1);
  EXPECT_EQ(os_algebra(one).dims(), (std::array<std::size_t, 3>{1, 1, 0}));
  for (std::size_t r = 2; r <= 7; ++r) {
    const auto d = os_algebra(families::generic_lines(r)).dims();
    EXPECT_EQ(d[1], r);
    EXPECT_EQ(static_cast<long>(d[2]), binom(static_cast<long>(r), 2));
  }
  for (std::size_t inf = 0; inf < kCevaLines.size(); ++inf) {
    const auto os = os_algebra(Arrangement(2, kCevaLines, inf));
    EXPECT_EQ(os.dims()[1], 5u);
    EXPECT_EQ(static_cast<long>(os.dims()[2]), os_degree2_oracle(kCevaLines, inf));
  }
}

TEST(OSAlgebra, GradedCommutativeAndOrlikSolomonRelation) {
  const auto os = os_algebra(Arrangement(2, kCevaLines, 2));
  const std::size_t n = os.lines.size();
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(os.product(i, i), std::vector<long>(os.degree2.size(), 0));
    for (std::size_t j = 0; j < n; ++j) {
      auto a = os.product(i, j), b = os.product(j, i);
      for (auto& x : b) x = -x;
      EXPECT_EQ(a, b);
    }
  }
  // e_i e_j - e_i e_k + e_j e_k = 0 at every triple point
  for (const auto& p : incidence(Arrangement(2, kCevaLines, 2))) {
    if (p.multiplicity() != 3 || std::count(p.incident.begin(), p.incident.end(), 2u)) continue;
    std::vector<std::size_t> g;
    for (auto h : p.incident) g.push_back(static_cast<std::size_t>(std::find(os.lines.begin(), os.lines.end(), h) - os.lines.begin()));
    const auto a = os.product(g[0], g[1]), b = os.product(g[0], g[2]), c = os.product(g[1], g[2]);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k] - b[k] + c[k], 0);
  }
}

TEST(Aomoto, Examples) {
  const auto three = families::generic_lines(3);
  EXPECT_EQ(aomoto_cohomology(three, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}), (Betti{0, 0, 1}));
  for (const auto& arr : {families::generic_lines(4), Arrangement(2, kCevaLines, 2), families::ceva()}) {
    const auto d = os_algebra(arr).dims();
    EXPECT_EQ(aomoto_cohomology(arr, std::vector<Rational>(d[1], Rational(0))),
              (Betti{1, static_cast<long>(d[1]), static_cast<long>(d[2])}));
  }
  const auto five = families::generic_lines(5);
  for (int k = 0; k < 10; ++k) {
    const auto chi = random_nowhere_trivial_character(5, 7);
    auto a = logs(chi);
    if (!aomoto_nonresonant(five, a)) continue;
    EXPECT_EQ(aomoto_cohomology(five, a), (Betti{0, 0, 6}));
  }
  EXPECT_THROW(aomoto_cohomology(five, {Rational(1, 2)}), PreconditionError);
}

TEST(Koszul, Examples) {
  for (std::size_t r = 1; r <= 6; ++r) {
    const Character one(std::vector<RootOfUnity>(r, RootOfUnity()));
    EXPECT_EQ(koszul_generic_oracle(r, one), (Betti{1, static_cast<long>(r), binom(static_cast<long>(r), 2)}));
  }
  EXPECT_EQ(koszul_generic_oracle(5, random_nowhere_trivial_character(5, 6)), (Betti{0, 0, 6}));
  // (zeta_2, 1, 1): c = (-2, 0, 0); d0 has rank 1, d(e_1) = -2 e01 and
  // d(e_2) = -2 e02 give rank 2, so (0, 3 - 1 - 2, 3 - 2)
  const Character z2({RootOfUnity::of(2, 1), RootOfUnity(), RootOfUnity()});
  EXPECT_EQ(koszul_generic_oracle(3, z2), (Betti{0, 0, 1}));
  EXPECT_THROW(koszul_generic_oracle(3, Character({RootOfUnity()})), PreconditionError);
}

TEST(Koszul, MatchesFoxOnTorusSkeleton) {
  for (std::size_t r = 2; r <= 5; ++r) {
    const auto p = families::torus_skeleton(r);
    for (int k = 0; k < 8; ++k) {
      const auto chi = random_character(r, static_cast<long>(uniform(2, 6)));
      EXPECT_EQ(koszul_generic_oracle(r, chi), fox_cohomology(p, chi));
    }
  }
}

TEST(CrossEngine, GenericArrangements) {
  for (std::size_t r = 3; r <= 8; ++r) {
    const auto arr = families::generic_lines(r);
    const long closed = 1 + static_cast<long>(r * r - 3 * r) / 2;
    for (int k = 0; k < 6; ++k) {
      const auto chi = random_nowhere_trivial_character(r, static_cast<long>(uniform(2, 9)));
      const auto ko = koszul_generic_oracle(r, chi);
      EXPECT_EQ(ko, (Betti{0, 0, closed}));
      // generic arrangements have trivial resonance, so Aomoto agrees even when a_infinity is an integer
      EXPECT_EQ(aomoto_cohomology(arr, logs(chi)), ko);
    }
  }
}

TEST(Fox, Examples) {
  const auto z3 = RootOfUnity::of(3, 1);
  EXPECT_EQ(fox_cohomology(families::free_group(2), Character({z3, z3})), (Betti{0, 1, 0}));
  for (std::size_t r = 1; r <= 5; ++r) {
    const auto p = families::free_group(r);
    const auto chi = random_nowhere_trivial_character(r, 5);
    EXPECT_EQ(fox_cohomology(p, chi)[1], static_cast<long>(r) - 1);
    EXPECT_EQ(fox_cohomology(p, Character(std::vector<RootOfUnity>(r, RootOfUnity())))[0], 1);
  }
  const auto tre = families::trefoil();
  EXPECT_EQ(fox_cohomology(tre, Character({RootOfUnity::of(6, 1)}))[1], 1);
  EXPECT_EQ(fox_cohomology(tre, Character({RootOfUnity::of(6, 5)}))[1], 1);
  EXPECT_EQ(fox_cohomology(tre, Character({RootOfUnity::of(5, 1)})), (Betti{0, 0, 0}));
  EXPECT_EQ(fox_cohomology(tre, Character({RootOfUnity()})), (Betti{1, 1, 0}));
  EXPECT_THROW(fox_cohomology(tre, Character({z3, z3})), PreconditionError);
  EXPECT_THROW(fox_cohomology(families::free_group(2), Character({z3}), -5), PreconditionError);
}

TEST(Fox, GeneratorValuesAndAbelianization) {
  const auto tre = families::trefoil();
  const auto z6 = RootOfUnity::of(6, 1);
  EXPECT_EQ(fox_cohomology_on_generators(tre, {z6, z6}, 0)[1], 1);
  EXPECT_THROW(fox_cohomology_on_generators(tre, {z6, RootOfUnity::of(6, 2)}, 0), PreconditionError);
  // relator a b a^-1 b^-1 is not in the kernel of a -> 1, b -> 0
  EXPECT_THROW(GroupPresentation(2, {{1, 2, -1, -2}}, {{1}, {0}}, 0), PreconditionError);
  // the relator lattice must fill the kernel
  EXPECT_THROW(GroupPresentation(2, {}, {{1}, {1}}, 0), PreconditionError);
  EXPECT_THROW(GroupPresentation(2, {{1, 3}}, {}, 0), PreconditionError);
}

TEST(Fox, EulerIdentityAcrossCorpus) {
  std::vector<GroupPresentation> corpus;
  for (const auto& e : std::filesystem::directory_iterator(testing_support::data_path("presentations")))
    corpus.push_back(io::decode_presentation(io::load_file(e.path().string())));
  ASSERT_GE(corpus.size(), 5u);
  for (int k = 0; k < 100; ++k) {
    const auto& p = corpus[static_cast<std::size_t>(k) % corpus.size()];
    const auto chi = random_character(p.rank(), static_cast<long>(uniform(1, 8)));
    const auto d = fox_cohomology_detail(p, chi, p.euler());
    EXPECT_EQ(d.h[0] - d.h[1] + d.h[2], p.euler());
    // every corpus presentation complex has the declared Euler characteristic
    EXPECT_EQ(p.complex_euler(), p.euler());
    EXPECT_EQ(d.h[2], d.complex_h2);
    if (!chi.is_trivial()) {
      EXPECT_EQ(d.h[0], 0);
    }
  }
}

TEST(Routing, EngineSelection) {
  const auto g4 = families::generic_lines(4);
  const std::vector<Rational> nonres{Rational(1, 5), Rational(2, 7), Rational(1, 3), Rational(1, 11)};
  auto c = arrangement_cohomology(g4, nonres);
  EXPECT_EQ(c.engine, "aomoto");
  EXPECT_EQ(c.h, (Betti{0, 0, 3}));
  // a_1 = 0 is resonant; the generic arrangement falls back to Koszul
  c = arrangement_cohomology(g4, {Rational(0), Rational(1, 2), Rational(1, 3), Rational(1, 4)});
  EXPECT_EQ(c.engine, "koszul");
  EXPECT_EQ(c.h, koszul_generic_oracle(4, Character({RootOfUnity(), RootOfUnity::of(2, 1), RootOfUnity::of(3, 1), RootOfUnity::of(4, 1)})));
  // a_infinity = -1 is an integer
  EXPECT_FALSE(aomoto_nonresonant(g4, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}));

  const auto ceva = families::ceva();
  std::vector<Rational> third(6, Rational(1, 3));
  EXPECT_FALSE(aomoto_nonresonant(ceva, third));
  EXPECT_THROW(arrangement_cohomology(ceva, third), PreconditionError);
  const std::vector<Rational> ok{Rational(1, 7), Rational(1, 11), Rational(1, 13), Rational(1, 17), Rational(1, 19), Rational(1, 23)};
  ASSERT_TRUE(aomoto_nonresonant(ceva, ok));
  c = arrangement_cohomology(ceva, ok);
  EXPECT_EQ(c.engine, "aomoto");
  const auto d = os_algebra(ceva).dims();
  // nonresonant: only the top degree survives, of size the Euler characteristic
  EXPECT_EQ(c.h, (Betti{0, 0, 1 - static_cast<long>(d[1]) + static_cast<long>(d[2])}));
}

TEST(TorusBundle, PointBase) {
  for (std::size_t k = 0; k <= 5; ++k) {
    auto b = GradedAlgebra::point();
    b.chern.assign(k, {});
    for (std::size_t i = 0; i <= k + 1; ++i)
      EXPECT_EQ(torus_bundle_cohomology(b, i), binom(static_cast<long>(k), static_cast<long>(i)));
  }
}

TEST(TorusBundle, P1Base) {
  for (long d : {1L, -1L, 2L, 7L}) {
    auto b = GradedAlgebra::p1();
    b.chern = {{Rational(d)}};
    EXPECT_EQ(torus_bundle_cohomology(b, 0), 1);
    EXPECT_EQ(torus_bundle_cohomology(b, 1), 0);
    EXPECT_EQ(torus_bundle_cohomology(b, 2), 0);
    EXPECT_EQ(torus_bundle_cohomology(b, 3), 1);
  }
  auto b = GradedAlgebra::p1();
  b.chern = {{Rational(0)}};
  for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(torus_bundle_cohomology(b, i), 1);
  b.chern = {{Rational(0)}, {Rational(0)}};
  const std::vector<long> kunneth{1, 2, 2, 2, 1};
  for (std::size_t i = 0; i < kunneth.size(); ++i) EXPECT_EQ(torus_bundle_cohomology(b, i), kunneth[i]);
  b.chern = {{Rational(1), Rational(0)}};
  EXPECT_THROW(torus_bundle_cohomology(b, 1), PreconditionError);
}

TEST(TorusBundle, GysinOnP1xP1) {
  for (auto [c1, c2] : std::vector<std::pair<long, long>>{{1, 1}, {1, 0}, {0, 0}, {2, -3}}) {
    const auto b = p1_times_p1(c1, c2);
    EXPECT_TRUE(b.check_associativity());
    for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(torus_bundle_cohomology(b, i), gysin_oracle(b, i)) << c1 << "," << c2 << " i=" << i;
  }
}
