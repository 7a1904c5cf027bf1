#pragma once

// Sampling reconstruction of characteristic varieties: sweep all characters
// of bounded order, record dim H^1, and fit translated-subtorus candidates
// through the hits. The components are candidates, not a proven decomposition.

#include <set>
#include <vector>

#include "hodgeloci/cohomology.hpp"
#include "hodgeloci/presentation.hpp"
#include "hodgeloci/torus.hpp"

namespace hodgeloci {

/// All characters of Z^r of order <= n, lexicographic in the logs.
inline std::vector<Character> characters_of_order_at_most(std::size_t r, long n) {
  if (n < 1) throw PreconditionError("order bound must be positive");
  std::set<Character> all;
  for (long k = 1; k <= n; ++k)
    for (auto& c : characters_of_order_dividing(r, k))
      if (c.order() <= n) all.insert(std::move(c));
  return {all.begin(), all.end()};
}

struct CharvarPoint {
  Character chi;
  long depth = 0;  // dim H^1(L_chi)
};

struct CharvarComponent {
  long depth = 0;  // the component is a candidate for a piece of V_depth
  TranslatedSubtorus subtorus;
  std::size_t hits = 0;  // sampled characters on it
};

struct CharvarReport {
  long order_bound = 1;
  std::vector<CharvarPoint> points;
  std::vector<CharvarComponent> components;
};

namespace detail {

// Representative of a - b mod Z in (-1/2, 1/2].
inline Rational centered_difference(const Rational& a, const Rational& b) {
  Rational d = (a - b).frac();
  if (d > Rational(1, 2)) d -= Rational(1);
  return d;
}

}  // namespace detail

/// Greedy fit per level l: seed at the first uncovered hit, then absorb hits
/// whose addition keeps every sampled character of the exponentiated affine
/// span at depth >= l.
inline std::vector<CharvarComponent> fit_components(const std::vector<CharvarPoint>& points) {
  std::vector<CharvarComponent> out;
  if (points.empty()) return out;
  const std::size_t r = points.front().chi.size();
  long top = 0;
  for (const auto& p : points) top = std::max(top, p.depth);
  for (long l = 1; l <= top; ++l) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].depth >= l) hits.push_back(i);
    std::vector<bool> covered(points.size(), false);
    auto admissible = [&](const TranslatedSubtorus& t) {
      for (const auto& p : points)
        if (p.depth < l && t.contains(p.chi)) return false;
      return true;
    };
    for (std::size_t seed : hits) {
      if (covered[seed]) continue;
      const auto anchor = points[seed].chi.log().alphas();
      std::vector<std::vector<Rational>> dirs;
      auto t = exponentiate_affine_span(r, dirs, anchor);
      for (std::size_t q : hits) {
        if (t.contains(points[q].chi)) continue;
        std::vector<Rational> d;
        const auto lq = points[q].chi.log().alphas();
        for (std::size_t i = 0; i < r; ++i) d.push_back(detail::centered_difference(lq[i], anchor[i]));
        auto trial = dirs;
        trial.push_back(std::move(d));
        auto candidate = exponentiate_affine_span(r, trial, anchor);
        if (admissible(candidate)) {
          dirs = std::move(trial);
          t = std::move(candidate);
        }
      }
      CharvarComponent c{l, t, 0};
      for (std::size_t q : hits)
        if (t.contains(points[q].chi)) {
          covered[q] = true;
          ++c.hits;
        }
      out.push_back(std::move(c));
    }
  }
  return out;
}

inline CharvarReport characteristic_variety_sweep(const GroupPresentation& p, long order_bound) {
  CharvarReport rep;
  rep.order_bound = order_bound;
  for (auto& chi : characters_of_order_at_most(p.rank(), order_bound)) {
    const long h1 = fox_cohomology(p, chi)[1];
    rep.points.push_back({std::move(chi), h1});
  }
  rep.components = fit_components(rep.points);
  return rep;
}

}  // namespace hodgeloci
