#pragma once

// Line arrangements in P^2 (and the supported plane arrangements in P^3):
// incidence, residue functionals of the Deligne extension on the log
// resolution, and the decomposition of U into cells of constant extension.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/matrix.hpp"
#include "hodgeloci/rational.hpp"
#include "hodgeloci/torus.hpp"

namespace hodgeloci {

using ProjectiveVector = std::vector<Integer>;

/// Divides out the content and makes the first nonzero entry positive.
inline ProjectiveVector primitive_projective(ProjectiveVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw PreconditionError("zero vector is not a projective point");
  std::size_t k = 0;
  while (v[k] == 0) ++k;
  if (v[k] < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

inline Integer dot(const ProjectiveVector& a, const ProjectiveVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::size_t integer_rank(const std::vector<ProjectiveVector>& rows) {
  if (rows.empty()) return 0;
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
  return rank(m);
}

/// Common zero of dim forms in general position in P^dim (signed maximal minors).
inline ProjectiveVector common_zero(const std::vector<ProjectiveVector>& forms) {
  const std::size_t n = forms.size() + 1;
  ProjectiveVector p(n, Integer(0));
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix m(forms.size(), forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) m(i, k++) = Rational(forms[i][j]);
    }
    const Rational d = determinant(m);
    p[c] = ((c % 2 == 0) ? d : -d).numerator();
  }
  return primitive_projective(std::move(p));
}

class Arrangement {
 public:
  Arrangement() = default;
  /// Hyperplanes as integer linear forms in dim+1 homogeneous variables.
  Arrangement(int dim, const std::vector<ProjectiveVector>& hyperplanes, std::optional<std::size_t> infinity)
      : dim_(dim), infinity_(infinity) {
    if (dim != 2 && dim != 3) throw PreconditionError("only arrangements in P^2 and P^3 are supported");
    std::set<ProjectiveVector> seen;
    for (const auto& h : hyperplanes) {
      if (h.size() != static_cast<std::size_t>(dim + 1)) throw PreconditionError("hyperplane has wrong number of coefficients");
      auto p = primitive_projective(h);
      if (!seen.insert(p).second) throw PreconditionError("duplicate hyperplane");
      h_.push_back(std::move(p));
    }
    if (infinity && *infinity >= h_.size()) throw PreconditionError("infinity index out of range");
  }
  Arrangement(int dim, const std::vector<std::vector<long>>& hyperplanes, std::optional<std::size_t> infinity)
      : Arrangement(dim, to_projective(hyperplanes), infinity) {}

  int dim() const { return dim_; }
  std::size_t size() const { return h_.size(); }
  const std::vector<ProjectiveVector>& hyperplanes() const { return h_; }
  const std::optional<std::size_t>& infinity() const { return infinity_; }

  /// Indices of the hyperplanes that carry a weight coordinate, in order.
  std::vector<std::size_t> coordinate_hyperplanes() const {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < h_.size(); ++i)
      if (!infinity_ || i != *infinity_) c.push_back(i);
    return c;
  }

  /// Restricts the blow-up functionals to these points (P^3 families whose
  /// exceptional locus is known). Unset means every non-normal point.
  void set_base_locus(std::vector<ProjectiveVector> points) {
    std::set<ProjectiveVector> b;
    for (auto& p : points) {
      if (p.size() != static_cast<std::size_t>(dim_ + 1)) throw PreconditionError("base point has wrong number of coordinates");
      b.insert(primitive_projective(std::move(p)));
    }
    base_locus_ = std::vector<ProjectiveVector>(b.begin(), b.end());
  }
  const std::optional<std::vector<ProjectiveVector>>& base_locus() const { return base_locus_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  static std::vector<ProjectiveVector> to_projective(const std::vector<std::vector<long>>& v) {
    std::vector<ProjectiveVector> out;
    for (const auto& row : v) {
      ProjectiveVector p;
      for (long x : row) p.emplace_back(x);
      out.push_back(std::move(p));
    }
    return out;
  }

  int dim_ = 2;
  std::vector<ProjectiveVector> h_;
  std::optional<std::size_t> infinity_;
  std::optional<std::vector<ProjectiveVector>> base_locus_;
};

struct IncidencePoint {
  ProjectiveVector point;
  std::vector<std::size_t> incident;  // ascending hyperplane indices
  std::size_t multiplicity() const { return incident.size(); }
  friend bool operator==(const IncidencePoint&, const IncidencePoint&) = default;
};

namespace detail {

inline std::vector<std::size_t> hyperplanes_through(const Arrangement& a, const ProjectiveVector& p) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (dot(a.hyperplanes()[i], p) == 0) s.push_back(i);
  return s;
}

// Rejects lines of P^3 lying on three or more planes.
inline void check_no_triple_lines(const Arrangement& a) {
  const auto& h = a.hyperplanes();
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      for (std::size_t k = j + 1; k < h.size(); ++k)
        if (integer_rank({h[i], h[j], h[k]}) == 2)
          throw PreconditionError("planes " + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                                  " share a line; non-isolated singular strata are not supported");
}

}  // namespace detail

/// In P^2: every intersection point of two or more lines. In P^3: every point
/// on three or more planes. Sorted lexicographically by normalized coordinates.
inline std::vector<IncidencePoint> incidence(const Arrangement& a) {
  const auto& h = a.hyperplanes();
  std::map<ProjectiveVector, std::vector<std::size_t>> points;
  if (a.dim() == 2) {
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        const auto p = common_zero({h[i], h[j]});
        if (!points.count(p)) points.emplace(p, detail::hyperplanes_through(a, p));
      }
  } else {
    detail::check_no_triple_lines(a);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        for (std::size_t k = j + 1; k < h.size(); ++k) {
          if (integer_rank({h[i], h[j], h[k]}) < 3) continue;
          const auto p = common_zero({h[i], h[j], h[k]});
          if (!points.count(p)) points.emplace(p, detail::hyperplanes_through(a, p));
        }
  }
  std::vector<IncidencePoint> out;
  for (auto& [p, s] : points) out.push_back({p, s});
  return out;
}

enum class StratumKind { hyperplane, point, global };

struct ResidueFunctional {
  std::string label;
  StratumKind kind = StratumKind::hyperplane;
  std::vector<std::size_t> support;  // hyperplane indices involved
  LinearFunctional functional;
};

/// Residue functionals on U = [0,1)^r, r = number of non-infinity hyperplanes.
struct ResidueSystem {
  std::size_t dim = 0;
  std::vector<std::size_t> coordinate_hyperplanes;
  std::vector<ResidueFunctional> functionals;
};

inline ResidueSystem residue_system(const Arrangement& a) {
  ResidueSystem rs;
  rs.coordinate_hyperplanes = a.coordinate_hyperplanes();
  rs.dim = rs.coordinate_hyperplanes.size();
  std::map<std::size_t, std::size_t> coord_of;
  for (std::size_t c = 0; c < rs.dim; ++c) coord_of[rs.coordinate_hyperplanes[c]] = c;

  for (std::size_t c = 0; c < rs.dim; ++c) {
    const auto i = rs.coordinate_hyperplanes[c];
    rs.functionals.push_back({"H" + std::to_string(i), StratumKind::hyperplane, {i}, LinearFunctional::coordinate(rs.dim, c)});
  }
  const std::size_t non_normal = static_cast<std::size_t>(a.dim()) + 1;
  const auto pts = incidence(a);
  std::size_t base_hits = 0;
  for (const auto& p : pts) {
    if (p.multiplicity() < non_normal) continue;
    if (a.base_locus()) {
      const auto& b = *a.base_locus();
      if (!std::binary_search(b.begin(), b.end(), p.point)) continue;
      ++base_hits;
    }
    if (a.infinity() && std::count(p.incident.begin(), p.incident.end(), *a.infinity()))
      throw PreconditionError("hyperplane at infinity passes through a non-normal-crossing point");
    LinearFunctional f{std::vector<long>(rs.dim, 0), Rational(0)};
    std::string label = "P(";
    for (std::size_t k = 0; k < p.point.size(); ++k) label += (k ? ":" : "") + p.point[k].get_str();
    label += ")";
    for (auto i : p.incident) f.coeffs[coord_of.at(i)] = 1;
    rs.functionals.push_back({label, StratumKind::point, p.incident, std::move(f)});
  }
  if (a.base_locus() && base_hits != a.base_locus()->size())
    throw PreconditionError("base locus contains a point that is not a non-normal crossing");
  if (a.infinity()) {
    LinearFunctional f{std::vector<long>(rs.dim, 1), Rational(0)};
    rs.functionals.push_back({"sum", StratumKind::global, {*a.infinity()}, std::move(f)});
  }
  return rs;
}

/// Which end of each unit interval a cell keeps: s - 1 < L <= s (upper
/// closed, the Deligne [-L] convention) or s <= L < s + 1 (lower closed).
enum class CellConvention { upper_closed, lower_closed };

inline long cell_index(const Rational& value, CellConvention c) {
  const Integer k = c == CellConvention::upper_closed ? value.ceil() : value.floor();
  return k.get_si();
}

struct Cell {
  std::vector<long> signature;  // one integer per residue functional
  Polytope polytope;
  WeightVector witness;
};

inline std::vector<long> signature_of(const ResidueSystem& rs, const WeightVector& u,
                                      CellConvention c = CellConvention::upper_closed) {
  std::vector<long> s;
  for (const auto& f : rs.functionals) s.push_back(cell_index(f.functional(u), c));
  return s;
}

namespace detail {

inline Constraint cell_constraint(const LinearFunctional& f, long s, CellConvention c) {
  return c == CellConvention::upper_closed ? Constraint::upper_closed_cell(f, Rational(s))
                                           : Constraint::lower_closed_cell(f, Rational(s));
}

inline void enumerate_cells(const ResidueSystem& rs, CellConvention conv, std::size_t level, Polytope& current,
                            std::vector<long>& signature, const WeightVector& witness, std::vector<Cell>& out) {
  if (level == rs.functionals.size()) {
    out.push_back({signature, current, witness});
    return;
  }
  const auto& f = rs.functionals[level].functional;
  const auto [lo, hi] = f.range_on_cube();
  const long s0 = cell_index(lo, conv) - 1, s1 = cell_index(hi, conv) + 1;
  for (long s = s0; s <= s1; ++s) {
    current.constraints.push_back(cell_constraint(f, s, conv));
    // cheap accept: the parent witness already lies in this slab
    std::optional<WeightVector> w;
    if (current.constraints.back().satisfied_by(f(witness))) {
      w = witness;
    } else {
      w = current.witness();
    }
    if (w) {
      signature.push_back(s);
      enumerate_cells(rs, conv, level + 1, current, signature, *w, out);
      signature.pop_back();
    }
    current.constraints.pop_back();
  }
}

}  // namespace detail

/// Cells of U on which every residue functional has constant integer part
/// (ceil for upper_closed, floor for lower_closed), sorted by signature.
inline std::vector<Cell> polytope_decomposition(const ResidueSystem& rs,
                                                CellConvention conv = CellConvention::upper_closed) {
  Polytope root{rs.dim, {}};
  const auto w = root.witness();
  if (!w) throw InvariantError("fundamental domain reported empty");
  std::vector<Cell> out;
  std::vector<long> signature;
  detail::enumerate_cells(rs, conv, 0, root, signature, *w, out);
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return a.signature < b.signature; });
  return out;
}

inline std::vector<Cell> polytope_decomposition(const Arrangement& a,
                                                CellConvention conv = CellConvention::upper_closed) {
  return polytope_decomposition(residue_system(a), conv);
}

/// Index of the cell containing u.
inline std::size_t locate_cell(const std::vector<Cell>& cells, const WeightVector& u) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].polytope.contains(u)) return i;
  throw InvariantError("point lies in no decomposition cell");
}

}  // namespace hodgeloci
