#pragma once

// JSON encoding of inputs (arrangements, presentations, representations,
// point sets) and of every value the CLI reports. Rationals travel as "p/q"
// strings; decode(encode(x)) == x for all encoded types.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hodgeloci/arrangement.hpp"
#include "hodgeloci/errors.hpp"
#include "hodgeloci/hodge.hpp"
#include "hodgeloci/laurent.hpp"
#include "hodgeloci/presentation.hpp"
#include "hodgeloci/torus.hpp"
#include "hodgeloci/twisted.hpp"

namespace hodgeloci::io {

using json = nlohmann::json;

inline json parse_text(const std::string& text, const std::string& source = "input") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

inline const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

}  // namespace detail

inline long decode_long(const json& j) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const auto q = Rational::parse(j.get<std::string>());
    if (!q.is_integer()) throw ParseError("expected an integer, got " + q.str());
    return q.to_long();
  }
  throw ParseError("expected an integer");
}

inline Integer decode_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const auto q = Rational::parse(j.get<std::string>());
    if (!q.is_integer()) throw ParseError("expected an integer, got " + q.str());
    return q.numerator();
  }
  throw ParseError("expected an integer");
}

inline json encode(const Rational& q) { return q.str(); }
inline Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rationals must be \"p/q\" strings or integers");
}

inline std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

inline std::vector<long> parse_long_list(const std::string& csv) {
  std::vector<long> out;
  for (const auto& q : parse_rational_list(csv)) {
    if (!q.is_integer()) throw ParseError("expected integers, got " + q.str());
    out.push_back(q.to_long());
  }
  return out;
}

inline json encode(const CyclotomicNumber& z) {
  json c = json::array();
  for (const auto& x : z.coefficients()) c.push_back(encode(x));
  return {{"order", z.order()}, {"coeffs", c}};
}
inline CyclotomicNumber decode_cyclotomic(const json& j) {
  if (j.is_string() || j.is_number_integer()) return CyclotomicNumber(decode_rational(j));
  const long n = decode_long(detail::field(j, "order"));
  if (n < 1) throw ParseError("cyclotomic order must be positive");
  std::vector<Rational> c;
  for (const auto& x : detail::array(detail::field(j, "coeffs"), "coeffs")) c.push_back(decode_rational(x));
  return CyclotomicNumber(n, c);
}

inline json encode(const RootOfUnity& z) { return {{"order", z.order()}, {"power", z.power()}}; }
inline RootOfUnity decode_root_of_unity(const json& j) {
  const long n = decode_long(detail::field(j, "order"));
  if (n < 1) throw ParseError("root of unity order must be positive");
  return RootOfUnity::of(n, decode_long(detail::field(j, "power")));
}

inline json encode(const Character& chi) {
  json a = json::array();
  for (const auto& x : chi.coords()) a.push_back(encode(x));
  return a;
}
inline Character decode_character(const json& j) {
  std::vector<RootOfUnity> c;
  for (const auto& x : detail::array(j, "character")) c.push_back(decode_root_of_unity(x));
  return Character(std::move(c));
}

inline json encode(const WeightVector& u) {
  json a = json::array();
  for (const auto& x : u.alphas()) a.push_back(encode(x));
  return a;
}
inline WeightVector decode_weights(const json& j) {
  std::vector<Rational> v;
  for (const auto& x : detail::array(j, "weights")) v.push_back(decode_rational(x));
  return WeightVector(std::move(v));
}

inline json encode(const Laurent1& p) {
  json c = json::array();
  if (!p.is_zero())
    for (long e = p.low(); e <= p.high(); ++e) c.push_back(encode(p.coefficient(e)));
  return {{"low", p.is_zero() ? 0 : p.low()}, {"coeffs", c}, {"text", p.str()}};
}
inline Laurent1 decode_laurent(const json& j) {
  const long low = decode_long(detail::field(j, "low"));
  CPoly poly;
  long e = 0;
  for (const auto& x : detail::array(detail::field(j, "coeffs"), "coeffs")) poly = poly + CPoly::monomial(decode_cyclotomic(x), e++);
  return Laurent1(low, poly);
}

inline json encode(const LinearFunctional& f) { return {{"coeffs", f.coeffs}, {"shift", encode(f.shift)}}; }
inline LinearFunctional decode_functional(const json& j) {
  LinearFunctional f;
  for (const auto& x : detail::array(detail::field(j, "coeffs"), "coeffs")) f.coeffs.push_back(decode_long(x));
  f.shift = decode_rational(detail::field(j, "shift"));
  return f;
}

inline json encode(const Constraint& c) {
  json j{{"functional", encode(c.functional)}};
  j["lower"] = c.lower ? encode(*c.lower) : json(nullptr);
  j["lower_strict"] = c.lower_strict;
  j["upper"] = c.upper ? encode(*c.upper) : json(nullptr);
  j["upper_strict"] = c.upper_strict;
  return j;
}
inline Constraint decode_constraint(const json& j) {
  Constraint c;
  c.functional = decode_functional(detail::field(j, "functional"));
  const auto& lo = detail::field(j, "lower");
  if (!lo.is_null()) c.lower = decode_rational(lo);
  const auto& hi = detail::field(j, "upper");
  if (!hi.is_null()) c.upper = decode_rational(hi);
  c.lower_strict = detail::field(j, "lower_strict").get<bool>();
  c.upper_strict = detail::field(j, "upper_strict").get<bool>();
  return c;
}

inline json encode(const Polytope& p) {
  json c = json::array();
  for (const auto& x : p.constraints) c.push_back(encode(x));
  return {{"dim", p.dim}, {"constraints", c}};
}
inline Polytope decode_polytope(const json& j) {
  Polytope p;
  p.dim = static_cast<std::size_t>(decode_long(detail::field(j, "dim")));
  for (const auto& x : detail::array(detail::field(j, "constraints"), "constraints")) p.constraints.push_back(decode_constraint(x));
  return p;
}

inline json encode(const TranslatedSubtorus& t) {
  json e = json::array();
  for (const auto& q : t.equations()) e.push_back({{"m", q.m}, {"tau", encode(q.tau)}});
  return {{"dim", t.ambient_dim()}, {"equations", e}};
}
inline TranslatedSubtorus decode_subtorus(const json& j) {
  std::vector<SubtorusEquation> eqs;
  for (const auto& x : detail::array(detail::field(j, "equations"), "equations")) {
    SubtorusEquation q;
    for (const auto& m : detail::array(detail::field(x, "m"), "m")) q.m.push_back(decode_long(m));
    q.tau = decode_root_of_unity(detail::field(x, "tau"));
    eqs.push_back(std::move(q));
  }
  return TranslatedSubtorus(static_cast<std::size_t>(decode_long(detail::field(j, "dim"))), eqs);
}

inline json encode(const GrFTable& t) {
  json a = json::array();
  for (const auto& [key, v] : t.entries) a.push_back({{"n", key.first}, {"p", key.second}, {"dim", v}});
  return a;
}
inline GrFTable decode_grf(const json& j) {
  GrFTable t;
  for (const auto& x : detail::array(j, "table"))
    t.set(static_cast<int>(decode_long(detail::field(x, "n"))), static_cast<int>(decode_long(detail::field(x, "p"))),
          decode_long(detail::field(x, "dim")));
  return t;
}

// Input geometries.

inline json encode(const Arrangement& a) {
  json lines = json::array();
  for (const auto& h : a.hyperplanes()) {
    json row = json::array();
    for (const auto& x : h) row.push_back(x.get_str());
    lines.push_back(row);
  }
  json j{{"dim", a.dim()}, {"lines", lines}, {"infinity", a.infinity() ? json(*a.infinity()) : json(nullptr)}};
  if (a.base_locus()) {
    json pts = json::array();
    for (const auto& p : *a.base_locus()) {
      json row = json::array();
      for (const auto& x : p) row.push_back(x.get_str());
      pts.push_back(row);
    }
    j["base_locus"] = pts;
  }
  return j;
}
inline Arrangement decode_arrangement(const json& j) {
  const long dim = decode_long(detail::field(j, "dim"));
  std::vector<ProjectiveVector> h;
  for (const auto& row : detail::array(detail::field(j, "lines"), "lines")) {
    ProjectiveVector v;
    for (const auto& x : detail::array(row, "line")) v.push_back(decode_integer(x));
    h.push_back(std::move(v));
  }
  std::optional<std::size_t> inf;
  if (j.contains("infinity") && !j["infinity"].is_null()) {
    const long i = decode_long(j["infinity"]);
    if (i < 0) throw ParseError("infinity index must be nonnegative");
    inf = static_cast<std::size_t>(i);
  }
  Arrangement a(static_cast<int>(dim), h, inf);
  if (j.contains("base_locus") && !j["base_locus"].is_null()) {
    std::vector<ProjectiveVector> pts;
    for (const auto& row : detail::array(j["base_locus"], "base_locus")) {
      ProjectiveVector v;
      for (const auto& x : detail::array(row, "base point")) v.push_back(decode_integer(x));
      pts.push_back(std::move(v));
    }
    a.set_base_locus(std::move(pts));
  }
  return a;
}

inline json encode(const GroupPresentation& p) {
  return {{"generators", p.generators()},
          {"relators", p.relators()},
          {"abelianization", p.abelianization()},
          {"euler", p.euler()}};
}
inline GroupPresentation decode_presentation(const json& j) {
  const long g = decode_long(detail::field(j, "generators"));
  if (g < 0) throw ParseError("generator count must be nonnegative");
  std::vector<Word> rel;
  for (const auto& w : detail::array(detail::field(j, "relators"), "relators")) {
    Word word;
    for (const auto& x : detail::array(w, "relator")) word.push_back(static_cast<int>(decode_long(x)));
    rel.push_back(std::move(word));
  }
  std::vector<std::vector<long>> ab;
  if (j.contains("abelianization") && !j["abelianization"].is_null())
    for (const auto& row : detail::array(j["abelianization"], "abelianization")) {
      std::vector<long> r;
      for (const auto& x : detail::array(row, "abelianization row")) r.push_back(decode_long(x));
      ab.push_back(std::move(r));
    }
  const long euler = j.contains("euler") ? decode_long(j["euler"]) : 1 - g + static_cast<long>(rel.size());
  return GroupPresentation(static_cast<std::size_t>(g), std::move(rel), std::move(ab), euler);
}

inline json encode(const UnitaryRep& rho) {
  json mats = json::array();
  for (std::size_t k = 0; k < rho.generators(); ++k) {
    json m = json::array();
    for (std::size_t r = 0; r < rho.dim(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < rho.dim(); ++c) row.push_back(encode(rho.image(k)(r, c)));
      m.push_back(row);
    }
    mats.push_back(m);
  }
  return {{"dim", rho.dim()}, {"order", rho.field_order()}, {"matrices", mats}};
}
inline UnitaryRep decode_rep(const json& j) {
  const long n = decode_long(detail::field(j, "dim"));
  if (n < 1) throw ParseError("representation dimension must be positive");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<CyclotomicMatrix> mats;
  for (const auto& m : detail::array(detail::field(j, "matrices"), "matrices")) {
    if (detail::array(m, "matrix").size() != dim) throw ParseError("matrix has wrong number of rows");
    CyclotomicMatrix a(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (detail::array(m[r], "matrix row").size() != dim) throw ParseError("matrix row has wrong length");
      for (std::size_t c = 0; c < dim; ++c) a(r, c) = decode_cyclotomic(m[r][c]);
    }
    mats.push_back(std::move(a));
  }
  return UnitaryRep(dim, std::move(mats));
}

inline json encode(const PointSet& b) {
  json a = json::array();
  for (const auto& p : b.points()) {
    json row = json::array();
    for (const auto& x : p) row.push_back(x.get_str());
    a.push_back(row);
  }
  return a;
}
inline PointSet decode_pointset(const json& j) {
  std::vector<ProjectiveVector> pts;
  for (const auto& row : detail::array(j, "point set")) {
    ProjectiveVector v;
    for (const auto& x : detail::array(row, "point")) v.push_back(decode_integer(x));
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw ParseError("empty point set");
  return PointSet(pts.front().size() - 1, pts);
}

}  // namespace hodgeloci::io
