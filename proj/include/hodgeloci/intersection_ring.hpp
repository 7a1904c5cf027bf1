#pragma once

// Chow rings of P^2, P^3 and their blow-ups at points, with Chern
// character, Todd class and Hirzebruch-Riemann-Roch.

#include <memory>
#include <string>
#include <vector>

#include "hodgeloci/errors.hpp"
#include "hodgeloci/rational.hpp"

namespace hodgeloci {

enum class Ambient { p2, p3, blown_up_p2, blown_up_p3 };

class ChowRing {
 public:
  static std::shared_ptr<const ChowRing> make(Ambient kind, std::size_t points = 0) {
    auto r = std::shared_ptr<ChowRing>(new ChowRing());
    r->kind_ = kind;
    r->points_ = points;
    switch (kind) {
      case Ambient::p2:
        r->dim_ = 2;
        r->add("1", 0), r->add("h", 1), r->add("pt", 2);
        r->init_table();
        r->set("h", "h", "pt", 1);
        break;
      case Ambient::p3:
        r->dim_ = 3;
        r->add("1", 0), r->add("h", 1), r->add("h^2", 2), r->add("pt", 3);
        r->init_table();
        r->set("h", "h", "h^2", 1);
        r->set("h", "h^2", "pt", 1);
        break;
      case Ambient::blown_up_p2:
        r->dim_ = 2;
        r->add("1", 0), r->add("h", 1);
        for (std::size_t i = 1; i <= points; ++i) r->add("E" + std::to_string(i), 1);
        r->add("pt", 2);
        r->init_table();
        r->set("h", "h", "pt", 1);
        for (std::size_t i = 1; i <= points; ++i) r->set("E" + std::to_string(i), "E" + std::to_string(i), "pt", -1);
        break;
      case Ambient::blown_up_p3:
        r->dim_ = 3;
        r->add("1", 0), r->add("h", 1);
        for (std::size_t i = 1; i <= points; ++i) r->add("E" + std::to_string(i), 1);
        r->add("h^2", 2);
        for (std::size_t i = 1; i <= points; ++i) r->add("E" + std::to_string(i) + "^2", 2);
        r->add("pt", 3);
        r->init_table();
        r->set("h", "h", "h^2", 1);
        r->set("h", "h^2", "pt", 1);
        for (std::size_t i = 1; i <= points; ++i) {
          const auto e = "E" + std::to_string(i);
          r->set(e, e, e + "^2", 1);
          r->set(e, e + "^2", "pt", 1);
        }
        break;
    }
    return r;
  }

  Ambient kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  std::size_t points() const { return points_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::size_t degree(std::size_t i) const { return degree_[i]; }
  std::size_t index(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    throw PreconditionError("no basis class named " + n);
  }
  const std::vector<Rational>& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

 private:
  ChowRing() = default;
  void add(const std::string& n, std::size_t d) {
    names_.push_back(n);
    degree_.push_back(d);
  }
  void init_table() {
    const std::size_t n = names_.size();
    table_.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    for (std::size_t i = 0; i < n; ++i) {
      table_[0][i][i] = Rational(1);
      table_[i][0][i] = Rational(1);
    }
  }
  void set(const std::string& a, const std::string& b, const std::string& c, long coeff) {
    const auto i = index(a), j = index(b), k = index(c);
    table_[i][j][k] = Rational(coeff);
    table_[j][i][k] = Rational(coeff);
  }

  Ambient kind_ = Ambient::p2;
  std::size_t dim_ = 2;
  std::size_t points_ = 0;
  std::vector<std::string> names_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<std::vector<Rational>>> table_;
};

class ChowClass {
 public:
  explicit ChowClass(std::shared_ptr<const ChowRing> ring) : ring_(std::move(ring)), c_(ring_->size(), Rational(0)) {}
  static ChowClass basis(const std::shared_ptr<const ChowRing>& ring, const std::string& name, const Rational& coeff = 1) {
    ChowClass x(ring);
    x.c_[ring->index(name)] = coeff;
    return x;
  }
  static ChowClass one(const std::shared_ptr<const ChowRing>& ring) { return basis(ring, "1"); }

  const ChowRing& ring() const { return *ring_; }
  const std::shared_ptr<const ChowRing>& ring_ptr() const { return ring_; }
  Rational coeff(const std::string& name) const { return c_[ring_->index(name)]; }
  /// Degree of the top-dimensional part.
  Rational integral() const { return coeff("pt"); }
  /// Component in a given codimension.
  ChowClass part(std::size_t d) const {
    ChowClass x(ring_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (ring_->degree(i) == d) x.c_[i] = c_[i];
    return x;
  }
  Rational rank() const { return c_[0]; }

  friend ChowClass operator+(ChowClass a, const ChowClass& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  friend ChowClass operator*(const Rational& s, ChowClass a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    ChowClass out(a.ring_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        const auto& p = a.ring_->product(i, j);
        for (std::size_t k = 0; k < p.size(); ++k)
          if (!p[k].is_zero()) out.c_[k] += a.c_[i] * b.c_[j] * p[k];
      }
    }
    return out;
  }
  friend bool operator==(const ChowClass& a, const ChowClass& b) { return a.c_ == b.c_; }

  ChowClass pow(unsigned e) const {
    ChowClass acc = one(ring_);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }
  /// Inverse of a class with rank 1 (truncated geometric series).
  ChowClass unipotent_inverse() const {
    if (!rank().is_one()) throw PreconditionError("only classes with rank 1 are inverted");
    const ChowClass nil = *this - one(ring_);
    ChowClass acc = one(ring_), term = one(ring_);
    for (std::size_t i = 1; i <= ring_->dim(); ++i) {
      term = Rational(-1) * (term * nil);
      acc = acc + term;
    }
    return acc;
  }
  /// exp of a class without rank part.
  ChowClass exp() const {
    ChowClass acc = one(ring_), term = one(ring_);
    for (std::size_t i = 1; i <= ring_->dim(); ++i) {
      term = Rational(1, static_cast<long>(i)) * (term * *this);
      acc = acc + term;
    }
    return acc;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += c_[i].str();
      if (i > 0) s += "*" + ring_->name(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::shared_ptr<const ChowRing> ring_;
  std::vector<Rational> c_;
};

/// Chern data of a vector bundle: rank and total Chern class.
struct ChernData {
  Rational rank;
  ChowClass total;  // 1 + c1 + c2 + ...
};

/// ch = rank + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6
inline ChowClass chern_character(const ChernData& e) {
  const ChowClass c1 = e.total.part(1), c2 = e.total.part(2), c3 = e.total.part(3);
  const auto& ring = e.total.ring_ptr();
  return e.rank * ChowClass::one(ring) + c1 + Rational(1, 2) * (c1 * c1 - Rational(2) * c2) +
         Rational(1, 6) * (c1 * c1 * c1 - Rational(3) * (c1 * c2) + Rational(3) * c3);
}

/// td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24 from the tangent Chern classes.
inline ChowClass todd_class(const ChowClass& tangent_total) {
  const ChowClass c1 = tangent_total.part(1), c2 = tangent_total.part(2);
  return ChowClass::one(tangent_total.ring_ptr()) + Rational(1, 2) * c1 + Rational(1, 12) * (c1 * c1 + c2) +
         Rational(1, 24) * (c1 * c2);
}

/// Total Chern class of the tangent bundle.
inline ChowClass tangent_chern_class(const std::shared_ptr<const ChowRing>& ring) {
  auto b = [&](const std::string& n, const Rational& c) { return ChowClass::basis(ring, n, c); };
  const long m = static_cast<long>(ring->points());
  ChowClass c = ChowClass::one(ring);
  switch (ring->kind()) {
    case Ambient::p2:
      return c + b("h", 3) + b("pt", 3);
    case Ambient::p3:
      return c + b("h", 4) + b("h^2", 6) + b("pt", 4);
    case Ambient::blown_up_p2: {
      c = c + b("h", 3) + b("pt", 3 + m);
      for (std::size_t i = 1; i <= ring->points(); ++i) c = c - b("E" + std::to_string(i), 1);
      return c;
    }
    case Ambient::blown_up_p3: {
      c = c + b("h", 4) + b("h^2", 6) + b("pt", 4 + 2 * m);
      for (std::size_t i = 1; i <= ring->points(); ++i) c = c - b("E" + std::to_string(i), 2);
      return c;
    }
  }
  throw InvariantError("unknown ambient");
}

inline ChowClass todd_class(const std::shared_ptr<const ChowRing>& ring) { return todd_class(tangent_chern_class(ring)); }

/// Hirzebruch-Riemann-Roch: chi(X, E) = integral of ch(E) td(X).
inline Rational euler_characteristic(const ChowClass& ch) { return (ch * todd_class(ch.ring_ptr())).integral(); }

/// ch of the line bundle O(D).
inline ChowClass line_bundle_character(const ChowClass& divisor) { return divisor.exp(); }

}  // namespace hodgeloci
