#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pfaffrep/coeffring.hpp"
#include "pfaffrep/errors.hpp"

namespace pfaffrep {

enum class Axis : int { A = 0, B = 1, C = 2 };

// A named scalar indeterminate. The meaning of `fields` depends on kind:
//   Theta     -> (i, j, k) exponents of x, y, z
//   EntryCoef -> (row, col, axis), 1-based, row < col
//   FreeParam -> (index, 0, 0), index >= 1
// Ordering is (kind, fields), which orders entry coefficients by
// (row, col, axis a<b<c).
struct SymbolId {
  enum class Kind : int { Theta = 0, EntryCoef = 1, FreeParam = 2 };

  Kind kind = Kind::Theta;
  std::array<int, 3> fields{};

  static SymbolId theta(int i, int j, int k) { return {Kind::Theta, {i, j, k}}; }
  static SymbolId entry(Axis axis, int row, int col) {
    return {Kind::EntryCoef, {row, col, static_cast<int>(axis)}};
  }
  static SymbolId free_param(int index) { return {Kind::FreeParam, {index, 0, 0}}; }

  bool is_theta() const { return kind == Kind::Theta; }
  bool is_entry() const { return kind == Kind::EntryCoef; }
  bool is_free() const { return kind == Kind::FreeParam; }
  int row() const { return fields[0]; }
  int col() const { return fields[1]; }
  Axis axis() const { return static_cast<Axis>(fields[2]); }

  // `Theta[5,0,0]`, `b[1,2]`, `t[3]`.
  std::string name() const;
  static SymbolId parse(std::string_view name);

  friend auto operator<=>(const SymbolId&, const SymbolId&) = default;
};

// A polynomial with integer coefficients in SymbolIds. Keys are sorted
// multisets of symbols (the empty key is the constant term); no stored
// coefficient is zero, so equality is structural.
class SymbolicCoefficient {
 public:
  using Key = std::vector<SymbolId>;
  using Terms = std::map<Key, BigInt>;

  SymbolicCoefficient() = default;
  static SymbolicCoefficient constant(const BigInt& value);
  static SymbolicCoefficient symbol(const SymbolId& id, const BigInt& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int symbol_degree() const;
  BigInt constant_term() const;
  // Coefficient of the degree-one monomial `id`.
  BigInt linear_coefficient(const SymbolId& id) const;

  SymbolicCoefficient zero_like() const { return {}; }
  SymbolicCoefficient one_like() const { return constant(1); }
  SymbolicCoefficient scaled(const BigInt& n) const;

  void add_term(Key key, const BigInt& coeff);

  SymbolicCoefficient operator+(const SymbolicCoefficient& rhs) const;
  SymbolicCoefficient operator-(const SymbolicCoefficient& rhs) const;
  SymbolicCoefficient operator*(const SymbolicCoefficient& rhs) const;
  SymbolicCoefficient operator-() const { return scaled(-1); }
  void add_product(const SymbolicCoefficient& x, const SymbolicCoefficient& y, bool negate = false) {
    if (negate) {
      *this -= x * y;
    } else {
      *this += x * y;
    }
  }
  SymbolicCoefficient& operator+=(const SymbolicCoefficient& rhs);
  SymbolicCoefficient& operator-=(const SymbolicCoefficient& rhs);

  friend bool operator==(const SymbolicCoefficient&, const SymbolicCoefficient&) = default;

  // Higher symbol-degree first, constant last, e.g. `b[1,2] - a[2,6] + 3`.
  // `namer` lets reports print symbols in another convention.
  std::string to_string(const std::function<std::string(const SymbolId&)>& namer = {}) const;

 private:
  Terms terms_;
};

SymbolicCoefficient sym_add(const SymbolicCoefficient& lhs, const SymbolicCoefficient& rhs);
SymbolicCoefficient sym_mul(const SymbolicCoefficient& lhs, const SymbolicCoefficient& rhs);

// Substitute ring values for every symbol.
RingValue evaluate(const SymbolicCoefficient& coeff,
                   const std::function<RingValue(const SymbolId&)>& lookup,
                   const RingValue& zero);

struct Monomial3 {
  int i = 0;
  int j = 0;
  int k = 0;

  int degree() const { return i + j + k; }
  Monomial3 operator*(const Monomial3& rhs) const { return {i + rhs.i, j + rhs.j, k + rhs.k}; }
  friend bool operator==(const Monomial3&, const Monomial3&) = default;
  std::string to_string() const;  // `x^2*y*z^2`, `1` for the unit
};

// Graded lexicographic order with x > y > z, largest first.
struct GrlexDescending {
  bool operator()(const Monomial3& a, const Monomial3& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.i != b.i) return a.i > b.i;
    if (a.j != b.j) return a.j > b.j;
    return a.k > b.k;
  }
};

// All monomials of total degree d, largest first.
std::vector<Monomial3> monomials_of_degree(int d);

// A sparse homogeneous polynomial in x, y, z. C is SymbolicCoefficient or
// RingValue; `zero` carries the ring so that absent coefficients can be
// returned with the right type.
template <class C>
class TriPoly {
 public:
  using Terms = std::map<Monomial3, C, GrlexDescending>;

  explicit TriPoly(int degree, C zero = C{}) : degree_(degree), zero_(std::move(zero)) {}

  static TriPoly monomial(const Monomial3& m, const C& coeff) {
    TriPoly p(m.degree(), coeff.zero_like());
    p.add_term(m, coeff);
    return p;
  }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  const C& zero() const { return zero_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial3& m, const C& coeff) {
    if (m.degree() != degree_) {
      throw Error(ErrorKind::NonHomogeneous,
                  "term " + m.to_string() + " has degree " + std::to_string(m.degree()) +
                      ", polynomial has degree " + std::to_string(degree_));
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // coefficient of m += x * y (or -= when `negate`).
  void add_product(const Monomial3& m, const C& x, const C& y, bool negate = false) {
    if (m.degree() != degree_) {
      throw Error(ErrorKind::NonHomogeneous,
                  "term " + m.to_string() + " has degree " + std::to_string(m.degree()) +
                      ", polynomial has degree " + std::to_string(degree_));
    }
    auto it = terms_.try_emplace(m, zero_).first;
    it->second.add_product(x, y, negate);
    if (it->second.is_zero()) terms_.erase(it);
  }

  C coefficient_of(const Monomial3& m) const {
    if (m.degree() != degree_) {
      throw Error(ErrorKind::DegreeMismatch,
                  "monomial " + m.to_string() + " has degree " + std::to_string(m.degree()) +
                      ", polynomial has degree " + std::to_string(degree_));
    }
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_ : it->second;
  }

  TriPoly& operator+=(const TriPoly& rhs) {
    check_same_degree(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  TriPoly& operator-=(const TriPoly& rhs) {
    check_same_degree(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  TriPoly operator+(const TriPoly& rhs) const { TriPoly r = *this; return r += rhs; }
  TriPoly operator-(const TriPoly& rhs) const { TriPoly r = *this; return r -= rhs; }
  TriPoly operator-() const { return scaled(-1); }

  TriPoly scaled(const BigInt& n) const {
    TriPoly r(degree_, zero_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.scaled(n));
    return r;
  }

  // Multiply every coefficient by `c` (a scalar in the coefficient domain).
  TriPoly times_scalar(const C& c) const {
    TriPoly r(degree_, zero_);
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }

  friend bool operator==(const TriPoly& lhs, const TriPoly& rhs) {
    return lhs.degree_ == rhs.degree_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_same_degree(const TriPoly& rhs) const {
    if (rhs.degree_ != degree_) {
      throw Error(ErrorKind::DegreeMismatch,
                  "cannot add degree " + std::to_string(rhs.degree_) + " to degree " +
                      std::to_string(degree_));
    }
  }

  int degree_;
  C zero_;
  Terms terms_;
};

template <class C>
TriPoly<C> tri_mul(const TriPoly<C>& lhs, const TriPoly<C>& rhs) {
  TriPoly<C> out(lhs.degree() + rhs.degree(), lhs.zero());
  for (const auto& [ma, ca] : lhs.terms()) {
    for (const auto& [mb, cb] : rhs.terms()) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

using SymPoly = TriPoly<SymbolicCoefficient>;
using RingPoly = TriPoly<RingValue>;

// Canonical text form; parse_tripoly(to_string(p)) == p for ring polys.
std::string to_string(const RingPoly& p);
std::string to_string(const SymPoly& p);

// Grammar: terms separated by `+`/`-`; a term is
// `[coef][*]factor(*factor)*` with factor `x|y|z` and optional `^<exp>`;
// coef is a decimal integer, or `n/m` over Q. Whitespace is ignored.
RingPoly parse_tripoly(std::string_view text, int degree, const RingDescriptor& ring);

}  // namespace pfaffrep
