#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace pfaffrep {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Which of the three shipped commutative rings a value lives in.
class RingDescriptor {
 public:
  enum class Kind { Integers, Rationals, Modular };

  static RingDescriptor integers() { return RingDescriptor(Kind::Integers, 0); }
  static RingDescriptor rationals() { return RingDescriptor(Kind::Rationals, 0); }
  static RingDescriptor modular(const BigInt& modulus);

  // Accepts `int`, `rat` and `mod:<n>` with n >= 2.
  static RingDescriptor parse(std::string_view text);

  Kind kind() const { return kind_; }
  const BigInt& modulus() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& lhs, const RingDescriptor& rhs) {
    return lhs.kind_ == rhs.kind_ && lhs.modulus_ == rhs.modulus_;
  }

 private:
  RingDescriptor(Kind kind, BigInt modulus)
      : kind_(kind), modulus_(std::move(modulus)) {}

  Kind kind_;
  BigInt modulus_;  // zero unless Modular
};

struct Residue {
  BigInt value;    // 0 <= value < modulus
  BigInt modulus;  // >= 2

  friend bool operator==(const Residue&, const Residue&) = default;
};

// An element of Z, Q or Z/n. Immutable; every arithmetic operation checks
// that both operands come from the same ring.
class RingValue {
 public:
  RingValue() : repr_(BigInt(0)) {}

  static RingValue integer(BigInt value) { return RingValue(Repr(std::move(value))); }
  static RingValue rational(const BigInt& num, const BigInt& den);
  static RingValue rational(BigRational value);
  static RingValue modular(const BigInt& value, const BigInt& modulus);

  RingDescriptor ring() const;
  bool is_zero() const;
  bool is_one() const;

  RingValue zero_like() const { return from_integer_like(0); }
  RingValue one_like() const { return from_integer_like(1); }
  RingValue from_integer_like(const BigInt& n) const;

  // n * this, for n in Z.
  RingValue scaled(const BigInt& n) const;

  RingValue operator+(const RingValue& rhs) const;
  RingValue operator-(const RingValue& rhs) const;
  RingValue operator*(const RingValue& rhs) const;
  RingValue operator-() const;
  RingValue& operator+=(const RingValue& rhs) { return *this = *this + rhs; }
  RingValue& operator-=(const RingValue& rhs) { return *this = *this - rhs; }
  RingValue& operator*=(const RingValue& rhs) { return *this = *this * rhs; }
  // *this += x * y (or -= when `negate`), in place.
  void add_product(const RingValue& x, const RingValue& y, bool negate = false);

  friend bool operator==(const RingValue& lhs, const RingValue& rhs) {
    return lhs.repr_ == rhs.repr_;
  }

  // Decimal integer, `n/m`, or the residue in 0..n-1.
  std::string to_string() const;
  // Inverse of to_string for a known ring. Integers are accepted in every
  // ring; `n/m` only in Q.
  static RingValue parse(std::string_view text, const RingDescriptor& ring);

  bool is_integer() const { return std::holds_alternative<BigInt>(repr_); }
  bool is_rational() const { return std::holds_alternative<BigRational>(repr_); }
  bool is_modular() const { return std::holds_alternative<Residue>(repr_); }
  const BigInt& as_integer() const { return std::get<BigInt>(repr_); }
  const BigRational& as_rational() const { return std::get<BigRational>(repr_); }
  const Residue& as_modular() const { return std::get<Residue>(repr_); }

 private:
  using Repr = std::variant<BigInt, BigRational, Residue>;
  explicit RingValue(Repr repr) : repr_(std::move(repr)) {}

  Repr repr_;
};

// The unique unital ring map Z -> R.
RingValue from_integer(const BigInt& n, const RingDescriptor& target);

enum class RingOp { Add, Sub, Mul, Neg };
// `rhs` is ignored for Neg.
RingValue ring_arith(const RingValue& lhs, const RingValue& rhs, RingOp op);

// Floor division and non-negative remainder helpers shared by the exact
// linear algebra.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& m);

}  // namespace pfaffrep
