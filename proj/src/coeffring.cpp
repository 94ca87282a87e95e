#include "pfaffrep/coeffring.hpp"

#include <cctype>

#include "pfaffrep/errors.hpp"

namespace pfaffrep {

namespace {

bool parse_decimal(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

[[noreturn]] void mismatch(const RingValue& lhs, const RingValue& rhs) {
  throw Error(ErrorKind::MismatchedRing,
              "cannot combine " + lhs.ring().to_string() + " and " +
                  rhs.ring().to_string());
}

}  // namespace

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

RingDescriptor RingDescriptor::modular(const BigInt& modulus) {
  if (modulus < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "modulus must be >= 2, got " + modulus.get_str());
  }
  return RingDescriptor(Kind::Modular, modulus);
}

RingDescriptor RingDescriptor::parse(std::string_view text) {
  if (text == "int") return integers();
  if (text == "rat") return rationals();
  if (text.starts_with("mod:")) {
    BigInt n;
    if (!parse_decimal(text.substr(4), n)) {
      throw Error(ErrorKind::InvalidArgument,
                  "bad modulus in ring descriptor '" + std::string(text) + "'");
    }
    return modular(n);
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown ring descriptor '" + std::string(text) +
                  "' (expected int, rat or mod:<n>)");
}

std::string RingDescriptor::to_string() const {
  switch (kind_) {
    case Kind::Integers: return "int";
    case Kind::Rationals: return "rat";
    case Kind::Modular: return "mod:" + modulus_.get_str();
  }
  return "?";
}

RingValue RingValue::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return RingValue(Repr(std::move(q)));
}

RingValue RingValue::rational(BigRational value) {
  value.canonicalize();
  return RingValue(Repr(std::move(value)));
}

RingValue RingValue::modular(const BigInt& value, const BigInt& modulus) {
  if (modulus < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "modulus must be >= 2, got " + modulus.get_str());
  }
  return RingValue(Repr(Residue{mod_floor(value, modulus), modulus}));
}

RingDescriptor RingValue::ring() const {
  if (is_integer()) return RingDescriptor::integers();
  if (is_rational()) return RingDescriptor::rationals();
  return RingDescriptor::modular(as_modular().modulus);
}

bool RingValue::is_zero() const {
  if (is_integer()) return as_integer() == 0;
  if (is_rational()) return as_rational() == 0;
  return as_modular().value == 0;
}

bool RingValue::is_one() const {
  if (is_integer()) return as_integer() == 1;
  if (is_rational()) return as_rational() == 1;
  return as_modular().value == 1;
}

RingValue RingValue::from_integer_like(const BigInt& n) const {
  if (is_integer()) return integer(n);
  if (is_rational()) return rational(BigRational(n));
  return modular(n, as_modular().modulus);
}

RingValue RingValue::scaled(const BigInt& n) const {
  if (is_integer()) return integer(as_integer() * n);
  if (is_rational()) return rational(BigRational(as_rational() * n));
  const Residue& r = as_modular();
  return modular(r.value * n, r.modulus);
}

RingValue RingValue::operator+(const RingValue& rhs) const {
  if (repr_.index() != rhs.repr_.index()) mismatch(*this, rhs);
  if (is_integer()) return integer(as_integer() + rhs.as_integer());
  if (is_rational()) return rational(BigRational(as_rational() + rhs.as_rational()));
  const Residue& a = as_modular();
  const Residue& b = rhs.as_modular();
  if (a.modulus != b.modulus) mismatch(*this, rhs);
  BigInt sum = a.value + b.value;
  if (sum >= a.modulus) sum -= a.modulus;
  return RingValue(Repr(Residue{std::move(sum), a.modulus}));
}

RingValue RingValue::operator-(const RingValue& rhs) const {
  if (repr_.index() != rhs.repr_.index()) mismatch(*this, rhs);
  if (is_integer()) return integer(as_integer() - rhs.as_integer());
  if (is_rational()) return rational(BigRational(as_rational() - rhs.as_rational()));
  const Residue& a = as_modular();
  const Residue& b = rhs.as_modular();
  if (a.modulus != b.modulus) mismatch(*this, rhs);
  BigInt diff = a.value - b.value;
  if (diff < 0) diff += a.modulus;
  return RingValue(Repr(Residue{std::move(diff), a.modulus}));
}

RingValue RingValue::operator*(const RingValue& rhs) const {
  if (repr_.index() != rhs.repr_.index()) mismatch(*this, rhs);
  if (is_integer()) return integer(as_integer() * rhs.as_integer());
  if (is_rational()) return rational(BigRational(as_rational() * rhs.as_rational()));
  const Residue& a = as_modular();
  const Residue& b = rhs.as_modular();
  if (a.modulus != b.modulus) mismatch(*this, rhs);
  return modular(a.value * b.value, a.modulus);
}

void RingValue::add_product(const RingValue& x, const RingValue& y, bool negate) {
  if (is_integer() && x.is_integer() && y.is_integer()) {
    mpz_ptr acc = std::get<BigInt>(repr_).get_mpz_t();
    if (negate) {
      mpz_submul(acc, x.as_integer().get_mpz_t(), y.as_integer().get_mpz_t());
    } else {
      mpz_addmul(acc, x.as_integer().get_mpz_t(), y.as_integer().get_mpz_t());
    }
    return;
  }
  if (negate) {
    *this -= x * y;
  } else {
    *this += x * y;
  }
}

RingValue RingValue::operator-() const {
  if (is_integer()) return integer(-as_integer());
  if (is_rational()) return rational(BigRational(-as_rational()));
  const Residue& a = as_modular();
  return modular(-a.value, a.modulus);
}

std::string RingValue::to_string() const {
  if (is_integer()) return as_integer().get_str();
  if (is_rational()) return as_rational().get_str();
  return as_modular().value.get_str();
}

RingValue RingValue::parse(std::string_view text, const RingDescriptor& ring) {
  auto bad = [&] {
    return Error(ErrorKind::InvalidArgument,
                 "cannot read '" + std::string(text) + "' as an element of " +
                     ring.to_string());
  };
  std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt num;
    BigInt den;
    if (ring.kind() != RingDescriptor::Kind::Rationals ||
        !parse_decimal(text.substr(0, slash), num) ||
        !parse_decimal(text.substr(slash + 1), den) || den == 0) {
      throw bad();
    }
    return rational(num, den);
  }
  BigInt n;
  if (!parse_decimal(text, n)) throw bad();
  return from_integer(n, ring);
}

RingValue from_integer(const BigInt& n, const RingDescriptor& target) {
  switch (target.kind()) {
    case RingDescriptor::Kind::Integers: return RingValue::integer(n);
    case RingDescriptor::Kind::Rationals: return RingValue::rational(BigRational(n));
    case RingDescriptor::Kind::Modular: return RingValue::modular(n, target.modulus());
  }
  return RingValue::integer(n);
}

RingValue ring_arith(const RingValue& lhs, const RingValue& rhs, RingOp op) {
  switch (op) {
    case RingOp::Add: return lhs + rhs;
    case RingOp::Sub: return lhs - rhs;
    case RingOp::Mul: return lhs * rhs;
    case RingOp::Neg: return -lhs;
  }
  return lhs;
}

}  // namespace pfaffrep
