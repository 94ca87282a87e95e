#include <gtest/gtest.h>

#include <random>

#include "pfaffrep/coeffring.hpp"
#include "pfaffrep/errors.hpp"

using namespace pfaffrep;

namespace {

RingValue Z(long v) { return RingValue::integer(v); }
RingValue Q(long n, long d) { return RingValue::rational(n, d); }
RingValue M(long v, long n) { return RingValue::modular(v, n); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(CoeffRing, BasicArithmetic) {
  EXPECT_EQ(Z(2) + Z(3), Z(5));
  EXPECT_EQ(M(4, 6) * M(3, 6), M(0, 6));
  EXPECT_TRUE((M(4, 6) * M(3, 6)).is_zero());
  EXPECT_EQ(Q(1, 2) + Q(1, 3), Q(5, 6));
  EXPECT_EQ((Q(1, 2) + Q(1, 3)).to_string(), "5/6");
  EXPECT_EQ(Q(2, 4), Q(1, 2));
  EXPECT_EQ(-M(1, 6), M(5, 6));
  EXPECT_EQ(M(2, 5) - M(4, 5), M(3, 5));
}

TEST(CoeffRing, FromInteger) {
  EXPECT_EQ(from_integer(7, RingDescriptor::modular(5)), M(2, 5));
  EXPECT_EQ(from_integer(-1, RingDescriptor::modular(6)).to_string(), "5");
  EXPECT_EQ(from_integer(0, RingDescriptor::rationals()), Q(0, 1));
  EXPECT_EQ(from_integer(-3, RingDescriptor::integers()), Z(-3));
}

TEST(CoeffRing, DescriptorParsing) {
  EXPECT_EQ(RingDescriptor::parse("int"), RingDescriptor::integers());
  EXPECT_EQ(RingDescriptor::parse("rat"), RingDescriptor::rationals());
  EXPECT_EQ(RingDescriptor::parse("mod:97"), RingDescriptor::modular(97));
  EXPECT_EQ(RingDescriptor::parse("mod:6").to_string(), "mod:6");
  EXPECT_EQ(kind_of([] { RingDescriptor::parse("mod:1"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { RingDescriptor::parse("mod:x"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { RingDescriptor::parse("real"); }), ErrorKind::InvalidArgument);
}

TEST(CoeffRing, MismatchedRingsThrow) {
  EXPECT_EQ(kind_of([] { (void)(Z(1) + Q(1, 2)); }), ErrorKind::MismatchedRing);
  EXPECT_EQ(kind_of([] { (void)(M(1, 6) * M(1, 97)); }), ErrorKind::MismatchedRing);
  EXPECT_EQ(kind_of([] { (void)ring_arith(Z(1), M(1, 2), RingOp::Sub); }), ErrorKind::MismatchedRing);
}

TEST(CoeffRing, ValueParsing) {
  EXPECT_EQ(RingValue::parse("-12", RingDescriptor::integers()), Z(-12));
  EXPECT_EQ(RingValue::parse("3/6", RingDescriptor::rationals()), Q(1, 2));
  EXPECT_EQ(RingValue::parse("-1", RingDescriptor::modular(7)), M(6, 7));
  EXPECT_EQ(kind_of([] { RingValue::parse("1/2", RingDescriptor::integers()); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { RingValue::parse("1/0", RingDescriptor::rationals()); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { RingValue::parse("", RingDescriptor::integers()); }), ErrorKind::InvalidArgument);
}

TEST(CoeffRing, FloorDivision) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(mod_floor(-7, 3), 2);
  EXPECT_EQ(mod_floor(7, 3), 1);
}

// Z -> R is a ring homomorphism for every supported target.
TEST(CoeffRing, FromIntegerIsHomomorphism) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-1'000'000'000L, 1'000'000'000L);
  for (const char* text : {"int", "rat", "mod:2", "mod:6", "mod:97"}) {
    const RingDescriptor ring = RingDescriptor::parse(text);
    for (int k = 0; k < 10000; ++k) {
      const BigInt a = dist(rng), b = dist(rng);
      const RingValue ra = from_integer(a, ring), rb = from_integer(b, ring);
      ASSERT_EQ(from_integer(a + b, ring), ring_arith(ra, rb, RingOp::Add)) << text;
      ASSERT_EQ(from_integer(a - b, ring), ring_arith(ra, rb, RingOp::Sub)) << text;
      ASSERT_EQ(from_integer(a * b, ring), ring_arith(ra, rb, RingOp::Mul)) << text;
      ASSERT_EQ(from_integer(-a, ring), ring_arith(ra, rb, RingOp::Neg)) << text;
    }
  }
}

TEST(CoeffRing, AddProductMatchesMultiplyThenAdd) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (const char* text : {"int", "rat", "mod:6"}) {
    const RingDescriptor ring = RingDescriptor::parse(text);
    for (int k = 0; k < 500; ++k) {
      const RingValue acc = from_integer(dist(rng), ring);
      const RingValue x = from_integer(dist(rng), ring), y = from_integer(dist(rng), ring);
      RingValue plus = acc, minus = acc;
      plus.add_product(x, y);
      minus.add_product(x, y, true);
      ASSERT_EQ(plus, acc + x * y);
      ASSERT_EQ(minus, acc - x * y);
    }
  }
}

TEST(CoeffRing, TextRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 40);
  for (int k = 0; k < 200; ++k) {
    const RingValue q = Q(dist(rng), den(rng));
    EXPECT_EQ(RingValue::parse(q.to_string(), RingDescriptor::rationals()), q);
    const RingValue m = M(dist(rng), 97);
    EXPECT_EQ(RingValue::parse(m.to_string(), RingDescriptor::modular(97)), m);
  }
}
