#include "seqgraph/error.hpp"
#include "seqgraph/rng.hpp"
#include "seqgraph/value.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace seqgraph;

TEST(ValueCmp, Reflexive) { EXPECT_EQ(value_cmp(Value::integer(3), Value::integer(3)), Ordering::Equal); }

TEST(ValueCmp, Rationals) {
  EXPECT_EQ(value_cmp(Value::rational(1, 2), Value::rational(1, 4)), Ordering::Greater);
  EXPECT_EQ(value_cmp(Value::rational(5, 16), Value::rational(3, 16)), Ordering::Greater);
  EXPECT_EQ(value_cmp(Value::rational(3, 16), Value::rational(5, 16)), Ordering::Less);
}

TEST(ValueCmp, CrossKindIsExact) {
  // 0.1 as a double is slightly above 1/10.
  EXPECT_EQ(value_cmp(Value::real(0.1), Value::rational(1, 10)), Ordering::Greater);
  EXPECT_EQ(value_cmp(Value::real(0.5), Value::rational(1, 2)), Ordering::Equal);
  EXPECT_EQ(value_cmp(Value::real(2.0), Value::integer(2)), Ordering::Equal);
  EXPECT_EQ(value_cmp(Value::integer(BigInt(1) << 60), Value::real(std::ldexp(1.0, 60))), Ordering::Equal);
  EXPECT_EQ(value_cmp(Value::integer((BigInt(1) << 60) + 1), Value::real(std::ldexp(1.0, 60))), Ordering::Greater);
  EXPECT_EQ(value_cmp(Value::rational(-7, 3), Value::integer(-2)), Ordering::Less);
}

TEST(Value, RationalsAreCanonical) {
  const Value v = Value::rational(2, 4);
  ASSERT_TRUE(v.is_rat());
  EXPECT_EQ(v.to_string(), "1/2");
  EXPECT_EQ(Value::rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(v, Value::rational(1, 2));
}

TEST(Value, WholeRationalStaysExact) {
  EXPECT_EQ(Value::rational(4, 2), Value::integer(2));
}

TEST(Value, ZeroDenominatorRejected) { EXPECT_THROW(Value::rational(1, 0), Error); }

TEST(Value, NonFiniteRealRejected) {
  EXPECT_THROW(Value::real(std::nan("")), Error);
  EXPECT_THROW(Value::real(INFINITY), Error);
}

TEST(Value, NegativeZeroIsZero) {
  EXPECT_EQ(Value::real(-0.0), Value::real(0.0));
  EXPECT_EQ(Value::real(-0.0).to_string(), "0");
}

TEST(Value, Rendering) {
  EXPECT_EQ(Value::integer(-17).to_string(), "-17");
  EXPECT_EQ(Value::rational(5, 16).to_string(), "5/16");
  EXPECT_EQ(Value::real(0.1).to_string(), "0.10000000000000001");
  // 17 significant digits round-trip.
  const double x = std::sqrt(2.0) - 1.0;
  EXPECT_EQ(std::stod(Value::real(x).to_string()), x);
}

TEST(Value, ExactRationalOfDouble) {
  EXPECT_EQ(exact_rational(0.75), Rational(3, 4));
  EXPECT_EQ(exact_rational(-2.5), Rational(-5, 2));
  EXPECT_EQ(exact_rational(0.1), Rational(BigInt(3602879701896397), BigInt(1) << 55));
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(std::uint64_t{8}, std::uint64_t{4}), 4u);
  EXPECT_EQ(gcd(std::uint64_t{2}, std::uint64_t{5}), 1u);
  EXPECT_EQ(gcd(std::uint64_t{12}, std::uint64_t{8}), 4u);
  EXPECT_EQ(gcd(std::uint64_t{0}, std::uint64_t{0}), 0u);
  EXPECT_EQ(gcd(std::uint64_t{0}, std::uint64_t{9}), 9u);
  EXPECT_EQ(gcd(BigInt(-12), BigInt(18)), BigInt(6));
}

TEST(Gcd, AgreesWithTrialDivision) {
  SplitMix64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const std::uint64_t a = rng.next() % 5000;
    const std::uint64_t b = rng.next() % 5000;
    std::uint64_t best = 0;
    for (std::uint64_t d = 1; d <= std::max(a, b); ++d) {
      if (a % d == 0 && b % d == 0) best = d;
    }
    EXPECT_EQ(gcd(a, b), best) << a << " " << b;
  }
}

namespace {

Value random_value(SplitMix64& rng) {
  switch (rng.next() % 3) {
    case 0: return Value::integer(static_cast<std::int64_t>(rng.next() % 21) - 10);
    case 1: return Value::rational(static_cast<std::int64_t>(rng.next() % 41) - 20,
                                   static_cast<std::int64_t>(rng.next() % 8) + 1);
    default: return Value::real(static_cast<double>(static_cast<std::int64_t>(rng.next() % 81) - 40) / 4.0);
  }
}

}  // namespace

TEST(ValueProperty, TotalOrderAgreesWithDoubles) {
  // Generated values are exact in double, so double order is an oracle.
  SplitMix64 rng(11);
  for (int t = 0; t < 3000; ++t) {
    const Value a = random_value(rng);
    const Value b = random_value(rng);
    const double x = a.to_double();
    const double y = b.to_double();
    const Ordering expected = x < y ? Ordering::Less : (x > y ? Ordering::Greater : Ordering::Equal);
    ASSERT_EQ(value_cmp(a, b), expected) << a.to_string() << " vs " << b.to_string();
    ASSERT_EQ(a == b, !(a < b) && !(b < a));
  }
}

TEST(ValueProperty, SortIsDeterministicAndConsistent) {
  SplitMix64 rng(5);
  std::vector<Value> v;
  for (int i = 0; i < 400; ++i) v.push_back(random_value(rng));
  auto a = v;
  auto b = v;
  std::reverse(b.begin(), b.end());
  std::stable_sort(a.begin(), a.end());
  std::stable_sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]);
  for (std::size_t i = 1; i < a.size(); ++i) ASSERT_NE(value_cmp(a[i - 1], a[i]), Ordering::Greater);
}
