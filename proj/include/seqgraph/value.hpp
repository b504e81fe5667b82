#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace seqgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An exact sequence term: arbitrary-precision integer, exact rational
// (always in lowest terms with positive denominator) or finite double.
//
// Values of different kinds compare exactly: a double is converted to the
// rational it represents before comparing against Int/Rat.
class Value {
 public:
  enum class Kind { Int, Rat, Real };

  Value() : repr_(BigInt(0)) {}

  static Value integer(BigInt v) { return Value(Repr(std::move(v))); }
  static Value integer(std::int64_t v) { return Value(Repr(BigInt(v))); }
  static Value rational(BigInt num, BigInt den);
  static Value rational(Rational q);
  // Throws DomainError for NaN/inf. -0.0 is stored as +0.0.
  static Value real(double v);

  Kind kind() const noexcept { return static_cast<Kind>(repr_.index()); }
  bool is_int() const noexcept { return kind() == Kind::Int; }
  bool is_rat() const noexcept { return kind() == Kind::Rat; }
  bool is_real() const noexcept { return kind() == Kind::Real; }

  const BigInt& as_int() const { return std::get<BigInt>(repr_); }
  const Rational& as_rat() const { return std::get<Rational>(repr_); }
  double as_real() const { return std::get<double>(repr_); }

  // Nearest double; used for plotting and tie-free float contexts only.
  double to_double() const;

  // Integers as-is, rationals as "p/q", reals with 17 significant digits.
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

 private:
  using Repr = std::variant<BigInt, Rational, double>;
  explicit Value(Repr r) : repr_(std::move(r)) {}

  Repr repr_;
};

enum class Ordering { Less, Equal, Greater };

Ordering value_cmp(const Value& a, const Value& b);

// Exact rational equal to a finite double.
Rational exact_rational(double x);

// gcd(0, 0) = 0.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace seqgraph
