#include "seqgraph/value.hpp"

#include "seqgraph/error.hpp"

#include <cmath>
#include <cstdio>

namespace seqgraph {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::GenerationStall: return "GenerationStall";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::DuplicateValues: return "DuplicateValues";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotMeanZero: return "NotMeanZero";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegenerateEmbedding: return "DegenerateEmbedding";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::NonMonotoneIndex: return "NonMonotoneIndex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Value Value::rational(BigInt num, BigInt den) {
  if (den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  // cpp_rational canonicalises too; the explicit reduction keeps the
  // invariant independent of the backend.
  return Value(Repr(Rational(num, den)));
}

Value Value::rational(Rational q) {
  return rational(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Value Value::real(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::DomainError, "non-finite real value");
  if (v == 0.0) v = 0.0;
  return Value(Repr(v));
}

double Value::to_double() const {
  switch (kind()) {
    case Kind::Int: return as_int().convert_to<double>();
    case Kind::Rat: return as_rat().convert_to<double>();
    case Kind::Real: return as_real();
  }
  return 0.0;
}

std::string Value::to_string() const {
  switch (kind()) {
    case Kind::Int: return as_int().str();
    case Kind::Rat: {
      const auto& q = as_rat();
      return boost::multiprecision::numerator(q).str() + "/" +
             boost::multiprecision::denominator(q).str();
    }
    case Kind::Real: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", as_real());
      return buf;
    }
  }
  return {};
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "non-finite real value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  BigInt num(scaled);
  int shift = exp - 53;
  if (shift >= 0) return Rational(num << shift);
  BigInt den = BigInt(1) << -shift;
  return Rational(num, den);
}

namespace {

template <class A, class B>
std::strong_ordering three_way(const A& a, const B& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational as_exact(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Int: return Rational(v.as_int());
    case Value::Kind::Rat: return v.as_rat();
    case Value::Kind::Real: return exact_rational(v.as_real());
  }
  return Rational(0);
}

}  // namespace

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  using K = Value::Kind;
  const K ka = a.kind();
  const K kb = b.kind();
  if (ka == kb) {
    switch (ka) {
      case K::Int: return three_way(a.as_int(), b.as_int());
      case K::Rat: return three_way(a.as_rat(), b.as_rat());
      case K::Real: return three_way(a.as_real(), b.as_real());
    }
  }
  if (ka == K::Int && kb == K::Rat) return three_way(Rational(a.as_int()), b.as_rat());
  if (ka == K::Rat && kb == K::Int) return three_way(a.as_rat(), Rational(b.as_int()));
  return three_way(as_exact(a), as_exact(b));
}

Ordering value_cmp(const Value& a, const Value& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a);
  BigInt y = abs(b);
  while (y != 0) {
    BigInt t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

}  // namespace seqgraph
