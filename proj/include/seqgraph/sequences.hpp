#pragma once

#include "seqgraph/value.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqgraph {

enum class Family {
  Kronecker,
  VanDerCorput,
  EFH_A064736,
  EFH_A036552,
  ReversalDedup,
  SignFlip,
  ZizkaDedup,
  EKG,
  BalancedVdc,
  RecamanDedup,
  Quet,
  Zabolotskiy,
  GrayInverse,
  TwoPowers,
  BinaryReversal,
  DigitConcatDedup,
  DeutschReflect,
  TotallyBalanced,
  CometModel,
  SpiralModel,
  PascalDedup,
  External,
};

// Growth function of the spiral triangle a(n, k) = exp(k (f(n) - f(k))).
enum class SpiralF { LogCubed, TenthRoot };

inline constexpr double kGoldenRatio = 1.6180339887498948482;
inline constexpr double kSqrt2 = 1.4142135623730950488;

struct SequenceSpec {
  Family family = Family::EKG;
  int base = 2;                   // SignFlip, VanDerCorput
  double alpha = kGoldenRatio;    // Kronecker
  double c = 0.5;                 // CometModel
  std::uint64_t seed = 1;         // CometModel
  SpiralF f_choice = SpiralF::LogCubed;
  std::string path;               // External: where the terms came from
  std::shared_ptr<const std::vector<Value>> external;  // External: loaded terms

  // Throws InvalidSpec.
  void validate() const;
  // Stable one-line description, e.g. "kronecker alpha=1.4142135623730951".
  std::string describe() const;
};

struct ValueList {
  std::vector<Value> items;
  bool dedup_applied = false;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }
  const Value& operator[](std::size_t i) const { return items[i]; }
};

struct FamilyInfo {
  Family family;
  std::string_view name;     // CLI token
  std::string_view oeis;     // "" when not an OEIS sequence
  std::string_view summary;
  bool dedup;                // generator removes repeated terms
};

std::span<const FamilyInfo> family_catalog();
const FamilyInfo& family_info(Family family);
// Accepts the CLI token or the OEIS id (case-insensitive, e.g. "a064413").
std::optional<Family> family_from_name(std::string_view name);

// First `count` terms of the family after its dedup convention.
// Throws InvalidSpec or GenerationStall.
ValueList generate(const SequenceSpec& spec, std::size_t count);

// Keep the first occurrence of each value, preserving order.
ValueList dedup(const ValueList& values);
bool check_distinct(const ValueList& values);

// --- individual families -------------------------------------------------

Value kronecker_term(std::uint64_t n, double alpha);
Value vdc_term(std::uint64_t n, int base);
Value sign_flip_term(std::uint64_t n, int base);

// A133058 terms a_0 .. a_{count-1}.
std::vector<std::uint64_t> zizka_raw(std::size_t count);
// A339571: first `count` distinct terms of A133058.
ValueList zizka_term_stream(std::size_t count);

// A005132 terms a_0 .. a_{count-1}.
std::vector<std::uint64_t> recaman_raw(std::size_t count);
ValueList recaman_stream(std::size_t count);

// A281488 terms a_1 .. a_count.
std::vector<BigInt> zabolotskiy_raw(std::size_t count);
ValueList zabolotskiy_stream(std::size_t count);

// Bits of the A038554 derivative of n (leading zeros kept). DomainError for n < 2.
std::string derivative(std::uint64_t n);
std::uint64_t gray_inverse_term(std::uint64_t n);

// (-2)^k + 2^n for 0 <= n <= k. DomainError otherwise.
Value two_powers_term(unsigned k, unsigned n);
// Row-read stream of two_powers_term with the zero entries (k odd, n = k) dropped.
ValueList two_powers_stream(std::size_t count);

std::uint64_t binary_reversal_term(std::uint64_t n);
BigInt digit_concat_term(std::uint64_t n);
std::uint64_t reversal_term(std::uint64_t n);

// A014486 in increasing order, starting with 0.
ValueList totally_balanced_stream(std::size_t count);
// v_{A014486(i)} for i >= 1.
ValueList balanced_vdc_stream(std::size_t count);
std::uint64_t deutsch_reflect_term(std::uint64_t n);

ValueList efh_a064736(std::size_t count);
ValueList efh_a036552(std::size_t count);
ValueList ekg_stream(std::size_t count);
ValueList quet_stream(std::size_t count);

ValueList comet_model(std::size_t count, double c, std::uint64_t seed);
// Whole triangle rows 1..rows read by rows, duplicates removed.
ValueList spiral_model(std::size_t rows, SpiralF f_choice);
double spiral_entry(std::uint64_t n, std::uint64_t k, SpiralF f_choice);
ValueList pascal_dedup_stream(std::size_t count);

}  // namespace seqgraph
