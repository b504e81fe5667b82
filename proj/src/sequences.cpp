#include "seqgraph/sequences.hpp"

#include "seqgraph/error.hpp"
#include "seqgraph/rng.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>

namespace seqgraph {

namespace {

constexpr std::array<FamilyInfo, 22> kCatalog{{
    {Family::Kronecker, "kronecker", "", "fractional parts {n alpha}, n >= 1", false},
    {Family::VanDerCorput, "vdc", "", "van der Corput radical inverse in base b, n >= 1", false},
    {Family::EFH_A064736, "efh-a064736", "A064736",
     "Erdos-Freud-Hegyvari: a(2n+1) = a(2n) a(2n+2), a(2n+2) smallest unused", false},
    {Family::EFH_A036552, "efh-a036552", "A036552",
     "Erdos-Freud-Hegyvari: a(2n) smallest unused, a(2n+1) = 2 a(2n)", false},
    {Family::ReversalDedup, "reversal", "A076641", "decimal digit reversal A004086, duplicates removed",
     true},
    {Family::SignFlip, "signflip", "A053985", "base-b digits of n evaluated at -b, n >= 0", false},
    {Family::ZizkaDedup, "zizka", "A339571", "Zizka gcd recurrence A133058, duplicates removed", true},
    {Family::EKG, "ekg", "A064413", "EKG sequence: smallest unused m with gcd(m, prev) >= 2", false},
    {Family::BalancedVdc, "balanced-vdc", "", "van der Corput (base 2) along totally balanced integers",
     false},
    {Family::RecamanDedup, "recaman", "A005132", "Recaman sequence, duplicates removed", true},
    {Family::Quet, "quet", "A127202",
     "Quet: smallest unused m with gcd(m, prev) != gcd(prev, prev2)", false},
    {Family::Zabolotskiy, "zabolotskiy", "A281488",
     "a(n) = -sum of a(d) over divisors d of n-2, duplicates removed", true},
    {Family::GrayInverse, "gray", "A006068", "inverse Gray code (prefix XOR), n >= 0", false},
    {Family::TwoPowers, "two-powers", "A140589", "(-2)^k + 2^n read by rows, zeros removed", false},
    {Family::BinaryReversal, "binary-reversal", "A059893",
     "reverse all binary digits after the leading 1, n >= 1", false},
    {Family::DigitConcatDedup, "digit-concat", "A347520",
     "concatenated sums of adjacent decimal digits A053392, duplicates removed", true},
    {Family::DeutschReflect, "deutsch", "A057163",
     "binary-tree reflection on totally balanced words, as ranks", false},
    {Family::TotallyBalanced, "totally-balanced", "A014486", "totally balanced binary integers",
     false},
    {Family::CometModel, "comet", "", "a(n) = n + c X n, X uniform on [0,1) (seeded)", true},
    {Family::SpiralModel, "spiral", "", "exp(k (f(n) - f(k))) read by rows, duplicates removed", true},
    {Family::PascalDedup, "pascal", "A014631", "Pascal's triangle read by rows, duplicates removed",
     true},
    {Family::External, "external", "", "terms read from an OEIS b-file, duplicates removed", true},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ValueList require_distinct(ValueList list, const char* family) {
  if (!check_distinct(list)) {
    throw Error(ErrorCode::GenerationStall,
                std::string(family) + " produced repeated values");
  }
  return list;
}

ValueList take(ValueList list, std::size_t count) {
  if (list.items.size() > count) list.items.resize(count);
  return list;
}

}  // namespace

std::span<const FamilyInfo> family_catalog() { return kCatalog; }

const FamilyInfo& family_info(Family family) {
  for (const auto& info : kCatalog) {
    if (info.family == family) return info;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& info : kCatalog) {
    if (key == info.name || (!info.oeis.empty() && key == lower(info.oeis))) return info.family;
  }
  return std::nullopt;
}

void SequenceSpec::validate() const {
  switch (family) {
    case Family::SignFlip:
    case Family::VanDerCorput:
      if (base < 2) throw Error(ErrorCode::InvalidSpec, "base must be >= 2");
      break;
    case Family::Kronecker:
      if (!std::isfinite(alpha)) throw Error(ErrorCode::InvalidSpec, "alpha must be finite");
      break;
    case Family::CometModel:
      if (!std::isfinite(c) || c < 0.0) throw Error(ErrorCode::InvalidSpec, "c must be >= 0");
      break;
    case Family::External:
      if (!external) throw Error(ErrorCode::InvalidSpec, "external family has no loaded terms");
      break;
    default:
      break;
  }
}

std::string SequenceSpec::describe() const {
  std::string out(family_info(family).name);
  switch (family) {
    case Family::SignFlip:
    case Family::VanDerCorput:
      out += " base=" + std::to_string(base);
      break;
    case Family::Kronecker:
      out += " alpha=" + format_double(alpha);
      break;
    case Family::CometModel:
      out += " c=" + format_double(c) + " seed=" + std::to_string(seed);
      break;
    case Family::SpiralModel:
      out += f_choice == SpiralF::LogCubed ? " f=logcubed" : " f=tenthroot";
      break;
    case Family::External:
      out += " path=" + path;
      break;
    default:
      break;
  }
  return out;
}

ValueList dedup(const ValueList& values) {
  ValueList out;
  out.dedup_applied = true;
  std::set<Value> seen;
  for (const auto& v : values.items) {
    if (seen.insert(v).second) out.items.push_back(v);
  }
  return out;
}

bool check_distinct(const ValueList& values) {
  std::vector<const Value*> ptrs;
  ptrs.reserve(values.size());
  for (const auto& v : values.items) ptrs.push_back(&v);
  std::sort(ptrs.begin(), ptrs.end(), [](const Value* a, const Value* b) { return *a < *b; });
  for (std::size_t i = 1; i < ptrs.size(); ++i) {
    if (*ptrs[i - 1] == *ptrs[i]) return false;
  }
  return true;
}

Value kronecker_term(std::uint64_t n, double alpha) {
  const double x = static_cast<double>(n);
  const double whole = std::floor(x * alpha);
  // fma gives n*alpha - whole with a single rounding.
  double frac = std::fma(x, alpha, -whole);
  if (frac < 0.0) frac += 1.0;
  if (frac >= 1.0) frac -= 1.0;
  return Value::real(frac);
}

Value vdc_term(std::uint64_t n, int base) {
  if (base < 2) throw Error(ErrorCode::DomainError, "base must be >= 2");
  if (n == 0) throw Error(ErrorCode::DomainError, "van der Corput term v_0 is undefined");
  const auto b = static_cast<std::uint64_t>(base);
  BigInt num = 0;
  BigInt den = 1;
  while (n > 0) {
    num = num * b + n % b;
    den *= b;
    n /= b;
  }
  return Value::rational(num, den);
}

Value sign_flip_term(std::uint64_t n, int base) {
  if (base < 2) throw Error(ErrorCode::DomainError, "base must be >= 2");
  const auto b = static_cast<std::uint64_t>(base);
  BigInt sum = 0;
  BigInt power = 1;
  const BigInt neg_b = -BigInt(b);
  while (n > 0) {
    sum += power * (n % b);
    power *= neg_b;
    n /= b;
  }
  return Value::integer(sum);
}

ValueList comet_model(std::size_t count, double c, std::uint64_t seed) {
  if (!std::isfinite(c) || c < 0.0) throw Error(ErrorCode::InvalidSpec, "c must be >= 0");
  SplitMix64 rng(seed);
  ValueList raw;
  raw.items.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const double n = static_cast<double>(i);
    raw.items.push_back(Value::real(n + c * rng.uniform() * n));
  }
  return dedup(raw);
}

double spiral_entry(std::uint64_t n, std::uint64_t k, SpiralF f_choice) {
  auto f = [f_choice](double x) {
    return f_choice == SpiralF::LogCubed ? std::pow(std::log(x + 1.0), 3.0) : std::pow(x, 0.1);
  };
  const double kk = static_cast<double>(k);
  return std::exp(kk * (f(static_cast<double>(n)) - f(kk)));
}

namespace {

void append_spiral_row(ValueList& raw, std::uint64_t n, SpiralF f_choice) {
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double v = spiral_entry(n, k, f_choice);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::DomainError,
                  "spiral entry a(" + std::to_string(n) + "," + std::to_string(k) +
                      ") overflows double precision");
    }
    raw.items.push_back(Value::real(v));
  }
}

}  // namespace

ValueList spiral_model(std::size_t rows, SpiralF f_choice) {
  ValueList raw;
  for (std::uint64_t n = 1; n <= rows; ++n) append_spiral_row(raw, n, f_choice);
  return dedup(raw);
}

ValueList pascal_dedup_stream(std::size_t count) {
  ValueList out;
  out.dedup_applied = true;
  std::set<BigInt> seen;
  std::vector<BigInt> row{1};
  while (out.size() < count) {
    for (const auto& entry : row) {
      if (seen.insert(entry).second) {
        out.items.push_back(Value::integer(entry));
        if (out.size() == count) break;
      }
    }
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return out;
}

ValueList generate(const SequenceSpec& spec, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidSpec, "count must be >= 1");
  spec.validate();

  switch (spec.family) {
    case Family::Kronecker: {
      ValueList out;
      out.items.reserve(count);
      for (std::uint64_t n = 1; n <= count; ++n) out.items.push_back(kronecker_term(n, spec.alpha));
      if (!check_distinct(out)) {
        throw Error(ErrorCode::InvalidSpec,
                    "alpha produced repeated fractional parts (alpha must be irrational)");
      }
      return out;
    }
    case Family::VanDerCorput: {
      ValueList out;
      out.items.reserve(count);
      for (std::uint64_t n = 1; n <= count; ++n) out.items.push_back(vdc_term(n, spec.base));
      return require_distinct(std::move(out), "vdc");
    }
    case Family::SignFlip: {
      ValueList out;
      out.items.reserve(count);
      for (std::uint64_t n = 0; n < count; ++n) out.items.push_back(sign_flip_term(n, spec.base));
      return require_distinct(std::move(out), "signflip");
    }
    case Family::EFH_A064736: return require_distinct(efh_a064736(count), "efh-a064736");
    case Family::EFH_A036552: return require_distinct(efh_a036552(count), "efh-a036552");
    case Family::EKG: return require_distinct(ekg_stream(count), "ekg");
    case Family::Quet: return require_distinct(quet_stream(count), "quet");
    case Family::ZizkaDedup: return zizka_term_stream(count);
    case Family::RecamanDedup: return recaman_stream(count);
    case Family::Zabolotskiy: return zabolotskiy_stream(count);
    case Family::BalancedVdc: return balanced_vdc_stream(count);
    case Family::TotallyBalanced: return totally_balanced_stream(count);
    case Family::TwoPowers: return require_distinct(two_powers_stream(count), "two-powers");
    case Family::PascalDedup: return pascal_dedup_stream(count);
    case Family::ReversalDedup: {
      ValueList out;
      out.dedup_applied = true;
      std::set<std::uint64_t> seen;
      for (std::uint64_t n = 0; out.size() < count; ++n) {
        const auto r = reversal_term(n);
        if (seen.insert(r).second) out.items.push_back(Value::integer(static_cast<std::int64_t>(r)));
      }
      return out;
    }
    case Family::DigitConcatDedup: {
      ValueList out;
      out.dedup_applied = true;
      std::set<BigInt> seen;
      for (std::uint64_t n = 0; out.size() < count; ++n) {
        auto v = digit_concat_term(n);
        if (seen.insert(v).second) out.items.push_back(Value::integer(std::move(v)));
      }
      return out;
    }
    case Family::GrayInverse:
    case Family::DeutschReflect:
    case Family::BinaryReversal: {
      ValueList out;
      out.items.reserve(count);
      const std::uint64_t start = spec.family == Family::BinaryReversal ? 1 : 0;
      for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t n = start + i;
        std::uint64_t v = 0;
        if (spec.family == Family::GrayInverse) v = gray_inverse_term(n);
        else if (spec.family == Family::DeutschReflect) v = deutsch_reflect_term(n);
        else v = binary_reversal_term(n);
        out.items.push_back(Value::integer(BigInt(v)));
      }
      return require_distinct(std::move(out), family_info(spec.family).name.data());
    }
    case Family::CometModel: {
      auto out = comet_model(count, spec.c, spec.seed);
      // Duplicates have probability ~0; top up deterministically if one occurs.
      for (std::size_t extra = count; out.size() < count; extra += count) {
        out = comet_model(extra + count, spec.c, spec.seed);
      }
      return take(std::move(out), count);
    }
    case Family::SpiralModel: {
      ValueList raw;
      std::set<Value> seen;
      ValueList out;
      out.dedup_applied = true;
      for (std::uint64_t n = 1; out.size() < count; ++n) {
        raw.items.clear();
        append_spiral_row(raw, n, spec.f_choice);
        for (auto& v : raw.items) {
          if (out.size() < count && seen.insert(v).second) out.items.push_back(v);
        }
      }
      return out;
    }
    case Family::External: {
      ValueList raw;
      raw.items = *spec.external;
      auto out = dedup(raw);
      if (out.size() < count) {
        throw Error(ErrorCode::InvalidSpec,
                    "b-file has only " + std::to_string(out.size()) + " distinct terms, " +
                        std::to_string(count) + " requested");
      }
      return take(std::move(out), count);
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

}  // namespace seqgraph
