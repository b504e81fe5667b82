// Integer-valued families: iterative gcd rules, dedup recurrences and the
// totally balanced (Dyck word) machinery.
#include "seqgraph/error.hpp"
#include "seqgraph/sequences.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace seqgraph {

namespace {

Value to_value(std::uint64_t v) { return Value::integer(BigInt(v)); }

// Growable "already used" set over the positive integers with a cursor on
// the smallest unused value.
class UsedSet {
 public:
  bool contains(std::uint64_t v) const { return v < bits_.size() ? bits_[v] : large_.count(v) > 0; }

  void insert(std::uint64_t v) {
    if (v < kDenseLimit) {
      if (v >= bits_.size()) bits_.resize(std::max<std::size_t>(v + 1, bits_.size() * 2), false);
      bits_[v] = true;
    } else {
      large_.insert(v);
    }
  }

  std::uint64_t smallest_unused() {
    while (contains(cursor_)) ++cursor_;
    return cursor_;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 28;
  std::vector<bool> bits_ = std::vector<bool>(1024, false);
  std::unordered_set<std::uint64_t> large_;
  std::uint64_t cursor_ = 1;
};

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// Smallest unused multiple of p, per prime, advanced lazily. Pointers only
// move forward because used values never become unused.
class MultipleCursor {
 public:
  std::uint64_t smallest_unused_multiple(std::uint64_t p, const UsedSet& used) {
    auto [it, inserted] = next_.try_emplace(p, p);
    std::uint64_t m = it->second;
    while (used.contains(m)) m += p;
    it->second = m;
    return m;
  }

  // Smallest unused m sharing a prime factor with prev.
  std::uint64_t smallest_sharing_factor(std::uint64_t prev, const UsedSet& used) {
    std::uint64_t best = UINT64_MAX;
    for (auto p : distinct_primes(prev)) best = std::min(best, smallest_unused_multiple(p, used));
    if (best == UINT64_MAX) throw Error(ErrorCode::GenerationStall, "no candidate shares a factor with 1");
    return best;
  }

 private:
  std::unordered_map<std::uint64_t, std::uint64_t> next_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::GenerationStall, "64-bit overflow");
  return r;
}

// Generates raw terms in growing prefixes until `count` distinct values
// are seen.
template <class RawFn>
ValueList distinct_prefix(std::size_t count, RawFn raw_fn) {
  const std::size_t limit = 64 * count + (std::size_t{1} << 22);
  for (std::size_t raw_len = count + 16;; raw_len *= 2) {
    raw_len = std::min(raw_len, limit);
    ValueList raw;
    for (auto& v : raw_fn(raw_len)) raw.items.push_back(Value::integer(BigInt(v)));
    ValueList out = dedup(raw);
    if (out.size() >= count) {
      out.items.resize(count);
      return out;
    }
    if (raw_len == limit) {
      throw Error(ErrorCode::GenerationStall,
                  "only " + std::to_string(out.size()) + " distinct terms in " +
                      std::to_string(raw_len) + " raw terms");
    }
  }
}

// ---- totally balanced words -----------------------------------------------

constexpr unsigned kMaxSemilength = 31;

// paths[r][h]: ways to finish r remaining steps from height h down to 0
// without dipping below 0.
const std::vector<std::vector<std::uint64_t>>& completion_table() {
  static const auto table = [] {
    const unsigned len = 2 * kMaxSemilength + 1;
    std::vector<std::vector<std::uint64_t>> t(len + 1, std::vector<std::uint64_t>(len + 2, 0));
    t[0][0] = 1;
    for (unsigned r = 1; r <= len; ++r) {
      for (unsigned h = 0; h <= len; ++h) {
        std::uint64_t ways = t[r - 1][h + 1];
        if (h > 0) ways += t[r - 1][h - 1];
        t[r][h] = ways;
      }
    }
    return t;
  }();
  return table;
}

std::uint64_t catalan(unsigned k) { return completion_table()[2 * k][0]; }

// Rank r (0-based, ascending numeric order) among words of semilength k.
std::uint64_t unrank_balanced(unsigned k, std::uint64_t r) {
  const auto& t = completion_table();
  std::uint64_t word = 0;
  unsigned h = 0;
  for (unsigned pos = 0; pos < 2 * k; ++pos) {
    const unsigned rem = 2 * k - pos - 1;
    // Try '0' first (smaller numerically); the leading bit must be '1'.
    const std::uint64_t with_zero = h > 0 ? t[rem][h - 1] : 0;
    if (r < with_zero) {
      word <<= 1;
      --h;
    } else {
      r -= with_zero;
      word = (word << 1) | 1;
      ++h;
    }
  }
  return word;
}

std::uint64_t rank_balanced(unsigned k, std::uint64_t word) {
  const auto& t = completion_table();
  std::uint64_t r = 0;
  unsigned h = 0;
  for (unsigned pos = 0; pos < 2 * k; ++pos) {
    const unsigned rem = 2 * k - pos - 1;
    const bool bit = (word >> (2 * k - pos - 1)) & 1;
    if (bit) {
      if (h > 0) r += t[rem][h - 1];
      ++h;
    } else {
      --h;
    }
  }
  return r;
}

// Global A014486 index -> (semilength, local rank).
std::pair<unsigned, std::uint64_t> locate_balanced(std::uint64_t n) {
  for (unsigned k = 0; k <= kMaxSemilength; ++k) {
    const std::uint64_t c = catalan(k);
    if (n < c) return {k, n};
    n -= c;
  }
  throw Error(ErrorCode::DomainError, "index beyond 62-bit totally balanced words");
}

std::uint64_t balanced_offset(unsigned k) {
  std::uint64_t off = 0;
  for (unsigned j = 0; j < k; ++j) off += catalan(j);
  return off;
}

std::uint64_t balanced_term(std::uint64_t n) {
  auto [k, r] = locate_balanced(n);
  return unrank_balanced(k, r);
}

// Binary tree reflection under the encoding T(L, R) = 1 T(L) 0 T(R).
std::string reflect_tree(std::string_view word) {
  if (word.empty()) return {};
  int h = 0;
  std::size_t close = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    h += word[i] == '1' ? 1 : -1;
    if (h == 0) {
      close = i;
      break;
    }
  }
  const auto left = word.substr(1, close - 1);
  const auto right = word.substr(close + 1);
  return "1" + reflect_tree(right) + "0" + reflect_tree(left);
}

}  // namespace

// ---- simple closed forms --------------------------------------------------

std::string derivative(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "derivative needs at least two bits");
  const int len = 64 - __builtin_clzll(n);
  std::string bits;
  for (int i = len - 1; i >= 1; --i) {
    const unsigned hi = (n >> i) & 1;
    const unsigned lo = (n >> (i - 1)) & 1;
    bits.push_back((hi ^ lo) ? '1' : '0');
  }
  return bits;
}

std::uint64_t gray_inverse_term(std::uint64_t n) {
  for (unsigned shift = 1; shift < 64; shift <<= 1) n ^= n >> shift;
  return n;
}

Value two_powers_term(unsigned k, unsigned n) {
  if (n > k) throw Error(ErrorCode::DomainError, "two_powers_term needs n <= k");
  BigInt pk = BigInt(1) << k;
  if (k % 2 == 1) pk = -pk;
  return Value::integer(pk + (BigInt(1) << n));
}

ValueList two_powers_stream(std::size_t count) {
  ValueList out;
  for (unsigned k = 0; out.size() < count; ++k) {
    for (unsigned n = 0; n <= k && out.size() < count; ++n) {
      if (k % 2 == 1 && n == k) continue;  // the only zero entries
      out.items.push_back(two_powers_term(k, n));
    }
  }
  return out;
}

std::uint64_t binary_reversal_term(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::DomainError, "binary reversal needs n >= 1");
  const int len = 64 - __builtin_clzll(n);
  std::uint64_t rev = 0;
  for (int i = 0; i < len - 1; ++i) rev = (rev << 1) | ((n >> i) & 1);
  return (std::uint64_t{1} << (len - 1)) | rev;
}

BigInt digit_concat_term(std::uint64_t n) {
  const std::string digits = std::to_string(n);
  if (digits.size() < 2) return 0;
  std::string out;
  for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
    out += std::to_string((digits[i] - '0') + (digits[i + 1] - '0'));
  }
  return BigInt(out);
}

std::uint64_t reversal_term(std::uint64_t n) {
  std::uint64_t r = 0;
  while (n > 0) {
    r = r * 10 + n % 10;
    n /= 10;
  }
  return r;
}

// ---- recurrences with dedup -------------------------------------------------

std::vector<std::uint64_t> zizka_raw(std::size_t count) {
  std::vector<std::uint64_t> a;
  a.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    if (n < 2) {
      a.push_back(1);
      continue;
    }
    const std::uint64_t prev = a.back();
    const std::uint64_t g = gcd(prev, n);
    a.push_back(g == 1 ? prev + n + 1 : prev / g);
  }
  return a;
}

ValueList zizka_term_stream(std::size_t count) { return distinct_prefix(count, zizka_raw); }

std::vector<std::uint64_t> recaman_raw(std::size_t count) {
  std::vector<std::uint64_t> a;
  a.reserve(count);
  UsedSet seen;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t next = 0;
    if (n > 0) {
      const std::uint64_t prev = a.back();
      next = (prev > n && !seen.contains(prev - n)) ? prev - n : prev + n;
    }
    a.push_back(next);
    seen.insert(next);
  }
  return a;
}

ValueList recaman_stream(std::size_t count) { return distinct_prefix(count, recaman_raw); }

std::vector<BigInt> zabolotskiy_raw(std::size_t count) {
  // a[i] holds a_i (1-based). divisor_sum[m] accumulates a_d over d | m as
  // each a_d becomes known; a_{m+2} = -divisor_sum[m].
  std::vector<BigInt> a(count + 1);
  std::vector<BigInt> divisor_sum(count + 1);
  auto publish = [&](std::size_t d) {
    for (std::size_t m = d; m <= count; m += d) divisor_sum[m] += a[d];
  };
  for (std::size_t n = 1; n <= count; ++n) {
    if (n == 1) a[n] = 1;
    else if (n == 2) a[n] = -1;
    else a[n] = -divisor_sum[n - 2];
    publish(n);
  }
  return {a.begin() + 1, a.end()};
}

ValueList zabolotskiy_stream(std::size_t count) { return distinct_prefix(count, zabolotskiy_raw); }

// ---- "smallest unused" sequences ------------------------------------------

ValueList efh_a064736(std::size_t count) {
  std::vector<std::uint64_t> a{1, 2};
  UsedSet used;
  used.insert(1);
  used.insert(2);
  while (a.size() < count) {
    const std::uint64_t next_small = used.smallest_unused();
    const std::uint64_t product = checked_mul(a.back(), next_small);
    a.push_back(product);
    a.push_back(next_small);
    used.insert(product);
    used.insert(next_small);
  }
  ValueList out;
  for (std::size_t i = 0; i < count; ++i) out.items.push_back(to_value(a[i]));
  return out;
}

ValueList efh_a036552(std::size_t count) {
  std::vector<std::uint64_t> a{1, 2};
  UsedSet used;
  used.insert(1);
  used.insert(2);
  while (a.size() < count) {
    const std::uint64_t doubled = checked_mul(a.back(), 2);
    used.insert(doubled);
    a.push_back(doubled);
    const std::uint64_t next_small = used.smallest_unused();
    used.insert(next_small);
    a.push_back(next_small);
  }
  ValueList out;
  for (std::size_t i = 0; i < count; ++i) out.items.push_back(to_value(a[i]));
  return out;
}

ValueList ekg_stream(std::size_t count) {
  ValueList out;
  UsedSet used;
  MultipleCursor cursor;
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t next = 0;
    if (i == 0) next = 1;
    else if (i == 1) next = 2;
    else next = cursor.smallest_sharing_factor(prev, used);
    used.insert(next);
    out.items.push_back(to_value(next));
    prev = next;
  }
  return out;
}

ValueList quet_stream(std::size_t count) {
  ValueList out;
  UsedSet used;
  MultipleCursor cursor;
  std::uint64_t prev = 0;
  std::uint64_t prev_gcd = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t next = 0;
    if (i == 0) {
      next = 1;
    } else if (i == 1) {
      next = 2;
    } else if (prev_gcd == 1) {
      // Need gcd(next, prev) != 1: the EKG step.
      next = cursor.smallest_sharing_factor(prev, used);
    } else {
      next = used.smallest_unused();
      while (used.contains(next) || gcd(next, prev) == prev_gcd) ++next;
    }
    if (i >= 1) prev_gcd = gcd(next, prev);
    used.insert(next);
    out.items.push_back(to_value(next));
    prev = next;
  }
  return out;
}

// ---- totally balanced -------------------------------------------------------

ValueList totally_balanced_stream(std::size_t count) {
  ValueList out;
  out.items.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.items.push_back(to_value(balanced_term(i)));
  return out;
}

ValueList balanced_vdc_stream(std::size_t count) {
  ValueList out;
  out.items.reserve(count);
  for (std::uint64_t i = 1; i <= count; ++i) out.items.push_back(vdc_term(balanced_term(i), 2));
  return out;
}

std::uint64_t deutsch_reflect_term(std::uint64_t n) {
  auto [k, r] = locate_balanced(n);
  const std::uint64_t word = unrank_balanced(k, r);
  std::string bits;
  for (int i = static_cast<int>(2 * k) - 1; i >= 0; --i) bits.push_back(((word >> i) & 1) ? '1' : '0');
  const std::string mirrored = reflect_tree(bits);
  std::uint64_t image = 0;
  for (char ch : mirrored) image = (image << 1) | (ch == '1' ? 1 : 0);
  return balanced_offset(k) + rank_balanced(k, image);
}

}  // namespace seqgraph
