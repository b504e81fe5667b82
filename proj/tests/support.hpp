#pragma once

#include "seqgraph/graph.hpp"
#include "seqgraph/rng.hpp"
#include "seqgraph/sequences.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

using namespace seqgraph;

inline ValueList ints(std::initializer_list<long long> xs) {
  ValueList out;
  for (long long x : xs) out.items.push_back(Value::integer(static_cast<std::int64_t>(x)));
  return out;
}

inline std::vector<std::string> strings(const ValueList& v) {
  std::vector<std::string> out;
  for (const auto& x : v.items) out.push_back(x.to_string());
  return out;
}

inline std::vector<std::string> strings(std::initializer_list<const char*> xs) {
  return std::vector<std::string>(xs.begin(), xs.end());
}

// 1, 41, 42, 13, 56, 23, 73: the seven-vertex illustration graph.
inline ValueList fig1_values() { return ints({1, 41, 42, 13, 56, 23, 73}); }

// n distinct doubles, i.i.d. uniform in [0, 1).
inline ValueList random_reals(SplitMix64& rng, std::size_t n) {
  std::set<double> seen;
  ValueList out;
  while (out.size() < n) {
    const double x = rng.uniform();
    if (seen.insert(x).second) out.items.push_back(Value::real(x));
  }
  return out;
}

// Random permutation of 0..n-1 as integer values.
inline ValueList random_permutation(SplitMix64& rng, std::size_t n) {
  std::vector<long long> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<long long>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.next() % i]);
  ValueList out;
  for (long long x : p) out.items.push_back(Value::integer(static_cast<std::int64_t>(x)));
  return out;
}

// Dense n x n multiplicity matrix from the two cycles, computed directly.
inline std::vector<std::vector<int>> brute_adjacency(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  auto link = [&](std::size_t a, std::size_t b) {
    ++m[a][b];
    ++m[b][a];
  };
  for (std::size_t i = 0; i < n; ++i) link(i, (i + 1) % n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t r = 0; r < n; ++r) link(order[r], order[(r + 1) % n]);
  return m;
}

}  // namespace testing_support
