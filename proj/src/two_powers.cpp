#include "seqgraph/error.hpp"
#include "seqgraph/graph.hpp"

#include <map>

namespace seqgraph {

namespace {

// Last column of row k: row k has entries n = 0..k, minus the zero at n = k
// for odd k.
unsigned row_end(unsigned k) { return k % 2 == 1 ? k - 1 : k; }

}  // namespace

// Row k is increasing in n, odd rows are negative and even rows positive,
// and rows of equal parity occupy disjoint value ranges. Hence the sorted
// cycle runs: odd rows from k = N_odd down to 1 (each left to right), then
// even rows from 0 up to N_even, then wraps. The resolved rules:
//   (k,m)-(k,m+1)             x2  input and sorted order agree inside a row
//   (k,end k)-(k+1,0)         x1  input order across rows
//   (k,k)-(k+2,0), k even     x1  sorted order, even rows
//   (k,0)-(k+2,end), k odd    x1  sorted order, odd rows (descending k)
//   (0,0)-(1,0)               +1  -1 and 2 are sorted neighbours as well
//   (N,end N)-(0,0)           x1  input wrap
//   (N_even,end)-(N_odd,0)    x1  sorted wrap
TwoPowersAdjacency predicted_two_powers_adjacency(unsigned N, TwoPowersReading reading) {
  if (N < 2) throw Error(ErrorCode::DomainError, "predicted_two_powers_adjacency needs N >= 2");

  TwoPowersAdjacency out;
  std::map<std::pair<unsigned, unsigned>, std::size_t> index;
  for (unsigned k = 0; k <= N; ++k) {
    for (unsigned n = 0; n <= row_end(k); ++n) {
      index[{k, n}] = out.vertices.size();
      out.vertices.emplace_back(k, n);
    }
  }
  auto id = [&](unsigned k, unsigned n) { return index.at({k, n}); };

  std::vector<Edge> edges;
  if (reading == TwoPowersReading::Resolved) {
    auto link = [&](std::size_t a, std::size_t b, int mult) {
      edges.push_back(Edge{std::min(a, b), std::max(a, b), mult});
    };
    for (unsigned k = 0; k <= N; ++k) {
      for (unsigned m = 0; m < row_end(k); ++m) link(id(k, m), id(k, m + 1), 2);
      if (k + 1 <= N) link(id(k, row_end(k)), id(k + 1, 0), 1);
      if (k + 2 <= N) {
        if (k % 2 == 0) link(id(k, row_end(k)), id(k + 2, 0), 1);
        else link(id(k, 0), id(k + 2, row_end(k + 2)), 1);
      }
    }
    link(id(0, 0), id(1, 0), 1);
    link(id(N, row_end(N)), id(0, 0), 1);
    const unsigned n_even = N % 2 == 0 ? N : N - 1;
    const unsigned n_odd = N % 2 == 1 ? N : N - 1;
    link(id(n_even, row_end(n_even)), id(n_odd, 0), 1);
  } else {
    // A((k,m),(l,n)) as printed; each unordered pair takes the first case
    // that applies.
    std::map<std::pair<std::size_t, std::size_t>, int> entries;
    auto set = [&](std::size_t a, std::size_t b, int value) {
      entries.try_emplace({std::min(a, b), std::max(a, b)}, value);
    };
    for (unsigned k = 0; k <= N; ++k) {
      for (unsigned m = 0; m < row_end(k); ++m) set(id(k, m), id(k, m + 1), 2);
    }
    for (unsigned k = 0; k + 1 <= N; ++k) set(id(k, row_end(k)), id(k + 1, 0), 1);
    for (unsigned k = 0; k + 2 <= N; ++k) {
      const unsigned n = k % 2 == 1 ? k + 1 : 0;
      set(id(k, row_end(k)), id(k + 2, n), 1);
    }
    set(id(1, 0), id(N, row_end(N)), 1);
    for (const auto& [pair, value] : entries) edges.push_back(Edge{pair.first, pair.second, value});
  }
  out.matrix = AdjacencyMatrix(out.vertices.size(), edges);
  return out;
}

}  // namespace seqgraph
