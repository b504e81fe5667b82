#pragma once

#include "seqgraph/sequences.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace seqgraph {

// Undirected edge with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  int multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Symmetric nonnegative integer matrix stored by rows; each row of a
// sequence graph has at most four nonzero entries.
class AdjacencyMatrix {
 public:
  struct Entry {
    std::size_t col;
    int count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  AdjacencyMatrix() = default;
  // Edges may repeat; counts add up. Self-loops are rejected.
  AdjacencyMatrix(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return rows_.size(); }
  int at(std::size_t i, std::size_t j) const;
  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
  int row_sum(std::size_t i) const;
  bool is_symmetric() const;

  // y = A x
  void apply(std::span<const double> x, std::span<double> y) const;
  Eigen::MatrixXd dense() const;
  // Upper-triangle edge list, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::vector<std::vector<Entry>> rows_;
};

// The two-cycle multigraph of a list of distinct values: vertex i carries
// values[i]; edges join consecutive entries of the input order and of the
// sorted order, both cyclically.
class SequenceGraph {
 public:
  std::size_t size() const noexcept { return values_.size(); }
  const ValueList& values() const noexcept { return values_; }
  // sort_perm()[r] = vertex with the r-th smallest value.
  const std::vector<std::size_t>& sort_perm() const noexcept { return sort_perm_; }
  // Sorted by (u, v), u < v, multiplicity 1 or 2.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const AdjacencyMatrix& adjacency() const noexcept { return adjacency_; }

  int multiplicity(std::size_t u, std::size_t v) const { return adjacency_.at(u, v); }
  int degree(std::size_t v) const { return adjacency_.row_sum(v); }

 private:
  friend SequenceGraph build_graph(ValueList values);

  ValueList values_;
  std::vector<std::size_t> sort_perm_;
  std::vector<Edge> edges_;
  AdjacencyMatrix adjacency_;
};

// Throws TooFewVertices (n < 3) or DuplicateValues.
SequenceGraph build_graph(ValueList values);

AdjacencyMatrix adjacency_matrix(const SequenceGraph& g);

struct GraphStats {
  std::size_t n = 0;
  std::size_t edge_count = 0;         // with multiplicity, always 2n
  std::size_t distinct_pairs = 0;
  std::size_t double_edge_count = 0;
  int max_multiplicity = 0;
  bool is_connected = false;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats graph_stats(const SequenceGraph& g);
bool is_connected(const AdjacencyMatrix& a);

// Closed-form adjacency of the graph of the two-powers stream (zeros
// removed), over vertices (k, n) with k <= N, in row-read order.
enum class TwoPowersReading {
  // Case rules resolved against brute force; matches the constructed graph.
  Resolved,
  // The case rules exactly as printed; kept to document the discrepancy.
  AsPrinted,
};

struct TwoPowersAdjacency {
  std::vector<std::pair<unsigned, unsigned>> vertices;  // (k, n), row-read order
  AdjacencyMatrix matrix;
};

TwoPowersAdjacency predicted_two_powers_adjacency(unsigned N,
                                                  TwoPowersReading reading = TwoPowersReading::Resolved);

}  // namespace seqgraph
