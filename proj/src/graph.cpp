#include "seqgraph/graph.hpp"

#include "seqgraph/error.hpp"

#include <algorithm>
#include <numeric>

namespace seqgraph {

AdjacencyMatrix::AdjacencyMatrix(std::size_t n, std::span<const Edge> edges) : rows_(n) {
  auto bump = [this](std::size_t i, std::size_t j, int count) {
    auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != row.end() && it->col == j) it->count += count;
    else row.insert(it, Entry{j, count});
  };
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::DimensionMismatch, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::DomainError, "self-loop");
    bump(e.u, e.v, e.multiplicity);
    bump(e.v, e.u, e.multiplicity);
  }
}

int AdjacencyMatrix::at(std::size_t i, std::size_t j) const {
  for (const auto& e : rows_.at(i)) {
    if (e.col == j) return e.count;
  }
  return 0;
}

int AdjacencyMatrix::row_sum(std::size_t i) const {
  int s = 0;
  for (const auto& e : rows_.at(i)) s += e.count;
  return s;
}

bool AdjacencyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& e : rows_[i]) {
      if (at(e.col, i) != e.count) return false;
    }
  }
  return true;
}

void AdjacencyMatrix::apply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    double s = 0.0;
    for (const auto& e : rows_[i]) s += e.count * x[e.col];
    y[i] = s;
  }
}

Eigen::MatrixXd AdjacencyMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(rows_.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (const auto& e : rows_[i]) m(i, static_cast<Eigen::Index>(e.col)) = e.count;
  }
  return m;
}

std::vector<Edge> AdjacencyMatrix::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& e : rows_[i]) {
      if (e.col > i) out.push_back(Edge{i, e.col, e.count});
    }
  }
  return out;
}

SequenceGraph build_graph(ValueList values) {
  const std::size_t n = values.size();
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "need at least 3 values, got " + std::to_string(n));

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t r = 1; r < n; ++r) {
    if (values[perm[r - 1]] == values[perm[r]]) {
      throw Error(ErrorCode::DuplicateValues,
                  "value " + values[perm[r]].to_string() + " occurs more than once");
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(2 * n);
  auto add = [&](std::size_t a, std::size_t b) { pairs.emplace_back(std::min(a, b), std::max(a, b)); };
  for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);
  for (std::size_t r = 0; r < n; ++r) add(perm[r], perm[(r + 1) % n]);
  std::sort(pairs.begin(), pairs.end());

  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) {
    if (!edges.empty() && edges.back().u == u && edges.back().v == v) ++edges.back().multiplicity;
    else edges.push_back(Edge{u, v, 1});
  }

  SequenceGraph g;
  g.adjacency_ = AdjacencyMatrix(n, edges);
  g.values_ = std::move(values);
  g.sort_perm_ = std::move(perm);
  g.edges_ = std::move(edges);
  return g;
}

AdjacencyMatrix adjacency_matrix(const SequenceGraph& g) { return g.adjacency(); }

bool is_connected(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& e : a.row(v)) {
      if (!seen[e.col]) {
        seen[e.col] = 1;
        ++reached;
        stack.push_back(e.col);
      }
    }
  }
  return reached == n;
}

GraphStats graph_stats(const SequenceGraph& g) {
  GraphStats s;
  s.n = g.size();
  s.distinct_pairs = g.edges().size();
  for (const auto& e : g.edges()) {
    s.edge_count += static_cast<std::size_t>(e.multiplicity);
    if (e.multiplicity == 2) ++s.double_edge_count;
    s.max_multiplicity = std::max(s.max_multiplicity, e.multiplicity);
  }
  s.is_connected = is_connected(g.adjacency());
  return s;
}

}  // namespace seqgraph
