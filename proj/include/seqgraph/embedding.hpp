#pragma once

#include "seqgraph/graph.hpp"
#include "seqgraph/spectral.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace seqgraph {

enum class LayoutMethod { Spectral, SpringElectrical };

std::string_view to_string(LayoutMethod m);

struct Embedding {
  int dims = 2;
  Eigen::MatrixXd coords;  // n x dims
  LayoutMethod method = LayoutMethod::Spectral;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(coords.rows()); }
};

// Columns are unit eigenvectors of L = 4I - A for the `dims` smallest
// nonzero Laplacian eigenvalues. Throws DomainError, ConvergenceFailure.
Embedding spectral_embedding(const SequenceGraph& g, int dims, const SpectrumOptions& options = {});

struct SpringOptions {
  int dims = 2;
  std::uint64_t seed = 1;
  std::size_t iterations = 500;
  unsigned threads = 1;
  // Called after each iteration with the current coordinates.
  std::function<void(std::size_t, const Eigen::MatrixXd&)> on_iteration;
};

// Fruchterman-Reingold layout: attraction d^2/k per unit multiplicity,
// repulsion k^2/d between all pairs, displacement capped by a linearly
// cooling temperature. Deterministic for a fixed seed, whatever the thread
// count.
Embedding spring_layout(const SequenceGraph& g, const SpringOptions& options);
Embedding spring_layout(const SequenceGraph& g, int dims, std::uint64_t seed, std::size_t iterations);

// Centre at the origin and scale to unit bounding radius. Throws
// DegenerateEmbedding when all points coincide.
Embedding normalize(const Embedding& e);

// Sum over edges (with multiplicity) of the Euclidean edge length.
double total_edge_length(const SequenceGraph& g, const Eigen::MatrixXd& coords);

// Fraction of adjacent vertex pairs whose distance is within the given
// quantile of all pairwise distances. A proxy for "visible structure":
// neighbours in the graph land close together in the picture.
double local_consistency(const SequenceGraph& g, const Embedding& e, double quantile = 0.05);

}  // namespace seqgraph
