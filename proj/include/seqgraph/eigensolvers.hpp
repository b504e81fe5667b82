#pragma once

// Building blocks behind eigen_spectrum and spectral_embedding.

#include "seqgraph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace seqgraph {

// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
// and sub-diagonal (size n - 1), ascending. Implicit QL with Wilkinson
// shifts. Throws ConvergenceFailure.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag, std::span<const double> sub);

// Unit eigenvectors of the tridiagonal matrix for the given (accurate)
// eigenvalues, by inverse iteration. Vectors for eigenvalues closer than
// the cluster tolerance are kept mutually orthogonal.
std::vector<std::vector<double>> tridiagonal_eigenvectors(std::span<const double> diag,
                                                          std::span<const double> sub,
                                                          std::span<const double> eigenvalues);

struct DenseEigen {
  std::vector<double> values;                // ascending, all n
  std::vector<std::vector<double>> vectors;  // for the requested indices
};

// Householder tridiagonalisation + implicit QL for all eigenvalues; the
// vectors at `indices` (into the ascending list) by inverse iteration and
// back-transformation.
DenseEigen dense_symmetric_eigen(const AdjacencyMatrix& a, std::span<const std::size_t> indices);

struct LanczosOptions {
  std::size_t top = 6;      // largest Ritz pairs wanted
  std::size_t bottom = 6;   // smallest Ritz pairs wanted
  std::uint64_t seed = 0x5eedULL;
  double tolerance = 1e-10;
  std::size_t max_matvecs = 0;  // 0: 10 n
};

struct LanczosResult {
  std::vector<double> top_values;       // descending
  std::vector<double> bottom_values;    // ascending
  std::vector<std::vector<double>> top_vectors;
  std::vector<std::vector<double>> bottom_vectors;
  std::size_t matvecs = 0;
  double max_residual = 0.0;  // explicit ||A v - theta v|| over returned pairs
};

// Lanczos with full reorthogonalisation on A restricted to the complement
// of the all-ones vector (deflating the regular eigenpair). Requires a
// regular matrix. Throws ConvergenceFailure when the budget runs out.
LanczosResult lanczos_extremal(const AdjacencyMatrix& a, const LanczosOptions& options);

}  // namespace seqgraph
