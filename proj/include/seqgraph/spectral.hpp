#pragma once

#include "seqgraph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace seqgraph {

enum class EigenMethod { Auto, Dense, Iterative };

std::string_view to_string(EigenMethod m);

struct SpectrumOptions {
  EigenMethod method = EigenMethod::Auto;
  // Auto picks Dense up to this many vertices.
  std::size_t dense_limit = 2000;
  // Iterative: Ritz values kept at each end of the spectrum.
  std::size_t extremal_count = 6;
  // Iterative: start-vector seed and residual target for the kept pairs.
  std::uint64_t seed = 0x5eedULL;
  double tolerance = 1e-10;
  // Iterative: matvec budget; 0 means 10 n.
  std::size_t max_matvecs = 0;
};

// Adjacency eigenvalues. For the dense method the lists hold all n
// eigenvalues; for the iterative method they hold lambda1 plus the
// converged extremal Ritz values at both ends.
//
// lambda2_signed is the entry in second place when ordering by |lambda|
// (ties: larger signed value first), kept with its sign; lambda2_abs is its
// modulus. second_largest is the second entry of the signed descending
// order, the quantity whose gap 4 - second_largest is the minimum Rayleigh
// quotient over mean-zero vectors.
struct Spectrum {
  std::vector<double> eigen_abs_desc;
  std::vector<double> eigen_signed_desc;
  double lambda1 = 0.0;
  double lambda2_abs = 0.0;
  double lambda2_signed = 0.0;
  double second_largest = 0.0;
  double smallest = 0.0;
  EigenMethod method = EigenMethod::Dense;
  // max ||A v - lambda v|| over the pairs whose vectors are reported below.
  double residual = 0.0;
  std::size_t matvecs = 0;
  // Unit eigenvectors, mean zero.
  std::vector<double> lambda2_vector;
  std::vector<double> second_largest_vector;
};

// Throws ConvergenceFailure, DomainError (not symmetric, too small, or
// iterative on a non-regular matrix).
Spectrum eigen_spectrum(const AdjacencyMatrix& a, const SpectrumOptions& options = {});

struct Lambda2 {
  double abs = 0.0;
  double signed_value = 0.0;
};

Lambda2 lambda2(const AdjacencyMatrix& a, const SpectrumOptions& options = {});

enum class StructureClass { RandomLike, Structured, Indeterminate };

std::string_view to_string(StructureClass c);

struct Thresholds {
  double eps_rand = 0.15;   // RandomLike when |lambda2| <= sqrt(12) + eps_rand
  double tau_struct = 3.90; // Structured when |lambda2| >= tau_struct
};

struct StructureVerdict {
  StructureClass cls = StructureClass::Indeterminate;
  double lambda2_abs = 0.0;
  Thresholds thresholds;
};

// Throws DomainError when lambda2_abs is outside [0, 4 + 1e-9] or the
// thresholds overlap.
StructureVerdict classify(double lambda2_abs, std::size_t n, const Thresholds& thresholds = {});

// sum over edges (with multiplicity) of (f(u) - f(v))^2 divided by |f|^2.
// Throws ZeroVector, NotMeanZero (|sum f| > 1e-9 |f|), DimensionMismatch.
double rayleigh_quotient(const SequenceGraph& g, std::span<const double> f);

struct Partition {
  // +1 where f(v) > 0, -1 where f(v) <= 0.
  std::vector<signed char> side;
  std::size_t positive_count = 0;
  std::size_t cut_edges = 0;    // crossing edges, with multiplicity
  std::size_t total_edges = 0;  // with multiplicity

  double cut_fraction() const {
    return total_edges == 0 ? 0.0 : static_cast<double>(cut_edges) / static_cast<double>(total_edges);
  }
};

Partition sign_partition(const SequenceGraph& g, std::span<const double> eigvec);

// delta(n) = 2 sqrt(3) pi^2 / log(n)^2, capped at 0.6.
double alon_boppana_slack(std::size_t n);
// lambda2_abs >= sqrt(12) - delta(n). Throws DomainError for n < 50.
bool alon_boppana_check(const Spectrum& spectrum, std::size_t n);

inline constexpr double kRamanujanBound = 3.4641016151377545870;  // sqrt(12)

}  // namespace seqgraph
