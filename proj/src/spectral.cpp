#include "seqgraph/spectral.hpp"

#include "seqgraph/eigensolvers.hpp"
#include "seqgraph/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace seqgraph {

std::string_view to_string(EigenMethod m) {
  switch (m) {
    case EigenMethod::Auto: return "auto";
    case EigenMethod::Dense: return "dense";
    case EigenMethod::Iterative: return "iterative";
  }
  return "?";
}

std::string_view to_string(StructureClass c) {
  switch (c) {
    case StructureClass::RandomLike: return "RandomLike";
    case StructureClass::Structured: return "Structured";
    case StructureClass::Indeterminate: return "Indeterminate";
  }
  return "?";
}

namespace {

double residual(const AdjacencyMatrix& a, const std::vector<double>& v, double lambda) {
  std::vector<double> av(v.size());
  a.apply(v, av);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = av[i] - lambda * v[i];
    s += r * r;
  }
  return std::sqrt(s);
}

void center_unit(std::vector<double>& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double s = 0.0;
  for (double& x : v) {
    x -= mean;
    s += x * x;
  }
  const double nrm = std::sqrt(s);
  for (double& x : v) x /= nrm;
}

// Fills the orderings and the scalar summaries from a list that contains
// lambda1 exactly once. lambda1 heads both orderings even when rounding
// leaves it a hair below |lambda_min| = 4 (bipartite graphs).
void summarize(Spectrum& s, std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  s.eigen_signed_desc = values;
  s.lambda1 = values.front();
  s.second_largest = values.size() > 1 ? values[1] : values[0];
  s.smallest = values.back();

  s.eigen_abs_desc = values;
  std::sort(s.eigen_abs_desc.begin() + 1, s.eigen_abs_desc.end(), [](double x, double y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
    return x > y;
  });
  if (s.eigen_abs_desc.size() < 2) {
    s.lambda2_signed = s.lambda1;
  } else {
    // Moduli equal up to rounding count as a tie; the larger signed wins.
    const double top = std::abs(s.eigen_abs_desc[1]);
    s.lambda2_signed = s.eigen_abs_desc[1];
    for (std::size_t i = 2; i < s.eigen_abs_desc.size() && std::abs(s.eigen_abs_desc[i]) >= top - 1e-9; ++i) {
      s.lambda2_signed = std::max(s.lambda2_signed, s.eigen_abs_desc[i]);
    }
  }
  s.lambda2_abs = std::abs(s.lambda2_signed);
}

Spectrum dense_spectrum(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  // Ascending order: second largest sits at n-2, smallest at 0.
  const std::size_t idx_second = n - 2;
  DenseEigen probe = dense_symmetric_eigen(a, std::vector<std::size_t>{idx_second, 0});

  Spectrum s;
  s.method = EigenMethod::Dense;
  summarize(s, probe.values);

  s.second_largest_vector = probe.vectors[0];
  center_unit(s.second_largest_vector);
  // lambda2 by modulus is either the second largest or the smallest.
  if (s.lambda2_signed == s.second_largest) {
    s.lambda2_vector = s.second_largest_vector;
  } else {
    s.lambda2_vector = probe.vectors[1];
    center_unit(s.lambda2_vector);
  }
  std::vector<double> ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
  s.residual = std::max({residual(a, ones, s.lambda1),
                         residual(a, s.second_largest_vector, s.second_largest),
                         residual(a, s.lambda2_vector, s.lambda2_signed)});
  return s;
}

Spectrum iterative_spectrum(const AdjacencyMatrix& a, const SpectrumOptions& options) {
  LanczosOptions lo;
  lo.top = std::max<std::size_t>(options.extremal_count, 1);
  lo.bottom = std::max<std::size_t>(options.extremal_count, 1);
  lo.seed = options.seed;
  lo.tolerance = options.tolerance;
  lo.max_matvecs = options.max_matvecs;
  LanczosResult lr = lanczos_extremal(a, lo);

  const double degree = a.row_sum(0);
  std::vector<double> values{degree};
  values.insert(values.end(), lr.top_values.begin(), lr.top_values.end());
  for (std::size_t i = 0; i < lr.bottom_values.size(); ++i) {
    // Small matrices: the two ends may overlap.
    const double v = lr.bottom_values[i];
    if (std::find(lr.top_values.begin(), lr.top_values.end(), v) == lr.top_values.end()) {
      values.push_back(v);
    }
  }

  Spectrum s;
  s.method = EigenMethod::Iterative;
  s.matvecs = lr.matvecs;
  summarize(s, values);
  s.second_largest_vector = lr.top_vectors.front();
  s.lambda2_vector = s.lambda2_signed == s.second_largest ? lr.top_vectors.front() : lr.bottom_vectors.front();

  const std::size_t n = a.size();
  std::vector<double> ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
  s.residual = std::max({residual(a, ones, s.lambda1),
                         residual(a, s.second_largest_vector, s.second_largest),
                         residual(a, s.lambda2_vector, s.lambda2_signed)});
  return s;
}

}  // namespace

Spectrum eigen_spectrum(const AdjacencyMatrix& a, const SpectrumOptions& options) {
  const std::size_t n = a.size();
  if (n < 3) throw Error(ErrorCode::DomainError, "spectrum needs n >= 3");
  if (!a.is_symmetric()) throw Error(ErrorCode::DomainError, "adjacency matrix is not symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i, i) != 0) throw Error(ErrorCode::DomainError, "adjacency matrix has a nonzero diagonal");
  }

  EigenMethod method = options.method;
  if (method == EigenMethod::Auto) method = n <= options.dense_limit ? EigenMethod::Dense : EigenMethod::Iterative;
  Spectrum s = method == EigenMethod::Dense ? dense_spectrum(a) : iterative_spectrum(a, options);

  const double bound = 1e-8 * static_cast<double>(n);
  if (!(s.residual <= bound)) {
    throw Error(ErrorCode::ConvergenceFailure,
                "eigenpair residual " + std::to_string(s.residual) + " exceeds " + std::to_string(bound));
  }
  return s;
}

Lambda2 lambda2(const AdjacencyMatrix& a, const SpectrumOptions& options) {
  const Spectrum s = eigen_spectrum(a, options);
  return Lambda2{s.lambda2_abs, s.lambda2_signed};
}

StructureVerdict classify(double lambda2_abs, std::size_t n, const Thresholds& thresholds) {
  (void)n;  // the default thresholds do not depend on n
  if (!(lambda2_abs >= 0.0 && lambda2_abs <= 4.0 + 1e-9)) {
    throw Error(ErrorCode::DomainError, "lambda2_abs outside [0, 4]");
  }
  if (!(kRamanujanBound + thresholds.eps_rand < thresholds.tau_struct)) {
    throw Error(ErrorCode::DomainError, "thresholds overlap: need sqrt(12) + eps_rand < tau_struct");
  }
  StructureVerdict v;
  v.lambda2_abs = lambda2_abs;
  v.thresholds = thresholds;
  if (lambda2_abs <= kRamanujanBound + thresholds.eps_rand) v.cls = StructureClass::RandomLike;
  else if (lambda2_abs >= thresholds.tau_struct) v.cls = StructureClass::Structured;
  else v.cls = StructureClass::Indeterminate;
  return v;
}

double rayleigh_quotient(const SequenceGraph& g, std::span<const double> f) {
  if (f.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
  double sum = 0.0;
  double sq = 0.0;
  for (double x : f) {
    sum += x;
    sq += x * x;
  }
  if (sq == 0.0) throw Error(ErrorCode::ZeroVector, "f is the zero vector");
  if (std::abs(sum) > 1e-9 * std::sqrt(sq)) throw Error(ErrorCode::NotMeanZero, "f does not have mean zero");

  double num = 0.0;
  for (const auto& e : g.edges()) {
    const double d = f[e.u] - f[e.v];
    num += e.multiplicity * d * d;
  }
  return num / sq;
}

Partition sign_partition(const SequenceGraph& g, std::span<const double> eigvec) {
  if (eigvec.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
  Partition p;
  p.side.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    p.side[v] = eigvec[v] > 0.0 ? 1 : -1;
    if (p.side[v] > 0) ++p.positive_count;
  }
  for (const auto& e : g.edges()) {
    p.total_edges += static_cast<std::size_t>(e.multiplicity);
    if (p.side[e.u] != p.side[e.v]) p.cut_edges += static_cast<std::size_t>(e.multiplicity);
  }
  return p;
}

double alon_boppana_slack(std::size_t n) {
  const double log_n = std::log(static_cast<double>(n));
  const double delta = kRamanujanBound * std::numbers::pi * std::numbers::pi / (log_n * log_n);
  return std::min(delta, 0.6);
}

bool alon_boppana_check(const Spectrum& spectrum, std::size_t n) {
  if (n < 50) throw Error(ErrorCode::DomainError, "Alon-Boppana check needs n >= 50");
  return spectrum.lambda2_abs >= kRamanujanBound - alon_boppana_slack(n);
}

}  // namespace seqgraph
