#include "seqgraph/eigensolvers.hpp"
#include "seqgraph/error.hpp"
#include "seqgraph/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace seqgraph {

namespace {

Eigen::VectorXd apply(const AdjacencyMatrix& a, const Eigen::VectorXd& x) {
  Eigen::VectorXd y(x.size());
  a.apply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
          std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
  return y;
}

void remove_mean(Eigen::VectorXd& x) { x.array() -= x.mean(); }

}  // namespace

LanczosResult lanczos_extremal(const AdjacencyMatrix& a, const LanczosOptions& options) {
  const auto n = static_cast<Eigen::Index>(a.size());
  if (n < 3) throw Error(ErrorCode::DomainError, "lanczos needs n >= 3");
  const int degree = a.row_sum(0);
  for (Eigen::Index i = 1; i < n; ++i) {
    if (a.row_sum(static_cast<std::size_t>(i)) != degree) {
      throw Error(ErrorCode::DomainError, "lanczos deflation needs a regular matrix");
    }
  }

  // The deflated space has dimension n - 1.
  const Eigen::Index max_dim = n - 1;
  const std::size_t budget = options.max_matvecs == 0 ? 10 * static_cast<std::size_t>(n) : options.max_matvecs;
  const auto want_top = static_cast<Eigen::Index>(std::min<std::size_t>(options.top, static_cast<std::size_t>(max_dim)));
  const auto want_bottom = static_cast<Eigen::Index>(std::min<std::size_t>(options.bottom, static_cast<std::size_t>(max_dim)));

  SplitMix64 rng(options.seed);
  Eigen::VectorXd q(n);
  for (Eigen::Index i = 0; i < n; ++i) q(i) = rng.uniform() - 0.5;
  remove_mean(q);
  q.normalize();

  Eigen::Index capacity = std::min<Eigen::Index>(max_dim, 64);
  Eigen::MatrixXd basis(n, capacity);
  basis.col(0) = q;
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[j] couples basis j and j+1

  LanczosResult result;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz;
  Eigen::Index dim = 0;
  Eigen::Index next_check = std::max<Eigen::Index>(2 * (want_top + want_bottom), 10);
  bool converged = false;

  while (true) {
    const Eigen::Index j = dim;
    Eigen::VectorXd w = apply(a, basis.col(j));
    ++result.matvecs;
    alpha.push_back(basis.col(j).dot(w));
    ++dim;

    // Full reorthogonalisation, twice, plus the deflated direction.
    for (int pass = 0; pass < 2; ++pass) {
      remove_mean(w);
      const auto active = basis.leftCols(dim);
      w -= active * (active.transpose() * w);
    }
    const double b = w.norm();
    const bool exhausted = dim == max_dim || b < 1e-12;
    const bool out_of_budget = result.matvecs >= budget;

    if (exhausted || out_of_budget || dim >= next_check) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), dim);
      Eigen::VectorXd sub = dim > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), dim - 1))
                                    : Eigen::VectorXd();
      ritz.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const auto& s = ritz.eigenvectors();
      double worst = 0.0;
      const Eigen::Index top = std::min(want_top, dim);
      const Eigen::Index bottom = std::min(want_bottom, dim);
      for (Eigen::Index i = 0; i < top; ++i) worst = std::max(worst, std::abs(b * s(dim - 1, dim - 1 - i)));
      for (Eigen::Index i = 0; i < bottom; ++i) worst = std::max(worst, std::abs(b * s(dim - 1, i)));
      if (exhausted || (top == want_top && bottom == want_bottom && worst <= options.tolerance)) {
        converged = true;
        break;
      }
      if (out_of_budget) {
        throw Error(ErrorCode::ConvergenceFailure,
                    "lanczos: " + std::to_string(result.matvecs) + " matvecs, residual estimate " +
                        std::to_string(worst));
      }
      next_check = dim + std::max<Eigen::Index>(10, dim / 10);
    }

    if (dim == capacity) {
      capacity = std::min<Eigen::Index>(max_dim, 2 * capacity);
      basis.conservativeResize(Eigen::NoChange, capacity);
    }
    beta.push_back(b);
    basis.col(dim) = w / b;
  }
  (void)converged;

  const auto active = basis.leftCols(dim);
  const auto& s = ritz.eigenvectors();
  const auto& theta = ritz.eigenvalues();
  auto ritz_pair = [&](Eigen::Index i, std::vector<double>& values, std::vector<std::vector<double>>& vectors) {
    Eigen::VectorXd v = active * s.col(i);
    remove_mean(v);
    v.normalize();
    const double r = (apply(a, v) - theta(i) * v).norm();
    result.max_residual = std::max(result.max_residual, r);
    values.push_back(theta(i));
    vectors.emplace_back(v.data(), v.data() + n);
  };
  for (Eigen::Index i = 0; i < std::min(want_top, dim); ++i) ritz_pair(dim - 1 - i, result.top_values, result.top_vectors);
  for (Eigen::Index i = 0; i < std::min(want_bottom, dim); ++i) ritz_pair(i, result.bottom_values, result.bottom_vectors);
  return result;
}

}  // namespace seqgraph
