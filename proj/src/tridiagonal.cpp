#include "seqgraph/eigensolvers.hpp"
#include "seqgraph/error.hpp"
#include "seqgraph/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace seqgraph {

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag, std::span<const double> sub) {
  const std::size_t n = diag.size();
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  std::copy(sub.begin(), sub.begin() + static_cast<std::ptrdiff_t>(n > 0 ? n - 1 : 0), e.begin());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  // Zero-diagonal inputs can keep |d_m| + |d_m+1| near 0, so the relative
  // deflation test alone may never fire; also deflate against ||T||.
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    norm = std::max(norm, std::abs(d[i]) + std::abs(e[i]) + (i ? std::abs(e[i - 1]) : 0.0));
  }
  const double floor = eps * norm;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor) break;
      }
      if (m == l) break;
      if (++iter > 60) throw Error(ErrorCode::ConvergenceFailure, "tridiagonal QL did not converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // Split: recover and restart the sweep.
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

// LU factorisation with partial pivoting of the tridiagonal T - shift I;
// U has two super-diagonals.
class ShiftedTridiagonalLU {
 public:
  ShiftedTridiagonalLU(std::span<const double> diag, std::span<const double> sub, double shift,
                       double tiny)
      : n_(diag.size()), u0_(n_), u1_(n_, 0.0), u2_(n_, 0.0), mult_(n_, 0.0), swapped_(n_, 0) {
    double cur_diag = diag[0] - shift;
    double cur_up = n_ > 1 ? sub[0] : 0.0;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      const double below = sub[i];
      const double next_diag = diag[i + 1] - shift;
      const double next_up = i + 2 < n_ ? sub[i + 1] : 0.0;
      if (std::abs(cur_diag) >= std::abs(below)) {
        const double pivot = guard(cur_diag, tiny);
        const double m = below / pivot;
        u0_[i] = pivot;
        u1_[i] = cur_up;
        mult_[i] = m;
        cur_diag = next_diag - m * cur_up;
        cur_up = next_up;
      } else {
        const double m = cur_diag / below;
        u0_[i] = below;
        u1_[i] = next_diag;
        u2_[i] = next_up;
        mult_[i] = m;
        swapped_[i] = 1;
        cur_diag = cur_up - m * next_diag;
        cur_up = -m * next_up;
      }
    }
    u0_[n_ - 1] = guard(cur_diag, tiny);
  }

  void solve(std::vector<double>& y) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (swapped_[i]) std::swap(y[i], y[i + 1]);
      y[i + 1] -= mult_[i] * y[i];
    }
    for (std::size_t i = n_; i-- > 0;) {
      double s = y[i];
      if (i + 1 < n_) s -= u1_[i] * y[i + 1];
      if (i + 2 < n_) s -= u2_[i] * y[i + 2];
      y[i] = s / u0_[i];
    }
  }

 private:
  static double guard(double pivot, double tiny) {
    if (std::abs(pivot) < tiny) return pivot < 0.0 ? -tiny : tiny;
    return pivot;
  }

  std::size_t n_;
  std::vector<double> u0_, u1_, u2_, mult_;
  std::vector<char> swapped_;
};

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

void scale(std::vector<double>& x, double factor) {
  for (double& v : x) v *= factor;
}

void orthogonalize(std::vector<double>& x, const std::vector<double>& against) {
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * against[i];
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= dot * against[i];
}

}  // namespace

std::vector<std::vector<double>> tridiagonal_eigenvectors(std::span<const double> diag,
                                                          std::span<const double> sub,
                                                          std::span<const double> eigenvalues) {
  const std::size_t n = diag.size();
  double tnorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(sub[i - 1]);
    if (i + 1 < n) row += std::abs(sub[i]);
    tnorm = std::max(tnorm, row);
  }
  tnorm = std::max(tnorm, 1.0);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double tiny = eps * tnorm;
  const double cluster_tol = 1e-7 * tnorm;

  std::vector<std::vector<double>> vectors;
  SplitMix64 rng(0x1f2e3d4cULL);
  for (std::size_t idx = 0; idx < eigenvalues.size(); ++idx) {
    const double lambda = eigenvalues[idx];
    std::vector<const std::vector<double>*> cluster;
    for (std::size_t j = 0; j < idx; ++j) {
      if (std::abs(eigenvalues[j] - lambda) <= cluster_tol) cluster.push_back(&vectors[j]);
    }
    // Perturb the shift inside a cluster so repeated solves differ.
    const double shift = lambda + static_cast<double>(cluster.size()) * 10.0 * tiny;
    ShiftedTridiagonalLU lu(diag, sub, shift, tiny);

    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform() - 0.5;
    for (const auto* c : cluster) orthogonalize(x, *c);
    scale(x, 1.0 / norm(x));
    for (int it = 0; it < 6; ++it) {
      lu.solve(x);
      for (const auto* c : cluster) orthogonalize(x, *c);
      const double nx = norm(x);
      if (!(nx > 0.0) || !std::isfinite(nx)) {
        throw Error(ErrorCode::ConvergenceFailure, "inverse iteration broke down");
      }
      scale(x, 1.0 / nx);
      if (nx * tiny > 1.0 && it >= 1) break;  // growth saturated: converged
    }
    vectors.push_back(std::move(x));
  }
  return vectors;
}

DenseEigen dense_symmetric_eigen(const AdjacencyMatrix& a, std::span<const std::size_t> indices) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m = a.dense();
  Eigen::Tridiagonalization<Eigen::MatrixXd> tri(m);
  const Eigen::VectorXd diag = tri.diagonal();
  const Eigen::VectorXd sub = tri.subDiagonal();
  std::span<const double> d(diag.data(), static_cast<std::size_t>(n));
  std::span<const double> e(sub.data(), static_cast<std::size_t>(n > 0 ? n - 1 : 0));

  DenseEigen out;
  out.values = tridiagonal_eigenvalues(d, e);

  std::vector<double> wanted;
  for (auto i : indices) wanted.push_back(out.values.at(i));
  auto small = tridiagonal_eigenvectors(d, e, wanted);
  for (auto& x : small) {
    Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(x.data(), n);
    Eigen::VectorXd v = tri.matrixQ() * y;
    out.vectors.emplace_back(v.data(), v.data() + n);
  }
  return out;
}

}  // namespace seqgraph
