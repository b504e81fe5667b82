#include "seqgraph/embedding.hpp"

#include "seqgraph/eigensolvers.hpp"
#include "seqgraph/error.hpp"
#include "seqgraph/rng.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace seqgraph {

std::string_view to_string(LayoutMethod m) {
  return m == LayoutMethod::Spectral ? "spectral" : "spring";
}

namespace {

void check_dims(int dims, std::size_t n) {
  if (dims != 2 && dims != 3) throw Error(ErrorCode::DomainError, "dims must be 2 or 3");
  if (n < static_cast<std::size_t>(dims) + 1) throw Error(ErrorCode::DomainError, "need n >= dims + 1");
}

}  // namespace

Embedding spectral_embedding(const SequenceGraph& g, int dims, const SpectrumOptions& options) {
  const std::size_t n = g.size();
  check_dims(dims, n);
  const auto& a = g.adjacency();

  std::vector<std::vector<double>> columns;
  const bool dense = options.method == EigenMethod::Dense ||
                     (options.method == EigenMethod::Auto && n <= options.dense_limit);
  if (dense) {
    // Largest adjacency eigenvalues below lambda1 <-> smallest nonzero
    // eigenvalues of 4I - A.
    std::vector<std::size_t> indices;
    for (int d = 0; d < dims; ++d) indices.push_back(n - 2 - static_cast<std::size_t>(d));
    columns = dense_symmetric_eigen(a, indices).vectors;
  } else {
    LanczosOptions lo;
    lo.top = static_cast<std::size_t>(dims);
    lo.bottom = 0;
    lo.seed = options.seed;
    lo.tolerance = options.tolerance;
    lo.max_matvecs = options.max_matvecs;
    columns = lanczos_extremal(a, lo).top_vectors;
  }

  Embedding e;
  e.dims = dims;
  e.method = LayoutMethod::Spectral;
  e.coords.resize(static_cast<Eigen::Index>(n), dims);
  for (int d = 0; d < dims; ++d) {
    Eigen::VectorXd col = Eigen::Map<const Eigen::VectorXd>(columns[static_cast<std::size_t>(d)].data(),
                                                            static_cast<Eigen::Index>(n));
    col.array() -= col.mean();
    col.normalize();
    e.coords.col(d) = col;
  }
  return e;
}

Embedding spring_layout(const SequenceGraph& g, int dims, std::uint64_t seed, std::size_t iterations) {
  SpringOptions opts;
  opts.dims = dims;
  opts.seed = seed;
  opts.iterations = iterations;
  return spring_layout(g, opts);
}

Embedding spring_layout(const SequenceGraph& g, const SpringOptions& options) {
  const std::size_t n = g.size();
  const int dims = options.dims;
  check_dims(dims, n);
  if (options.iterations < 1) throw Error(ErrorCode::DomainError, "iterations must be >= 1");

  // Unit frame; k is the ideal edge length for n points in it. Steps start
  // at k/4: at k or above the layout oscillates about its equilibrium.
  const double k = std::pow(1.0 / static_cast<double>(n), 1.0 / dims);
  const double k2 = k * k;
  const double t0 = 0.25 * k;

  const auto rows = static_cast<Eigen::Index>(n);
  const auto nd = static_cast<std::size_t>(dims);
  // Row-major n x dims.
  std::vector<double> pos(n * nd);
  SplitMix64 rng(options.seed);
  for (auto& x : pos) x = rng.uniform() - 0.5;
  std::vector<double> disp(n * nd);
  const auto& adj = g.adjacency();

  // Each vertex sums its own forces in a fixed order, so the chunking
  // below cannot change the result.
  auto forces = [&](std::size_t begin, std::size_t end) {
    double delta[3];
    for (std::size_t v = begin; v < end; ++v) {
      const double* pv = &pos[v * nd];
      double acc[3] = {0.0, 0.0, 0.0};
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v) continue;
        const double* pu = &pos[u * nd];
        double d2 = 0.0;
        for (std::size_t d = 0; d < nd; ++d) {
          delta[d] = pv[d] - pu[d];
          d2 += delta[d] * delta[d];
        }
        if (d2 < 1e-24) {
          // Coincident points: push apart along the first axis by index.
          acc[0] += (v < u ? -1.0 : 1.0) * k2 / 1e-6;
          continue;
        }
        // (delta / dist) * (k^2 / dist)
        const double f = k2 / d2;
        for (std::size_t d = 0; d < nd; ++d) acc[d] += delta[d] * f;
      }
      for (const auto& e : adj.row(v)) {
        const double* pu = &pos[e.col * nd];
        double d2 = 0.0;
        for (std::size_t d = 0; d < nd; ++d) {
          delta[d] = pv[d] - pu[d];
          d2 += delta[d] * delta[d];
        }
        // (delta / dist) * (dist^2 / k) * m
        const double f = std::sqrt(d2) / k * e.count;
        for (std::size_t d = 0; d < nd; ++d) acc[d] -= delta[d] * f;
      }
      for (std::size_t d = 0; d < nd; ++d) disp[v * nd + d] = acc[d];
    }
  };

  Eigen::MatrixXd snapshot;
  auto to_matrix = [&] {
    Eigen::MatrixXd m(rows, dims);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t d = 0; d < nd; ++d) m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(d)) = pos[v * nd + d];
    }
    return m;
  };

  const unsigned threads = std::max(1u, options.threads);
  for (std::size_t it = 0; it < options.iterations; ++it) {
    const double temperature =
        t0 * (1.0 - static_cast<double>(it) / static_cast<double>(options.iterations));
    if (threads == 1) {
      forces(0, n);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (n + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(n, t * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        if (begin < end) pool.emplace_back(forces, begin, end);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      double len2 = 0.0;
      for (std::size_t d = 0; d < nd; ++d) len2 += disp[v * nd + d] * disp[v * nd + d];
      const double len = std::sqrt(len2);
      if (len == 0.0) continue;
      const double step = std::min(len, temperature) / len;
      for (std::size_t d = 0; d < nd; ++d) pos[v * nd + d] += disp[v * nd + d] * step;
    }
    if (options.on_iteration) {
      snapshot = to_matrix();
      options.on_iteration(it, snapshot);
    }
  }

  Embedding e;
  e.dims = dims;
  e.coords = to_matrix();
  e.method = LayoutMethod::SpringElectrical;
  e.seed = options.seed;
  e.iterations = options.iterations;
  return e;
}

Embedding normalize(const Embedding& e) {
  if (!e.coords.allFinite()) throw Error(ErrorCode::DomainError, "non-finite coordinates");
  Embedding out = e;
  if (out.coords.rows() == 0) throw Error(ErrorCode::DegenerateEmbedding, "empty embedding");
  const Eigen::RowVectorXd mean = out.coords.colwise().mean();
  out.coords.rowwise() -= mean;
  const double radius = out.coords.rowwise().norm().maxCoeff();
  const double scale = std::max(1.0, e.coords.cwiseAbs().maxCoeff());
  if (!(radius > 1e-12 * scale)) throw Error(ErrorCode::DegenerateEmbedding, "all points coincide");
  out.coords /= radius;
  return out;
}

double total_edge_length(const SequenceGraph& g, const Eigen::MatrixXd& coords) {
  double total = 0.0;
  for (const auto& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    total += e.multiplicity * (coords.row(u) - coords.row(v)).norm();
  }
  return total;
}

double local_consistency(const SequenceGraph& g, const Embedding& e, double quantile) {
  const auto n = e.coords.rows();
  if (static_cast<std::size_t>(n) != g.size()) throw Error(ErrorCode::DimensionMismatch, "embedding size differs from n");
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) dists.push_back((e.coords.row(i) - e.coords.row(j)).norm());
  }
  const auto rank = static_cast<std::size_t>(std::floor(quantile * static_cast<double>(dists.size() - 1)));
  std::nth_element(dists.begin(), dists.begin() + static_cast<std::ptrdiff_t>(rank), dists.end());
  const double threshold = dists[rank];
  std::size_t close = 0;
  for (const auto& edge : g.edges()) {
    const double d = (e.coords.row(static_cast<Eigen::Index>(edge.u)) -
                      e.coords.row(static_cast<Eigen::Index>(edge.v))).norm();
    if (d <= threshold) ++close;
  }
  return static_cast<double>(close) / static_cast<double>(g.edges().size());
}

}  // namespace seqgraph
