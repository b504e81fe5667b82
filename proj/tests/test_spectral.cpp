#include "support.hpp"

#include "seqgraph/eigensolvers.hpp"
#include "seqgraph/error.hpp"
#include "seqgraph/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <cmath>

using namespace seqgraph;
using namespace testing_support;

namespace {

SequenceGraph kronecker_graph(double alpha, std::size_t n) {
  SequenceSpec spec;
  spec.family = Family::Kronecker;
  spec.alpha = alpha;
  return build_graph(generate(spec, n));
}

SequenceGraph family_graph(Family f, std::size_t n) {
  SequenceSpec spec;
  spec.family = f;
  return build_graph(generate(spec, n));
}

// Reference eigenvalues, ascending, from Eigen's own dense solver.
Eigen::VectorXd reference_eigenvalues(const AdjacencyMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.dense(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::Io;
}

SpectrumOptions with(EigenMethod m) {
  SpectrumOptions o;
  o.method = m;
  return o;
}

}  // namespace

TEST(Spectrum, Triangle) {
  const auto g = build_graph(ints({1, 2, 3}));
  const auto s = eigen_spectrum(g.adjacency());
  ASSERT_EQ(s.eigen_signed_desc.size(), 3u);
  EXPECT_NEAR(s.eigen_signed_desc[0], 4.0, 1e-12);
  EXPECT_NEAR(s.eigen_signed_desc[1], -2.0, 1e-12);
  EXPECT_NEAR(s.eigen_signed_desc[2], -2.0, 1e-12);
  const auto l2 = lambda2(g.adjacency());
  EXPECT_NEAR(l2.abs, 2.0, 1e-12);
  EXPECT_NEAR(l2.signed_value, -2.0, 1e-12);
}

TEST(Spectrum, KroneckerSqrt2) {
  const auto s = eigen_spectrum(kronecker_graph(kSqrt2, 200).adjacency());
  EXPECT_NEAR(s.lambda2_signed, -3.959, 0.01);
  EXPECT_EQ(s.method, EigenMethod::Dense);
  // Independent solver.
  const auto ref = reference_eigenvalues(kronecker_graph(kSqrt2, 200).adjacency());
  EXPECT_NEAR(s.lambda2_signed, ref(0), 1e-9);
  EXPECT_NEAR(s.second_largest, ref(ref.size() - 2), 1e-9);
}

TEST(Spectrum, GoldenKroneckerIsNearFour) {
  EXPECT_GT(eigen_spectrum(kronecker_graph(kGoldenRatio, 1000).adjacency()).lambda2_abs, 3.9);
}

TEST(Spectrum, DenseMatchesReferenceSolver) {
  SplitMix64 rng(17);
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 50 + rng.next() % 250;
    const auto g = build_graph(random_reals(rng, n));
    const auto s = eigen_spectrum(g.adjacency(), with(EigenMethod::Dense));
    const auto ref = reference_eigenvalues(g.adjacency());
    ASSERT_EQ(s.eigen_signed_desc.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_NEAR(s.eigen_signed_desc[i], ref(static_cast<Eigen::Index>(n - 1 - i)), 1e-9);
    }
  }
}

TEST(Spectrum, OrderingsAreConsistent) {
  SplitMix64 rng(21);
  const auto s = eigen_spectrum(build_graph(random_reals(rng, 150)).adjacency());
  for (std::size_t i = 1; i < s.eigen_abs_desc.size(); ++i) {
    ASSERT_GE(std::abs(s.eigen_abs_desc[i - 1]), std::abs(s.eigen_abs_desc[i]));
    ASSERT_GE(s.eigen_signed_desc[i - 1], s.eigen_signed_desc[i]);
  }
  EXPECT_EQ(s.lambda2_abs, std::max(std::abs(s.second_largest), std::abs(s.smallest)));
  EXPECT_NEAR(s.lambda1, 4.0, 1e-9);
  EXPECT_LE(s.residual, 1e-8 * 150);
}

TEST(Spectrum, LambdaOneIsFourAcrossFamilies) {
  for (const auto& info : family_catalog()) {
    if (info.family == Family::External) continue;
    const auto s = eigen_spectrum(family_graph(info.family, 100).adjacency());
    EXPECT_NEAR(s.lambda1, 4.0, 1e-9) << info.name;
    EXPECT_LE(s.lambda2_abs, 4.0 + 1e-9) << info.name;
  }
}

TEST(Spectrum, IterativeMatchesDense) {
  SplitMix64 rng(5);
  for (int t = 0; t < 3; ++t) {
    const auto g = build_graph(random_reals(rng, 600));
    const auto d = eigen_spectrum(g.adjacency(), with(EigenMethod::Dense));
    const auto it = eigen_spectrum(g.adjacency(), with(EigenMethod::Iterative));
    EXPECT_EQ(it.method, EigenMethod::Iterative);
    EXPECT_NEAR(d.lambda2_abs, it.lambda2_abs, 1e-6);
    EXPECT_NEAR(d.lambda2_signed, it.lambda2_signed, 1e-6);
    EXPECT_NEAR(d.second_largest, it.second_largest, 1e-6);
    EXPECT_NEAR(d.smallest, it.smallest, 1e-6);
    EXPECT_GT(it.matvecs, 0u);
    EXPECT_LE(it.matvecs, 6000u);
  }
}

TEST(Spectrum, IterativeIsBitReproducible) {
  const auto g = family_graph(Family::EKG, 1500);
  const auto a = eigen_spectrum(g.adjacency(), with(EigenMethod::Iterative));
  const auto b = eigen_spectrum(g.adjacency(), with(EigenMethod::Iterative));
  EXPECT_EQ(a.eigen_signed_desc, b.eigen_signed_desc);
  EXPECT_EQ(a.second_largest_vector, b.second_largest_vector);
}

TEST(Spectrum, TinyBudgetFails) {
  SpectrumOptions o = with(EigenMethod::Iterative);
  o.max_matvecs = 5;
  const auto g = family_graph(Family::EKG, 800);
  EXPECT_EQ(code_of([&] { eigen_spectrum(g.adjacency(), o); }), ErrorCode::ConvergenceFailure);
}

TEST(Spectrum, RotationInvariance) {
  SplitMix64 rng(31);
  const auto values = random_reals(rng, 300);
  ValueList rotated;
  rotated.items.assign(values.items.begin() + 117, values.items.end());
  rotated.items.insert(rotated.items.end(), values.items.begin(), values.items.begin() + 117);
  const auto a = eigen_spectrum(build_graph(values).adjacency(), with(EigenMethod::Dense));
  const auto b = eigen_spectrum(build_graph(rotated).adjacency(), with(EigenMethod::Dense));
  for (std::size_t i = 0; i < a.eigen_signed_desc.size(); ++i) {
    ASSERT_NEAR(a.eigen_signed_desc[i], b.eigen_signed_desc[i], 1e-8);
  }
}

TEST(Spectrum, RejectsBadMatrices) {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  EXPECT_NO_THROW(eigen_spectrum(AdjacencyMatrix(3, edges)));
  const std::vector<Edge> tiny{{0, 1, 1}};
  EXPECT_EQ(code_of([&] { eigen_spectrum(AdjacencyMatrix(2, tiny)); }), ErrorCode::DomainError);
}

TEST(Spectrum, EigenvectorsAreUnitMeanZero) {
  const auto s = eigen_spectrum(kronecker_graph(kGoldenRatio, 300).adjacency());
  for (const auto* v : {&s.second_largest_vector, &s.lambda2_vector}) {
    double sum = 0.0, sq = 0.0;
    for (double x : *v) {
      sum += x;
      sq += x * x;
    }
    EXPECT_NEAR(sum, 0.0, 1e-9);
    EXPECT_NEAR(sq, 1.0, 1e-9);
  }
}

// ---- tridiagonal building blocks ----------------------------------------------

TEST(Tridiagonal, KnownSpectrum) {
  // Path graph P_n: eigenvalues 2 cos(pi j / (n+1)).
  const std::size_t n = 40;
  std::vector<double> diag(n, 0.0), sub(n - 1, 1.0);
  const auto ev = tridiagonal_eigenvalues(diag, sub);
  for (std::size_t j = 1; j <= n; ++j) {
    const double expect = 2.0 * std::cos(M_PI * static_cast<double>(n + 1 - j) / static_cast<double>(n + 1));
    EXPECT_NEAR(ev[j - 1], expect, 1e-12);
  }
  const auto vecs = tridiagonal_eigenvectors(diag, sub, ev);
  for (std::size_t j = 0; j < n; ++j) {
    // ||T v - lambda v||
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double tv = 0.0;
      if (i > 0) tv += vecs[j][i - 1];
      if (i + 1 < n) tv += vecs[j][i + 1];
      r += std::pow(tv - ev[j] * vecs[j][i], 2);
    }
    EXPECT_LT(std::sqrt(r), 1e-10);
  }
}

TEST(Tridiagonal, ClusteredEigenvaluesGiveOrthogonalVectors) {
  // Two decoupled identical blocks: every eigenvalue is double.
  std::vector<double> diag(20, 0.0), sub(19, 1.0);
  sub[9] = 0.0;
  const auto ev = tridiagonal_eigenvalues(diag, sub);
  const auto vecs = tridiagonal_eigenvectors(diag, sub, ev);
  for (std::size_t a = 0; a < 20; ++a) {
    for (std::size_t b = 0; b < 20; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < 20; ++i) dot += vecs[a][i] * vecs[b][i];
      EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-8) << a << "," << b;
    }
  }
}

// ---- classification -------------------------------------------------------------

TEST(Classify, Examples) {
  EXPECT_EQ(classify(3.96, 5000).cls, StructureClass::Structured);
  EXPECT_EQ(classify(3.47, 2000).cls, StructureClass::RandomLike);
  EXPECT_EQ(classify(3.70, 2000).cls, StructureClass::Indeterminate);
  EXPECT_EQ(classify(kRamanujanBound + 0.15, 100).cls, StructureClass::RandomLike);
  EXPECT_EQ(classify(3.90, 100).cls, StructureClass::Structured);
}

TEST(Classify, ConfigurableAndValidated) {
  Thresholds t;
  t.tau_struct = 3.75;
  EXPECT_EQ(classify(3.80, 100, t).cls, StructureClass::Structured);
  t.eps_rand = 0.4;
  EXPECT_EQ(code_of([&] { classify(3.80, 100, t); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { classify(4.1, 100); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { classify(-0.1, 100); }), ErrorCode::DomainError);
}

// ---- Rayleigh quotient ------------------------------------------------------------

TEST(Rayleigh, TriangleByHand) {
  const auto g = build_graph(ints({1, 2, 3}));
  const std::vector<double> f{1.0, -1.0, 0.0};
  EXPECT_NEAR(rayleigh_quotient(g, f), 6.0, 1e-12);
}

TEST(Rayleigh, ScaleInvariant) {
  SplitMix64 rng(2);
  const auto g = build_graph(random_reals(rng, 80));
  std::vector<double> f(80), f2(80);
  double mean = 0.0;
  for (auto& x : f) {
    x = rng.uniform();
    mean += x / 80.0;
  }
  for (std::size_t i = 0; i < 80; ++i) {
    f[i] -= mean;
    f2[i] = 2.0 * f[i];
  }
  EXPECT_NEAR(rayleigh_quotient(g, f), rayleigh_quotient(g, f2), 1e-12);
}

TEST(Rayleigh, Errors) {
  const auto g = build_graph(ints({1, 2, 3}));
  EXPECT_EQ(code_of([&] { rayleigh_quotient(g, std::vector<double>{1.0, 1.0, 1.0}); }), ErrorCode::NotMeanZero);
  EXPECT_EQ(code_of([&] { rayleigh_quotient(g, std::vector<double>{0.0, 0.0, 0.0}); }), ErrorCode::ZeroVector);
  EXPECT_EQ(code_of([&] { rayleigh_quotient(g, std::vector<double>{1.0, -1.0}); }), ErrorCode::DimensionMismatch);
}

TEST(Rayleigh, IdentityAtEigenvectors) {
  for (const auto f : {Family::EKG, Family::Quet, Family::SignFlip, Family::Kronecker}) {
    const auto g = family_graph(f, 400);
    const auto s = eigen_spectrum(g.adjacency());
    EXPECT_NEAR(rayleigh_quotient(g, s.lambda2_vector), 4.0 - s.lambda2_signed, 1e-6);
    EXPECT_NEAR(rayleigh_quotient(g, s.second_largest_vector), 4.0 - s.second_largest, 1e-6);
  }
}

TEST(Rayleigh, SecondLargestGivesTheMinimum) {
  SplitMix64 rng(44);
  const auto g = build_graph(random_reals(rng, 120));
  const auto s = eigen_spectrum(g.adjacency());
  const double floor = 4.0 - s.second_largest;
  for (int t = 0; t < 500; ++t) {
    std::vector<double> f(120);
    double mean = 0.0;
    for (auto& x : f) {
      x = rng.uniform() - 0.5;
      mean += x / 120.0;
    }
    // Bias towards the minimiser so the bound is tested near-tight too.
    const double w = rng.uniform() * 20.0;
    for (std::size_t i = 0; i < 120; ++i) f[i] = f[i] - mean + w * s.second_largest_vector[i];
    ASSERT_GE(rayleigh_quotient(g, f), floor - 1e-9);
  }
}

// ---- sign partition ----------------------------------------------------------------

namespace {

// Cut fraction of the sign split of the reference second-largest eigenvector.
double reference_cut_fraction(const SequenceGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adjacency().dense());
  const auto n = static_cast<Eigen::Index>(g.size());
  const Eigen::VectorXd f = es.eigenvectors().col(n - 2);
  std::size_t cut = 0;
  for (const auto& e : g.edges()) {
    const bool a = f(static_cast<Eigen::Index>(e.u)) > 0;
    const bool b = f(static_cast<Eigen::Index>(e.v)) > 0;
    if (a != b) cut += static_cast<std::size_t>(e.multiplicity);
  }
  return static_cast<double>(cut) / (2.0 * static_cast<double>(g.size()));
}

}  // namespace

TEST(SignPartition, StructuredKroneckerHasSmallCut) {
  const auto g200 = kronecker_graph(kSqrt2, 200);
  const auto s200 = eigen_spectrum(g200.adjacency());
  const auto p200 = sign_partition(g200, s200.second_largest_vector);
  EXPECT_NEAR(p200.cut_fraction(), reference_cut_fraction(g200), 1e-12);
  EXPECT_LT(p200.cut_fraction(), 0.1);

  const auto g = kronecker_graph(kSqrt2, 1000);
  const auto p = sign_partition(g, eigen_spectrum(g.adjacency()).second_largest_vector);
  EXPECT_LT(p.cut_fraction(), 0.05);
  EXPECT_EQ(p.total_edges, 2000u);
}

TEST(SignPartition, RandomBothSidesNonEmpty) {
  SplitMix64 rng(200);
  const auto g = build_graph(random_reals(rng, 200));
  const auto p = sign_partition(g, eigen_spectrum(g.adjacency()).second_largest_vector);
  EXPECT_GT(p.positive_count, 0u);
  EXPECT_LT(p.positive_count, 200u);
  std::size_t pos = 0;
  for (auto side : p.side) pos += side > 0;
  EXPECT_EQ(pos, p.positive_count);
}

TEST(SignPartition, CountsWithMultiplicity) {
  const auto g = build_graph(ints({1, 2, 3}));
  const auto p = sign_partition(g, std::vector<double>{1.0, -1.0, 0.0});
  EXPECT_EQ(p.total_edges, 6u);
  EXPECT_EQ(p.cut_edges, 4u);
}

// ---- Alon-Boppana ----------------------------------------------------------------

TEST(AlonBoppana, Examples) {
  Spectrum s;
  s.lambda2_abs = 4.0;
  EXPECT_TRUE(alon_boppana_check(s, 1000));
  s.lambda2_abs = 2.0;
  EXPECT_FALSE(alon_boppana_check(s, 1000));
  EXPECT_EQ(code_of([&] { alon_boppana_check(s, 49); }), ErrorCode::DomainError);
  EXPECT_NEAR(alon_boppana_slack(1000), std::min(2.0 * std::sqrt(3.0) * M_PI * M_PI / std::pow(std::log(1000.0), 2), 0.6),
              1e-15);
  EXPECT_EQ(alon_boppana_slack(50), 0.6);
}

TEST(AlonBoppana, CorpusAtThousand) {
  for (const auto& info : family_catalog()) {
    if (info.family == Family::External) continue;
    const auto s = eigen_spectrum(family_graph(info.family, 1000).adjacency());
    EXPECT_TRUE(alon_boppana_check(s, 1000)) << info.name << " " << s.lambda2_abs;
  }
}
