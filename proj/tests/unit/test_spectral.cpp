#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "altgraph/cayley.hpp"
#include "altgraph/errors.hpp"
#include "altgraph/spectral.hpp"
#include "oracles.hpp"

using namespace altgraph;

namespace {

// tr(A^k) for k = 0..kmax by repeated dense integer products.
std::vector<double> power_traces(const std::vector<std::vector<char>>& adj, int kmax) {
  const std::size_t n = adj.size();
  std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  std::vector<double> out;
  for (int k = 0; k <= kmax; ++k) {
    double t = 0;
    for (std::size_t i = 0; i < n; ++i) t += p[i][i];
    out.push_back(t);
    std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m)
        if (adj[m][i])
          for (std::size_t j = 0; j < n; ++j) next[i][j] += p[m][j];
    p = std::move(next);
  }
  return out;
}

double moment(const Spectrum& s, int k) {
  double t = 0;
  for (const auto& e : s.grouped) t += static_cast<double>(e.multiplicity) * std::pow(e.value, k);
  return t;
}

}  // namespace

TEST(Jacobi, TwoByTwo) {
  DenseSymMatrix m(2);
  m.set(0, 1, 1.0);
  auto s = eigenvalues_symmetric(m);
  ASSERT_EQ(s.values.size(), 2u);
  EXPECT_NEAR(s.values[0], 1.0, 1e-12);
  EXPECT_NEAR(s.values[1], -1.0, 1e-12);
}

TEST(Jacobi, AGamma5Spectrum) {
  auto g = build_even_derangement_graph(5);
  auto s = eigenvalues_symmetric(DenseSymMatrix::from_graph(g), 1e-10, true);
  EXPECT_NEAR(s.least(), -6.0, 1e-9);
  EXPECT_NEAR(s.largest(), 24.0, 1e-9);
  EXPECT_NEAR(s.trace(), 0.0, 1e-6 * 60);
  EXPECT_NEAR(s.energy(), 2.0 * 720, 1e-6 * 60);
  // Moments of the computed spectrum against closed walks counted by brute force.
  auto traces = power_traces(oracle::base_adjacency(5), 4);
  for (int k = 0; k <= 4; ++k) EXPECT_NEAR(moment(s, k), traces[static_cast<std::size_t>(k)], 1e-5) << k;
  EXPECT_LT(s.integrality_defect(), 1e-6);
  // Eigenvectors: A v = lambda v and orthonormality.
  for (std::size_t k : {0u, 10u, 59u}) {
    auto v = s.eigenvector(k);
    for (VertexId i = 0; i < 60; ++i) {
      double av = 0;
      for (VertexId j : g.neighbors(i)) av += v[j];
      EXPECT_NEAR(av, s.values[k] * v[i], 1e-8);
    }
    EXPECT_NEAR(std::inner_product(v.begin(), v.end(), v.begin(), 0.0), 1.0, 1e-10);
  }
  auto a = s.eigenvector(3), b = s.eigenvector(40);
  EXPECT_NEAR(std::inner_product(a.begin(), a.end(), b.begin(), 0.0), 0.0, 1e-10);
}

TEST(Jacobi, AGamma6LeastEigenvalue) {
  auto g = build_even_derangement_graph(6);
  auto s = eigenvalues_symmetric(DenseSymMatrix::from_graph(g));
  EXPECT_NEAR(s.least(), -26.0, 1e-9);
  EXPECT_NEAR(s.largest(), 130.0, 1e-9);
  EXPECT_NEAR(s.trace(), 0.0, 1e-6 * 360);
  EXPECT_NEAR(s.energy(), 360.0 * 130, 1e-6 * 360);
  EXPECT_LT(s.integrality_defect(), 1e-6);
}

TEST(Jacobi, InvariantUnderRelabelling) {
  auto g = build_even_derangement_graph(5);
  std::vector<VertexId> perm(60);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(9);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  auto h = ExplicitGraph::from_edges(60, edges);
  auto a = eigenvalues_symmetric(DenseSymMatrix::from_graph(g));
  auto b = eigenvalues_symmetric(DenseSymMatrix::from_graph(h));
  for (std::size_t k = 0; k < 60; ++k) EXPECT_NEAR(a.values[k], b.values[k], 1e-9);
}

TEST(Jacobi, Guards) {
  EXPECT_THROW(eigenvalues_symmetric(DenseSymMatrix(kJacobiLimit + 1)), ResourceLimit);
}

TEST(RatioBound, Values) {
  EXPECT_NEAR(ratio_bound(60, 24, -6), 12.0, 1e-12);
  EXPECT_NEAR(ratio_bound(360, 130, -26), 60.0, 1e-12);
  EXPECT_NEAR(ratio_bound(3600, 576, -144), 720.0, 1e-12);
  EXPECT_THROW(ratio_bound(10, 3, 3), std::invalid_argument);
}

TEST(TensorSpectrum, Products) {
  auto base = eigenvalues_symmetric(DenseSymMatrix::from_graph(build_even_derangement_graph(5)));
  auto t1 = tensor_spectrum(base, 1);
  ASSERT_EQ(t1.grouped.size(), base.grouped.size());
  for (std::size_t k = 0; k < t1.grouped.size(); ++k) {
    EXPECT_NEAR(t1.grouped[k].value, base.grouped[k].value, 1e-9);
    EXPECT_EQ(t1.grouped[k].multiplicity, base.grouped[k].multiplicity);
  }
  auto t2 = tensor_spectrum(base, 2);
  // Brute minimum over pairs.
  double lo = 1e18;
  for (double a : base.values)
    for (double b : base.values) lo = std::min(lo, a * b);
  EXPECT_NEAR(t2.least(), lo, 1e-8);
  EXPECT_NEAR(t2.least(), -144.0, 1e-8);
  EXPECT_NEAR(t2.largest(), 576.0, 1e-8);
  std::size_t total = 0;
  for (const auto& e : t2.grouped) total += e.multiplicity;
  EXPECT_EQ(total, 3600u);
}

TEST(TensorSpectrum, RayleighQuotientsWithinBounds) {
  auto o = tensor_power_oracle(5, 2);
  std::mt19937_64 rng(4);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 5; ++t) {
    std::vector<double> x(3600);
    for (auto& v : x) v = nd(rng);
    double r = rayleigh_quotient(o, x);
    EXPECT_GE(r, -144.0 - 1e-9);
    EXPECT_LE(r, 576.0 + 1e-9);
  }
  std::vector<double> ones(3600, 1.0);
  EXPECT_NEAR(rayleigh_quotient(o, ones), 576.0, 1e-9);
}

TEST(Certificate, Tightness) {
  auto g5 = build_even_derangement_graph(5);
  auto s5 = eigenvalues_symmetric(DenseSymMatrix::from_graph(g5));
  EXPECT_EQ(ratio_tightness_certificate(g5, s5, 12), Certificate::holds);
  EXPECT_EQ(ratio_tightness_certificate(g5, s5, 13), Certificate::fails);
  auto g6 = build_even_derangement_graph(6);
  auto s6 = eigenvalues_symmetric(DenseSymMatrix::from_graph(g6));
  EXPECT_EQ(ratio_tightness_certificate(g6, s6, 60), Certificate::holds);
  EXPECT_EQ(ratio_tightness_certificate(3600, 576, -144.0, 720), Certificate::holds);
  EXPECT_EQ(ratio_tightness_certificate(60, 24, -6.3, 12), Certificate::indeterminate);
}

TEST(SpectrumCsv, Format) {
  auto s = eigenvalues_symmetric(DenseSymMatrix::from_graph(build_even_derangement_graph(5)));
  std::ostringstream os;
  write_spectrum_csv(os, s);
  EXPECT_EQ(os.str(), "eigenvalue,multiplicity\n24,1\n4,18\n0,25\n-6,16\n");
}
