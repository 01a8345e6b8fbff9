#include "altgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "altgraph/errors.hpp"
#include "altgraph/group.hpp"

namespace altgraph {

DenseSymMatrix DenseSymMatrix::from_graph(const ExplicitGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n > kJacobiLimit) throw ResourceLimit("dense matrix limited to " + std::to_string(kJacobiLimit) + " rows");
  DenseSymMatrix m(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : graph.neighbors(u)) m.a_[u * n + v] = 1.0;
  return m;
}

double DenseSymMatrix::trace() const {
  double t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

std::size_t Spectrum::dimension() const {
  std::size_t d = 0;
  for (const auto& e : grouped) d += e.multiplicity;
  return d;
}

double Spectrum::trace() const {
  double t = 0;
  for (const auto& e : grouped) t += e.value * static_cast<double>(e.multiplicity);
  return t;
}

double Spectrum::energy() const {
  double t = 0;
  for (const auto& e : grouped) t += e.value * e.value * static_cast<double>(e.multiplicity);
  return t;
}

double Spectrum::integrality_defect() const {
  double worst = 0;
  for (const auto& e : grouped) worst = std::max(worst, std::abs(e.value - std::round(e.value)));
  return worst;
}

std::vector<SpectrumEntry> group_values(std::span<const double> descending, double tol) {
  std::vector<SpectrumEntry> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k < descending.size(); ++k) {
    if (k > start && descending[start] - descending[k] > tol) {
      double mean = std::accumulate(descending.begin() + start, descending.begin() + k, 0.0) / (k - start);
      out.push_back({mean, k - start});
      start = k;
    }
  }
  if (start < descending.size()) {
    double mean = std::accumulate(descending.begin() + start, descending.end(), 0.0) /
                  (descending.size() - start);
    out.push_back({mean, descending.size() - start});
  }
  return out;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(2 * s);
}

}  // namespace

Spectrum eigenvalues_symmetric(const DenseSymMatrix& m, double tol, bool want_basis) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const std::size_t n = m.dimension();
  if (n > kJacobiLimit) throw ResourceLimit("Jacobi limited to " + std::to_string(kJacobiLimit) + " rows");
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v;
  if (want_basis) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (apq == 0.0) continue;
        double app = a[p * n + p], aqq = a[q * n + q];
        double theta = (aqq - app) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = a[q * n + p] = 0.0;
        if (want_basis)
          for (std::size_t k = 0; k < n; ++k) {
            double vkp = v[k * n + p], vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
      }
  }
  if (sweep == kMaxSweeps)
    throw std::runtime_error("Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps; tol too small?");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });
  Spectrum s;
  s.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) s.values[k] = a[order[k] * n + order[k]];
  s.grouped = group_values(s.values);
  if (want_basis) {
    s.basis.resize(n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) s.basis[k * n + i] = v[i * n + order[k]];
  }
  return s;
}

double ratio_bound(std::size_t vertex_count, double degree, double least_eigenvalue) {
  if (degree == least_eigenvalue) throw std::invalid_argument("ratio bound: degree equals least eigenvalue");
  return static_cast<double>(vertex_count) * (-least_eigenvalue) / (degree - least_eigenvalue);
}

Spectrum tensor_spectrum(const Spectrum& base, int q) {
  if (q < 1) throw std::invalid_argument("tensor power q must be >= 1");
  std::vector<SpectrumEntry> cur{{1.0, 1}};
  for (int k = 0; k < q; ++k) {
    std::vector<SpectrumEntry> next;
    for (const auto& a : cur)
      for (const auto& b : base.grouped) next.push_back({a.value * b.value, a.multiplicity * b.multiplicity});
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.value > y.value; });
    cur.clear();
    for (const auto& e : next) {
      if (!cur.empty() && std::abs(cur.back().value - e.value) <= kGroupingTol * std::max(1.0, std::abs(e.value)))
        cur.back().multiplicity += e.multiplicity;
      else
        cur.push_back(e);
    }
  }
  Spectrum s;
  s.grouped = std::move(cur);
  if (s.dimension() <= kJacobiLimit * kJacobiLimit)
    for (const auto& e : s.grouped) s.values.insert(s.values.end(), e.multiplicity, e.value);
  return s;
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::holds: return "holds";
    case Certificate::fails: return "fails";
    case Certificate::indeterminate: return "indeterminate";
  }
  return "?";
}

Certificate ratio_tightness_certificate(std::size_t vertex_count, std::int64_t degree, double least_eigenvalue,
                                        std::int64_t claimed_alpha, double snap) {
  double r = std::round(least_eigenvalue);
  if (std::abs(least_eigenvalue - r) > snap) return Certificate::indeterminate;
  auto mu = static_cast<std::int64_t>(r);
  if (mu >= 0 || degree <= mu) return Certificate::indeterminate;
  // alpha == N(-mu)/(d-mu)  <=>  alpha (d - mu) == N (-mu)
  BigInt lhs = BigInt(claimed_alpha) * (degree - mu);
  BigInt rhs = BigInt(vertex_count) * (-mu);
  return lhs == rhs ? Certificate::holds : Certificate::fails;
}

Certificate ratio_tightness_certificate(const ExplicitGraph& graph, const Spectrum& spectrum,
                                        std::int64_t claimed_alpha, double snap) {
  auto d = graph.regular_degree();
  if (!d) throw PreconditionError("ratio tightness requires a regular graph");
  return ratio_tightness_certificate(graph.vertex_count(), static_cast<std::int64_t>(*d), spectrum.least(),
                                     claimed_alpha, snap);
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum) {
  os << "eigenvalue,multiplicity\n";
  char buf[64];
  for (const auto& e : spectrum.grouped) {
    double r = std::round(e.value);
    if (std::abs(e.value - r) <= kGroupingTol)
      std::snprintf(buf, sizeof buf, "%.0f", r == 0 ? 0.0 : r);
    else
      std::snprintf(buf, sizeof buf, "%.12g", e.value);
    os << buf << ',' << e.multiplicity << '\n';
  }
}

double rayleigh_quotient(const AdjacencyOracle& oracle, std::span<const double> x) {
  if (x.size() != oracle.vertex_count()) throw std::invalid_argument("vector length mismatch");
  double num = 0, den = 0;
  for (VertexId u = 0; u < x.size(); ++u) {
    den += x[u] * x[u];
    if (x[u] == 0) continue;
    double acc = 0;
    for (VertexId v : oracle.neighbors(u)) acc += x[v];
    num += x[u] * acc;
  }
  if (den == 0) throw std::invalid_argument("zero vector");
  return num / den;
}

}  // namespace altgraph
