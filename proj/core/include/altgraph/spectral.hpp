#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "altgraph/cayley.hpp"

namespace altgraph {

inline constexpr std::size_t kJacobiLimit = 4096;
inline constexpr double kDefaultTol = 1e-10;
// Eigenvalues this close together are reported as one entry.
inline constexpr double kGroupingTol = 1e-6;

// Real symmetric matrix, full row-major storage.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  static DenseSymMatrix from_graph(const ExplicitGraph& graph);

  std::size_t dimension() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }
  double trace() const;
  std::span<const double> data() const { return a_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct SpectrumEntry {
  double value = 0;
  std::size_t multiplicity = 0;
};

struct Spectrum {
  std::vector<double> values;          // descending
  std::vector<SpectrumEntry> grouped;  // descending, merged within kGroupingTol
  // Column-major N x N; column k is a unit eigenvector for values[k]. Empty if not requested.
  std::vector<double> basis;

  std::size_t dimension() const;
  bool has_basis() const { return !basis.empty(); }
  std::span<const double> eigenvector(std::size_t k) const {
    return {basis.data() + k * values.size(), values.size()};
  }
  double least() const { return grouped.back().value; }
  double largest() const { return grouped.front().value; }
  double trace() const;   // sum of eigenvalues
  double energy() const;  // sum of squares
  // Largest distance of an eigenvalue to the nearest integer.
  double integrality_defect() const;
};

// Groups a descending list of eigenvalues.
std::vector<SpectrumEntry> group_values(std::span<const double> descending, double tol = kGroupingTol);

// Cyclic Jacobi. Iterates until the off-diagonal Frobenius norm drops below tol.
// Throws ResourceLimit above kJacobiLimit and std::runtime_error if the sweep cap is hit.
Spectrum eigenvalues_symmetric(const DenseSymMatrix& m, double tol = kDefaultTol, bool want_basis = false);

// vertexCount * (-mu) / (degree - mu).
double ratio_bound(std::size_t vertex_count, double degree, double least_eigenvalue);

// All q-fold products of the grouped base spectrum. Only grouped entries (and
// values, when the product has at most kJacobiLimit^2 terms) are filled.
Spectrum tensor_spectrum(const Spectrum& base, int q);

enum class Certificate { holds, fails, indeterminate };
const char* to_string(Certificate c);

// Exact comparison of claimed_alpha with N(-mu)/(d-mu) once mu is snapped to
// an integer; indeterminate when mu is not within snap of one.
Certificate ratio_tightness_certificate(std::size_t vertex_count, std::int64_t degree, double least_eigenvalue,
                                        std::int64_t claimed_alpha, double snap = kGroupingTol);
// Graph form: requires a regular graph.
Certificate ratio_tightness_certificate(const ExplicitGraph& graph, const Spectrum& spectrum,
                                        std::int64_t claimed_alpha, double snap = kGroupingTol);

// "eigenvalue,multiplicity" header then one row per grouped entry, descending.
// Values within kGroupingTol of an integer are printed as integers.
void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum);

// Rayleigh quotient x^T A x / x^T x for an implicit graph.
double rayleigh_quotient(const AdjacencyOracle& oracle, std::span<const double> x);

}  // namespace altgraph
