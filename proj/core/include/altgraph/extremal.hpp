#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "altgraph/bitset.hpp"
#include "altgraph/cayley.hpp"
#include "altgraph/spectral.hpp"

namespace altgraph {

inline constexpr std::size_t kExactSearchLimit = 400;

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  explicit VertexSet(Bitset bits) : bits_(std::move(bits)), count_(bits_.count()) {}
  static VertexSet from_indices(std::size_t universe, std::span<const VertexId> members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(VertexId v) const { return bits_.test(v); }
  void insert(VertexId v) {
    if (!bits_.test(v)) {
      bits_.set(v);
      ++count_;
    }
  }
  const Bitset& bits() const { return bits_; }
  std::vector<VertexId> to_indices() const;
  nlohmann::json to_json() const { return to_indices(); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.to_indices() < b.to_indices(); }

 private:
  Bitset bits_;
  std::size_t count_ = 0;
};

// Names B_{i,j}^{(k)}; all fields 1-based.
struct CanonicalIndepSet {
  int k = 1;
  int i = 1;
  int j = 1;
  std::string name() const;
  friend auto operator<=>(const CanonicalIndepSet&, const CanonicalIndepSet&) = default;
};

// The q*n^2 descriptors ordered by (k, i, j); index = (k-1) n^2 + (i-1) n + (j-1).
std::vector<CanonicalIndepSet> b_family(int n, int q);
std::size_t b_family_index(const CanonicalIndepSet& b, int n);

// (n-1)! n!^(q-1) / 2^q.
std::size_t expected_B_size(int n, int q);
VertexSet build_B(const ProductGroup& group, const CanonicalIndepSet& b);
std::vector<VertexSet> build_B_family(const ProductGroup& group);

bool verify_independent(const ExplicitGraph& graph, const VertexSet& s);
bool verify_independent(const AdjacencyOracle& oracle, const VertexSet& s);
// Vertices outside s with no neighbor in s; s is maximal iff this is empty.
std::vector<VertexId> extension_candidates(const ExplicitGraph& graph, const VertexSet& s);
std::vector<VertexId> extension_candidates(const AdjacencyOracle& oracle, const VertexSet& s);

struct SearchBudget {
  std::uint64_t max_nodes = 2'000'000'000;
  std::chrono::steady_clock::duration max_time = std::chrono::seconds(300);
};

struct MisResult {
  std::size_t alpha = 0;
  std::vector<VertexSet> sets;  // every maximum independent set, sorted
  std::uint64_t nodes = 0;
};

// All maximum independent sets, via maximum cliques of the complement.
// upper_bound (e.g. floor of the ratio bound) seeds the search threshold; with
// no hint the search starts from the coloring bound. If fix_vertex is set only
// sets containing it are listed. Throws BudgetExceeded when the budget runs out.
MisResult max_independent_sets_exact(const ExplicitGraph& graph, std::optional<std::size_t> upper_bound = {},
                                     SearchBudget budget = {}, std::optional<VertexId> fix_vertex = {});

std::size_t max_clique_exact(const ExplicitGraph& graph, SearchBudget budget = {});

// Diagonal tuples (c^a, ..., c^a) for the n-cycle c = (1 2 ... n). n odd.
VertexSet find_clique_powers_of_cycle(const ProductGroup& group);
bool is_clique(const AdjacencyOracle& oracle, const VertexSet& s);

struct Coloring {
  std::vector<int> color;  // 1-based colors
  int colors = 0;
};
// color(sigma_1, ..., sigma_q) = 1^{sigma_1}.
Coloring canonical_coloring(const ProductGroup& group);
bool is_proper(const Coloring& c, const ExplicitGraph& graph);
bool is_proper(const Coloring& c, const AdjacencyOracle& oracle);
std::vector<VertexSet> color_classes(const Coloring& c);

// Residual norm of 1_S - (alpha/N) 1 outside the least eigenspace. For q = 2
// the base basis is applied on both coordinates (coefficient matrix U^T W U).
double eigenspace_residual(const VertexSet& s, const Spectrum& base, int q);
bool eigenspace_certificate(const VertexSet& s, const Spectrum& base, int q, double tol);
// Exact integer form: |N(v) ∩ S| = mu [v in S] + (d - mu) |S| / N for all v.
bool eigenspace_exact_check(const AdjacencyOracle& oracle, const VertexSet& s, std::int64_t least_eigenvalue);

struct IntersectionCase {
  std::string name;
  CanonicalIndepSet a, b;
  std::size_t size = 0;       // |B_a ∩ B_b| computed
  std::size_t formula = 0;    // closed form for this case
  bool uniform = true;        // every pair of this type has the same size
};
struct IntersectionTable {
  int n = 0, q = 0;
  std::vector<IntersectionCase> cases;
  const IntersectionCase* find(const std::string& name) const;
};
// Case names: same_set, same_row, same_column, crossed, other_coordinate (q >= 2 only).
IntersectionTable intersection_size_table(int n, int q);

struct CoverResult {
  std::uint64_t subsets_scanned = 0;
  std::vector<std::vector<std::size_t>> covering;  // family indices, ascending
  bool rows_and_columns_only = false;              // covering == {rows} ∪ {columns}
};
// n-subsets of the B-family whose union is A_n^q.
CoverResult cover_characterization_check(int n, int q, int jobs = 1);

// Every nonempty proper subset S of one part has |N(S)| > |S| (both parts).
// Requires a connected, regular, bipartite graph with equal parts of size <= 16.
bool bipartite_expansion_check(const ExplicitGraph& graph);

struct NoHomomorphismResult {
  std::size_t edges_checked = 0;
  bool homomorphism = false;
  std::size_t alpha_base = 0, alpha_power = 0;
  std::size_t vertices_base = 0, vertices_power = 0;
  bool ratio_equal = false;
  std::size_t preimage_size = 0;
  bool preimage_is_B = false;
};
// Diagonal map g -> (g, g) from AΓ_5 into AΓ_5^2.
NoHomomorphismResult no_homomorphism_instance_check(int n = 5, int q = 2);

struct JPartitionReport {
  int n = 0;
  std::size_t j0 = 0, j1 = 0, j2 = 0;
  std::size_t j0_formula = 0, j12_formula = 0;
  bool bipartite_with_parts = false;
  bool biregular = false;
  std::size_t degree_between = 0;
  bool connected = false;
  std::size_t components = 0;
};
JPartitionReport j_partition_structure(int n = 5);

}  // namespace altgraph
