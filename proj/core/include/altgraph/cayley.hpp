#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "altgraph/bitset.hpp"
#include "altgraph/permutation.hpp"

namespace altgraph {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Graphs with at most this many vertices also carry a packed adjacency matrix.
inline constexpr std::size_t kBitMatrixLimit = 4096;
// Implicit tensor powers are refused beyond this many vertices.
inline constexpr std::size_t kOracleVertexLimit = 10'000'000;

// Cayley graph Gamma(A_n^q, S^q) for a connection set S of A_n.
struct CayleyGraphSpec {
  int n = 0;
  int q = 1;
  std::vector<Permutation> connection_set;

  // E_n as the connection set.
  static CayleyGraphSpec even_derangement(int n, int q = 1);
  // Throws std::invalid_argument unless S is identity-free, inverse-closed
  // and contained in A_n.
  void validate() const;
};

struct GroupVertex {
  std::vector<ElementIndex> coords;  // coordinate k-1 holds sigma_k
  friend bool operator==(const GroupVertex&, const GroupVertex&) = default;
};

// A_n^q with mixed-radix vertex indices; coordinate 1 is the most significant
// digit, so vertex 0 is the identity tuple.
class ProductGroup {
 public:
  ProductGroup(int n, int q);
  ProductGroup(std::shared_ptr<const AlternatingGroup> factor, int q);

  int n() const { return factor_->degree(); }
  int q() const { return q_; }
  const AlternatingGroup& factor() const { return *factor_; }
  std::shared_ptr<const AlternatingGroup> factor_ptr() const { return factor_; }
  std::size_t factor_order() const { return factor_->order(); }
  std::size_t order() const { return order_; }

  VertexId encode(const GroupVertex& v) const;
  GroupVertex decode(VertexId v) const;
  // k is 1-based.
  ElementIndex coordinate(VertexId v, int k) const;
  VertexId with_coordinate(VertexId v, int k, ElementIndex e) const;
  VertexId diagonal(ElementIndex e) const;

  VertexId identity() const { return 0; }
  VertexId multiply(VertexId a, VertexId b) const;  // a then b, componentwise
  VertexId inverse(VertexId a) const;

 private:
  std::shared_ptr<const AlternatingGroup> factor_;
  int q_;
  std::size_t order_;
  std::vector<std::size_t> stride_;  // stride_[k-1] for coordinate k
};

// Simple undirected graph, immutable after construction. Neighbor lists are
// sorted; a bit matrix is kept when vertex_count() <= kBitMatrixLimit.
class ExplicitGraph {
 public:
  ExplicitGraph() = default;
  // Duplicate edges are merged; self-loops throw std::invalid_argument.
  static ExplicitGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
  // Lists must be symmetric and loop-free (checked).
  static ExplicitGraph from_neighbor_lists(std::vector<std::vector<VertexId>> lists);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  bool adjacent(VertexId u, VertexId v) const;
  bool has_bit_matrix() const { return !rows_.empty() || vertex_count() == 0; }
  // Adjacency row as a bit set; requires has_bit_matrix().
  const Bitset& row(VertexId v) const { return rows_[v]; }
  // Common degree if the graph is regular.
  std::optional<std::size_t> regular_degree() const;
  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;
  ExplicitGraph induced_subgraph(std::span<const VertexId> vertices) const;

 private:
  void build_rows();

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<Bitset> rows_;
};

// Implicit adjacency for Gamma(A_n^q, S^q): u ~ v iff v_k u_k^-1 is in S for every k.
class AdjacencyOracle {
 public:
  explicit AdjacencyOracle(CayleyGraphSpec spec);

  const CayleyGraphSpec& spec() const { return spec_; }
  const ProductGroup& group() const { return group_; }
  std::size_t vertex_count() const { return group_.order(); }
  std::size_t degree() const { return degree_; }
  std::span<const ElementIndex> connection_indices() const { return connection_; }

  bool factor_adjacent(ElementIndex a, ElementIndex b) const { return factor_rows_[a.value].test(b.value); }
  bool adjacent(VertexId u, VertexId v) const;
  std::vector<VertexId> neighbors(VertexId u) const;  // sorted

 private:
  CayleyGraphSpec spec_;
  ProductGroup group_;
  std::vector<ElementIndex> connection_;
  std::vector<Bitset> factor_rows_;
  std::size_t degree_ = 0;
};

// AΓ_n as an explicit graph; 3 <= n <= 7.
ExplicitGraph build_even_derangement_graph(int n);
// Guard: (n!/2)^q <= kOracleVertexLimit.
AdjacencyOracle tensor_power_oracle(int n, int q);
// Throws ResourceLimit if the oracle has more than max_vertices vertices.
ExplicitGraph materialize(const AdjacencyOracle& oracle, std::size_t max_vertices = kBitMatrixLimit);

// Components ordered by smallest vertex, each sorted.
std::vector<std::vector<VertexId>> connected_components(const ExplicitGraph& graph);

// Eccentricity of vertex 0; equals the diameter for vertex-transitive graphs.
// Throws PreconditionError if the graph is disconnected.
int diameter_vertex_transitive(const ExplicitGraph& graph);
int diameter_vertex_transitive(const AdjacencyOracle& oracle);

struct BipartiteResult {
  bool bipartite = true;
  std::vector<int> side;              // 0/1 per vertex when bipartite
  std::vector<VertexId> odd_cycle;    // closed walk v0 v1 ... v_{k-1} (v_{k-1} ~ v0) otherwise
};
BipartiteResult is_bipartite(const ExplicitGraph& graph);

struct CommonNeighborResult {
  bool all_pairs_covered = true;
  std::uint64_t pairs_checked = 0;
  std::size_t min_common = 0;
  Edge worst_pair{0, 0};
};
// Every unordered pair of distinct vertices has a common neighbor.
CommonNeighborResult common_neighbor_check(const ExplicitGraph& graph);

// Whether every element of A_n is a product of two elements of E_n. 3 <= n <= 7.
bool product_decomposition_check(int n);

// Categorical product of two small explicit graphs; vertex (u, v) -> u * |H| + v.
ExplicitGraph tensor_product(const ExplicitGraph& g, const ExplicitGraph& h);

// "u v" per edge, 0-based, u < v, sorted, LF-terminated.
void write_edge_list(std::ostream& os, const ExplicitGraph& graph);

}  // namespace altgraph
