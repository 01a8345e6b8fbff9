#pragma once

#include <cstdint>
#include <vector>

#include "altgraph/cayley.hpp"
#include "altgraph/extremal.hpp"
#include "altgraph/group.hpp"

namespace altgraph {

// Ordered partition of the vertex set.
struct RefinementPartition {
  std::vector<std::vector<VertexId>> cells;

  bool is_discrete() const;
  // Every vertex of a cell has the same number of neighbors in each cell.
  bool is_equitable(const ExplicitGraph& graph) const;
};

// Coarsest equitable refinement of `start`. Sub-cells are ordered by their
// neighbor-count profile, so the result does not depend on vertex labels.
// `trace` (may be null) receives a label-invariant hash of the splitting history.
RefinementPartition equitable_refinement(const ExplicitGraph& graph, RefinementPartition start,
                                         std::uint64_t* trace = nullptr);

struct AutomorphismSearchResult {
  BigInt order;                              // product of basic orbit sizes
  BigInt bsgs_order;                         // schreier_sims on the generators
  std::vector<PointPermutation> generators;
  std::vector<VertexId> base;                // the first path's individualized vertices
  std::vector<std::size_t> orbit_sizes;
  std::uint64_t nodes = 0;
};

// |Aut(graph)| by individualization-refinement along the first path.
// Throws ResourceLimit above kExactSearchLimit vertices and BudgetExceeded.
AutomorphismSearchResult automorphism_group(const ExplicitGraph& graph, SearchBudget budget = {});

}  // namespace altgraph
