#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "altgraph/cayley.hpp"
#include "altgraph/extremal.hpp"
#include "altgraph/group.hpp"
#include "altgraph/permutation.hpp"

namespace altgraph {

enum class AutKind { right_translation, conjugation, coordinate_permutation, inversion };
const char* to_string(AutKind k);

struct NamedAutomorphism {
  AutKind kind;
  nlohmann::json parameters;
  PointPermutation map;  // vertex index -> vertex index

  nlohmann::json to_json(bool include_images = false) const;
};

// g -> g h.
NamedAutomorphism right_translation(const ProductGroup& group, VertexId h);
// sigma_k -> tau^-1 sigma_k tau; tau in S_n.
NamedAutomorphism conjugation_automorphism(const ProductGroup& group, const Permutation& tau, int k);
// (sigma_1, ..., sigma_q) -> (sigma_{1^{pi^-1}}, ..., sigma_{q^{pi^-1}}); pi in S_q.
NamedAutomorphism coordinate_permutation(const ProductGroup& group, const Permutation& pi);
// sigma_k -> sigma_k^-1.
NamedAutomorphism inversion(const ProductGroup& group, int k);

// Full scan: edges to edges and non-edges to non-edges.
bool preserves_edges(const PointPermutation& map, const ExplicitGraph& graph);
// Every edge at `vertex_samples` random vertices, plus `pair_samples` random pairs.
bool preserves_edges(const PointPermutation& map, const AdjacencyOracle& oracle, std::size_t pair_samples,
                     std::size_t vertex_samples, std::uint64_t seed);

// q! n!^(2q).
BigInt claimed_group_order(int n, int q);

struct GeneratorSelection {
  bool translations = true;
  bool conjugations = true;
  bool coordinate_swaps = true;
  bool inversions = true;
};
// Translations by (1 2 3) and a long even cycle per coordinate, conjugations by
// (1 2) and (1 2 ... n) per coordinate, adjacent coordinate swaps, every phi_k.
std::vector<NamedAutomorphism> claimed_generators(const ProductGroup& group, GeneratorSelection sel = {});

struct OrderCheck {
  BigInt computed;
  BigInt claimed;
  bool match = false;
  std::size_t generator_count = 0;
  bool all_preserve_edges = false;
};
OrderCheck generated_order_check(int n, int q, std::uint64_t seed = 42);

struct LadderStep {
  std::string label;
  BigInt order;
};
// translations, +conjugations, +coordinate swaps (q >= 2), +inversions.
std::vector<LadderStep> order_ladder(int n, int q, std::uint64_t seed = 42);

// Permutation of the B-family (indexed as in b_family) induced by an automorphism.
// Throws StructureViolation if some image is not a member of the family.
PointPermutation induced_B_action(const PointPermutation& map, const std::vector<VertexSet>& family);

struct FaithfulnessCheck {
  BigInt source_order;
  BigInt image_order;
  bool faithful = false;
};
FaithfulnessCheck faithful_B_action_check(int n, int q, std::uint64_t seed = 42);

struct OmegaCheck {
  std::size_t elements_checked = 0;
  bool permutes_omega = true;
  bool block_coherent = true;
  bool no_split = true;
  bool ok() const { return permutes_omega && block_coherent && no_split; }
};
// Action on rows and columns for every generator and `samples` uniformly random
// elements of the generated group (drawn from its stabilizer chain).
OmegaCheck omega_action_check(int n, int q, std::size_t samples = 200, std::uint64_t seed = 42);

struct FullOrderResult {
  BigInt order;
  bool bsgs_agrees = false;
  std::size_t generators = 0;
  std::uint64_t nodes = 0;
};
FullOrderResult full_automorphism_order(const ExplicitGraph& graph, SearchBudget budget = {});

// Some h with phi_1 R_h != R_h phi_1, at q = 1.
std::optional<VertexId> non_commuting_witness(const ProductGroup& group);

}  // namespace altgraph
