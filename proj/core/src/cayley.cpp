#include "altgraph/cayley.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "altgraph/errors.hpp"

namespace altgraph {

CayleyGraphSpec CayleyGraphSpec::even_derangement(int n, int q) {
  if (q < 1) throw std::invalid_argument("tensor power q must be >= 1");
  return CayleyGraphSpec{n, q, enumerate_even_derangements(n)};
}

void CayleyGraphSpec::validate() const {
  if (q < 1) throw std::invalid_argument("tensor power q must be >= 1");
  std::set<Permutation> members(connection_set.begin(), connection_set.end());
  if (members.size() != connection_set.size())
    throw std::invalid_argument("connection set has repeated elements");
  for (const auto& s : connection_set) {
    if (s.degree() != n) throw std::invalid_argument("connection set element of wrong degree");
    if (s.is_identity()) throw std::invalid_argument("connection set contains the identity");
    if (s.parity() != Parity::even) throw std::invalid_argument("connection set leaves A_n");
    if (!members.contains(inverse(s)))
      throw std::invalid_argument("connection set is not closed under inverses");
  }
}

// ---------------------------------------------------------------------------

ProductGroup::ProductGroup(int n, int q)
    : ProductGroup(std::make_shared<const AlternatingGroup>(n), q) {}

ProductGroup::ProductGroup(std::shared_ptr<const AlternatingGroup> factor, int q)
    : factor_(std::move(factor)), q_(q) {
  if (q < 1) throw std::invalid_argument("tensor power q must be >= 1");
  const std::size_t m = factor_->order();
  order_ = 1;
  for (int k = 0; k < q; ++k) {
    if (order_ > kOracleVertexLimit / m)
      throw ResourceLimit("(n!/2)^q exceeds the vertex guard of " + std::to_string(kOracleVertexLimit));
    order_ *= m;
  }
  stride_.assign(static_cast<std::size_t>(q), 1);
  for (int k = q - 2; k >= 0; --k) stride_[k] = stride_[k + 1] * m;
}

VertexId ProductGroup::encode(const GroupVertex& v) const {
  if (v.coords.size() != static_cast<std::size_t>(q_))
    throw std::invalid_argument("group vertex has wrong number of coordinates");
  std::size_t idx = 0;
  for (int k = 0; k < q_; ++k) {
    if (v.coords[k].value >= factor_->order()) throw std::out_of_range("coordinate outside A_n");
    idx += v.coords[k].value * stride_[k];
  }
  return static_cast<VertexId>(idx);
}

GroupVertex ProductGroup::decode(VertexId v) const {
  GroupVertex out;
  out.coords.resize(static_cast<std::size_t>(q_));
  for (int k = 0; k < q_; ++k) out.coords[k] = coordinate(v, k + 1);
  return out;
}

ElementIndex ProductGroup::coordinate(VertexId v, int k) const {
  return ElementIndex{static_cast<std::uint32_t>((v / stride_[k - 1]) % factor_->order())};
}

VertexId ProductGroup::with_coordinate(VertexId v, int k, ElementIndex e) const {
  std::size_t old = coordinate(v, k).value;
  return static_cast<VertexId>(v - old * stride_[k - 1] + e.value * stride_[k - 1]);
}

VertexId ProductGroup::diagonal(ElementIndex e) const {
  return encode(GroupVertex{std::vector<ElementIndex>(static_cast<std::size_t>(q_), e)});
}

VertexId ProductGroup::multiply(VertexId a, VertexId b) const {
  std::size_t idx = 0;
  for (int k = 1; k <= q_; ++k)
    idx += factor_->multiply(coordinate(a, k), coordinate(b, k)).value * stride_[k - 1];
  return static_cast<VertexId>(idx);
}

VertexId ProductGroup::inverse(VertexId a) const {
  std::size_t idx = 0;
  for (int k = 1; k <= q_; ++k) idx += factor_->inverse(coordinate(a, k)).value * stride_[k - 1];
  return static_cast<VertexId>(idx);
}

// ---------------------------------------------------------------------------

ExplicitGraph ExplicitGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> lists(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in simple graph");
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return from_neighbor_lists(std::move(lists));
}

ExplicitGraph ExplicitGraph::from_neighbor_lists(std::vector<std::vector<VertexId>> lists) {
  ExplicitGraph g;
  const std::size_t n = lists.size();
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw std::invalid_argument("repeated neighbor");
    g.offsets_[v + 1] = g.offsets_[v] + l.size();
  }
  g.targets_.reserve(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v)
    for (VertexId w : lists[v]) {
      if (w >= n) throw std::out_of_range("neighbor out of range");
      if (w == v) throw std::invalid_argument("self-loop in simple graph");
      g.targets_.push_back(w);
    }
  if (g.targets_.size() % 2 != 0) throw std::invalid_argument("neighbor lists are not symmetric");
  g.build_rows();
  for (std::size_t v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(static_cast<VertexId>(v)))
      if (!g.adjacent(w, static_cast<VertexId>(v)))
        throw std::invalid_argument("neighbor lists are not symmetric");
  return g;
}

void ExplicitGraph::build_rows() {
  const std::size_t n = vertex_count();
  rows_.clear();
  if (n > kBitMatrixLimit) return;
  rows_.assign(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v)
    for (VertexId w : neighbors(static_cast<VertexId>(v))) rows_[v].set(w);
}

bool ExplicitGraph::adjacent(VertexId u, VertexId v) const {
  if (!rows_.empty()) return rows_[u].test(v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> ExplicitGraph::regular_degree() const {
  const std::size_t n = vertex_count();
  if (n == 0) return 0;
  std::size_t d = degree(0);
  for (VertexId v = 1; v < n; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

std::vector<Edge> ExplicitGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

ExplicitGraph ExplicitGraph::induced_subgraph(std::span<const VertexId> vertices) const {
  std::vector<std::int64_t> local(vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<VertexId>> lists(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (VertexId w : neighbors(vertices[i]))
      if (local[w] >= 0) lists[i].push_back(static_cast<VertexId>(local[w]));
  return from_neighbor_lists(std::move(lists));
}

// ---------------------------------------------------------------------------

AdjacencyOracle::AdjacencyOracle(CayleyGraphSpec spec)
    : spec_(std::move(spec)), group_(spec_.n, spec_.q) {
  spec_.validate();
  const auto& a = group_.factor();
  for (const auto& s : spec_.connection_set) connection_.push_back(a.index_of(s));
  std::sort(connection_.begin(), connection_.end());
  const std::size_t m = a.order();
  factor_rows_.assign(m, Bitset(m));
  for (std::uint32_t u = 0; u < m; ++u)
    for (ElementIndex s : connection_) factor_rows_[u].set(a.multiply(s, ElementIndex{u}).value);
  degree_ = 1;
  for (int k = 0; k < spec_.q; ++k) degree_ *= connection_.size();
}

bool AdjacencyOracle::adjacent(VertexId u, VertexId v) const {
  for (int k = 1; k <= group_.q(); ++k)
    if (!factor_rows_[group_.coordinate(u, k).value].test(group_.coordinate(v, k).value)) return false;
  return true;
}

std::vector<VertexId> AdjacencyOracle::neighbors(VertexId u) const {
  const int q = group_.q();
  std::vector<std::vector<std::uint32_t>> per(static_cast<std::size_t>(q));
  for (int k = 1; k <= q; ++k) per[k - 1] = factor_rows_[group_.coordinate(u, k).value].to_indices();
  // Mixed-radix product of the coordinate neighbor lists; lexicographic order
  // of sorted lists matches sorted vertex order.
  std::vector<VertexId> out;
  out.reserve(degree_);
  std::vector<std::size_t> pos(static_cast<std::size_t>(q), 0);
  const std::size_t m = group_.factor_order();
  while (true) {
    std::size_t idx = 0;
    for (int k = 0; k < q; ++k) idx = idx * m + per[k][pos[k]];
    out.push_back(static_cast<VertexId>(idx));
    int k = q - 1;
    while (k >= 0 && ++pos[k] == per[k].size()) pos[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

ExplicitGraph build_even_derangement_graph(int n) {
  if (n < 3 || n > 7) throw ResourceLimit("even derangement graph requires 3 <= n <= 7");
  return materialize(tensor_power_oracle(n, 1), kOracleVertexLimit);
}

AdjacencyOracle tensor_power_oracle(int n, int q) {
  if (n < 3 || n > 7) throw ResourceLimit("tensor power oracle requires 3 <= n <= 7");
  return AdjacencyOracle(CayleyGraphSpec::even_derangement(n, q));
}

ExplicitGraph materialize(const AdjacencyOracle& oracle, std::size_t max_vertices) {
  if (oracle.vertex_count() > max_vertices)
    throw ResourceLimit("materialize: " + std::to_string(oracle.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(max_vertices));
  std::vector<std::vector<VertexId>> lists(oracle.vertex_count());
  for (VertexId u = 0; u < lists.size(); ++u) lists[u] = oracle.neighbors(u);
  return ExplicitGraph::from_neighbor_lists(std::move(lists));
}

std::vector<std::vector<VertexId>> connected_components(const ExplicitGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (VertexId w : graph.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

template <class NeighborFn>
int eccentricity_of_zero(std::size_t n, NeighborFn&& neighbors) {
  if (n == 0) throw PreconditionError("diameter of an empty graph");
  std::vector<int> dist(n, -1);
  std::vector<VertexId> queue{0};
  dist[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  if (queue.size() != n) throw PreconditionError("diameter: graph is disconnected");
  return dist[queue.back()];
}

}  // namespace

int diameter_vertex_transitive(const ExplicitGraph& graph) {
  return eccentricity_of_zero(graph.vertex_count(), [&](VertexId u) { return graph.neighbors(u); });
}

int diameter_vertex_transitive(const AdjacencyOracle& oracle) {
  return eccentricity_of_zero(oracle.vertex_count(), [&](VertexId u) { return oracle.neighbors(u); });
}

BipartiteResult is_bipartite(const ExplicitGraph& graph) {
  const std::size_t n = graph.vertex_count();
  BipartiteResult result;
  std::vector<int> side(n, -1);
  std::vector<VertexId> parent(n, 0);
  std::vector<int> depth(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    parent[s] = s;
    std::vector<VertexId> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      for (VertexId w : graph.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          // Walk both endpoints up to their lowest common ancestor.
          std::vector<VertexId> left{u}, right{w};
          VertexId a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // lca already in left
          result.bipartite = false;
          result.odd_cycle.assign(left.begin(), left.end());
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
          // rotate so the cycle starts at the common ancestor
          auto it = std::find(result.odd_cycle.begin(), result.odd_cycle.end(), a);
          std::rotate(result.odd_cycle.begin(), it, result.odd_cycle.end());
          return result;
        }
      }
    }
  }
  result.side = std::move(side);
  return result;
}

CommonNeighborResult common_neighbor_check(const ExplicitGraph& graph) {
  if (!graph.has_bit_matrix()) throw ResourceLimit("common_neighbor_check requires a bit matrix");
  const std::size_t n = graph.vertex_count();
  CommonNeighborResult r;
  r.min_common = std::numeric_limits<std::size_t>::max();
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      std::size_t c = graph.row(u).count_and(graph.row(v));
      ++r.pairs_checked;
      if (c < r.min_common) {
        r.min_common = c;
        r.worst_pair = {u, v};
      }
    }
  if (r.pairs_checked == 0) r.min_common = 0;
  r.all_pairs_covered = r.pairs_checked == 0 || r.min_common > 0;
  return r;
}

bool product_decomposition_check(int n) {
  if (n < 3 || n > 7) throw ResourceLimit("product_decomposition_check requires 3 <= n <= 7");
  AlternatingGroup a(n);
  std::vector<ElementIndex> e;
  for (std::uint32_t i = 0; i < a.order(); ++i)
    if (a.is_even_derangement(ElementIndex{i})) e.push_back(ElementIndex{i});
  Bitset hit(a.order());
  for (auto s1 : e)
    for (auto s2 : e) hit.set(a.multiply(s1, s2).value);
  return hit.count() == a.order();
}

ExplicitGraph tensor_product(const ExplicitGraph& g, const ExplicitGraph& h) {
  const std::size_t m = h.vertex_count();
  if (g.vertex_count() * m > kBitMatrixLimit * 16)
    throw ResourceLimit("tensor_product is limited to small synthetic graphs");
  std::vector<std::vector<VertexId>> lists(g.vertex_count() * m);
  for (VertexId u1 = 0; u1 < g.vertex_count(); ++u1)
    for (VertexId u2 = 0; u2 < m; ++u2) {
      auto& l = lists[u1 * m + u2];
      for (VertexId v1 : g.neighbors(u1))
        for (VertexId v2 : h.neighbors(u2)) l.push_back(static_cast<VertexId>(v1 * m + v2));
    }
  return ExplicitGraph::from_neighbor_lists(std::move(lists));
}

void write_edge_list(std::ostream& os, const ExplicitGraph& graph) {
  for (auto [u, v] : graph.edges()) os << u << ' ' << v << '\n';
}

}  // namespace altgraph
