#include "altgraph/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "altgraph/errors.hpp"

namespace altgraph {

namespace {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

VertexSet VertexSet::from_indices(std::size_t universe, std::span<const VertexId> members) {
  VertexSet s(universe);
  for (VertexId v : members) {
    if (v >= universe) throw std::out_of_range("vertex outside universe");
    s.insert(v);
  }
  return s;
}

std::vector<VertexId> VertexSet::to_indices() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  bits_.for_each([&](std::size_t v) { out.push_back(static_cast<VertexId>(v)); });
  return out;
}

std::string CanonicalIndepSet::name() const {
  return "B^(" + std::to_string(k) + ")_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::vector<CanonicalIndepSet> b_family(int n, int q) {
  std::vector<CanonicalIndepSet> out;
  out.reserve(static_cast<std::size_t>(q * n * n));
  for (int k = 1; k <= q; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.push_back({k, i, j});
  return out;
}

std::size_t b_family_index(const CanonicalIndepSet& b, int n) {
  return static_cast<std::size_t>((b.k - 1) * n * n + (b.i - 1) * n + (b.j - 1));
}

std::size_t expected_B_size(int n, int q) {
  return factorial(n - 1) * ipow(factorial(n), q - 1) / ipow(2, q);
}

VertexSet build_B(const ProductGroup& group, const CanonicalIndepSet& b) {
  const int n = group.n();
  if (b.k < 1 || b.k > group.q() || b.i < 1 || b.i > n || b.j < 1 || b.j > n)
    throw std::out_of_range("B index out of range: " + b.name());
  const auto& a = group.factor();
  std::vector<bool> hit(a.order());
  for (std::uint32_t e = 0; e < a.order(); ++e) hit[e] = a.image(ElementIndex{e}, b.i) == b.j;
  VertexSet s(group.order());
  for (VertexId v = 0; v < group.order(); ++v)
    if (hit[group.coordinate(v, b.k).value]) s.insert(v);
  return s;
}

std::vector<VertexSet> build_B_family(const ProductGroup& group) {
  const int n = group.n(), q = group.q();
  std::vector<Bitset> bits(static_cast<std::size_t>(q * n * n), Bitset(group.order()));
  const auto& a = group.factor();
  for (VertexId v = 0; v < group.order(); ++v)
    for (int k = 1; k <= q; ++k) {
      const auto& p = a.element(group.coordinate(v, k));
      for (int i = 1; i <= n; ++i) bits[b_family_index({k, i, p.image(i)}, n)].set(v);
    }
  std::vector<VertexSet> out;
  out.reserve(bits.size());
  for (auto& b : bits) out.emplace_back(std::move(b));
  return out;
}

bool verify_independent(const ExplicitGraph& graph, const VertexSet& s) {
  for (VertexId u : s.to_indices()) {
    if (graph.has_bit_matrix()) {
      if (graph.row(u).intersects(s.bits())) return false;
    } else {
      for (VertexId w : graph.neighbors(u))
        if (s.contains(w)) return false;
    }
  }
  return true;
}

bool verify_independent(const AdjacencyOracle& oracle, const VertexSet& s) {
  for (VertexId u : s.to_indices())
    for (VertexId w : oracle.neighbors(u))
      if (s.contains(w)) return false;
  return true;
}

namespace {

template <class NeighborFn>
std::vector<VertexId> extension_candidates_impl(std::size_t n, const VertexSet& s, NeighborFn&& neighbors) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    bool blocked = false;
    for (VertexId w : neighbors(v))
      if (s.contains(w)) {
        blocked = true;
        break;
      }
    if (!blocked) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<VertexId> extension_candidates(const ExplicitGraph& graph, const VertexSet& s) {
  return extension_candidates_impl(graph.vertex_count(), s, [&](VertexId v) { return graph.neighbors(v); });
}

std::vector<VertexId> extension_candidates(const AdjacencyOracle& oracle, const VertexSet& s) {
  return extension_candidates_impl(oracle.vertex_count(), s, [&](VertexId v) { return oracle.neighbors(v); });
}

// ---------------------------------------------------------------------------
// Clique branch and bound on bit rows (greedy coloring bound).

namespace {

class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bitset> adj, SearchBudget budget) : adj_(std::move(adj)), budget_(budget) {
    start_ = std::chrono::steady_clock::now();
  }

  // Record every clique of size >= threshold; raise the threshold whenever a
  // larger one appears, so the list ends as all maximum cliques.
  void run(std::vector<std::uint32_t> root, const Bitset& candidates, std::size_t threshold, bool enumerate) {
    threshold_ = threshold;
    enumerate_ = enumerate;
    R_ = std::move(root);
    if (R_.size() >= threshold_) record();
    expand(candidates);
  }

  std::size_t best() const { return best_; }
  const std::vector<std::vector<std::uint32_t>>& found() const { return found_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void record() {
    if (R_.size() > best_) {
      best_ = R_.size();
      found_.clear();
      threshold_ = enumerate_ ? best_ : best_ + 1;
    }
    if (enumerate_ || found_.empty()) found_.push_back(R_);
  }

  void tick() {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("clique search node budget exhausted");
    if ((nodes_ & 4095) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time)
      throw BudgetExceeded("clique search time budget exhausted");
  }

  void expand(Bitset P) {
    tick();
    std::vector<std::uint32_t> order;
    std::vector<std::size_t> color;
    {
      Bitset uncolored = P;
      std::size_t k = 0;
      while (uncolored.any()) {
        ++k;
        Bitset q = uncolored;
        for (std::size_t v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
          q.subtract(adj_[v]);
          uncolored.reset(v);
          order.push_back(static_cast<std::uint32_t>(v));
          color.push_back(k);
        }
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (R_.size() + color[idx] < threshold_) return;
      std::uint32_t v = order[idx];
      R_.push_back(v);
      if (R_.size() >= threshold_) record();
      Bitset next = P & adj_[v];
      if (next.any()) expand(std::move(next));
      R_.pop_back();
      P.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::size_t threshold_ = 0;
  bool enumerate_ = true;
  std::size_t best_ = 0;
  std::vector<std::uint32_t> R_;
  std::vector<std::vector<std::uint32_t>> found_;
  std::uint64_t nodes_ = 0;
};

// Degeneracy order, densest core first.
std::vector<std::uint32_t> degeneracy_order(const std::vector<Bitset>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
  std::vector<bool> removed(n, false);
  std::vector<std::uint32_t> peel;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
    removed[best] = true;
    peel.push_back(static_cast<std::uint32_t>(best));
    adj[best].for_each([&](std::size_t w) {
      if (!removed[w]) --deg[w];
    });
  }
  std::reverse(peel.begin(), peel.end());
  return peel;
}

std::vector<Bitset> relabel(const std::vector<Bitset>& adj, const std::vector<std::uint32_t>& order) {
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = static_cast<std::uint32_t>(k);
  std::vector<Bitset> out(n, Bitset(n));
  for (std::size_t k = 0; k < n; ++k) adj[order[k]].for_each([&](std::size_t w) { out[k].set(pos[w]); });
  return out;
}

std::size_t coloring_bound(const std::vector<Bitset>& adj) {
  Bitset uncolored(adj.size());
  uncolored.set_all();
  std::size_t k = 0;
  while (uncolored.any()) {
    ++k;
    Bitset q = uncolored;
    for (std::size_t v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
      q.subtract(adj[v]);
      uncolored.reset(v);
    }
  }
  return k;
}

std::vector<Bitset> complement_rows(const ExplicitGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<Bitset> comp(n, Bitset(n));
  for (VertexId v = 0; v < n; ++v) {
    comp[v].set_all();
    comp[v].subtract(graph.row(v));
    comp[v].reset(v);
  }
  return comp;
}

void require_exact_size(const ExplicitGraph& graph) {
  if (graph.vertex_count() > kExactSearchLimit)
    throw ResourceLimit("exact search limited to " + std::to_string(kExactSearchLimit) + " vertices");
  if (!graph.has_bit_matrix()) throw ResourceLimit("exact search requires a bit matrix");
}

}  // namespace

MisResult max_independent_sets_exact(const ExplicitGraph& graph, std::optional<std::size_t> upper_bound,
                                     SearchBudget budget, std::optional<VertexId> fix_vertex) {
  require_exact_size(graph);
  const std::size_t n = graph.vertex_count();
  MisResult result;
  if (n == 0) {
    result.sets.emplace_back(0);
    return result;
  }
  auto comp = complement_rows(graph);
  auto order = degeneracy_order(comp);
  auto adj = relabel(comp, order);
  std::vector<std::uint32_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = static_cast<std::uint32_t>(k);

  std::size_t t = std::min(upper_bound.value_or(n), coloring_bound(adj));
  auto deadline_budget = budget;
  while (t >= 1) {
    CliqueSearch search(adj, deadline_budget);
    Bitset cand(n);
    std::vector<std::uint32_t> root;
    if (fix_vertex) {
      root.push_back(pos[*fix_vertex]);
      cand = adj[pos[*fix_vertex]];
    } else {
      cand.set_all();
    }
    search.run(root, cand, t, true);
    result.nodes += search.nodes();
    if (!search.found().empty()) {
      result.alpha = search.best();
      for (const auto& c : search.found()) {
        VertexSet s(n);
        for (auto v : c) s.insert(order[v]);
        result.sets.push_back(std::move(s));
      }
      std::sort(result.sets.begin(), result.sets.end());
      return result;
    }
    --t;
  }
  return result;
}

std::size_t max_clique_exact(const ExplicitGraph& graph, SearchBudget budget) {
  require_exact_size(graph);
  const std::size_t n = graph.vertex_count();
  if (n == 0) return 0;
  std::vector<Bitset> rows(n);
  for (VertexId v = 0; v < n; ++v) rows[v] = graph.row(v);
  auto order = degeneracy_order(rows);
  auto adj = relabel(rows, order);
  CliqueSearch search(adj, budget);
  Bitset cand(n);
  cand.set_all();
  search.run({}, cand, 1, false);
  return search.best();
}

VertexSet find_clique_powers_of_cycle(const ProductGroup& group) {
  const int n = group.n();
  if (n % 2 == 0) throw PreconditionError("powers of the n-cycle are odd for even n; use max_clique_exact");
  Permutation c = long_cycle(n);
  VertexSet s(group.order());
  Permutation p(n);
  for (int a = 0; a < n; ++a) {
    s.insert(group.diagonal(group.factor().index_of(p)));
    p = compose(p, c);
  }
  return s;
}

bool is_clique(const AdjacencyOracle& oracle, const VertexSet& s) {
  auto members = s.to_indices();
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y)
      if (!oracle.adjacent(members[x], members[y])) return false;
  return true;
}

Coloring canonical_coloring(const ProductGroup& group) {
  Coloring c;
  c.colors = group.n();
  c.color.resize(group.order());
  for (VertexId v = 0; v < group.order(); ++v) c.color[v] = group.factor().image(group.coordinate(v, 1), 1);
  return c;
}

bool is_proper(const Coloring& c, const ExplicitGraph& graph) {
  if (c.color.size() != graph.vertex_count()) return false;
  for (auto [u, v] : graph.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

bool is_proper(const Coloring& c, const AdjacencyOracle& oracle) {
  if (c.color.size() != oracle.vertex_count()) return false;
  for (VertexId u = 0; u < oracle.vertex_count(); ++u)
    for (VertexId v : oracle.neighbors(u))
      if (c.color[u] == c.color[v]) return false;
  return true;
}

std::vector<VertexSet> color_classes(const Coloring& c) {
  std::vector<VertexSet> out(static_cast<std::size_t>(c.colors), VertexSet(c.color.size()));
  for (std::size_t v = 0; v < c.color.size(); ++v) out[c.color[v] - 1].insert(static_cast<VertexId>(v));
  return out;
}

// ---------------------------------------------------------------------------

double eigenspace_residual(const VertexSet& s, const Spectrum& base, int q) {
  if (!base.has_basis()) throw PreconditionError("eigenspace certificate needs an eigenbasis");
  const std::size_t m = base.values.size();
  const double mu_base = base.least();
  auto is_least = [&](double v) { return std::abs(v - mu_base) <= kGroupingTol; };

  if (q == 1) {
    if (s.universe() != m) throw std::invalid_argument("set universe does not match the spectrum");
    const double mean = static_cast<double>(s.size()) / static_cast<double>(m);
    double residual = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (is_least(base.values[k])) continue;
      auto vk = base.eigenvector(k);
      double c = 0;
      for (std::size_t x = 0; x < m; ++x) c += vk[x] * ((s.contains(static_cast<VertexId>(x)) ? 1.0 : 0.0) - mean);
      residual += c * c;
    }
    return std::sqrt(residual);
  }
  if (q != 2) throw ResourceLimit("eigenspace certificate implemented for q <= 2");
  if (s.universe() != m * m) throw std::invalid_argument("set universe does not match the spectrum");

  const double mean = static_cast<double>(s.size()) / static_cast<double>(m * m);
  double mu = base.largest() * base.least();
  for (const auto& a : base.grouped)
    for (const auto& b : base.grouped) mu = std::min(mu, a.value * b.value);

  // T = U^T W, then C = T U.
  std::vector<double> t(m * m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    auto uk = base.eigenvector(k);
    for (std::size_t a = 0; a < m; ++a) {
      double w = uk[a];
      if (w == 0) continue;
      for (std::size_t b = 0; b < m; ++b)
        t[k * m + b] += w * ((s.contains(static_cast<VertexId>(a * m + b)) ? 1.0 : 0.0) - mean);
    }
  }
  double residual = 0;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      if (std::abs(base.values[k] * base.values[l] - mu) <= kGroupingTol * std::max(1.0, std::abs(mu))) continue;
      auto ul = base.eigenvector(l);
      double c = 0;
      for (std::size_t b = 0; b < m; ++b) c += t[k * m + b] * ul[b];
      residual += c * c;
    }
  return std::sqrt(residual);
}

bool eigenspace_certificate(const VertexSet& s, const Spectrum& base, int q, double tol) {
  return eigenspace_residual(s, base, q) < tol;
}

bool eigenspace_exact_check(const AdjacencyOracle& oracle, const VertexSet& s, std::int64_t least_eigenvalue) {
  const auto n = static_cast<std::int64_t>(oracle.vertex_count());
  const auto d = static_cast<std::int64_t>(oracle.degree());
  const auto alpha = static_cast<std::int64_t>(s.size());
  if (((d - least_eigenvalue) * alpha) % n != 0) return false;
  const std::int64_t base = (d - least_eigenvalue) * alpha / n;
  for (VertexId v = 0; v < oracle.vertex_count(); ++v) {
    std::int64_t inside = 0;
    for (VertexId w : oracle.neighbors(v)) inside += s.contains(w) ? 1 : 0;
    if (inside != least_eigenvalue * (s.contains(v) ? 1 : 0) + base) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

const IntersectionCase* IntersectionTable::find(const std::string& name) const {
  for (const auto& c : cases)
    if (c.name == name) return &c;
  return nullptr;
}

IntersectionTable intersection_size_table(int n, int q) {
  ProductGroup group(n, q);
  if (group.order() > 10'000) throw ResourceLimit("intersection table requires (n!/2)^q <= 10^4");
  auto family = build_B_family(group);
  auto desc = b_family(n, q);

  IntersectionTable table{n, q, {}};
  const std::size_t fn = factorial(n), f1 = factorial(n - 1);
  auto case_of = [](const CanonicalIndepSet& a, const CanonicalIndepSet& b) -> std::string {
    if (a.k != b.k) return "other_coordinate";
    if (a.i == b.i && a.j == b.j) return "same_set";
    if (a.i == b.i) return "same_row";
    if (a.j == b.j) return "same_column";
    return "crossed";
  };
  std::vector<std::pair<std::string, std::pair<CanonicalIndepSet, CanonicalIndepSet>>> reps{
      {"same_set", {{1, 1, 1}, {1, 1, 1}}},
      {"same_row", {{1, 1, 1}, {1, 1, 2}}},
      {"same_column", {{1, 1, 1}, {1, 2, 1}}},
      {"crossed", {{1, 1, 1}, {1, 2, 2}}},
  };
  if (q >= 2) reps.push_back({"other_coordinate", {{1, 1, 1}, {2, 1, 1}}});
  for (const auto& [name, pair] : reps) {
    IntersectionCase c;
    c.name = name;
    c.a = pair.first;
    c.b = pair.second;
    c.size = family[b_family_index(c.a, n)].bits().count_and(family[b_family_index(c.b, n)].bits());
    if (name == "same_set") c.formula = expected_B_size(n, q);
    else if (name == "same_row" || name == "same_column") c.formula = 0;
    else if (name == "crossed") c.formula = factorial(n - 2) * ipow(fn, q - 1) / ipow(2, q);
    else c.formula = f1 * f1 * ipow(fn, q - 2) / ipow(2, q);
    table.cases.push_back(c);
  }
  for (std::size_t x = 0; x < desc.size(); ++x)
    for (std::size_t y = 0; y < desc.size(); ++y) {
      std::string name = case_of(desc[x], desc[y]);
      for (auto& c : table.cases)
        if (c.name == name && family[x].bits().count_and(family[y].bits()) != c.size) c.uniform = false;
    }
  return table;
}

CoverResult cover_characterization_check(int n, int q, int jobs) {
  const std::size_t m = static_cast<std::size_t>(q * n * n);
  double binom = 1;
  for (int k = 0; k < n; ++k) binom = binom * static_cast<double>(m - k) / (k + 1);
  if (binom > 1e7) throw ResourceLimit("cover scan requires binomial(q n^2, n) <= 10^7");
  ProductGroup group(n, q);
  auto family = build_B_family(group);
  const std::size_t total = group.order();

  struct Partial {
    std::uint64_t scanned = 0;
    std::vector<std::vector<std::size_t>> covering;
  };
  auto scan_first = [&](std::size_t first, Partial& out) {
    std::vector<Bitset> stack(static_cast<std::size_t>(n) + 1, Bitset(total));
    std::vector<std::size_t> pick(static_cast<std::size_t>(n));
    pick[0] = first;
    stack[1] = family[first].bits();
    // Iterative odometer over increasing index tuples.
    auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
      if (depth == static_cast<std::size_t>(n)) {
        ++out.scanned;
        if (stack[depth].count() == total) out.covering.push_back(pick);
        return;
      }
      for (std::size_t x = from; x + (n - depth) <= m; ++x) {
        pick[depth] = x;
        stack[depth + 1] = stack[depth] | family[x].bits();
        self(self, depth + 1, x + 1);
      }
    };
    rec(rec, 1, first + 1);
  };

  std::vector<Partial> parts(m);
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    for (std::size_t f = 0; f + n <= m; ++f) scan_first(f, parts[f]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t f = static_cast<std::size_t>(w); f + n <= m; f += static_cast<std::size_t>(workers))
          scan_first(f, parts[f]);
      });
    for (auto& t : pool) t.join();
  }

  CoverResult r;
  for (auto& p : parts) {
    r.subsets_scanned += p.scanned;
    for (auto& c : p.covering) r.covering.push_back(std::move(c));
  }
  std::sort(r.covering.begin(), r.covering.end());

  std::vector<std::vector<std::size_t>> expected;
  for (int k = 1; k <= q; ++k) {
    for (int i = 1; i <= n; ++i) {
      std::vector<std::size_t> row;
      for (int j = 1; j <= n; ++j) row.push_back(b_family_index({k, i, j}, n));
      expected.push_back(row);
    }
    for (int j = 1; j <= n; ++j) {
      std::vector<std::size_t> col;
      for (int i = 1; i <= n; ++i) col.push_back(b_family_index({k, i, j}, n));
      expected.push_back(col);
    }
  }
  std::sort(expected.begin(), expected.end());
  r.rows_and_columns_only = expected == r.covering;
  return r;
}

bool bipartite_expansion_check(const ExplicitGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw PreconditionError("expansion check on an empty graph");
  if (connected_components(graph).size() != 1) throw PreconditionError("expansion check requires a connected graph");
  if (!graph.regular_degree()) throw PreconditionError("expansion check requires a regular graph");
  auto bp = is_bipartite(graph);
  if (!bp.bipartite) throw PreconditionError("expansion check requires a bipartite graph");
  std::vector<VertexId> part[2];
  for (VertexId v = 0; v < n; ++v) part[bp.side[v]].push_back(v);
  if (part[0].size() != part[1].size()) throw PreconditionError("expansion check requires equal parts");
  if (part[0].size() > 16) throw ResourceLimit("expansion check limited to parts of size 16");

  for (int side = 0; side < 2; ++side) {
    const auto& mine = part[side];
    const auto& other = part[1 - side];
    std::vector<std::int32_t> local(n, -1);
    for (std::size_t x = 0; x < other.size(); ++x) local[other[x]] = static_cast<std::int32_t>(x);
    std::vector<std::uint32_t> nbr(mine.size(), 0);
    for (std::size_t x = 0; x < mine.size(); ++x)
      for (VertexId w : graph.neighbors(mine[x])) nbr[x] |= 1U << local[w];
    const std::uint32_t full = (1U << mine.size()) - 1;
    std::vector<std::uint32_t> cover(std::size_t{1} << mine.size(), 0);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::uint32_t low = mask & (~mask + 1);
      cover[mask] = cover[mask ^ low] | nbr[std::countr_zero(low)];
      if (std::popcount(cover[mask]) <= std::popcount(mask)) return false;
    }
  }
  return true;
}

NoHomomorphismResult no_homomorphism_instance_check(int n, int q) {
  if (n != 5 || q != 2) throw PreconditionError("no-homomorphism instance is defined for (5, 2)");
  NoHomomorphismResult r;
  auto base = build_even_derangement_graph(n);
  auto power = tensor_power_oracle(n, q);
  const auto& group = power.group();
  r.vertices_base = base.vertex_count();
  r.vertices_power = power.vertex_count();

  auto diag = [&](VertexId g) { return group.diagonal(ElementIndex{g}); };
  r.homomorphism = true;
  for (auto [u, v] : base.edges()) {
    ++r.edges_checked;
    if (!power.adjacent(diag(u), diag(v))) r.homomorphism = false;
  }

  auto spectrum = eigenvalues_symmetric(DenseSymMatrix::from_graph(base));
  double rb = ratio_bound(base.vertex_count(), static_cast<double>(base.degree(0)), spectrum.least());
  r.alpha_base = max_independent_sets_exact(base, static_cast<std::size_t>(std::floor(rb + 1e-6))).alpha;

  auto tensor = tensor_spectrum(spectrum, q);
  double rb2 = ratio_bound(power.vertex_count(), static_cast<double>(power.degree()), tensor.least());
  auto b = build_B(group, {1, 1, 1});
  if (verify_independent(power, b) && std::abs(rb2 - static_cast<double>(b.size())) < 1e-6)
    r.alpha_power = b.size();
  r.ratio_equal = r.alpha_power > 0 && r.alpha_base * r.vertices_power == r.alpha_power * r.vertices_base;

  VertexSet pre(base.vertex_count());
  for (VertexId g = 0; g < base.vertex_count(); ++g)
    if (b.contains(diag(g))) pre.insert(g);
  r.preimage_size = pre.size();
  r.preimage_is_B = pre == build_B(ProductGroup(group.factor_ptr(), 1), {1, 1, 1});
  return r;
}

JPartitionReport j_partition_structure(int n) {
  if (n < 3 || n > 5) throw ResourceLimit("J partition exploration limited to n <= 5");
  JPartitionReport r;
  r.n = n;
  auto oracle = tensor_power_oracle(n, 2);
  const auto& group = oracle.group();
  const auto& a = group.factor();
  // part: 0 -> J_0, 1 -> J_1, 2 -> J_2, -1 otherwise
  std::vector<int> part(group.order(), -1);
  std::vector<VertexId> members;
  for (VertexId v = 0; v < group.order(); ++v) {
    bool f1 = a.image(group.coordinate(v, 1), 1) == 1;
    bool f2 = a.image(group.coordinate(v, 2), 1) == 1;
    if (f1 && f2) part[v] = 0, ++r.j0;
    else if (f1) part[v] = 1, ++r.j1;
    else if (f2) part[v] = 2, ++r.j2;
    if (part[v] == 1 || part[v] == 2) members.push_back(v);
  }
  const std::size_t f = factorial(n - 1);
  r.j0_formula = f * f / 4;
  r.j12_formula = static_cast<std::size_t>(n - 1) * f * f / 4;

  r.bipartite_with_parts = true;
  std::set<std::size_t> degrees;
  std::vector<std::vector<VertexId>> lists;
  std::vector<std::int64_t> local(group.order(), -1);
  for (std::size_t x = 0; x < members.size(); ++x) local[members[x]] = static_cast<std::int64_t>(x);
  for (VertexId v : members) {
    std::vector<VertexId> l;
    for (VertexId w : oracle.neighbors(v)) {
      if (local[w] < 0) continue;
      if (part[w] == part[v]) r.bipartite_with_parts = false;
      l.push_back(static_cast<VertexId>(local[w]));
    }
    degrees.insert(l.size());
    lists.push_back(std::move(l));
  }
  r.biregular = degrees.size() == 1;
  r.degree_between = degrees.empty() ? 0 : *degrees.begin();
  auto induced = ExplicitGraph::from_neighbor_lists(std::move(lists));
  r.components = connected_components(induced).size();
  r.connected = r.components == 1;
  return r;
}

}  // namespace altgraph
