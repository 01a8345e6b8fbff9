#include "altgraph/refinement.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "altgraph/errors.hpp"

namespace altgraph {

bool RefinementPartition::is_discrete() const {
  for (const auto& c : cells)
    if (c.size() != 1) return false;
  return true;
}

bool RefinementPartition::is_equitable(const ExplicitGraph& graph) const {
  std::vector<std::size_t> cell_of(graph.vertex_count());
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (VertexId v : cells[c]) cell_of[v] = c;
  for (const auto& cell : cells) {
    std::vector<std::size_t> ref;
    for (std::size_t x = 0; x < cell.size(); ++x) {
      std::vector<std::size_t> counts(cells.size(), 0);
      for (VertexId w : graph.neighbors(cell[x])) ++counts[cell_of[w]];
      if (x == 0) ref = std::move(counts);
      else if (counts != ref) return false;
    }
  }
  return true;
}

namespace {

inline void mix(std::uint64_t& h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

}  // namespace

RefinementPartition equitable_refinement(const ExplicitGraph& graph, RefinementPartition p, std::uint64_t* trace) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint32_t> cell_of(n);
  std::uint64_t h = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < p.cells.size(); ++c)
      for (VertexId v : p.cells[c]) cell_of[v] = static_cast<std::uint32_t>(c);
    const std::size_t k = p.cells.size();
    std::vector<std::vector<std::uint32_t>> next;
    next.reserve(n);
    std::vector<std::uint32_t> sig(k);
    for (std::size_t c = 0; c < k; ++c) {
      const auto& cell = p.cells[c];
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      // Profile: sparse (cell, count) list for each vertex.
      std::vector<std::pair<std::vector<std::uint32_t>, VertexId>> prof;
      prof.reserve(cell.size());
      for (VertexId v : cell) {
        std::fill(sig.begin(), sig.end(), 0);
        for (VertexId w : graph.neighbors(v)) ++sig[cell_of[w]];
        std::vector<std::uint32_t> sparse;
        for (std::uint32_t x = 0; x < k; ++x)
          if (sig[x]) {
            sparse.push_back(x);
            sparse.push_back(sig[x]);
          }
        prof.emplace_back(std::move(sparse), v);
      }
      std::stable_sort(prof.begin(), prof.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t start = 0;
      std::size_t parts = 0;
      for (std::size_t x = 1; x <= prof.size(); ++x) {
        if (x == prof.size() || prof[x].first != prof[start].first) {
          std::vector<VertexId> sub;
          for (std::size_t y = start; y < x; ++y) sub.push_back(prof[y].second);
          std::sort(sub.begin(), sub.end());
          mix(h, c);
          mix(h, sub.size());
          for (auto z : prof[start].first) mix(h, z);
          next.push_back(std::move(sub));
          ++parts;
          start = x;
        }
      }
      if (parts > 1) changed = true;
    }
    p.cells = std::move(next);
    mix(h, p.cells.size());
  }
  if (trace) *trace = h;
  return p;
}

namespace {

RefinementPartition individualize(const RefinementPartition& p, std::size_t cell, VertexId v) {
  RefinementPartition out;
  out.cells.reserve(p.cells.size() + 1);
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    if (c != cell) {
      out.cells.push_back(p.cells[c]);
      continue;
    }
    out.cells.push_back({v});
    std::vector<VertexId> rest;
    for (VertexId w : p.cells[c])
      if (w != v) rest.push_back(w);
    out.cells.push_back(std::move(rest));
  }
  return out;
}

std::size_t target_cell(const RefinementPartition& p) {
  std::size_t best = p.cells.size();
  for (std::size_t c = 0; c < p.cells.size(); ++c)
    if (p.cells[c].size() > 1 && (best == p.cells.size() || p.cells[c].size() < p.cells[best].size())) best = c;
  return best;
}

class IrSearch {
 public:
  IrSearch(const ExplicitGraph& g, SearchBudget budget) : g_(g), budget_(budget) {
    start_ = std::chrono::steady_clock::now();
  }

  AutomorphismSearchResult run() {
    const std::size_t n = g_.vertex_count();
    AutomorphismSearchResult result;
    RefinementPartition unit;
    unit.cells.emplace_back(n);
    std::iota(unit.cells[0].begin(), unit.cells[0].end(), 0);
    std::uint64_t t0 = 0;
    path_.push_back(equitable_refinement(g_, unit, &t0));
    traces_.push_back(t0);
    while (!path_.back().is_discrete()) {
      tick();
      const auto& p = path_.back();
      std::size_t c = target_cell(p);
      VertexId w = p.cells[c].front();
      targets_.push_back(c);
      base_.push_back(w);
      std::uint64_t t = 0;
      auto next = equitable_refinement(g_, individualize(p, c, w), &t);
      path_.push_back(std::move(next));
      traces_.push_back(t);
    }
    for (const auto& cell : path_.back().cells) first_leaf_.push_back(cell.front());

    const std::size_t depth = base_.size();
    result.orbit_sizes.assign(depth, 1);
    for (std::size_t d = depth; d-- > 0;) {
      const auto& cell = path_[d].cells[targets_[d]];
      for (VertexId x : cell) {
        if (x == base_[d] || in_orbit(base_[d], x)) continue;
        if (auto gamma = search_subtree(path_[d], targets_[d], x, d)) add_generator(std::move(*gamma));
      }
      result.orbit_sizes[d] = orbit_size(base_[d]);
    }
    result.order = 1;
    for (auto s : result.orbit_sizes) result.order *= s;
    result.generators = gens_;
    result.base = base_;
    result.nodes = nodes_;
    if (gens_.empty()) result.bsgs_order = 1;
    else result.bsgs_order = schreier_sims(gens_).order();
    return result;
  }

 private:
  void tick() {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("automorphism search node budget exhausted");
    if ((nodes_ & 255) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time)
      throw BudgetExceeded("automorphism search time budget exhausted");
  }

  // Leaf below (p with x individualized in `cell`) whose map from the first leaf is an automorphism.
  std::optional<PointPermutation> search_subtree(const RefinementPartition& p, std::size_t cell, VertexId x,
                                                 std::size_t level) {
    tick();
    std::uint64_t t = 0;
    auto q = equitable_refinement(g_, individualize(p, cell, x), &t);
    if (t != traces_[level + 1] || q.cells.size() != path_[level + 1].cells.size()) return std::nullopt;
    for (std::size_t c = 0; c < q.cells.size(); ++c)
      if (q.cells[c].size() != path_[level + 1].cells[c].size()) return std::nullopt;
    if (q.is_discrete()) {
      std::vector<Point> images(g_.vertex_count());
      for (std::size_t pos = 0; pos < first_leaf_.size(); ++pos) images[first_leaf_[pos]] = q.cells[pos].front();
      auto gamma = PointPermutation::from_images_unchecked(std::move(images));
      if (is_automorphism(gamma)) return gamma;
      return std::nullopt;
    }
    std::size_t c = targets_[level + 1];
    for (VertexId y : q.cells[c])
      if (auto gamma = search_subtree(q, c, y, level + 1)) return gamma;
    return std::nullopt;
  }

  bool is_automorphism(const PointPermutation& gamma) const {
    for (VertexId u = 0; u < g_.vertex_count(); ++u) {
      if (g_.degree(u) != g_.degree(gamma(u))) return false;
      for (VertexId v : g_.neighbors(u))
        if (!g_.adjacent(gamma(u), gamma(v))) return false;
    }
    return true;
  }

  void add_generator(PointPermutation gamma) {
    gens_.push_back(std::move(gamma));
    orbits_valid_ = false;
  }

  void rebuild_orbits() {
    const std::size_t n = g_.vertex_count();
    orbit_id_.assign(n, 0);
    auto parts = orbit_decomposition(gens_, n);
    orbit_len_.assign(parts.size(), 0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      orbit_len_[k] = parts[k].size();
      for (Point v : parts[k]) orbit_id_[v] = k;
    }
    orbits_valid_ = true;
  }

  bool in_orbit(VertexId a, VertexId b) {
    if (!orbits_valid_) rebuild_orbits();
    return orbit_id_[a] == orbit_id_[b];
  }

  std::size_t orbit_size(VertexId a) {
    if (!orbits_valid_) rebuild_orbits();
    return orbit_len_[orbit_id_[a]];
  }

  const ExplicitGraph& g_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  std::vector<RefinementPartition> path_;
  std::vector<std::uint64_t> traces_;
  std::vector<std::size_t> targets_;
  std::vector<VertexId> base_;
  std::vector<VertexId> first_leaf_;
  std::vector<PointPermutation> gens_;
  bool orbits_valid_ = false;
  std::vector<std::size_t> orbit_id_, orbit_len_;
};

}  // namespace

AutomorphismSearchResult automorphism_group(const ExplicitGraph& graph, SearchBudget budget) {
  if (graph.vertex_count() > kExactSearchLimit)
    throw ResourceLimit("automorphism search limited to " + std::to_string(kExactSearchLimit) + " vertices");
  if (graph.vertex_count() == 0) {
    AutomorphismSearchResult r;
    r.order = 1;
    r.bsgs_order = 1;
    return r;
  }
  return IrSearch(graph, budget).run();
}

}  // namespace altgraph
