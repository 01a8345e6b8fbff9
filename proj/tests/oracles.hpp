#pragma once
// Brute-force reference implementations used to check the library. Nothing
// here calls into altgraph.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // 0-based images

inline std::vector<Perm> symmetric(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool even(const Perm& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv % 2 == 0;
}

inline bool derangement(const Perm& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p[a] == static_cast<int>(a)) return false;
  return true;
}

inline std::vector<Perm> alternating(int n) {
  std::vector<Perm> out;
  for (auto& p : symmetric(n))
    if (even(p)) out.push_back(p);
  return out;
}

inline std::vector<Perm> even_derangements(int n) {
  std::vector<Perm> out;
  for (auto& p : symmetric(n))
    if (even(p) && derangement(p)) out.push_back(p);
  return out;
}

// Apply p then q.
inline Perm then(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) r[a] = q[static_cast<std::size_t>(p[a])];
  return r;
}

// Size of the closure of a generating set under composition.
inline std::size_t closure_size(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> queue{id};
  seen.insert(id);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : gens) {
      auto x = then(queue[h], g);
      if (seen.insert(x).second) queue.push_back(x);
    }
  return seen.size();
}

// Two tuples of A_n are adjacent in the tensor power iff in every coordinate
// the two permutations disagree at every point.
inline bool disagree_everywhere(const Perm& a, const Perm& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] == b[x]) return false;
  return true;
}

// Dense 0/1 adjacency of AΓ_n with A_n in lexicographic order.
inline std::vector<std::vector<char>> base_adjacency(int n) {
  auto el = alternating(n);
  std::vector<std::vector<char>> adj(el.size(), std::vector<char>(el.size(), 0));
  for (std::size_t u = 0; u < el.size(); ++u)
    for (std::size_t v = 0; v < el.size(); ++v) adj[u][v] = disagree_everywhere(el[u], el[v]) ? 1 : 0;
  return adj;
}

// Maximum independent sets of a graph with at most 64 vertices that is
// invariant under the right-regular action: list sets through vertex 0, then
// translate with `translate(set, h)`.
inline std::vector<std::uint64_t> max_independent_sets_via_identity(
    const std::vector<std::vector<char>>& adj,
    const std::function<std::uint64_t(std::uint64_t, std::size_t)>& translate) {
  const std::size_t n = adj.size();
  std::vector<std::uint64_t> nonnb(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !adj[u][v]) nonnb[u] |= std::uint64_t{1} << v;
  std::size_t best = 0;
  std::vector<std::uint64_t> found;
  std::function<void(std::uint64_t, std::uint64_t, std::size_t)> rec = [&](std::uint64_t cur, std::uint64_t cand,
                                                                             std::size_t size) {
    if (cand == 0) {
      if (size > best) {
        best = size;
        found.clear();
      }
      if (size == best) found.push_back(cur);
      return;
    }
    if (size + static_cast<std::size_t>(__builtin_popcountll(cand)) < best) return;
    int v = __builtin_ctzll(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    rec(cur | bit, cand & nonnb[static_cast<std::size_t>(v)] & ~((bit << 1) - 1), size + 1);
    rec(cur, cand & ~bit, size);
  };
  rec(1, nonnb[0], 1);
  std::set<std::uint64_t> all;
  for (auto s : found) {
    // Sets found must be maximum overall, not just maximal in the branch.
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != best) continue;
    for (std::size_t h = 0; h < n; ++h) all.insert(translate(s, h));
  }
  return {all.begin(), all.end()};
}

// Number of automorphisms of a small graph by backtracking. Vertices are
// assigned in breadth-first order so each new one has a mapped neighbour.
inline std::uint64_t automorphism_count(const std::vector<std::vector<char>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> deg(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) deg[u] += adj[u][v];
  std::vector<std::size_t> order;
  std::vector<char> placed(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (std::size_t v = 0; v < n; ++v)
        if (adj[order[h]][v] && !placed[v]) {
          placed[v] = 1;
          order.push_back(v);
        }
  }
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == n) {
      ++count;
      return;
    }
    const std::size_t u = order[level];
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x] || deg[x] != deg[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < level && ok; ++k) {
        const std::size_t w = order[k];
        if (adj[u][w] != adj[x][static_cast<std::size_t>(img[w])]) ok = false;
      }
      if (!ok) continue;
      img[u] = static_cast<int>(x);
      used[x] = 1;
      rec(level + 1);
      used[x] = 0;
    }
  };
  rec(0);
  return count;
}

// Expansion property by enumerating every subset of each part. Parts are
// {0..m-1} and {m..2m-1}; adjacency given as row masks of the left part.
inline bool expansion_brute(const std::vector<std::uint32_t>& rows, int m) {
  std::vector<std::uint32_t> cols(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (rows[static_cast<std::size_t>(a)] >> b & 1U) cols[static_cast<std::size_t>(b)] |= 1U << a;
  const std::uint32_t full = (1U << m) - 1;
  const std::vector<std::uint32_t>* sides[] = {&rows, &cols};
  for (const auto* side : sides)
    for (std::uint32_t s = 1; s < full; ++s) {
      std::uint32_t nb = 0;
      for (int a = 0; a < m; ++a)
        if (s >> a & 1U) nb |= (*side)[static_cast<std::size_t>(a)];
      if (__builtin_popcount(nb) <= __builtin_popcount(s)) return false;
    }
  return true;
}

// Connected biadjacency matrices (as row masks) with all line sums d, m x m.
inline std::vector<std::vector<std::uint32_t>> regular_bipartite_fixtures(int m, int d) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t x = 0; x < (1U << m); ++x)
    if (__builtin_popcount(x) == d) masks.push_back(x);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> rows;
  std::vector<int> col(static_cast<std::size_t>(m), 0);
  std::function<void()> rec = [&] {
    const int r = static_cast<int>(rows.size());
    if (r == m) {
      // Connectivity by union of left vertices sharing a column.
      std::uint32_t reached = 1, cols = rows[0];
      bool grew = true;
      while (grew) {
        grew = false;
        for (int a = 0; a < m; ++a)
          if (!(reached >> a & 1U) && (rows[static_cast<std::size_t>(a)] & cols)) {
            reached |= 1U << a;
            cols |= rows[static_cast<std::size_t>(a)];
            grew = true;
          }
      }
      if (reached == (1U << m) - 1) out.push_back(rows);
      return;
    }
    for (auto x : masks) {
      bool ok = true;
      for (int b = 0; b < m; ++b) {
        int c = col[static_cast<std::size_t>(b)] + static_cast<int>(x >> b & 1U);
        if (c > d || c + (m - r - 1) < d) ok = false;
      }
      if (!ok) continue;
      for (int b = 0; b < m; ++b) col[static_cast<std::size_t>(b)] += static_cast<int>(x >> b & 1U);
      rows.push_back(x);
      rec();
      rows.pop_back();
      for (int b = 0; b < m; ++b) col[static_cast<std::size_t>(b)] -= static_cast<int>(x >> b & 1U);
    }
  };
  rec();
  return out;
}

// |B_a ∩ B_b| at (n, q) by counting tuples. A set (k, i, j) is 0-based here:
// tuples whose coordinate k maps i to j.
struct BIndex {
  int k, i, j;
};
inline std::size_t intersection_count(int n, int q, BIndex a, BIndex b) {
  auto el = alternating(n);
  // Coordinates are independent, so count per coordinate and multiply.
  std::size_t total = 1;
  for (int k = 0; k < q; ++k) {
    std::size_t c = 0;
    for (const auto& p : el) {
      bool in_a = a.k != k || p[static_cast<std::size_t>(a.i)] == a.j;
      bool in_b = b.k != k || p[static_cast<std::size_t>(b.i)] == b.j;
      if (in_a && in_b) ++c;
    }
    total *= c;
  }
  return total;
}

}  // namespace oracle
