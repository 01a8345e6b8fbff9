// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
//   acceptance [--stretch]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "altgraph/autgroup.hpp"
#include "altgraph/cayley.hpp"
#include "altgraph/extremal.hpp"
#include "altgraph/permutation.hpp"
#include "altgraph/refinement.hpp"
#include "altgraph/spectral.hpp"
#include "oracles.hpp"

using namespace altgraph;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (cond ? "" : " [FAILED]");
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_sec, const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_sec) v.require(false, "runtime over limit");
  if (!v.ok) ++failures;
  std::printf("%s criterion %2d: %s | %s (%.2f s, limit %.0f s)\n", v.ok ? "PASS" : "FAIL", id, title,
              v.detail.str().c_str(), secs, limit_sec);
  std::fflush(stdout);
}

const ExplicitGraph& g(int n) {
  static const ExplicitGraph g5 = build_even_derangement_graph(5);
  static const ExplicitGraph g6 = build_even_derangement_graph(6);
  return n == 5 ? g5 : g6;
}

const ExplicitGraph& g52() {
  static const ExplicitGraph g = materialize(tensor_power_oracle(5, 2));
  return g;
}

const Spectrum& spectrum(int n) {
  static const Spectrum s5 = eigenvalues_symmetric(DenseSymMatrix::from_graph(g(5)), kDefaultTol, true);
  if (n == 5) return s5;
  static const Spectrum s6 = eigenvalues_symmetric(DenseSymMatrix::from_graph(g(6)));
  return s6;
}

bool odd_cycle_ok(const ExplicitGraph& gr) {
  auto r = is_bipartite(gr);
  if (r.bipartite || r.odd_cycle.size() % 2 == 0) return false;
  for (std::size_t k = 0; k < r.odd_cycle.size(); ++k)
    if (!gr.adjacent(r.odd_cycle[k], r.odd_cycle[(k + 1) % r.odd_cycle.size()])) return false;
  return true;
}

std::string num(const BigInt& b) { return to_string(b); }

}  // namespace

int main(int argc, char** argv) {
  bool stretch = argc > 1 && std::strcmp(argv[1], "--stretch") == 0;

  criterion(1, "connection-set sizes", 1, [](Verdict& v) {
    auto e5 = enumerate_even_derangements(5).size(), e6 = enumerate_even_derangements(6).size();
    v.require(e5 == 24, "|E_5|=" + std::to_string(e5));
    v.require(e6 == 130, "|E_6|=" + std::to_string(e6));
  });

  criterion(2, "connectivity", 5, [](Verdict& v) {
    v.require(connected_components(g(5)).size() == 1, "AGamma_5 connected");
    v.require(connected_components(g(6)).size() == 1, "AGamma_6 connected");
    v.require(connected_components(g52()).size() == 1, "AGamma_5^2 connected");
    auto g4 = build_even_derangement_graph(4);
    auto comps = connected_components(g4);
    bool k4 = comps.size() == 3;
    for (const auto& c : comps) k4 = k4 && c.size() == 4 && g4.induced_subgraph(c).edge_count() == 6;
    v.require(k4, "AGamma_4 has " + std::to_string(comps.size()) + " components, each K_4");
  });

  criterion(3, "non-bipartite with odd-cycle witness", 5, [](Verdict& v) {
    v.require(odd_cycle_ok(g(5)), "AGamma_5");
    v.require(odd_cycle_ok(g(6)), "AGamma_6");
    v.require(odd_cycle_ok(g52()), "AGamma_5^2");
  });

  criterion(4, "diameter and common neighbours", 30, [](Verdict& v) {
    v.require(diameter_vertex_transitive(g(5)) == 2, "diam AGamma_5 = 2");
    v.require(diameter_vertex_transitive(g(6)) == 2, "diam AGamma_6 = 2");
    v.require(diameter_vertex_transitive(g52()) == 2, "diam AGamma_5^2 = 2");
    v.require(common_neighbor_check(g(5)).all_pairs_covered, "common neighbours AGamma_5");
    v.require(common_neighbor_check(g(6)).all_pairs_covered, "common neighbours AGamma_6");
  });

  criterion(5, "least eigenvalues", 60, [](Verdict& v) {
    auto t0 = std::chrono::steady_clock::now();
    double mu6 = spectrum(6).least();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double mu5 = spectrum(5).least();
    char buf[160];
    std::snprintf(buf, sizeof buf, "mu(AGamma_5)=%.12f", mu5);
    v.require(std::abs(mu5 + 6) <= 1e-6, buf);
    std::snprintf(buf, sizeof buf, "mu(AGamma_6)=%.12f", mu6);
    v.require(std::abs(mu6 + 26) <= 1e-6, buf);
    std::snprintf(buf, sizeof buf, "360x360 Jacobi %.2f s", secs);
    v.require(secs < 60, buf);
  });

  criterion(6, "independence numbers and maximum independent sets", 180, [](Verdict& v) {
    auto mis = max_independent_sets_exact(g(5), std::size_t{12});
    std::set<std::vector<VertexId>> found, fam;
    for (const auto& s : mis.sets) found.insert(s.to_indices());
    for (const auto& b : build_B_family(ProductGroup(5, 1))) fam.insert(b.to_indices());
    v.require(mis.alpha == 12, "alpha(AGamma_5)=" + std::to_string(mis.alpha));
    v.require(mis.sets.size() == 25 && found == fam, std::to_string(mis.sets.size()) + " maximum sets, equal to B");
    v.require(std::abs(ratio_bound(60, 24, spectrum(5).least()) - 12) < 1e-6 &&
                  ratio_tightness_certificate(g(5), spectrum(5), 12) == Certificate::holds,
              "ratio bound 12, tight");

    auto t2 = tensor_spectrum(spectrum(5), 2);
    v.require(std::abs(t2.least() + 144) < 1e-6, "tensor least eigenvalue -144");
    auto cert = ratio_tightness_certificate(3600, 576, t2.least(), static_cast<std::int64_t>(expected_B_size(5, 2)));
    v.require(expected_B_size(5, 2) == 720 && cert == Certificate::holds, "alpha(AGamma_5^2)=720 by ratio tightness");
    auto o = tensor_power_oracle(5, 2);
    auto fam2 = build_B_family(o.group());
    std::size_t good = 0;
    for (const auto& b : fam2)
      if (b.size() == 720 && verify_independent(g52(), b) && extension_candidates(g52(), b).empty() &&
          eigenspace_certificate(b, spectrum(5), 2, 1e-8) && eigenspace_exact_check(o, b, -144))
        ++good;
    v.require(fam2.size() == 50 && good == 50,
              std::to_string(good) + "/50 B sets independent, maximal, size 720, eigenspace certified");
  });

  criterion(7, "clique and chromatic numbers", 120, [](Verdict& v) {
    auto w5 = max_clique_exact(g(5));
    auto c1 = canonical_coloring(ProductGroup(5, 1));
    v.require(w5 == 5 && c1.colors == 5 && is_proper(c1, g(5)), "omega = chi = 5 for AGamma_5");
    auto o = tensor_power_oracle(5, 2);
    auto diag = find_clique_powers_of_cycle(o.group());
    auto c2 = canonical_coloring(o.group());
    bool identity = diag.size() * expected_B_size(5, 2) == o.vertex_count();
    v.require(diag.size() == 5 && is_clique(o, diag), "diagonal 5-clique in AGamma_5^2");
    v.require(c2.colors == 5 && is_proper(c2, g52()), "proper 5-colouring of AGamma_5^2");
    v.require(identity, "alpha * omega = |V| = 3600");
  });

  criterion(8, "B-family intersections and covers", 60, [](Verdict& v) {
    auto t = intersection_size_table(5, 2);
    auto size = [&](const char* name) { return t.find(name)->size; };
    v.require(size("same_row") == 0 && size("same_column") == 0, "disjoint cases 0");
    v.require(size("other_coordinate") == 144, "other coordinate 144");
    v.require(size("same_set") == 720, "same set 720");
    v.require(size("crossed") == 180, "crossed 180 (informational: printed value is 720)");
    auto c1 = cover_characterization_check(5, 1);
    auto c2 = cover_characterization_check(5, 2);
    v.require(c1.covering.size() == 10 && c1.rows_and_columns_only, std::to_string(c1.covering.size()) + " covers at (5,1)");
    v.require(c2.covering.size() == 20 && c2.rows_and_columns_only, std::to_string(c2.covering.size()) + " covers at (5,2)");
  });

  criterion(9, "automorphism group orders", 300, [stretch](Verdict& v) {
    for (auto [n, q] : {std::pair{5, 1}, std::pair{6, 1}, std::pair{5, 2}}) {
      auto r = generated_order_check(n, q);
      v.require(r.match && r.computed == claimed_group_order(n, q),
                "(" + std::to_string(n) + "," + std::to_string(q) + ") order " + num(r.computed));
    }
    auto f1 = faithful_B_action_check(5, 1), f2 = faithful_B_action_check(5, 2);
    v.require(f1.faithful && f2.faithful, "faithful on B at (5,1) and (5,2)");
    auto ir = full_automorphism_order(g(5));
    v.require(ir.order == 14400 && ir.bsgs_agrees, "IR search on AGamma_5: " + num(ir.order));
    if (stretch) {
      auto ir6 = full_automorphism_order(g(6));
      v.require(ir6.order == 518400, "IR search on AGamma_6: " + num(ir6.order));
      auto m6 = max_independent_sets_exact(g(6), std::size_t{60}, {}, VertexId{0});
      v.require(m6.alpha == 60, "alpha(AGamma_6) = 60");
    }
  });

  criterion(10, "property suites", 120, [](Verdict& v) {
    bool laws = true;
    auto s5 = enumerate_symmetric(5);
    for (const auto& p : s5) {
      laws = laws && compose(p, inverse(p)).is_identity() && parity(inverse(p)) == parity(p);
      for (const auto& q : s5) laws = laws && parity(compose(p, q)) == (parity(p) ^ parity(q));
    }
    v.require(laws, "inverse and parity laws on S_5");

    bool closed = true;
    for (int n : {5, 6}) {
      auto e = enumerate_even_derangements(n);
      std::set<Permutation> set(e.begin(), e.end());
      for (const auto& t : enumerate_symmetric(n))
        for (const auto& p : e) closed = closed && set.count(conjugate(p, t));
    }
    v.require(closed, "E_5, E_6 closed under conjugation");

    auto o = tensor_power_oracle(5, 2);
    std::mt19937_64 rng(42);
    bool agree = true;
    for (int k = 0; k < 100000; ++k) {
      auto a = static_cast<VertexId>(rng() % 3600), b = static_cast<VertexId>(rng() % 3600);
      agree = agree && o.adjacent(a, b) == g52().adjacent(a, b);
    }
    v.require(agree, "oracle = materialized on 1e5 pairs");

    bool ids = true;
    for (int n : {5, 6}) {
      const auto& s = spectrum(n);
      double nv = static_cast<double>(g(n).vertex_count());
      ids = ids && std::abs(s.trace()) <= 1e-6 * nv &&
            std::abs(s.energy() - 2.0 * static_cast<double>(g(n).edge_count())) <= 1e-6 * nv;
    }
    v.require(ids, "trace and energy identities");

    std::size_t fixtures = 0;
    bool expand = true;
    for (int m = 1; m <= 6; ++m)
      for (int d = 1; d <= m; ++d)
        for (const auto& rows : oracle::regular_bipartite_fixtures(m, d)) {
          std::vector<Edge> edges;
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
              if (rows[static_cast<std::size_t>(a)] >> b & 1U)
                edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(m + b));
          auto gr = ExplicitGraph::from_edges(static_cast<std::size_t>(2 * m), edges);
          expand = expand && bipartite_expansion_check(gr) && oracle::expansion_brute(rows, m);
          ++fixtures;
        }
    v.require(expand, "expansion on " + std::to_string(fixtures) + " regular bipartite fixtures");
  });

  return failures;
}
