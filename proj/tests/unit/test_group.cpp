#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "altgraph/cayley.hpp"
#include "altgraph/group.hpp"
#include "altgraph/permutation.hpp"
#include "oracles.hpp"

using namespace altgraph;

namespace {

// Natural action on 0..n-1.
PointPermutation natural(const Permutation& p) {
  std::vector<Point> img;
  for (auto x : p.table()) img.push_back(x);
  return PointPermutation::from_images(img);
}

// Right translation by h on the vertices of A_n.
PointPermutation translation(const AlternatingGroup& g, ElementIndex h) {
  std::vector<Point> img(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) img[x] = g.multiply(ElementIndex{x}, h).value;
  return PointPermutation::from_images(img);
}

std::vector<oracle::Perm> as_oracle(const std::vector<Permutation>& ps) {
  std::vector<oracle::Perm> out;
  for (const auto& p : ps) out.emplace_back(p.table().begin(), p.table().end());
  return out;
}

}  // namespace

TEST(SchreierSims, A5FromTwoCycles) {
  std::vector<PointPermutation> gens{natural(long_cycle(5)), natural(Permutation::parse(5, "(1 2 3)"))};
  auto b = schreier_sims(gens);
  EXPECT_EQ(b.order(), BigInt(oracle::closure_size(as_oracle({long_cycle(5), Permutation::parse(5, "(1 2 3)")}))));
  EXPECT_EQ(b.order(), 60);
}

TEST(SchreierSims, GeneratedByEvenDerangements) {
  for (int n : {4, 5}) {
    std::vector<PointPermutation> gens;
    for (const auto& p : enumerate_even_derangements(n)) gens.push_back(natural(p));
    auto b = schreier_sims(gens);
    EXPECT_EQ(b.order(), BigInt(oracle::closure_size(as_oracle(enumerate_even_derangements(n)))));
  }
  std::vector<PointPermutation> g4;
  for (const auto& p : enumerate_even_derangements(4)) g4.push_back(natural(p));
  EXPECT_EQ(schreier_sims(g4).order(), 4);
}

TEST(SchreierSims, TrivialGroup) {
  std::vector<PointPermutation> gens{PointPermutation::identity(7)};
  EXPECT_EQ(schreier_sims(gens).order(), 1);
}

TEST(SchreierSims, S6OnPoints) {
  std::vector<PointPermutation> gens{natural(long_cycle(6)), natural(transposition(6, 1, 2))};
  EXPECT_EQ(schreier_sims(gens).order(), 720);
}

TEST(SchreierSims, OrderInvariantUnderShuffleAndSeed) {
  std::vector<PointPermutation> gens;
  for (const auto& p : enumerate_even_derangements(5)) gens.push_back(natural(p));
  auto ref = schreier_sims(gens, 1).order();
  std::mt19937_64 rng(3);
  for (std::uint64_t seed : {2u, 99u, 12345u}) {
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(schreier_sims(gens, seed).order(), ref);
  }
}

TEST(SchreierSims, Membership) {
  std::vector<PointPermutation> gens{natural(long_cycle(5)), natural(Permutation::parse(5, "(1 2 3)"))};
  auto b = schreier_sims(gens);
  EXPECT_TRUE(membership(b, PointPermutation::identity(5)));
  EXPECT_TRUE(membership(b, gens[0]));
  EXPECT_FALSE(membership(b, natural(transposition(5, 1, 2))));
  for (const auto& p : enumerate_symmetric(5)) EXPECT_EQ(membership(b, natural(p)), p.parity() == Parity::even);
}

TEST(SchreierSims, ProductClosureSampled) {
  std::vector<PointPermutation> gens{natural(long_cycle(6)), natural(Permutation::parse(6, "(1 2 3)"))};
  auto b = schreier_sims(gens);
  auto a6 = enumerate_alternating(6);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto g = natural(a6[rng() % a6.size()]);
    auto h = natural(a6[rng() % a6.size()]);
    ASSERT_TRUE(membership(b, g));
    EXPECT_TRUE(membership(b, compose(g, h)));
  }
}

TEST(SchreierSims, DomainMismatchThrows) {
  std::vector<PointPermutation> gens{PointPermutation::identity(3), PointPermutation::identity(4)};
  EXPECT_THROW(schreier_sims(gens), std::invalid_argument);
  EXPECT_THROW(schreier_sims(std::vector<PointPermutation>{}), std::invalid_argument);
}

TEST(Orbits, IdentityAndTranslations) {
  std::vector<PointPermutation> id{PointPermutation::identity(5)};
  EXPECT_EQ(orbit(id, 3), std::vector<Point>{3});

  AlternatingGroup a4(4), a5(5);
  std::vector<PointPermutation> t4, t5;
  for (const auto& p : enumerate_even_derangements(4)) t4.push_back(translation(a4, a4.index_of(p)));
  for (const auto& p : enumerate_even_derangements(5)) t5.push_back(translation(a5, a5.index_of(p)));
  EXPECT_EQ(orbit(t4, 0).size(), 4u);
  EXPECT_EQ(orbit(t5, 0).size(), 60u);

  auto parts = orbit_decomposition(t4, 12);
  std::size_t total = 0;
  for (const auto& o : parts) total += o.size();
  EXPECT_EQ(parts.size(), 3u);
  EXPECT_EQ(total, 12u);
}

TEST(PointPermutation, ComposeAndJson) {
  auto p = PointPermutation::from_images({1, 2, 0});
  auto q = PointPermutation::from_images({0, 2, 1});
  EXPECT_EQ(compose(p, q)(0), q(p(0)));
  EXPECT_TRUE(compose(p, inverse(p)).is_identity());
  std::vector<PointPermutation> gens{p, q};
  EXPECT_EQ(generators_from_json(generators_to_json(gens)), gens);
  EXPECT_THROW(PointPermutation::from_images({0, 0, 1}), std::invalid_argument);
}

TEST(BigInt, ToString) {
  BigInt v = 414'720'000;
  EXPECT_EQ(to_string(v), "414720000");
  v *= v;
  EXPECT_EQ(to_string(v), "171992678400000000");
}
