#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "trigirth/analysis.hpp"
#include "trigirth/constructions.hpp"

using namespace trigirth;

namespace {

OrientedThreeGraph k7_cycle() { return cycle_from_triangulation(faces_from_rotation(builtin_k7_rotation())); }

OrientedThreeGraph two_four_sets() {
  std::vector<OrientedTriple> triples;
  const auto base = directed_four_set();
  for (const auto& t : base.triples()) {
    triples.push_back(t);
    triples.push_back(canonicalize(t[0] + 4, t[1] + 4, t[2] + 4));
  }
  return OrientedThreeGraph(8, triples);
}

std::vector<OrientedTriple> subset(const OrientedThreeGraph& g, std::uint32_t mask) {
  std::vector<OrientedTriple> out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (mask >> j & 1u) out.push_back(g.triples()[j]);
  }
  return out;
}

}  // namespace

TEST(FindCycle, Examples) {
  const auto c4 = find_cycle(directed_four_set());
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4.cycle->length(), 4u);

  const auto p = find_cycle(gadget(GadgetKind::P));
  EXPECT_FALSE(p);
  ASSERT_TRUE(p.refutation);

  const auto k7 = k7_cycle();
  const auto c = find_cycle(k7);
  ASSERT_TRUE(c);
  EXPECT_EQ(c.cycle->length(), 14u);
  for (const auto& [t, w] : c.cycle->weights) EXPECT_EQ(w, 1);
}

TEST(IsCycle, DirectedFourSetSubsets) {
  const auto g = directed_four_set();
  EXPECT_TRUE(is_cycle(g, g.triples()));
  for (std::size_t skip = 0; skip < 4; ++skip) {
    auto s = std::vector<OrientedTriple>(g.triples().begin(), g.triples().end());
    s.erase(s.begin() + static_cast<long>(skip));
    EXPECT_FALSE(is_cycle(g, s));
  }
  EXPECT_ERROR_KIND(is_cycle(g, std::vector{canonicalize(1, 3, 2)}), ErrorKind::UnknownTriple);
}

TEST(IsCycle, ClosedGadgetWeights) {
  const auto g = gadget(GadgetKind::P).with(canonicalize(1, 3, 2));
  const auto r = is_cycle(g, g.triples());
  ASSERT_TRUE(r);
  const auto cert = normalized(*r.cycle);
  EXPECT_EQ(cert.weights.at(canonicalize(4, 6, 5)), 2);
}

TEST(SingleCycle, Examples) {
  EXPECT_TRUE(is_single_cycle(directed_four_set()));
  EXPECT_TRUE(is_single_cycle(gadget(GadgetKind::P).with(canonicalize(1, 3, 2))));
  const auto r = check_single_cycle(two_four_sets());
  EXPECT_FALSE(r.single);
  ASSERT_TRUE(r.proper);
  EXPECT_LT(r.proper->length(), 8u);
  EXPECT_FALSE(is_single_cycle(gadget(GadgetKind::P)));
  EXPECT_FALSE(is_single_cycle(OrientedThreeGraph(4)));
}

TEST(SingleCycle, JobsDoNotChangeTheAnswer) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 20; ++it) {
    const auto g = oracle::random_graph(rng, 6, 0.5, 10);
    const auto a = check_single_cycle(g, 1);
    const auto b = check_single_cycle(g, 4);
    EXPECT_EQ(a.single, b.single);
    EXPECT_EQ(a.proper, b.proper);
    EXPECT_EQ(a.refutations, b.refutations);
  }
}

TEST(SingleCycle, AgreesWithOracle) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 300; ++it) {
    const auto g = oracle::random_graph(rng, 5, 0.8, 7);
    const auto s = oracle::enumerate(5, oracle::triples_of(g));
    const std::uint32_t all = (1u << g.size()) - 1;
    const bool expected = !g.empty() && oracle::is_cycle(s, all) && oracle::cycle_support_count(s, g.size()) == 1;
    ASSERT_EQ(is_single_cycle(g), expected);
  }
}

TEST(OnlyCycle, PositiveExamples) {
  const auto d4 = directed_four_set();
  EXPECT_TRUE(only_cycle(d4, d4.triples()));
  const auto k7 = k7_cycle();
  const auto t = complete_to_tournament(k7);
  EXPECT_TRUE(only_cycle(t, k7.triples()));
}

TEST(OnlyCycle, FourVertexTournamentsHaveAtMostOneCycle) {
  // Every pair {i,j} lies in two of the four triples, so dropping any
  // triple leaves an uncancelled row: the only candidate support is all four.
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<OrientedTriple> ts;
    const ThreeSet sets[] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    for (int k = 0; k < 4; ++k) {
      const auto& s = sets[k];
      ts.push_back(mask >> k & 1 ? canonicalize(s[0], s[2], s[1]) : canonicalize(s[0], s[1], s[2]));
    }
    const OrientedThreeGraph g(4, ts);
    const auto s = oracle::enumerate(4, oracle::triples_of(g));
    EXPECT_LE(oracle::cycle_support_count(s, 4), 1u);
    EXPECT_EQ(only_cycle(g, g.triples()), s.has_cycle);
  }
}

TEST(OnlyCycle, TournamentWithTwoCycleSupports) {
  std::mt19937_64 rng(2024);
  bool found = false;
  for (int it = 0; it < 500 && !found; ++it) {
    const auto g = oracle::random_tournament(rng, 5);
    const auto s = oracle::enumerate(5, oracle::triples_of(g));
    if (s.circuits.size() < 2) continue;
    found = true;
    const auto c = subset(g, s.circuits[0]);
    const auto r = check_only_cycle(g, c);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.other);
    EXPECT_TRUE(check_certificate(g, *r.other));
    EXPECT_NE(r.other->support(), c);
  }
  EXPECT_TRUE(found);
}

TEST(OnlyCycle, AgreesWithOracle) {
  std::mt19937_64 rng(404);
  for (int it = 0; it < 200; ++it) {
    const auto g = oracle::random_graph(rng, 5, 0.8, 7);
    if (g.empty()) continue;
    const auto s = oracle::enumerate(5, oracle::triples_of(g));
    const std::uint32_t mask = std::uniform_int_distribution<std::uint32_t>(1, (1u << g.size()) - 1)(rng);
    std::uint32_t target = mask;
    if (!s.circuits.empty() && it % 2 == 0) target = s.circuits[it % s.circuits.size()];
    const bool expected = oracle::is_cycle(s, target) && [&] {
      for (std::uint32_t other = 1; other < (1u << g.size()); ++other) {
        if (other != target && oracle::is_cycle(s, other)) return false;
      }
      return true;
    }();
    ASSERT_EQ(only_cycle(g, subset(g, target)), expected) << it;
    ASSERT_EQ(only_cycle(g, subset(g, target), 3), expected) << it;
  }
}

TEST(CreatesNewCycle, Examples) {
  EXPECT_TRUE(creates_new_cycle(gadget(GadgetKind::P), canonicalize(1, 3, 2)));
  EXPECT_FALSE(creates_new_cycle(OrientedThreeGraph(4), canonicalize(1, 2, 3)));
  EXPECT_ERROR_KIND(creates_new_cycle(directed_four_set(), canonicalize(1, 3, 2)),
                    ErrorKind::ThreeSetAlreadyOriented);
  const auto k7 = k7_cycle();
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      for (int c = b + 1; c <= 7; ++c) {
        if (k7.orientation_of({a, b, c})) continue;
        EXPECT_FALSE(creates_new_cycle(k7, canonicalize(a, b, c)));
        EXPECT_FALSE(creates_new_cycle(k7, canonicalize(a, c, b)));
      }
}

TEST(Girth, Examples) {
  const auto d4 = girth(directed_four_set());
  EXPECT_EQ(d4.status, GirthStatus::Exact);
  EXPECT_EQ(d4.girth, 4u);
  EXPECT_EQ(girth(gadget(GadgetKind::P)).status, GirthStatus::NoCycle);

  const auto s1 = iterate(GadgetKind::S, 1).graph;
  const auto r = girth(s1);
  EXPECT_EQ(r.status, GirthStatus::Exact);
  EXPECT_EQ(r.girth, 44u);
  EXPECT_EQ(r.method, "single-cycle");

  const auto two = girth(two_four_sets());
  EXPECT_EQ(two.girth, 4u);
  ASSERT_TRUE(two.certificate);
  EXPECT_TRUE(check_certificate(two_four_sets(), *two.certificate));
}

TEST(Girth, CompletedK7) {
  const auto t = complete_to_tournament(k7_cycle());
  const auto r = girth(t);
  EXPECT_EQ(r.status, GirthStatus::Exact);
  EXPECT_EQ(r.girth, 14u);
  EXPECT_EQ(r.upper_bound, 16);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(check_certificate(t, *r.certificate));
  EXPECT_EQ(r.certificate->length(), 14u);
}

TEST(Girth, BudgetExhaustionReportsBound) {
  const auto t = complete_to_tournament(k7_cycle());
  const auto r = girth(t, GirthBudget{3});
  EXPECT_EQ(r.status, GirthStatus::UnknownAtBudget);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(check_certificate(t, *r.certificate));
  EXPECT_EQ(r.girth, r.certificate->length());
  EXPECT_GE(r.girth, 14u);
}

TEST(Girth, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 400; ++it) {
    const int n = 5 + it % 2;
    const auto g = oracle::random_graph(rng, n, 0.7, 8);
    const auto s = oracle::enumerate(n, oracle::triples_of(g));
    const auto r = girth(g);
    ASSERT_EQ(r.status == GirthStatus::NoCycle, !s.has_cycle);
    if (s.has_cycle) {
      ASSERT_EQ(r.status, GirthStatus::Exact);
      ASSERT_EQ(r.girth, s.girth);
      ASSERT_TRUE(check_certificate(g, *r.certificate));
      ASSERT_EQ(r.certificate->length(), s.girth);
    }
  }
}
