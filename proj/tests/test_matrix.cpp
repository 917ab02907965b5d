#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "trigirth/constructions.hpp"
#include "trigirth/matrix.hpp"

using namespace trigirth;

namespace {
std::vector<int> dense_column(const IncidenceMatrix& m, std::size_t c) {
  std::vector<int> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.entry(r, c);
  return v;
}
}  // namespace

TEST(Incidence, SingleTripleColumns) {
  const IncidenceMatrix up(OrientedThreeGraph(3, {canonicalize(1, 2, 3)}));
  EXPECT_EQ(dense_column(up, 0), (std::vector<int>{1, -1, 1}));
  const IncidenceMatrix down(OrientedThreeGraph(3, {canonicalize(1, 3, 2)}));
  EXPECT_EQ(dense_column(down, 0), (std::vector<int>{-1, 1, -1}));
}

TEST(Incidence, RowLayout) {
  const IncidenceMatrix m{OrientedThreeGraph(5)};
  EXPECT_EQ(m.rows(), 10u);
  std::size_t r = 0;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j, ++r) {
      EXPECT_EQ(m.row_index(i, j), r);
      EXPECT_EQ(m.row_index(j, i), r);
      EXPECT_EQ(m.row_pair(r), std::make_pair(i, j));
    }
  }
}

TEST(Incidence, DirectedFourSetColumnsCancel) {
  const IncidenceMatrix m(directed_four_set());
  EXPECT_EQ(m.rows(), 6u);
  EXPECT_EQ(m.cols(), 4u);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int sum = 0, nonzero = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      sum += m.entry(r, c);
      nonzero += m.entry(r, c) != 0;
    }
    EXPECT_EQ(sum, 0);
    EXPECT_EQ(nonzero, 2);
  }
}

TEST(Incidence, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 100; ++it) {
    const int n = 3 + it % 6;
    const auto g = oracle::random_graph(rng, n, 0.5, 100);
    const IncidenceMatrix m(g);
    const auto a = oracle::incidence(n, oracle::triples_of(g));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) ASSERT_EQ(m.entry(r, c), a[r][c]);
    }
  }
}

TEST(Rank, DirectedFourSet) {
  const auto k = rank_and_kernel(IncidenceMatrix(directed_four_set()));
  EXPECT_EQ(k.rank, 3u);
  ASSERT_EQ(k.kernel_basis.size(), 1u);
  EXPECT_EQ(k.kernel_basis[0], (std::vector<Rational>{1, 1, 1, 1}));
}

TEST(Rank, EmptyColumnSet) {
  const IncidenceMatrix m(directed_four_set());
  const auto k = rank_and_kernel(m, std::vector<std::size_t>{});
  EXPECT_EQ(k.rank, 0u);
  EXPECT_TRUE(k.kernel_basis.empty());
}

TEST(Rank, AgreesWithOracleAndKernelIsExact) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 80; ++it) {
    const int n = 4 + it % 4;
    const auto g = oracle::random_graph(rng, n, 0.6, 100);
    const IncidenceMatrix m(g);
    const auto k = rank_and_kernel(m);
    const auto a = oracle::incidence(n, oracle::triples_of(g));
    std::vector<std::size_t> all(g.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    const auto ref = oracle::kernel(a, all);
    EXPECT_EQ(k.rank, ref.rank);
    EXPECT_EQ(k.rank + k.kernel_basis.size(), g.size());
    for (const auto& v : k.kernel_basis) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m.entry(r, c) * v[c];
        ASSERT_EQ(s, 0);
      }
    }
  }
}

TEST(Rank, TournamentBound) {
  std::mt19937_64 rng(13);
  for (int n = 3; n <= 9; ++n) {
    const auto t = oracle::random_tournament(rng, n);
    EXPECT_LE(static_cast<std::int64_t>(rank_and_kernel(IncidenceMatrix(t)).rank), rank_upper_bound(n));
  }
}

TEST(NullVectors, SmallExamples) {
  const auto x = lemma_rank_null_vectors(3);
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x[0], (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(x[1], (std::vector<int>{-1, 0, 1}));
}

TEST(NullVectors, OrthogonalToEveryTripleColumn) {
  for (int n = 3; n <= 8; ++n) {
    std::vector<OrientedTriple> all;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) all.push_back(canonicalize(a, b, c));
    const IncidenceMatrix m(OrientedThreeGraph(n, all));
    const auto xs = lemma_rank_null_vectors(n);
    EXPECT_EQ(xs.size(), static_cast<std::size_t>(n - 1));
    for (const auto& x : xs) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        int dot = 0;
        for (const auto& e : m.column(c)) dot += x[e.row] * e.sign;
        ASSERT_EQ(dot, 0);
      }
    }
    // The n-1 vectors are independent, which is what caps the rank.
    std::vector<std::vector<Integer>> rows;
    for (const auto& x : xs) rows.emplace_back(x.begin(), x.end());
    EXPECT_EQ(rank_and_kernel(rows, m.rows()).rank, static_cast<std::size_t>(n - 1));
  }
}

TEST(Mtx, HasLegendsAndEntries) {
  const auto text = emit_mtx(IncidenceMatrix(directed_four_set()));
  EXPECT_NE(text.find("6 4 12"), std::string::npos);
  EXPECT_NE(text.find("% row 1 = 1 2"), std::string::npos);
  EXPECT_NE(text.find("% col 1 = 1 2 3"), std::string::npos);
}
