#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "tmpr/tmpr.hpp"

using namespace tmpr;

namespace {

OrderedColoring random_coloring(std::mt19937_64& rng, std::size_t n, std::size_t k, Color q) {
  std::vector<Color> t(binomial(n, k));
  for (auto& c : t) c = rng() % q + 1;
  return OrderedColoring(n, k, q, std::move(t));
}

OrderedColoring rainbow(std::size_t n, std::size_t k) {
  std::vector<Color> t(binomial(n, k));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i + 1;
  Color const palette = t.size();
  return OrderedColoring(n, k, palette, std::move(t));
}

OrderedColoring mono(std::size_t n, std::size_t k) {
  return OrderedColoring(n, k, 1, std::vector<Color>(binomial(n, k), 1));
}

// All TMP_n with at most p colors, by trying every vertex set.
bool brute_has_path(OrderedColoring const& chi, std::size_t n, std::size_t p) {
  std::size_t const k = chi.uniformity(), len = n + k - 1, big_n = chi.vertex_count();
  if (len > big_n) return false;
  std::vector<Vertex> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = static_cast<Vertex>(i + 1);
  while (true) {
    std::set<Color> colors;
    for (std::size_t i = 0; i < n; ++i) colors.insert(chi.color(std::span<Vertex const>(v).subspan(i, k)));
    if (colors.size() <= p) return true;
    std::size_t i = len;
    while (i > 0 && v[i - 1] == big_n - len + i) --i;
    if (i == 0) return false;
    ++v[i - 1];
    for (std::size_t j = i; j < len; ++j) v[j] = v[j - 1] + 1;
  }
}

}  // namespace

TEST(Colex, RankFollowsEnumerationOrder) {
  for (std::size_t k = 1; k <= 4; ++k) {
    std::uint64_t i = 0;
    for_each_edge(9, k, [&](std::span<Vertex const> e) { EXPECT_EQ(colex_rank(e), i++); });
    EXPECT_EQ(i, binomial(9, k));
  }
}

TEST(Coloring, FileRoundTrip) {
  std::mt19937_64 rng(1);
  for (std::size_t k = 1; k <= 3; ++k) {
    auto const chi = random_coloring(rng, 7, k, 4);
    std::stringstream first;
    write_coloring(first, chi);
    auto const back = read_coloring(first);
    EXPECT_TRUE(std::ranges::equal(back.table(), chi.table()));
    std::stringstream second;
    write_coloring(second, back);
    EXPECT_EQ(first.str(), second.str());
  }
}

TEST(Coloring, ReaderRejectsBadFiles) {
  std::stringstream missing("2 3 2\n1 2 1\n1 3 1\n");
  EXPECT_THROW(read_coloring(missing), ContractError);
  std::stringstream order("2 3 2\n1 3 1\n1 2 1\n2 3 1\n");
  EXPECT_THROW(read_coloring(order), ContractError);
  std::stringstream header("two 3 2\n");
  EXPECT_THROW(read_coloring(header), ContractError);
}

TEST(Coloring, ColorRejectsBadEdges) {
  auto const chi = mono(5, 2);
  std::vector<Vertex> const unsorted{3, 2}, out{1, 6}, wrong{1, 2, 3};
  EXPECT_THROW(chi.color(unsorted), std::exception);
  EXPECT_THROW(chi.color(out), std::exception);
  EXPECT_THROW(chi.color(wrong), std::exception);
}

TEST(Lift, MonochromaticStaysMonochromatic) {
  auto const lifted = lift_coloring(mono(6, 2)).materialize();
  for (auto c : lifted.table()) EXPECT_EQ(c, 1u);
  EXPECT_EQ(lifted.uniformity(), 3u);
}

TEST(Lift, ReadsTheFirstTwoVertices) {
  auto const phi = rainbow(4, 2);
  auto const lifted = lift_coloring(phi);
  std::vector<Vertex> const e3{1, 2, 3}, e2{1, 2};
  EXPECT_EQ(lifted(e3), phi(e2));
  for_each_edge(4, 3, [&](std::span<Vertex const> e) { EXPECT_EQ(lifted(e), phi(e.first(2))); });
}

TEST(Lift, PreservesAvoidanceOnRandomColorings) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 60; ++it) {
    auto const phi = random_coloring(rng, 4 + rng() % 4, 2, 2 + rng() % 2);
    auto const lifted = lift_coloring(phi).materialize();
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t p = 1; p <= 2; ++p) {
        EXPECT_EQ(verify_avoids(phi, n, p), !brute_has_path(phi, n, p));
        if (verify_avoids(phi, n, p)) { EXPECT_TRUE(verify_avoids(lifted, n, p)); }
      }
  }
}

TEST(Search, MonochromaticGivesFirstVertices) {
  for (std::size_t k = 2; k <= 3; ++k)
    for (std::size_t n = 1; n + k - 1 <= 7; ++n) {
      SearchBudget b;
      auto const w = min_complexity_path(mono(7, k), n, b);
      ASSERT_TRUE(w.has_value());
      std::vector<Vertex> want(n + k - 1);
      for (std::size_t i = 0; i < want.size(); ++i) want[i] = static_cast<Vertex>(i + 1);
      EXPECT_EQ(w->vertices, want);
      EXPECT_EQ(w->complexity(), 1u);
    }
}

TEST(Search, RainbowNeedsNColors) {
  auto const chi = rainbow(7, 2);
  for (std::size_t n = 2; n <= 4; ++n) {
    SearchBudget b;
    b.max_colors = n - 1;
    EXPECT_FALSE(min_complexity_path(chi, n, b).has_value());
    b.max_colors = n;
    EXPECT_TRUE(min_complexity_path(chi, n, b).has_value());
  }
}

TEST(Search, AgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 150; ++it) {
    std::size_t const k = 2 + rng() % 2;
    auto const chi = random_coloring(rng, 5 + rng() % 4, k, 2 + rng() % 3);
    std::size_t const n = 1 + rng() % 4, p = 1 + rng() % 2;
    SearchBudget b;
    b.max_colors = p;
    auto const r = find_path(chi, n, b);
    EXPECT_EQ(r.status == SearchStatus::found, brute_has_path(chi, n, p));
    if (r.witness) { EXPECT_TRUE(is_valid_path(chi, n, p, *r.witness)); }
  }
}

TEST(Search, WorkerCountDoesNotChangeLexMinimalResult) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 30; ++it) {
    auto const chi = random_coloring(rng, 10, 2 + rng() % 2, 3);
    SearchBudget b;
    b.max_colors = 2;
    b.workers = 1;
    auto const one = find_path(chi, 3, b);
    b.workers = 4;
    auto const four = find_path(chi, 3, b);
    EXPECT_EQ(one.status, four.status);
    EXPECT_EQ(one.witness, four.witness);
  }
}

TEST(Search, NodeCapMakesResultIndeterminate) {
  SearchBudget b;
  b.max_colors = 1;
  b.node_cap = 2;
  auto const r = find_path(es_coloring_2(4), 4, b);
  EXPECT_EQ(r.status, SearchStatus::indeterminate);
  EXPECT_THROW(min_complexity_path(es_coloring_2(4), 4, b), IndeterminateError);
}

TEST(Search, ValidityChecker) {
  auto const chi = es_coloring_2(3);
  PathWitness w{{1, 2, 3}, {1, 1}, {1}};
  EXPECT_TRUE(is_valid_path(chi, 2, 1, w));
  w.vertices = {1, 3, 2};
  EXPECT_FALSE(is_valid_path(chi, 2, 1, w));
  w = PathWitness{{1, 2, 3}, {1, 2}, {1, 2}};
  EXPECT_FALSE(is_valid_path(chi, 2, 2, w));  // colors do not match chi
}

TEST(VerifyAvoids, Examples) {
  EXPECT_TRUE(verify_avoids(rainbow(6, 2), 2, 1));
  for (std::size_t k = 2; k <= 3; ++k) EXPECT_FALSE(verify_avoids(mono(k + 1, k), 2, 1));
}

TEST(ErdosSzekeres, AvoidsMonochromaticPaths) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const chi = es_coloring_2(n);
    EXPECT_EQ(chi.vertex_count(), n * n);
    EXPECT_TRUE(verify_avoids(chi, n, 1));
    EXPECT_FALSE(brute_has_path(chi, n, 1));
  }
}

TEST(ErdosSzekeres, ColorOneIsDisjointCliques) {
  std::size_t const n = 4;
  auto const chi = es_coloring_2(n);
  // color-1 edges form an equivalence relation with n classes of size n
  std::vector<std::set<Vertex>> classes;
  for (Vertex v = 1; v <= n * n; ++v) {
    std::set<Vertex> c{v};
    for (Vertex u = 1; u <= n * n; ++u) {
      if (u == v) continue;
      std::vector<Vertex> const e{std::min(u, v), std::max(u, v)};
      if (chi(e) == 1) c.insert(u);
    }
    classes.push_back(c);
  }
  std::set<std::set<Vertex>> distinct(classes.begin(), classes.end());
  EXPECT_EQ(distinct.size(), n);
  for (auto const& c : distinct) EXPECT_EQ(c.size(), n);
}

TEST(ExactA, TwoColorsPathsOfLengthTwo) {
  auto const r = exact_A(2, 2, 2, 1, 6);
  ASSERT_EQ(r.entries.size(), 5u);
  EXPECT_EQ(r.entries[2].vertices, 4u);
  EXPECT_EQ(r.entries[2].verdict, Verdict::good);
  EXPECT_EQ(r.entries[3].verdict, Verdict::forced);
  EXPECT_FALSE(r.entries[3].inferred);
  EXPECT_TRUE(r.entries[4].inferred);
  ASSERT_TRUE(r.value.has_value());
  EXPECT_EQ(*r.value, 5u);
  ASSERT_TRUE(r.entries[2].witness.has_value());
  EXPECT_TRUE(verify_avoids(*r.entries[2].witness, 2, 1));
}

TEST(ExactA, GoodAtNSquaredForPathsOfLengthThree) {
  ExactOptions opts;
  opts.node_cap = 20'000'000;
  auto const r = exact_A(2, 3, 2, 1, 9, opts);
  ASSERT_EQ(r.entries.back().vertices, 9u);
  EXPECT_NE(r.entries.back().verdict, Verdict::forced);
  if (r.entries.back().witness) { EXPECT_TRUE(verify_avoids(*r.entries.back().witness, 3, 1)); }
  EXPECT_TRUE(verify_avoids(es_coloring_2(3), 3, 1));
}

TEST(ExactA, BudgetAtLeastPathLengthForcesImmediately) {
  auto const r = exact_A(2, 2, 3, 2, 4);
  EXPECT_EQ(r.entries[0].verdict, Verdict::good);  // N = 2 has no path of two edges
  EXPECT_EQ(r.entries[1].verdict, Verdict::forced);
  EXPECT_EQ(r.value, std::optional<std::size_t>{3});
}

TEST(ExactA, CapGivesIndeterminate) {
  ExactOptions opts;
  opts.node_cap = 3;
  auto const r = exact_A(2, 2, 2, 1, 5, opts);
  EXPECT_EQ(r.entries.back().verdict, Verdict::indeterminate);
  EXPECT_FALSE(r.value.has_value());
}

TEST(ExactA, Preconditions) {
  EXPECT_THROW(exact_A(2, 2, 2, 2, 6), ContractError);
  EXPECT_THROW(exact_A(3, 2, 2, 1, 2), ContractError);
}

TEST(HExact, SmallValues) {
  EXPECT_EQ(h_exact(2, 1, 4), 1u);
  EXPECT_EQ(h_exact(2, 1, 5), 2u);
  EXPECT_EQ(h_exact(2, 1, 1), 0u);
  EXPECT_EQ(h_exact(3, 3, 6), 5u);
  EXPECT_EQ(h_exact(2, 2, 9), 8u);
  EXPECT_THROW(h_exact(2, 1, 9), ContractError);
}

TEST(HExact, ConsistentWithExactA) {
  // h_{2,1}(N) >= 2 exactly when every 2-coloring of K_N has a
  // monochromatic path of two edges.
  auto const r = exact_A(2, 2, 2, 1, 6);
  for (std::size_t big_n = 3; big_n <= 6; ++big_n)
    EXPECT_EQ(h_exact(2, 1, big_n) >= 2, big_n >= *r.value) << big_n;
}

TEST(Fsw, Examples) {
  auto const a = check_fsw_inequality(2, 1, 2);
  EXPECT_EQ(a.vertices, 4u);
  EXPECT_EQ(a.h, 1u);
  EXPECT_TRUE(a.holds);
  auto const b = check_fsw_inequality(2, 1, 1);
  EXPECT_EQ(b.h, 0u);
  EXPECT_TRUE(b.holds);
}
