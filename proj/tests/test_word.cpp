#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "tmpr/tmpr.hpp"

using namespace tmpr;

namespace {

using Strings = std::vector<std::string>;

template <typename T>
std::set<std::vector<T>> block_set(Word<T> const& w, std::size_t p) {
  std::set<std::vector<T>> out;
  for (auto const& b : blocks(w, p)) out.insert(b.symbols);
  return out;
}

std::vector<std::uint32_t> ranks_of(Pattern const& p) { return {p.ranks().begin(), p.ranks().end()}; }

// Direct scan used as the oracle for witness searches.
template <typename T>
std::optional<PeriodicityWitness> scan(std::vector<T> const& s, std::size_t p) {
  std::size_t const n = s.size();
  for (std::size_t a = 0; a <= std::min(2 * p, n - 1); ++a)
    for (std::size_t b = 0; b <= std::min(2 * p, n - 1) && a + b < n; ++b)
      for (std::size_t r = 1; r <= p; ++r) {
        bool ok = true;
        for (std::size_t i = a; i + r < n - b; ++i) ok = ok && s[i] == s[i + r];
        if (ok) return PeriodicityWitness{a, b, r};
      }
  return std::nullopt;
}

}  // namespace

TEST(Blocks, MixedAlphabetExample) {
  Word<std::string> const w(Strings{"a", "b", "1", "c", "b", "1"}, false);
  std::set<Strings> const want{{"a", "b"}, {"b", "1"}, {"1", "c"}, {"c", "b"}};
  EXPECT_EQ(block_set(w, 2), want);
  EXPECT_EQ(block_complexity(w, 2), 4u);
}

TEST(Blocks, SingleSymbol) {
  Word<std::string> const w(Strings{"x"}, false);
  EXPECT_EQ(block_set(w, 1), (std::set<Strings>{{"x"}}));
}

TEST(Blocks, PlateauWord) {
  Word<int> const w{1, 2, 2, 2, 2, 1};
  EXPECT_EQ(block_set(w, 3), (std::set<std::vector<int>>{{1, 2, 2}, {2, 2, 2}, {2, 2, 1}}));
}

TEST(Blocks, StartsAreFirstOccurrences) {
  Word<int> const w{1, 2, 1, 2, 3};
  auto const b = blocks(w, 2);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].start, 1u);
  EXPECT_EQ(b[1].start, 2u);
  EXPECT_EQ(b[2].start, 4u);
}

TEST(BlockComplexity, IncreasingWord) {
  for (int n = 2; n <= 12; ++n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    Word<int> const w(s);
    EXPECT_EQ(block_complexity(w, 1), static_cast<std::size_t>(n));
    EXPECT_EQ(block_complexity(w, 2), static_cast<std::size_t>(n - 1));
  }
}

TEST(BlockComplexity, ConstantWord) {
  Word<int> const w{2, 2, 2, 2};
  for (std::size_t p = 1; p <= 4; ++p) EXPECT_EQ(block_complexity(w, p), 1u);
}

TEST(BlockComplexity, RejectsBadLength) {
  Word<int> const w{1, 2, 3};
  EXPECT_THROW(block_complexity(w, 0), std::exception);
  EXPECT_THROW(block_complexity(w, 4), std::exception);
}

TEST(PatternOf, SmallWindows) {
  EXPECT_EQ(ranks_of(pattern_of(std::vector<int>{1, 2})), (std::vector<std::uint32_t>{1, 2}));
  EXPECT_EQ(ranks_of(pattern_of(std::vector<int>{2, 2})), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(ranks_of(pattern_of(std::vector<int>{3, 1, 2})), (std::vector<std::uint32_t>{3, 1, 2}));
  auto const p = pattern_of(std::vector<int>{3, 1, 2});
  EXPECT_EQ(p.relation(0, 1), 1);
  EXPECT_EQ(p.relation(1, 2), -1);
  EXPECT_EQ(p.levels(), 3u);
}

TEST(PatternSequence, PaperExample) {
  Word<int> const w{1, 2, 2, 4, 3};
  auto const seq = pattern_sequence(w, 2);
  ASSERT_EQ(seq.size(), 4u);
  EXPECT_EQ(seq[0].relation(0, 1), -1);
  EXPECT_EQ(seq[1].relation(0, 1), 0);
  EXPECT_EQ(seq[2].relation(0, 1), -1);
  EXPECT_EQ(seq[3].relation(0, 1), 1);
  EXPECT_EQ(pattern_complexity(w, 2), 3u);
}

TEST(PatternSequence, IncreasingWordHasOnePattern) {
  Word<int> const w{1, 4, 6, 9, 10, 20};
  for (std::size_t p = 1; p <= 6; ++p) {
    auto const seq = pattern_sequence(w, p);
    for (auto const& x : seq) EXPECT_EQ(x, seq.front());
    EXPECT_EQ(pattern_complexity(w, p), 1u);
  }
}

TEST(PatternSequence, ZigZagAlternates) {
  Word<int> const w{1, 3, 2, 5, 4, 7, 6};
  auto const seq = pattern_sequence(w, 3);
  ASSERT_EQ(seq.size(), 5u);
  EXPECT_NE(seq[0], seq[1]);
  for (std::size_t i = 2; i < seq.size(); ++i) EXPECT_EQ(seq[i], seq[i - 2]);
  EXPECT_EQ(pattern_complexity(w, 3), 2u);
}

TEST(PatternComplexity, ConstantWord) {
  Word<int> const w{5, 5, 5, 5, 5};
  for (std::size_t p = 1; p <= 5; ++p) EXPECT_EQ(pattern_complexity(w, p), 1u);
}

TEST(PatternComplexity, RulerWordMatchesRelationOracle) {
  std::vector<int> const s{1, 2, 1, 3, 1, 2, 1};
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
    std::vector<int> rel;
    for (std::size_t a = i; a < i + 3; ++a)
      for (std::size_t b = a + 1; b < i + 3; ++b) rel.push_back(s[a] < s[b] ? -1 : (s[a] == s[b] ? 0 : 1));
    seen.insert(rel);
  }
  EXPECT_EQ(pattern_complexity(Word<int>(s), 3), seen.size());
  EXPECT_EQ(seen.size(), 3u);  // 121 and 131 share a pattern
}

TEST(PatternComplexity, UnorderedWordIsRejected) {
  Word<std::string> const w(Strings{"a", "b"}, false);
  EXPECT_THROW(pattern_sequence(w, 1), CapabilityError);
}

TEST(FactorDigraph, PathOnIncreasingWord) {
  auto const g = factor_digraph(Word<int>{1, 2, 3, 4}, 2);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.arc_count(), 2u);
  EXPECT_EQ(g.vertices[0].symbols, (std::vector<int>{1, 2}));
  EXPECT_EQ(g.arcs[0], (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(g.arcs[1], (std::pair<std::size_t, std::size_t>{1, 2}));
}

TEST(FactorDigraph, ConstantWordIsALoop) {
  auto const g = factor_digraph(Word<int>{2, 2, 2}, 1);
  EXPECT_EQ(g.vertex_count(), 1u);
  ASSERT_EQ(g.arc_count(), 1u);
  EXPECT_EQ(g.arcs[0], (std::pair<std::size_t, std::size_t>{0, 0}));
}

TEST(FactorDigraph, BranchingVertex) {
  auto const g = factor_digraph(Word<int>{1, 1, 1, 2}, 2);
  ASSERT_EQ(g.vertices[0].symbols, (std::vector<int>{1, 1}));
  EXPECT_EQ(g.out_degrees()[0], 2u);
}

TEST(FactorDigraph, ArcsMatchLongerBlocks) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::vector<int> s(4 + rng() % 12);
    for (auto& x : s) x = static_cast<int>(rng() % 3);
    Word<int> const w(s);
    for (std::size_t l = 1; l + 1 < s.size(); ++l) {
      auto const g = factor_digraph(w, l);
      EXPECT_EQ(g.vertex_count(), block_complexity(w, l));
      EXPECT_EQ(g.arc_count(), block_complexity(w, l + 1));
    }
  }
}

TEST(IsPeriodic, Examples) {
  EXPECT_TRUE(is_periodic(Word<int>{1, 2, 1, 2, 1}, 2));
  EXPECT_FALSE(is_periodic(Word<int>{1, 2, 2, 2, 2, 2, 1}, 1));
  EXPECT_TRUE(is_periodic(Word<int>{1, 2, 3}, 3));
}

TEST(Reduction, Examples) {
  EXPECT_EQ(reduction(Word<int>{1, 2, 3, 4}, 1, 1), (Word<int>{2, 3}));
  EXPECT_EQ(reduction(Word<int>{1, 2, 3, 4}, 0, 0), (Word<int>{1, 2, 3, 4}));
  auto const r = reduction(Word<int>{1, 2, 2, 2, 1}, 1, 1);
  EXPECT_EQ(r, (Word<int>{2, 2, 2}));
  EXPECT_TRUE(is_periodic(r, 1));
  EXPECT_THROW(reduction(Word<int>{1, 2}, 1, 1), std::exception);
}

TEST(FiniteMorseHedlund, ConstantWord) {
  EXPECT_EQ(finite_morse_hedlund(Word<int>{4, 4, 4, 4}, 1, 1), (PeriodicityWitness{0, 0, 1}));
}

TEST(FiniteMorseHedlund, TrailingSymbolMustBeCut) {
  Word<int> const w{1, 2, 2, 2, 2, 2, 1};
  auto const got = finite_morse_hedlund(w, 3, 3);
  EXPECT_GE(got.tail_cut, 1u);
  EXPECT_EQ(got.period, 1u);
  EXPECT_TRUE(witnesses(w, got));
}

TEST(FiniteMorseHedlund, HypothesesAreEnforced) {
  Word<int> const w{1, 2, 3, 4, 5, 6};
  EXPECT_THROW(finite_morse_hedlund(w, 1, 2), ContractError);  // m < p
  EXPECT_THROW(finite_morse_hedlund(w, 2, 2), ContractError);  // C(S;2) = 5 > 2
  EXPECT_THROW(finite_morse_hedlund(Word<int>{1, 1, 1}, 2, 2), ContractError);  // |S| < p + m
}

TEST(FiniteMorseHedlund, RandomBinaryWordsOfLowComplexity) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int it = 0; it < 20000 && checked < 300; ++it) {
    // Periodic core with random ends keeps C(S;4) small often enough.
    std::size_t const period = 1 + rng() % 4;
    std::vector<int> core(period);
    for (auto& x : core) x = static_cast<int>(rng() % 2);
    std::vector<int> s(20);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = core[i % period];
    for (std::size_t i = 0, e = rng() % 3; i < e; ++i) s[i] = static_cast<int>(rng() % 2);
    for (std::size_t i = 0, e = rng() % 3; i < e; ++i) s[s.size() - 1 - i] = static_cast<int>(rng() % 2);
    Word<int> const w(s);
    if (block_complexity(w, 4) > 4) continue;
    ++checked;
    auto const got = finite_morse_hedlund(w, 4, 4);
    EXPECT_LE(got.head_cut, 8u);
    EXPECT_LE(got.tail_cut, 8u);
    EXPECT_LE(got.period, 4u);
    EXPECT_TRUE(witnesses(w, got));
    EXPECT_TRUE(mh_witness_search(w, 4).has_value());
  }
  EXPECT_EQ(checked, 300);
}

TEST(WitnessSearch, ConstantWord) {
  EXPECT_EQ(mh_witness_search(Word<int>{3, 3, 3}, 1), (PeriodicityWitness{0, 0, 1}));
}

TEST(WitnessSearch, MatchesDirectScan) {
  std::vector<int> const s{1, 2, 2, 2, 1};
  EXPECT_EQ(mh_witness_search(Word<int>(s), 2), scan(s, 2));
  std::mt19937_64 rng(3);
  for (int it = 0; it < 2000; ++it) {
    std::vector<int> t(1 + rng() % 10);
    for (auto& x : t) x = static_cast<int>(rng() % 3);
    std::size_t const p = 1 + rng() % 3;
    EXPECT_EQ(mh_witness_search(Word<int>(t), p), scan(t, p));
  }
}

TEST(WitnessSearch, HeavyTrimLeavesVacuousPeriod) {
  // Cutting two symbols from each end of a length-5 word leaves one symbol,
  // which is 1-periodic with nothing to check.
  auto const got = mh_witness_search(Word<int>{1, 2, 3, 4, 5}, 1);
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, (PeriodicityWitness{2, 2, 1}));
  EXPECT_FALSE(mh_witness_search(Word<int>{1, 2, 3, 4, 5, 6}, 1).has_value());
}
