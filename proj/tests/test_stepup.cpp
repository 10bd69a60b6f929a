#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "tmpr/tmpr.hpp"

using namespace tmpr;

namespace {

std::vector<std::uint32_t> ranks_of(Pattern const& p) { return {p.ranks().begin(), p.ranks().end()}; }

std::size_t scan_delta(std::uint64_t u, std::uint64_t v, std::size_t m) {
  for (std::size_t i = m; i >= 1; --i)
    if (((u ^ v) >> (i - 1)) & 1u) return i;
  return 0;
}

std::vector<BitVector> binary_run(std::size_t m, std::uint64_t from, std::uint64_t to) {
  std::vector<BitVector> out;
  for (std::uint64_t v = from; v <= to; ++v) out.emplace_back(m, v);
  return out;
}

OrderedColoring random_coloring(std::mt19937_64& rng, std::size_t n, std::size_t k, Color q) {
  std::vector<Color> t(binomial(n, k));
  for (auto& c : t) c = rng() % q + 1;
  return OrderedColoring(n, k, q, std::move(t));
}

// Every (d, start) whose progression of length L has one shared 4p-window
// pattern and strictly monotone values.
std::set<std::pair<std::size_t, std::size_t>> all_progressions(std::vector<std::uint32_t> const& s, std::size_t p,
                                                               std::size_t len) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  std::span<std::uint32_t const> const all(s);
  for (std::size_t d = 1; d <= p; ++d)
    for (std::size_t start = 1; start + (len - 1) * d + 4 * p - 1 <= s.size(); ++start) {
      Pattern const first = pattern_of(all.subspan(start - 1, 4 * p));
      bool up = true, down = true, same = true;
      for (std::size_t j = 1; j < len; ++j) {
        std::size_t const i = start + j * d;
        same = same && pattern_of(all.subspan(i - 1, 4 * p)) == first;
        up = up && s[i - 1 - d] < s[i - 1];
        down = down && s[i - 1 - d] > s[i - 1];
      }
      if (same && (up || down)) out.insert({d, start});
    }
  return out;
}

}  // namespace

TEST(Delta, Examples) {
  EXPECT_EQ(delta(BitVector::parse("100"), BitVector::parse("110")), 2u);
  EXPECT_EQ(delta(BitVector::parse("000"), BitVector::parse("111")), 3u);
  EXPECT_THROW(delta(BitVector::parse("101"), BitVector::parse("101")), ContractError);
  EXPECT_THROW(delta(BitVector::parse("10"), BitVector::parse("101")), ContractError);
}

TEST(Delta, MatchesTopDownScan) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 5000; ++it) {
    std::uint64_t const u = rng() % 64, v = rng() % 64;
    if (u == v) continue;
    EXPECT_EQ(delta(BitVector(6, u), BitVector(6, v)), scan_delta(u, v, 6));
  }
}

TEST(BitVector, ParseIsLeastIndexFirst) {
  auto const v = BitVector::parse("101");
  EXPECT_EQ(v[1], 1);
  EXPECT_EQ(v[2], 0);
  EXPECT_EQ(v[3], 1);
  EXPECT_EQ(v.value(), 5u);
  EXPECT_EQ(v.to_string(), "101");
  EXPECT_THROW(BitVector::parse("12"), ContractError);
}

TEST(RevlexOrder, Examples) {
  EXPECT_TRUE(revlex_less(BitVector::parse("100"), BitVector::parse("010")));
  for (std::uint64_t v = 1; v < 16; ++v) EXPECT_TRUE(revlex_less(BitVector(4, 0), BitVector(4, v)));
}

TEST(RevlexOrder, TotalAndTransitiveOnFourBits) {
  for (std::uint64_t a = 0; a < 16; ++a)
    for (std::uint64_t b = 0; b < 16; ++b) {
      if (a == b) continue;
      BitVector const u(4, a), v(4, b);
      EXPECT_NE(revlex_less(u, v), revlex_less(v, u));
      EXPECT_EQ(revlex_less(u, v), a < b);
      for (std::uint64_t c = 0; c < 16; ++c) {
        if (c == a || c == b) continue;
        BitVector const w(4, c);
        if (revlex_less(u, v) && revlex_less(v, w)) { EXPECT_TRUE(revlex_less(u, w)); }
      }
    }
}

TEST(DeltaSequence, BinaryCounting) {
  EXPECT_EQ(delta_sequence(binary_run(3, 0, 7)).values, (std::vector<std::uint32_t>{1, 2, 1, 3, 1, 2, 1}));
}

TEST(DeltaSequence, UnitVectors) {
  std::vector<BitVector> run;
  for (std::size_t i = 1; i <= 6; ++i) run.push_back(BitVector::unit(8, i));
  EXPECT_EQ(delta_sequence(run).values, (std::vector<std::uint32_t>{2, 3, 4, 5, 6}));
}

TEST(DeltaSequence, TwoVectors) {
  EXPECT_EQ(delta_sequence(binary_run(4, 3, 4)).values, (std::vector<std::uint32_t>{3}));
  EXPECT_THROW(delta_sequence(binary_run(4, 3, 3)), ContractError);
}

TEST(UniqueMax, Examples) {
  std::vector<std::uint32_t> const ruler{1, 2, 1, 3, 1, 2, 1};
  std::vector<std::uint32_t> const tie{1, 2, 2};
  std::vector<std::uint32_t> const distinct{4, 1, 7, 3, 9, 2};
  EXPECT_TRUE(has_unique_max_property(ruler));
  EXPECT_FALSE(has_unique_max_property(tie));
  EXPECT_TRUE(has_unique_max_property(distinct));
}

TEST(PropUmp, Runs) {
  EXPECT_TRUE(check_prop_ump(binary_run(5, 9, 10)));
  auto down = binary_run(3, 0, 7);
  std::reverse(down.begin(), down.end());
  EXPECT_TRUE(check_prop_ump(down));
  std::vector<BitVector> const bad{BitVector(3, 1), BitVector(3, 5), BitVector(3, 2)};
  EXPECT_THROW(check_prop_ump(bad), ContractError);
}

TEST(Alpha, Formula) {
  // largest t with 2 + (t - 1) i <= k - 1
  for (std::size_t k = 3; k <= 30; ++k)
    for (std::size_t i = 1; i <= k; ++i) {
      std::size_t t = 1;
      while (2 + t * i <= k - 1) ++t;
      EXPECT_EQ(alpha(i, k), t) << "i=" << i << " k=" << k;
    }
  EXPECT_EQ(alpha(1, 9), 7u);
  EXPECT_EQ(alpha(2, 9), 4u);
  EXPECT_EQ(alpha(7, 9), 1u);
  EXPECT_THROW(alpha(0, 9), ContractError);
}

TEST(Subsample, Examples) {
  std::vector<std::uint32_t> const d{2, 3, 4, 5, 6, 7, 8, 9};
  auto const x = subsample(d, 2, 1, 9);
  EXPECT_EQ(x.values, (std::vector<std::uint32_t>{2, 4, 6, 8}));
  EXPECT_TRUE(x.all_distinct);
  auto const y = subsample(d, 2, 2, 9);
  EXPECT_EQ(y.values, (std::vector<std::uint32_t>{3, 5, 7, 9}));
  std::vector<std::uint32_t> const c(8, 4);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_FALSE(subsample(c, i, 1, 9).all_distinct);
  EXPECT_THROW(subsample(c, 1, 3, 9), ContractError);
  EXPECT_THROW(subsample(c, 1, 1, 10), ContractError);
}

TEST(EdgePattern, Examples) {
  std::vector<std::uint32_t> const up{1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(ranks_of(edge_pattern(up, 2)), (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6, 7, 8}));
  std::vector<std::uint32_t> const zig{1, 3, 2, 5, 4, 7, 6, 9};
  EXPECT_EQ(ranks_of(edge_pattern(zig, 2)), (std::vector<std::uint32_t>{1, 3, 2, 5, 4, 7, 6, 8}));
  std::vector<std::uint32_t> a{3, 1, 2, 4, 9}, b{3, 1, 2, 4, 1};
  EXPECT_EQ(edge_pattern(a, 1), edge_pattern(b, 1));
  EXPECT_THROW(edge_pattern(std::vector<std::uint32_t>{1, 2, 3}, 1), ContractError);
}

TEST(MonotoneAP, SingleTerm) {
  std::vector<std::uint32_t> s{2, 5, 9, 11, 14, 20, 21};
  for (std::size_t p = 1; p <= 1; ++p) {
    auto const w = extract_monotone_ap(s, p, 1);
    EXPECT_EQ(w.indices.size(), 1u);
  }
}

TEST(MonotoneAP, IncreasingInput) {
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t len = 1; len <= 5; ++len) {
      std::vector<std::uint32_t> s(p * len + 6 * p);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::uint32_t>(3 * i + 1);
      auto const w = extract_monotone_ap(s, p, len);
      ASSERT_EQ(w.indices.size(), len);
      EXPECT_GE(w.step, 1u);
      EXPECT_LE(w.step, p);
      EXPECT_EQ(w.direction, Direction::increasing);
      EXPECT_TRUE(all_progressions(s, p, len).contains({w.step, w.indices.front()}));
    }
}

TEST(MonotoneAP, ZigZagAgainstExhaustiveSearch) {
  for (std::size_t len = 1; len <= 5; ++len) {
    std::vector<std::uint32_t> s(2 * len + 12);
    for (std::size_t i = 1; i <= s.size(); ++i) s[i - 1] = static_cast<std::uint32_t>(i % 2 == 0 ? i + 1 : (i == 1 ? 1 : i - 1));
    auto const w = extract_monotone_ap(s, 2, len);
    auto const all = all_progressions(s, 2, len);
    ASSERT_FALSE(all.empty());
    EXPECT_TRUE(all.contains({w.step, w.indices.front()}));
    for (std::size_t j = 1; j < w.indices.size(); ++j) EXPECT_EQ(w.indices[j] - w.indices[j - 1], w.step);
  }
}

TEST(MonotoneAP, HypothesesAreEnforced) {
  std::vector<std::uint32_t> const shorty{1, 2, 3, 4, 5};
  EXPECT_THROW(extract_monotone_ap(shorty, 1, 1), ContractError);
  std::vector<std::uint32_t> tie(20, 1);
  EXPECT_THROW(extract_monotone_ap(tie, 1, 2), ContractError);
  std::vector<std::uint32_t> const ruler{1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1};
  EXPECT_THROW(extract_monotone_ap(ruler, 1, 2), ContractError);  // many 4-patterns
}

class StepUp : public ::testing::Test {
 protected:
  static constexpr std::size_t p = 2, q = 2, k = 9;

  StepUpContext make(std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto top = m >= k - 1 ? random_coloring(rng, m, k - 1, 3) : OrderedColoring(m, k - 1, 1, std::vector<Color>{});
    auto base = random_coloring(rng, m, 3, q);
    return StepUpContext::chained(p, q, k, m, top, base);
  }
};

TEST_F(StepUp, PaletteLayout) {
  auto const ctx = make(5, 1);
  EXPECT_EQ(ctx.palette(), 4294967296u);  // 16^8
  EXPECT_EQ(ctx.pattern_count(), 16777216u);  // 8^8
  EXPECT_EQ(ctx.tuple_count(), 268435456u);  // 2^4 8^8
  EXPECT_EQ(ctx.min_lower(), 3u);
}

TEST_F(StepUp, UnitVectorsUseTheBaseRule) {
  auto const ctx = make(9, 2);
  std::vector<BitVector> edge;
  for (std::size_t i = 1; i <= 9; ++i) edge.push_back(BitVector::unit(9, i));
  auto const c = step_up_color(edge, ctx);
  ASSERT_TRUE(std::holds_alternative<BaseColor>(c));
  std::vector<Vertex> const deltas{2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_EQ(std::get<BaseColor>(c).value, ctx.top().color(deltas));
}

TEST_F(StepUp, NonMonotoneEdgeUsesTuple) {
  auto const ctx = make(9, 3);
  auto const edge = binary_run(9, 0, 8);  // deltas 1,2,1,3,1,2,1,4
  auto const c = step_up_color(edge, ctx);
  ASSERT_TRUE(std::holds_alternative<TupleColor>(c));
  auto const& t = std::get<TupleColor>(c);
  EXPECT_EQ(t.coords.size(), 2 * p);
  std::vector<std::uint32_t> const d{1, 2, 1, 3, 1, 2, 1, 4};
  EXPECT_EQ(t.pattern, edge_pattern(d, p));
  // every subsample of 1,2,1,3,1,2,1,4 repeats a value
  EXPECT_EQ(t.coords, (std::vector<Color>{1, 1, 1, 1}));
}

TEST_F(StepUp, DistinctSubsampleReadsLowerColoring) {
  auto const ctx = make(9, 3);
  std::vector<BitVector> edge;
  for (std::uint64_t v : {0, 1, 2, 3, 4, 5, 8, 9, 16}) edge.emplace_back(9, v);
  ASSERT_EQ(delta_sequence(edge).values, (std::vector<std::uint32_t>{1, 2, 1, 3, 1, 4, 1, 5}));
  auto const c = step_up_color(edge, ctx);
  auto const& t = std::get<TupleColor>(c);
  std::vector<Vertex> const sub{2, 3, 4, 5};  // stride 2, phase 2
  EXPECT_EQ(t.coords[3], ctx.lower(alpha(2, 9)).color(sub));
  EXPECT_EQ(t.coords[0], 1u);
}

TEST_F(StepUp, PaletteIdsRoundTrip) {
  auto const ctx = make(9, 4);
  std::mt19937_64 rng(4);
  for (int it = 0; it < 3000; ++it) {
    std::set<std::uint64_t> pick;
    while (pick.size() < k) pick.insert(rng() % 512);
    std::vector<BitVector> edge;
    for (auto v : pick) edge.emplace_back(9, v);
    auto const c = step_up_color(edge, ctx);
    std::uint64_t const id = ctx.palette_id(c);
    EXPECT_LT(id, ctx.palette());
    EXPECT_EQ(ctx.palette_id(ctx.decode(id)), id);
    EXPECT_EQ(ctx.palette_id(step_up_color(edge, ctx)), id);
  }
}

TEST_F(StepUp, RuleBackedColoringAgreesWithStepUpColor) {
  auto const ctx = make(9, 5);
  auto const chi = build_stepup_coloring(ctx);
  EXPECT_EQ(chi.vertex_count(), 512u);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 2000; ++it) {
    std::set<Vertex> pick;
    while (pick.size() < k) pick.insert(static_cast<Vertex>(1 + rng() % 512));
    std::vector<Vertex> e(pick.begin(), pick.end());
    std::vector<BitVector> edge;
    for (auto v : e) edge.emplace_back(9, v - 1);
    EXPECT_EQ(chi(e), ctx.palette_id(step_up_color(edge, ctx)) + 1);
  }
}

TEST_F(StepUp, EdgeValidation) {
  auto const ctx = make(9, 6);
  auto edge = binary_run(9, 0, 8);
  std::swap(edge[0], edge[1]);
  EXPECT_THROW(step_up_color(edge, ctx), ContractError);
  EXPECT_THROW(step_up_color(binary_run(9, 0, 7), ctx), ContractError);
  EXPECT_THROW(step_up_color(binary_run(8, 0, 8), ctx), ContractError);
}

TEST_F(StepUp, ConfigurationErrors) {
  std::mt19937_64 rng(7);
  auto top = random_coloring(rng, 9, 8, 2);
  auto base = random_coloring(rng, 9, 3, 2);
  EXPECT_THROW(StepUpContext::chained(2, 2, 8, 9, top, base), ConfigurationError);  // k < 4p + 1
  EXPECT_THROW(StepUpContext::chained(2, 2, 9, 9, top, random_coloring(rng, 9, 4, 2)), ConfigurationError);
  EXPECT_THROW(StepUpContext::chained(2, 2, 9, 9, random_coloring(rng, 9, 7, 2), base), ConfigurationError);
  EXPECT_THROW(StepUpContext(2, 2, 9, 9, top, {}), ConfigurationError);
  auto wide = random_coloring(rng, 9, 3, 3);
  EXPECT_THROW(StepUpContext::chained(2, 2, 9, 9, top, wide), ConfigurationError);  // seed uses 3 > q colors
}

// Two consecutive edges of a tight path whose delta-sequences are both
// monotone project to a tight path of the (k-1)-uniform base. With a base in
// which that path is not monochromatic, no monochromatic path of the stepped
// up coloring may contain two such edges in a row.
TEST_F(StepUp, MonochromaticPathsAvoidConsecutiveMonotoneEdges) {
  constexpr std::size_t m = 9;
  std::mt19937_64 rng(8);
  std::vector<Color> t(binomial(m, k - 1));
  for (auto& c : t) c = rng() % 2 + 1;
  std::vector<Vertex> const low{1, 2, 3, 4, 5, 6, 7, 8}, high{2, 3, 4, 5, 6, 7, 8, 9};
  t[colex_rank(low)] = 1;
  t[colex_rank(high)] = 2;
  OrderedColoring const top(m, k - 1, 2, t);
  ASSERT_TRUE(verify_avoids(top, 2, 1));
  auto const ctx = StepUpContext::chained(p, q, k, m, top, random_coloring(rng, m, 3, q));
  auto const chi = build_stepup_coloring(ctx);

  // The path realizing deltas 1..9 has two consecutive monotone edges.
  std::vector<Vertex> path{1};
  std::uint64_t v = 0;
  for (std::size_t d = 1; d <= 9; ++d) {
    v |= std::uint64_t{1} << (d - 1);
    v &= ~((std::uint64_t{1} << (d - 1)) - 1);
    path.push_back(static_cast<Vertex>(v + 1));
  }
  std::span<Vertex const> const ps(path);
  EXPECT_NE(chi(ps.first(k)), chi(ps.subspan(1, k)));

  // Random paths whose delta runs are 1..9 or 9..1: both edges monotone.
  int checked = 0;
  for (int it = 0; it < 4000; ++it) {
    bool const up = it % 2 == 0;
    std::vector<Vertex> walk;
    std::uint64_t cur = up ? 0 : rng() % 256;
    walk.push_back(static_cast<Vertex>(cur + 1));
    bool ok = true;
    for (std::size_t i = 1; i <= 9 && ok; ++i) {
      std::uint32_t const d = up ? static_cast<std::uint32_t>(i) : static_cast<std::uint32_t>(10 - i);
      ok = false;
      for (int tries = 0; tries < 4096 && !ok; ++tries) {
        std::uint64_t const w = rng() % 512;
        if (w > cur && scan_delta(cur, w, m) == d) {
          cur = w;
          ok = true;
        }
      }
      walk.push_back(static_cast<Vertex>(cur + 1));
    }
    if (!ok) continue;
    std::span<Vertex const> const ws(walk);
    std::vector<BitVector> e1, e2;
    for (std::size_t i = 0; i < k; ++i) e1.emplace_back(m, walk[i] - 1), e2.emplace_back(m, walk[i + 1] - 1);
    ASSERT_TRUE(is_monotone(delta_sequence(e1).values) && is_monotone(delta_sequence(e2).values));
    EXPECT_NE(chi(ws.first(k)), chi(ws.subspan(1, k)));
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}
