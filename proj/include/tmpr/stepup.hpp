#pragma once

// Stepping-up coloring for tight monotone paths with bounded color
// complexity. A k-edge V of {0,1}^m is colored through its delta-sequence
// Delta(V) = (delta_1, ..., delta_{k-1}):
//
//   R1  Delta(V) monotone: the (k-1)-uniform base color of the set Delta(V).
//   R2  otherwise, coordinate j in [p] is chi_{alpha_j}(X_j^(1)(V)) when that
//       subsample has alpha_j distinct entries, else the default color 1;
//   R3  coordinate p + j likewise from the phase-2 subsample X_j^(2)(V);
//   R4  coordinate 2p + 1 is the pattern of (delta_1, ..., delta_{4p}).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tmpr/bitvector.hpp"
#include "tmpr/coloring.hpp"
#include "tmpr/word.hpp"

namespace tmpr {

/// alpha_i = max{t : 2 + (t - 1) i <= k - 1}.
inline std::size_t alpha(std::size_t stride, std::size_t k) {
  if (stride < 1) throw ContractError("alpha: stride must be positive");
  if (k < 3) throw ContractError("alpha: uniformity must be at least 3");
  return (k - 3) / stride + 1;
}

struct Subsample {
  std::vector<std::uint32_t> values;
  bool all_distinct = false;
};

/// Entries at positions phase, phase + i, ..., phase + (alpha_i - 1) i of a
/// delta-sequence of length k - 1.
inline Subsample subsample(std::span<std::uint32_t const> seq, std::size_t stride, std::size_t phase, std::size_t k) {
  if (seq.size() + 1 != k) throw ContractError("subsample: sequence length must be k - 1");
  if (phase != 1 && phase != 2) throw ContractError("subsample: phase must be 1 or 2");
  std::size_t const count = alpha(stride, k);
  Subsample out;
  out.values.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t const pos = phase + s * stride;
    if (pos > seq.size()) throw ContractError("subsample: position beyond the sequence");
    out.values.push_back(seq[pos - 1]);
  }
  std::vector<std::uint32_t> sorted = out.values;
  std::ranges::sort(sorted);
  out.all_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return out;
}

/// Pattern of the first 4p entries.
inline Pattern edge_pattern(std::span<std::uint32_t const> seq, std::size_t p) {
  if (p < 1) throw ContractError("edge_pattern: p must be positive");
  if (seq.size() < 4 * p) throw ContractError("edge_pattern: sequence shorter than 4p (needs k >= 4p + 1)");
  return pattern_of(seq.first(4 * p));
}

struct BaseColor {
  Color value;  // color of Delta(V) under the (k-1)-uniform base coloring
  friend bool operator==(BaseColor const&, BaseColor const&) = default;
};

struct TupleColor {
  std::vector<Color> coords;  // 2p colors in [q]
  Pattern pattern;
  friend bool operator==(TupleColor const&, TupleColor const&) = default;
};

using StepUpColor = std::variant<BaseColor, TupleColor>;

namespace detail {
inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
  return a * b;
}
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(acc, base);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}
}  // namespace detail

/// Parameters and lower-uniformity colorings of the construction. All
/// colorings live on the vertex set [m].
///
/// Palette layout (0-based ids inside the (4pq)^{4p} palette): a TupleColor
/// takes the mixed-radix id of (c_1 - 1, ..., c_{2p} - 1, pattern id) with
/// radices (q, ..., q, (4p)^{4p}), c_1 most significant, filling
/// [0, q^{2p} (4p)^{4p}). Base color c takes id q^{2p} (4p)^{4p} + c - 1, so
/// the two kinds never share an id.
class StepUpContext {
 public:
  StepUpContext(std::size_t p, std::size_t q, std::size_t k, std::size_t m, OrderedColoring top,
                std::map<std::size_t, OrderedColoring> lower)
      : p_(p), q_(q), k_(k), m_(m), top_(std::move(top)), lower_(std::move(lower)) {
    if (p < 1 || q < 1) throw ConfigurationError("step-up: p and q must be positive");
    if (k < 4 * p + 1) throw ConfigurationError("step-up: needs k >= 4p + 1");
    if (m < 1 || m > 31) throw ConfigurationError("step-up: dimension m must lie in [1, 31]");
    auto patterns = detail::checked_pow(4 * p, 4 * p);
    auto coords = detail::checked_pow(q, 2 * p);
    auto tuples = (patterns && coords) ? detail::checked_mul(*coords, *patterns) : std::nullopt;
    auto full = detail::checked_pow(4 * p * q, 4 * p);
    if (!tuples || !full) throw ConfigurationError("step-up: palette (4pq)^{4p} does not fit in 64 bits");
    pattern_count_ = *patterns;
    tuple_count_ = *tuples;
    palette_ = *full;

    if (top_.uniformity() != k - 1 || top_.vertex_count() != m)
      throw ConfigurationError("step-up: base coloring must be (k-1)-uniform on [m]");
    if (top_.palette() > palette_ - tuple_count_)
      throw ConfigurationError("step-up: base palette exceeds the ids left after the tuple colors");
    for (std::size_t h = min_lower(); h <= k - 2; ++h) {
      auto it = lower_.find(h);
      if (it == lower_.end())
        throw ConfigurationError("step-up: missing " + std::to_string(h) + "-uniform coloring");
      if (it->second.uniformity() != h || it->second.vertex_count() != m)
        throw ConfigurationError("step-up: " + std::to_string(h) + "-uniform coloring has the wrong shape");
      if (it->second.palette() > q)
        throw ConfigurationError("step-up: " + std::to_string(h) + "-uniform coloring uses more than q colors");
    }
  }

  /// Builds chi_h for every h in [floor(k/p) - 1, k - 2] by repeatedly
  /// lifting `seed`, a q-coloring of uniformity floor(k/p) - 1. Uniformities
  /// above m have no edges and get an empty coloring.
  static StepUpContext chained(std::size_t p, std::size_t q, std::size_t k, std::size_t m, OrderedColoring top,
                               OrderedColoring const& seed) {
    if (p < 1 || k < 4 * p + 1) throw ConfigurationError("step-up: needs k >= 4p + 1");
    std::size_t const h0 = std::min(k / p - 1, alpha(p, k));
    if (seed.uniformity() != h0 || seed.vertex_count() != m)
      throw ConfigurationError("step-up: seed coloring has the wrong uniformity or vertex count");
    std::map<std::size_t, OrderedColoring> lower;
    OrderedColoring current = seed.materialize();
    lower.emplace(h0, current);
    for (std::size_t h = h0 + 1; h <= k - 2; ++h) {
      if (m >= h) {
        current = lift_coloring(current).materialize();
      } else {
        current = OrderedColoring(m, h, current.palette(), std::vector<Color>{});
      }
      lower.emplace(h, current);
    }
    return StepUpContext(p, q, k, m, std::move(top), std::move(lower));
  }

  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t m() const noexcept { return m_; }
  /// Smallest uniformity among the chi_h the rules consult.
  std::size_t min_lower() const { return std::min(k_ / p_ - 1, alpha(p_, k_)); }
  OrderedColoring const& top() const noexcept { return top_; }
  OrderedColoring const& lower(std::size_t h) const { return lower_.at(h); }

  /// (4pq)^{4p}
  std::uint64_t palette() const noexcept { return palette_; }
  /// q^{2p} (4p)^{4p}, the number of tuple colors.
  std::uint64_t tuple_count() const noexcept { return tuple_count_; }
  /// (4p)^{4p}
  std::uint64_t pattern_count() const noexcept { return pattern_count_; }

  std::uint64_t palette_id(StepUpColor const& c) const {
    if (auto const* b = std::get_if<BaseColor>(&c)) return tuple_count_ + (b->value - 1);
    auto const& t = std::get<TupleColor>(c);
    std::uint64_t id = 0;
    for (Color x : t.coords) id = id * q_ + (x - 1);
    return id * pattern_count_ + t.pattern.id();
  }

  StepUpColor decode(std::uint64_t id) const {
    if (id >= palette_) throw RangeError("palette id out of range");
    if (id >= tuple_count_) return BaseColor{id - tuple_count_ + 1};
    std::uint64_t pid = id % pattern_count_;
    std::uint64_t rest = id / pattern_count_;
    TupleColor t;
    t.coords.assign(2 * p_, 0);
    for (std::size_t j = 2 * p_; j-- > 0;) {
      t.coords[j] = rest % q_ + 1;
      rest /= q_;
    }
    std::vector<std::uint32_t> ranks(4 * p_);
    for (std::size_t j = 4 * p_; j-- > 0;) {
      ranks[j] = static_cast<std::uint32_t>(pid % (4 * p_)) + 1;
      pid /= 4 * p_;
    }
    t.pattern = Pattern(std::move(ranks));
    return t;
  }

 private:
  std::size_t p_, q_, k_, m_;
  OrderedColoring top_;
  std::map<std::size_t, OrderedColoring> lower_;
  std::uint64_t pattern_count_ = 0;
  std::uint64_t tuple_count_ = 0;
  std::uint64_t palette_ = 0;
};

namespace detail {

// Rules R1-R4 on a delta-sequence of length k - 1 with entries in [m].
inline StepUpColor color_from_deltas(std::span<std::uint32_t const> deltas, StepUpContext const& ctx) {
  std::size_t const p = ctx.p();
  std::size_t const k = ctx.k();
  if (is_monotone(deltas)) {
    std::vector<Vertex> edge(deltas.begin(), deltas.end());
    std::ranges::sort(edge);
    return BaseColor{ctx.top()(edge)};
  }
  TupleColor t;
  t.coords.reserve(2 * p);
  std::vector<Vertex> edge;
  for (std::size_t phase = 1; phase <= 2; ++phase) {
    for (std::size_t j = 1; j <= p; ++j) {
      auto x = subsample(deltas, j, phase, k);
      if (!x.all_distinct) {
        t.coords.push_back(1);
        continue;
      }
      edge.assign(x.values.begin(), x.values.end());
      std::ranges::sort(edge);
      t.coords.push_back(ctx.lower(alpha(j, k))(edge));
    }
  }
  t.pattern = edge_pattern(deltas, p);
  return t;
}

}  // namespace detail

/// Color of the k-edge V (strictly increasing in reverse-lex order).
inline StepUpColor step_up_color(std::span<BitVector const> edge, StepUpContext const& ctx) {
  if (edge.size() != ctx.k()) throw ContractError("step-up: edge must have k vertices");
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (edge[i].dimension() != ctx.m()) throw ContractError("step-up: vertex dimension differs from m");
    if (i && edge[i - 1].value() >= edge[i].value())
      throw ContractError("step-up: edge must be strictly increasing in reverse-lex order");
  }
  auto const deltas = delta_sequence(edge);
  return detail::color_from_deltas(deltas.values, ctx);
}

/// Rule-backed coloring of the complete k-graph on {0,1}^m, identified with
/// [2^m] through v <-> the vector with integer value v - 1. Colors are
/// palette ids plus one.
inline OrderedColoring build_stepup_coloring(StepUpContext const& ctx) {
  std::size_t const n = std::size_t{1} << ctx.m();
  return OrderedColoring(n, ctx.k(), ctx.palette(), [ctx](std::span<Vertex const> e) -> Color {
    thread_local std::vector<std::uint32_t> deltas;
    deltas.clear();
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      deltas.push_back(static_cast<std::uint32_t>(std::bit_width<std::uint64_t>((e[i] - 1) ^ (e[i + 1] - 1))));
    return ctx.palette_id(detail::color_from_deltas(deltas, ctx)) + 1;
  });
}

}  // namespace tmpr
