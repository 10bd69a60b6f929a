#pragma once

// Exact values at tiny scale: A_k(n; q, p) by backtracking over colorings,
// and h_{q,p}(N) by full enumeration of edge colorings of K_N.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmpr/coloring.hpp"
#include "tmpr/errors.hpp"
#include "tmpr/path_search.hpp"

namespace tmpr {

enum class Verdict { good, forced, indeterminate };

inline char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::good: return "good";
    case Verdict::forced: return "forced";
    default: return "indeterminate";
  }
}

struct ExactEntry {
  std::size_t vertices = 0;  // N
  Verdict verdict = Verdict::indeterminate;
  std::optional<OrderedColoring> witness;  // a good coloring when verdict is good
  std::uint64_t nodes = 0;
  bool inferred = false;  // forced because a smaller N is already forced
};

struct ExactReport {
  std::vector<ExactEntry> entries;
  std::optional<std::size_t> value;  // smallest forced N when every smaller N is good
};

struct ExactOptions {
  std::optional<std::uint64_t> node_cap = std::uint64_t{50'000'000};
  bool fix_first_edge = true;
};

namespace detail {

struct ExactCapReached {};

// Backtracking over colorings of the complete k-graph on [N] in colex edge
// order. After edge e is colored, the only newly complete paths are those
// whose last window is e; they are found by extending e backwards.
class ColoringSearch {
 public:
  ColoringSearch(std::size_t k, std::size_t n, std::size_t q, std::size_t p, std::size_t big_n, ExactOptions opts)
      : k_(k), n_(n), q_(q), p_(p), big_n_(big_n), opts_(opts) {
    for_each_edge(big_n, k, [&](std::span<Vertex const> e) { edges_.emplace_back(e.begin(), e.end()); });
    table_.assign(edges_.size(), 0);
  }

  Verdict run() {
    try {
      return assign(0) ? Verdict::good : Verdict::forced;
    } catch (ExactCapReached const&) {
      return Verdict::indeterminate;
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  OrderedColoring coloring() const { return OrderedColoring(big_n_, k_, q_, table_); }

 private:
  bool assign(std::size_t idx) {
    if (idx == edges_.size()) return true;
    std::size_t const top = (idx == 0 && opts_.fix_first_edge) ? 1 : q_;
    for (Color c = 1; c <= top; ++c) {
      if (opts_.node_cap && ++nodes_ > *opts_.node_cap) throw ExactCapReached{};
      table_[idx] = c;
      colors_.assign(1, c);
      window_ = edges_[idx];
      if (!bad_tail(1)) {
        if (assign(idx + 1)) return true;
      }
    }
    table_[idx] = 0;
    return false;
  }

  // window_ holds the earliest `edges` windows' vertices (front = smallest).
  bool bad_tail(std::size_t edges) {
    if (edges == n_) return true;
    Vertex const first = window_.front();
    for (Vertex u = 1; u < first; ++u) {
      prefix_.assign(1, u);
      prefix_.insert(prefix_.end(), window_.begin(), window_.begin() + static_cast<std::ptrdiff_t>(k_ - 1));
      Color const c = table_[colex_rank(prefix_)];
      bool const fresh = std::find(colors_.begin(), colors_.end(), c) == colors_.end();
      if (fresh && colors_.size() == p_) continue;
      if (fresh) colors_.push_back(c);
      window_.insert(window_.begin(), u);
      bool const hit = bad_tail(edges + 1);
      window_.erase(window_.begin());
      if (fresh) colors_.pop_back();
      if (hit) return true;
    }
    return false;
  }

  std::size_t k_, n_, q_, p_, big_n_;
  ExactOptions opts_;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<Color> table_;
  std::vector<Color> colors_;
  std::vector<Vertex> window_;
  std::vector<Vertex> prefix_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Verdict for every N in [k, N_max]: good (a coloring with no TMP_n of at
/// most p colors exists, one is returned), forced (none exists) or
/// indeterminate (node cap). Once some N is forced, larger N are forced too
/// and are reported as inferred without searching.
inline ExactReport exact_A(std::size_t k, std::size_t n, std::size_t q, std::size_t p, std::size_t n_max,
                           ExactOptions const& opts = {}) {
  if (k < 1) throw ContractError("exact_A: k must be positive");
  if (n < 1) throw ContractError("exact_A: n must be positive");
  if (!(q > p && p >= 1)) throw ContractError("exact_A: needs q > p >= 1");
  if (n_max < k) throw ContractError("exact_A: N_max must be at least k");
  ExactReport report;
  bool all_good = true;
  bool forced_seen = false;
  for (std::size_t big_n = k; big_n <= n_max; ++big_n) {
    ExactEntry entry;
    entry.vertices = big_n;
    if (forced_seen) {
      entry.verdict = Verdict::forced;
      entry.inferred = true;
    } else {
      detail::ColoringSearch search(k, n, q, p, big_n, opts);
      entry.verdict = search.run();
      entry.nodes = search.nodes();
      if (entry.verdict == Verdict::good) entry.witness = search.coloring();
      if (entry.verdict == Verdict::forced) {
        forced_seen = true;
        if (all_good) report.value = big_n;
      }
      if (entry.verdict != Verdict::good) all_good = false;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace detail {

// Longest monotone path (edge count) of K_N whose colors lie in `allowed`.
inline std::size_t longest_path_in(std::size_t big_n, std::span<Color const> table, std::vector<bool> const& allowed) {
  std::vector<std::size_t> best(big_n + 1, 0);
  std::size_t out = 0;
  for (Vertex v = 2; v <= big_n; ++v) {
    for (Vertex u = 1; u < v; ++u) {
      Vertex const e[2] = {u, v};
      if (allowed[table[colex_rank(e)]]) best[v] = std::max(best[v], best[u] + 1);
    }
    out = std::max(out, best[v]);
  }
  return out;
}

}  // namespace detail

/// Colorings h_exact will enumerate at most (with the first edge fixed).
inline constexpr std::uint64_t h_exact_limit = std::uint64_t{1} << 24;

/// h_{q,p}(N): over all q-colorings of the transitive tournament on [N], the
/// minimum of the longest monotone path using at most p colors.
inline std::size_t h_exact(std::size_t q, std::size_t p, std::size_t big_n) {
  if (q < 1 || p < 1) throw ContractError("h_exact: q and p must be positive");
  if (big_n <= 1) return 0;
  if (p >= q) return big_n - 1;
  std::uint64_t const edges = binomial(big_n, 2);
  std::uint64_t total = 1;
  for (std::uint64_t i = 1; i < edges; ++i) {
    if (total > h_exact_limit / q)
      throw ContractError("h_exact: q^(C(N,2)-1) colorings exceed the enumeration limit 2^24");
    total *= q;
  }

  // Color sets of size exactly p suffice: a path with fewer colors fits in a
  // p-set containing them.
  std::vector<std::vector<bool>> subsets;
  std::vector<std::size_t> pick(p);
  for (std::size_t i = 0; i < p; ++i) pick[i] = i;
  while (true) {
    std::vector<bool> allowed(q + 1, false);
    for (auto c : pick) allowed[c + 1] = true;
    subsets.push_back(std::move(allowed));
    std::size_t i = p;
    while (i > 0 && pick[i - 1] == q - p + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<Color> table(edges, 1);
  std::size_t best = big_n - 1;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t e = 1; e < edges; ++e) {
      table[e] = x % q + 1;
      x /= q;
    }
    std::size_t longest = 0;
    for (auto const& s : subsets) longest = std::max(longest, detail::longest_path_in(big_n, table, s));
    best = std::min(best, longest);
  }
  return best;
}

struct FswCheck {
  std::size_t vertices;  // N = s^q
  std::size_t h;         // h_{q,p}(N)
  std::uint64_t bound;   // N^{p/q} = s^p
  bool holds;            // h < bound
};

/// Evaluates h_{q,p}(s^q) < (s^q)^{p/q} = s^p.
inline FswCheck check_fsw_inequality(std::size_t q, std::size_t p, std::size_t s) {
  if (s < 1) throw ContractError("check_fsw_inequality: s must be positive");
  std::uint64_t big_n = 1;
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < q; ++i) big_n *= s;
  for (std::size_t i = 0; i < p; ++i) bound *= s;
  std::size_t const h = h_exact(q, p, big_n);
  return {static_cast<std::size_t>(big_n), h, bound, h < bound};
}

}  // namespace tmpr
