#pragma once

// Search for tight monotone paths of bounded color complexity.
//
// A TMP_n in a k-uniform coloring on [N] is v_1 < ... < v_{n+k-1} whose n
// contiguous k-windows are its edges. The search extends the vertex sequence
// in ascending order, so the first path found is the lexicographically least.
// A state is (last k-1 vertices, sorted color set, depth); states proven dead
// are memoized since their future does not depend on the earlier prefix.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <unordered_set>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "tmpr/coloring.hpp"
#include "tmpr/errors.hpp"

namespace tmpr {

struct SearchBudget {
  std::size_t max_colors = 1;               // p
  std::optional<std::uint64_t> node_cap;    // vertex expansions across all workers
  bool lex_minimal = true;
  unsigned workers = 1;
};

struct PathWitness {
  std::vector<Vertex> vertices;  // n + k - 1 vertices
  std::vector<Color> colors;     // color of window i
  std::vector<Color> color_set;  // sorted, distinct

  std::size_t length() const noexcept { return colors.size(); }
  std::size_t complexity() const noexcept { return color_set.size(); }
  friend bool operator==(PathWitness const&, PathWitness const&) = default;
};

enum class SearchStatus { found, none, indeterminate };

inline char const* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    default: return "indeterminate";
  }
}

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<PathWitness> witness;
  std::uint64_t nodes = 0;  // varies with the worker count; not part of any report
};

/// Independent check that `w` is a TMP_n of chi with at most p colors.
inline bool is_valid_path(OrderedColoring const& chi, std::size_t n, std::size_t p, PathWitness const& w) {
  std::size_t const k = chi.uniformity();
  if (w.vertices.size() != n + k - 1 || w.colors.size() != n) return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (w.vertices[i] < 1 || w.vertices[i] > chi.vertex_count()) return false;
    if (i && w.vertices[i - 1] >= w.vertices[i]) return false;
  }
  std::vector<Color> seen;
  for (std::size_t i = 0; i < n; ++i) {
    Color c = chi(std::span<Vertex const>(w.vertices).subspan(i, k));
    if (c != w.colors[i]) return false;
    seen.push_back(c);
  }
  std::ranges::sort(seen);
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return seen == w.color_set && seen.size() <= p;
}

namespace detail {

struct CapReached {};

class PathSearcher {
 public:
  PathSearcher(OrderedColoring const& chi, std::size_t n, std::size_t p, std::optional<std::uint64_t> cap,
               std::atomic<std::uint64_t>& nodes)
      : chi_(chi), n_(n), p_(p), k_(chi.uniformity()), big_n_(chi.vertex_count()), total_(n + chi.uniformity() - 1),
        cap_(cap), nodes_(nodes) {}

  /// Lex-least path with first vertex `root`, if any. Throws CapReached.
  std::optional<PathWitness> from_root(Vertex root) {
    path_.assign(1, root);
    colors_.clear();
    set_.clear();
    if (!dfs()) return std::nullopt;
    PathWitness w{path_, colors_, set_};
    return w;
  }

 private:
  using Key = std::vector<std::uint64_t>;

  Key key() const {
    std::size_t const keep = std::min(path_.size(), k_ - 1);
    Key out;
    out.reserve(keep + set_.size() + 1);
    out.push_back(path_.size());
    out.insert(out.end(), path_.end() - static_cast<std::ptrdiff_t>(keep), path_.end());
    out.insert(out.end(), set_.begin(), set_.end());
    return out;
  }

  bool dfs() {
    std::size_t const depth = path_.size();
    if (depth == total_) return true;
    Key const state = key();
    if (dead_.contains(state)) return false;
    Vertex const last_start = static_cast<Vertex>(big_n_ - (total_ - depth - 1));
    for (Vertex v = path_.back() + 1; v <= last_start; ++v) {
      std::uint64_t const used = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
      if (cap_ && used > *cap_) throw CapReached{};
      bool added = false;
      if (depth + 1 >= k_) {
        edge_.assign(path_.end() - static_cast<std::ptrdiff_t>(k_ - 1), path_.end());
        edge_.push_back(v);
        Color const c = chi_(edge_);
        auto pos = std::ranges::lower_bound(set_, c);
        if (pos == set_.end() || *pos != c) {
          if (set_.size() == p_) continue;
          set_.insert(pos, c);
          added = true;
        }
        colors_.push_back(c);
        path_.push_back(v);
        bool const ok = dfs();
        if (ok) return true;
        path_.pop_back();
        colors_.pop_back();
        if (added) set_.erase(std::ranges::lower_bound(set_, c));
      } else {
        path_.push_back(v);
        if (dfs()) return true;
        path_.pop_back();
      }
    }
    dead_.insert(state);
    return false;
  }

  OrderedColoring const& chi_;
  std::size_t n_, p_, k_, big_n_, total_;
  std::optional<std::uint64_t> cap_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<Vertex> path_;
  std::vector<Vertex> edge_;
  std::vector<Color> colors_;
  std::vector<Color> set_;
  std::unordered_set<Key, boost::hash<Key>> dead_;
};

}  // namespace detail

/// Searches chi for a TMP_n spanning at most budget.max_colors colors. Roots
/// (first vertices) are handed to workers in ascending order and the result
/// is the witness of the smallest root that has one, so the returned path is
/// the lexicographically least regardless of the worker count. With
/// lex_minimal off the search stops at the first witness any worker finds.
/// Hitting the node cap before a verdict is certified yields indeterminate.
inline SearchResult find_path(OrderedColoring const& chi, std::size_t n, SearchBudget const& budget) {
  if (n < 1) throw ContractError("path length must be at least 1");
  if (budget.max_colors < 1) throw ContractError("color budget must be at least 1");
  std::size_t const k = chi.uniformity();
  std::size_t const big_n = chi.vertex_count();
  SearchResult out;
  if (big_n < n + k - 1) return out;

  std::size_t const roots = big_n - (n + k - 1) + 1;
  enum class Verdict : std::uint8_t { pending, none, found, capped };
  std::vector<Verdict> verdict(roots, Verdict::pending);
  std::vector<std::optional<PathWitness>> found(roots);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{roots};  // smallest root index with a witness
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;

  auto work = [&] {
    detail::PathSearcher searcher(chi, n, budget.max_colors, budget.node_cap, nodes);
    while (true) {
      std::size_t const r = next.fetch_add(1);
      if (r >= roots) return;
      std::size_t const cutoff = best.load();
      if (budget.lex_minimal ? r > cutoff : cutoff < roots) return;
      Verdict v = Verdict::none;
      std::optional<PathWitness> w;
      try {
        w = searcher.from_root(static_cast<Vertex>(r + 1));
        if (w) v = Verdict::found;
      } catch (detail::CapReached const&) {
        v = Verdict::capped;
      }
      {
        std::lock_guard lock(mu);
        verdict[r] = v;
        found[r] = std::move(w);
      }
      if (v == Verdict::found) {
        std::size_t cur = best.load();
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
      }
      if (v == Verdict::capped) return;
    }
  };

  unsigned const workers = std::max(1u, budget.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  out.nodes = nodes.load();

  if (!budget.lex_minimal) {
    for (std::size_t r = 0; r < roots; ++r)
      if (verdict[r] == Verdict::found) {
        out.status = SearchStatus::found;
        out.witness = std::move(found[r]);
        return out;
      }
  }
  for (std::size_t r = 0; r < roots; ++r) {
    if (verdict[r] == Verdict::found) {
      out.status = SearchStatus::found;
      out.witness = std::move(found[r]);
      return out;
    }
    if (verdict[r] != Verdict::none) {
      out.status = SearchStatus::indeterminate;
      return out;
    }
  }
  out.status = SearchStatus::none;
  return out;
}

/// Witness of a TMP_n with at most budget.max_colors colors, or none. Throws
/// IndeterminateError when the node cap stops the search first.
inline std::optional<PathWitness> min_complexity_path(OrderedColoring const& chi, std::size_t n,
                                                      SearchBudget const& budget) {
  auto r = find_path(chi, n, budget);
  if (r.status == SearchStatus::indeterminate)
    throw IndeterminateError("path search hit its node cap before a verdict", r.nodes);
  return r.witness;
}

/// True iff chi has no TMP_n with at most p colors.
inline bool verify_avoids(OrderedColoring const& chi, std::size_t n, std::size_t p,
                          std::optional<std::uint64_t> node_cap = std::nullopt, unsigned workers = 1) {
  SearchBudget b;
  b.max_colors = p;
  b.node_cap = node_cap;
  b.workers = workers;
  return !min_complexity_path(chi, n, b).has_value();
}

}  // namespace tmpr
