#pragma once

// Finite words, their blocks (factors) and order patterns.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tmpr/errors.hpp"

namespace tmpr {

template <typename T>
concept Token = std::equality_comparable<T> && requires(T const& t) {
  { std::hash<T>{}(t) } -> std::convertible_to<std::size_t>;
};

/// A finite, nonempty sequence of tokens.
///
/// Tokens are compared by equality only, unless the word is flagged as being
/// over a totally ordered alphabet. Operations that inspect the relative order
/// of tokens (patterns) refuse to run on unordered words.
template <Token T>
class Word {
 public:
  using value_type = T;

  Word(std::vector<T> symbols, bool ordered) : symbols_(std::move(symbols)), ordered_(ordered) {
    if (symbols_.empty()) throw ContractError("word must be nonempty");
  }

  explicit Word(std::vector<T> symbols)
    requires std::totally_ordered<T>
      : Word(std::move(symbols), true) {}

  Word(std::initializer_list<T> symbols)
    requires std::totally_ordered<T>
      : Word(std::vector<T>(symbols), true) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool ordered() const noexcept { return ordered_; }

  /// 1-based access, matching the usual s_1 .. s_n indexing.
  T const& at1(std::size_t i) const { return symbols_.at(i - 1); }
  T const& operator[](std::size_t i) const noexcept { return symbols_[i]; }

  std::span<T const> symbols() const noexcept { return symbols_; }
  std::span<T const> window(std::size_t start0, std::size_t len) const {
    return std::span<T const>(symbols_).subspan(start0, len);
  }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  friend bool operator==(Word const& a, Word const& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<T> symbols_;
  bool ordered_;
};

/// A contiguous window of a word. `start` is 1-based.
template <Token T>
struct Block {
  std::size_t start;
  std::vector<T> symbols;

  std::size_t length() const noexcept { return symbols.size(); }
};

/// Order type of a window, stored as the rank of each entry among the distinct
/// values of the window (rank 1 is the smallest).
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks)) {}

  std::span<std::uint32_t const> ranks() const noexcept { return ranks_; }
  std::size_t size() const noexcept { return ranks_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return ranks_[i]; }

  /// Number of distinct values in the window.
  std::uint32_t levels() const noexcept {
    return ranks_.empty() ? 0 : *std::max_element(ranks_.begin(), ranks_.end());
  }

  /// Relation between entries i and j (0-based): -1 for <, 0 for =, 1 for >.
  int relation(std::size_t i, std::size_t j) const noexcept {
    return ranks_[i] < ranks_[j] ? -1 : (ranks_[i] == ranks_[j] ? 0 : 1);
  }

  /// Mixed-radix id in [0, L^L) for a pattern of length L.
  std::uint64_t id() const noexcept {
    std::uint64_t out = 0;
    std::uint64_t const radix = ranks_.size();
    for (auto r : ranks_) out = out * radix + (r - 1);
    return out;
  }

  friend bool operator==(Pattern const&, Pattern const&) = default;
  friend auto operator<=>(Pattern const&, Pattern const&) = default;

  friend std::ostream& operator<<(std::ostream& os, Pattern const& p) {
    os << '(';
    for (std::size_t i = 0; i < p.ranks_.size(); ++i) os << (i ? "," : "") << p.ranks_[i];
    return os << ')';
  }

 private:
  std::vector<std::uint32_t> ranks_;
};

}  // namespace tmpr

template <>
struct std::hash<tmpr::Pattern> {
  std::size_t operator()(tmpr::Pattern const& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto r : p.ranks()) h = (h ^ r) * 0x100000001b3ull;
    return h;
  }
};

namespace tmpr {

namespace detail {

template <Token T>
std::size_t hash_window(std::span<T const> w) {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  std::hash<T> hasher;
  for (auto const& x : w) h ^= hasher(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// Start indices (0-based) of the first occurrence of each distinct window.
template <Token T>
std::vector<std::size_t> distinct_window_starts(Word<T> const& s, std::size_t p) {
  std::size_t const count = s.size() - p + 1;
  std::vector<std::size_t> firsts;
  if (s.size() <= 48) {
    for (std::size_t i = 0; i < count; ++i) {
      auto wi = s.window(i, p);
      bool seen = false;
      for (auto j : firsts) {
        if (std::ranges::equal(wi, s.window(j, p))) {
          seen = true;
          break;
        }
      }
      if (!seen) firsts.push_back(i);
    }
    return firsts;
  }
  auto hash = [&](std::size_t i) { return hash_window(s.window(i, p)); };
  auto eq = [&](std::size_t i, std::size_t j) { return std::ranges::equal(s.window(i, p), s.window(j, p)); };
  std::unordered_set<std::size_t, decltype(hash), decltype(eq)> seen(count, hash, eq);
  for (std::size_t i = 0; i < count; ++i)
    if (seen.insert(i).second) firsts.push_back(i);
  return firsts;
}

template <Token T>
void check_block_length(Word<T> const& s, std::size_t p) {
  if (p < 1 || p > s.size())
    throw RangeError("block length " + std::to_string(p) + " outside [1, " + std::to_string(s.size()) + "]");
}

}  // namespace detail

/// The distinct p-blocks of `s`, each represented by its first occurrence.
template <Token T>
std::vector<Block<T>> blocks(Word<T> const& s, std::size_t p) {
  detail::check_block_length(s, p);
  std::vector<Block<T>> out;
  for (auto i : detail::distinct_window_starts(s, p)) {
    auto w = s.window(i, p);
    out.push_back({i + 1, std::vector<T>(w.begin(), w.end())});
  }
  return out;
}

/// Number of distinct p-blocks, C(S;p).
template <Token T>
std::size_t block_complexity(Word<T> const& s, std::size_t p) {
  detail::check_block_length(s, p);
  return detail::distinct_window_starts(s, p).size();
}

template <std::totally_ordered T>
Pattern pattern_of(std::span<T const> window) {
  if (window.empty()) throw ContractError("pattern of an empty window");
  std::vector<T> values(window.begin(), window.end());
  std::ranges::sort(values);
  auto last = std::unique(values.begin(), values.end());
  values.erase(last, values.end());
  std::vector<std::uint32_t> ranks;
  ranks.reserve(window.size());
  for (auto const& x : window)
    ranks.push_back(static_cast<std::uint32_t>(std::ranges::lower_bound(values, x) - values.begin()) + 1);
  return Pattern(std::move(ranks));
}

template <std::totally_ordered T>
Pattern pattern_of(std::vector<T> const& window) {
  return pattern_of(std::span<T const>(window));
}

/// The p-pattern sequence: entry i is the pattern of the window starting at i.
template <Token T>
std::vector<Pattern> pattern_sequence(Word<T> const& s, std::size_t p) {
  if (!s.ordered()) throw CapabilityError("pattern analysis needs a totally ordered alphabet");
  detail::check_block_length(s, p);
  if constexpr (std::totally_ordered<T>) {
    std::vector<Pattern> out;
    out.reserve(s.size() - p + 1);
    for (std::size_t i = 0; i + p <= s.size(); ++i) out.push_back(pattern_of(s.window(i, p)));
    return out;
  } else {
    throw CapabilityError("token type has no total order");
  }
}

/// Number of distinct patterns among the length-p windows, P(S;p).
template <Token T>
std::size_t pattern_complexity(Word<T> const& s, std::size_t p) {
  auto seq = pattern_sequence(s, p);
  std::unordered_set<Pattern> distinct(seq.begin(), seq.end());
  return distinct.size();
}

/// True iff s_i = s_{i+r} wherever both sides exist (vacuous when r >= |S|).
template <Token T>
bool is_periodic(Word<T> const& s, std::size_t r) {
  if (r == 0) throw RangeError("period must be positive");
  for (std::size_t i = 0; i + r < s.size(); ++i)
    if (!(s[i] == s[i + r])) return false;
  return true;
}

/// The (a,b)-reduction: drop the first a and the last b symbols.
template <Token T>
Word<T> reduction(Word<T> const& s, std::size_t a, std::size_t b) {
  if (a + b >= s.size())
    throw RangeError("reduction (" + std::to_string(a) + "," + std::to_string(b) + ") of a word of length " +
                     std::to_string(s.size()) + " is empty");
  auto w = s.window(a, s.size() - a - b);
  return Word<T>(std::vector<T>(w.begin(), w.end()), s.ordered());
}

}  // namespace tmpr
