#pragma once

// Finite analogue of the Morse-Hedlund periodicity theorem: a word of length
// n >= p + m whose m-block complexity is at most p (m >= p) becomes periodic
// with period at most p after trimming at most 2p symbols from each end.

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmpr/factor_digraph.hpp"
#include "tmpr/word.hpp"

namespace tmpr {

struct PeriodicityWitness {
  std::size_t head_cut;  // a
  std::size_t tail_cut;  // b
  std::size_t period;    // r

  friend bool operator==(PeriodicityWitness const&, PeriodicityWitness const&) = default;
  friend auto operator<=>(PeriodicityWitness const&, PeriodicityWitness const&) = default;

  friend std::ostream& operator<<(std::ostream& os, PeriodicityWitness const& w) {
    return os << "a=" << w.head_cut << " b=" << w.tail_cut << " r=" << w.period;
  }
};

/// True iff trimming `w` from `s` leaves a word with period `w.period`.
template <Token T>
bool witnesses(Word<T> const& s, PeriodicityWitness const& w) {
  if (w.period == 0 || w.head_cut + w.tail_cut >= s.size()) return false;
  return is_periodic(reduction(s, w.head_cut, w.tail_cut), w.period);
}

namespace detail {

// In a walk through a functional digraph the first repeated vertex starts the
// periodic part. Searches i < j <= limit (1-based) for the smallest i having a
// later repeat, then the smallest such j.
inline std::optional<std::pair<std::size_t, std::size_t>> first_repeat(std::vector<std::size_t> const& walk,
                                                                       std::size_t limit) {
  limit = std::min(limit, walk.size());
  for (std::size_t i = 1; i <= limit; ++i)
    for (std::size_t j = i + 1; j <= limit; ++j)
      if (walk[i - 1] == walk[j - 1]) return std::pair{i, j};
  return std::nullopt;
}

}  // namespace detail

/// Constructs a periodicity witness by following the constructive proof:
/// find an order l < m at which the block complexity stalls, then read the
/// period off the factor digraph D_l. Either every vertex of D_l has out-degree
/// one (the walk is eventually a single cycle), or the final vertex is a sink,
/// in which case the word is cut back to just before the last visit of the
/// unique branching vertex and the first case is applied to the prefix.
///
/// The witness is the first one the construction produces; it need not be
/// minimal (see mh_witness_search).
template <Token T>
PeriodicityWitness finite_morse_hedlund(Word<T> const& s, std::size_t m, std::size_t p) {
  std::size_t const n = s.size();
  if (m < 1 || p < 1) throw ContractError("finite Morse-Hedlund: m and p must be positive");
  if (m < p) throw ContractError("finite Morse-Hedlund: hypothesis m >= p fails");
  if (n < p + m) throw ContractError("finite Morse-Hedlund: hypothesis |S| >= p + m fails");
  if (block_complexity(s, m) > p) throw ContractError("finite Morse-Hedlund: hypothesis C(S;m) <= p fails");

  if (m == 1 || block_complexity(s, 1) == 1) return {0, 0, 1};

  std::size_t order = 0;
  std::size_t prev = block_complexity(s, 1);
  for (std::size_t l = 1; l < m; ++l) {
    std::size_t next = block_complexity(s, l + 1);
    if (next == prev) {
      order = l;
      break;
    }
    prev = next;
  }
  if (order == 0) throw std::logic_error("finite Morse-Hedlund: block complexity never stalls below m");

  auto const g = factor_digraph(s, order);
  auto const deg = g.out_degrees();
  auto const& walk = g.walk;

  PeriodicityWitness out{};
  if (std::ranges::all_of(deg, [](std::size_t d) { return d == 1; })) {
    auto rep = detail::first_repeat(walk, p + 1);
    if (!rep) throw std::logic_error("finite Morse-Hedlund: no repeat among the first p+1 walk vertices");
    out = {rep->first - 1, 0, rep->second - rep->first};
  } else {
    std::size_t const sink = walk.back();
    if (deg[sink] != 0) throw std::logic_error("finite Morse-Hedlund: unexpected out-degree profile");
    std::size_t branch = deg.size();
    for (std::size_t v = 0; v < deg.size(); ++v)
      if (deg[v] > 1) branch = v;
    if (branch == deg.size()) throw std::logic_error("finite Morse-Hedlund: no branching vertex");
    // t: last (1-based) walk position at the branching vertex.
    std::size_t t = 0;
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i] == branch) t = i + 1;
    // The prefix s_1..s_{t+l-2} walks w_1..w_{t-1} in a digraph where every
    // vertex has out-degree one; its successor is w_t, which closes the orbit.
    std::vector<std::size_t> orbit(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(t));
    auto rep = detail::first_repeat(orbit, p + 1);
    if (!rep) throw std::logic_error("finite Morse-Hedlund: truncated walk has no repeat");
    out = {rep->first - 1, n - t - order + 2, rep->second - rep->first};
  }

  if (out.head_cut > 2 * p || out.tail_cut > 2 * p || out.period > p || !witnesses(s, out))
    throw std::logic_error("finite Morse-Hedlund: construction produced an invalid witness");
  return out;
}

/// Exhaustive scan over all a, b <= min(2p, |S|-1) with a + b < |S| and all
/// r <= p. Returns the lexicographically smallest (a, b, r) that works.
template <Token T>
std::optional<PeriodicityWitness> mh_witness_search(Word<T> const& s, std::size_t p) {
  std::size_t const n = s.size();
  std::size_t const cut = std::min(2 * p, n - 1);
  for (std::size_t a = 0; a <= cut; ++a) {
    for (std::size_t b = 0; b <= cut && a + b < n; ++b) {
      for (std::size_t r = 1; r <= p; ++r) {
        bool ok = true;
        for (std::size_t i = a; i + r < n - b; ++i) {
          if (!(s[i] == s[i + r])) {
            ok = false;
            break;
          }
        }
        if (ok) return PeriodicityWitness{a, b, r};
      }
    }
  }
  return std::nullopt;
}

}  // namespace tmpr
