#pragma once

// Extraction of a strictly monotone arithmetic-progression subsequence from a
// delta-sequence with few distinct 4p-window patterns.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tmpr/bitvector.hpp"
#include "tmpr/morse_hedlund.hpp"
#include "tmpr/word.hpp"

namespace tmpr {

enum class Direction { increasing, decreasing };

inline char const* to_string(Direction d) { return d == Direction::increasing ? "increasing" : "decreasing"; }

struct APWitness {
  std::size_t step = 0;               // d
  std::vector<std::size_t> indices;   // i_1 < i_2 < ..., 1-based positions in the sequence
  Pattern shared_pattern;             // pattern of every window (delta_{i_j}, ..., delta_{i_j + 4p - 1})
  Direction direction = Direction::increasing;

  // Period of the pattern sequence found by the periodicity step and the
  // position of the unique maximum inside the repeated (2p+1)-pattern.
  std::size_t period = 0;
  std::size_t max_position = 0;
};

/// Given a sequence of length at least p*L + 6p with the unique maximum
/// property and at most p distinct patterns among its 4p-windows, returns L
/// indices in arithmetic progression with common difference d <= p along
/// which the sequence is strictly monotone and every 4p-window has the same
/// pattern.
///
/// Construction: the (2p+1)-pattern sequence has 2p-block complexity <= p, so
/// the periodicity theorem yields a trimmed stretch with period p' <= p. The
/// unique maximum of the repeated pattern sits at a position t with t <= p'
/// (the progression of maxima decreases) or t >= 2p - p' + 2 (it increases).
/// When the progression would start at index 1 and a spare term exists, the
/// first term is dropped so the result starts at index >= 2.
inline APWitness extract_monotone_ap(std::span<std::uint32_t const> seq, std::size_t p, std::size_t length) {
  std::size_t const n = seq.size();
  if (p < 1) throw ContractError("monotone AP: p must be positive");
  if (length < 1) throw ContractError("monotone AP: target length must be positive");
  if (n < p * length + 6 * p) throw ContractError("monotone AP: hypothesis |seq| >= pL + 6p fails");
  if (!has_unique_max_property(seq)) throw ContractError("monotone AP: hypothesis unique maximum property fails");
  Word<std::uint32_t> const word(std::vector<std::uint32_t>(seq.begin(), seq.end()), true);
  if (pattern_complexity(word, 4 * p) > p) throw ContractError("monotone AP: hypothesis P(seq;4p) <= p fails");

  Word<Pattern> const patterns(pattern_sequence(word, 2 * p + 1), false);
  auto const cut = finite_morse_hedlund(patterns, 2 * p, p);
  std::size_t const period = cut.period;
  std::size_t const usable = patterns.size() - cut.head_cut - cut.tail_cut;

  Pattern const& repeated = patterns[cut.head_cut];
  std::size_t t = 0;
  for (std::size_t i = 0; i < repeated.size(); ++i)
    if (repeated[i] == repeated.levels()) t = i + 1;

  APWitness out;
  out.step = period;
  out.period = period;
  out.max_position = t;
  if (t <= period)
    out.direction = Direction::decreasing;
  else if (t >= 2 * p - period + 2)
    out.direction = Direction::increasing;
  else
    throw std::logic_error("monotone AP: maximum position contradicts the unique maximum property");

  // Term r sits at a + t + r p' and is the maximum of the r-th repeated block.
  // Truncate the periodic stretch to a multiple of p' and keep terms whose
  // 4p-window fits inside the sequence.
  std::size_t const blocks = usable / period;
  std::vector<std::size_t> terms;
  for (std::size_t r = 0; r < blocks; ++r) {
    std::size_t const idx = cut.head_cut + t + r * period;
    if (idx + 4 * p - 1 > n) break;
    terms.push_back(idx);
  }
  if (!terms.empty() && terms.front() == 1 && terms.size() > length) terms.erase(terms.begin());
  if (terms.size() < length)
    throw ContractError("monotone AP: only " + std::to_string(terms.size()) + " progression terms fit, " +
                        std::to_string(length) + " requested");
  terms.resize(length);
  out.indices = std::move(terms);
  out.shared_pattern = pattern_of(seq.subspan(out.indices.front() - 1, 4 * p));
  return out;
}

}  // namespace tmpr
