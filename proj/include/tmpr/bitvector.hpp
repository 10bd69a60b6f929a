#pragma once

// Vertices of {0,1}^m under the reverse-lexicographic order, and the
// delta-sequences of runs of such vertices.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmpr/errors.hpp"
#include "tmpr/word.hpp"

namespace tmpr {

/// A vector (u)_1 .. (u)_m with m <= 64. Coordinate i is stored in bit i-1,
/// so the reverse-lex order is the order of the stored integers.
class BitVector {
 public:
  static constexpr std::size_t max_dimension = 64;

  BitVector(std::size_t dimension, std::uint64_t bits) : dim_(dimension), bits_(bits) {
    if (dimension == 0 || dimension > max_dimension) throw RangeError("bit vector dimension must lie in [1, 64]");
    if (dimension < 64 && (bits >> dimension) != 0) throw RangeError("bit vector value exceeds its dimension");
  }

  /// Parses a bitstring written least-index-first: "101" is (1,0,1).
  static BitVector parse(std::string_view text) {
    if (text.empty() || text.size() > max_dimension) throw RangeError("bitstring length must lie in [1, 64]");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (text[i] != '0')
        throw ContractError("bitstring may only contain 0 and 1");
    }
    return BitVector(text.size(), bits);
  }

  static BitVector unit(std::size_t dimension, std::size_t index) {
    if (index < 1 || index > dimension) throw RangeError("unit vector index out of range");
    return BitVector(dimension, std::uint64_t{1} << (index - 1));
  }

  std::size_t dimension() const noexcept { return dim_; }
  std::uint64_t value() const noexcept { return bits_; }

  /// Coordinate (u)_i, 1-based.
  int operator[](std::size_t i) const noexcept { return static_cast<int>((bits_ >> (i - 1)) & 1u); }

  std::string to_string() const {
    std::string out(dim_, '0');
    for (std::size_t i = 0; i < dim_; ++i)
      if ((bits_ >> i) & 1u) out[i] = '1';
    return out;
  }

  friend bool operator==(BitVector const&, BitVector const&) = default;

 private:
  std::size_t dim_;
  std::uint64_t bits_;
};

namespace detail {
inline void check_distinct_pair(BitVector const& u, BitVector const& v) {
  if (u.dimension() != v.dimension()) throw ContractError("bit vectors of different dimension");
  if (u.value() == v.value()) throw ContractError("delta of equal bit vectors is undefined");
}
}  // namespace detail

/// Largest coordinate at which u and v differ.
inline std::size_t delta(BitVector const& u, BitVector const& v) {
  detail::check_distinct_pair(u, v);
  return static_cast<std::size_t>(std::bit_width(u.value() ^ v.value()));
}

/// Reverse-lex comparison: u < v iff (u)_d < (v)_d at d = delta(u, v).
inline bool revlex_less(BitVector const& u, BitVector const& v) { return v[delta(u, v)] == 1; }

struct DeltaSequence {
  std::vector<std::uint32_t> values;
  std::size_t source_length = 0;

  std::size_t size() const noexcept { return values.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return values[i]; }

  Word<std::uint32_t> as_word() const { return Word<std::uint32_t>(values, true); }
};

inline DeltaSequence delta_sequence(std::span<BitVector const> run) {
  if (run.size() < 2) throw ContractError("a delta-sequence needs at least two vectors");
  DeltaSequence out;
  out.source_length = run.size();
  out.values.reserve(run.size() - 1);
  for (std::size_t i = 0; i + 1 < run.size(); ++i) {
    if (run[i] == run[i + 1]) throw ContractError("contiguous vectors of the run coincide");
    out.values.push_back(static_cast<std::uint32_t>(delta(run[i], run[i + 1])));
  }
  return out;
}

/// Every contiguous window of length >= 2 has a strict unique maximum.
/// Quadratic scan straight from the definition.
inline bool has_unique_max_property(std::span<std::uint32_t const> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::uint32_t best = seq[i];
    std::size_t ties = 1;
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[j] > best) {
        best = seq[j];
        ties = 1;
      } else if (seq[j] == best) {
        ++ties;
      }
      if (ties > 1) return false;
    }
  }
  return true;
}

inline bool has_unique_max_property(DeltaSequence const& d) { return has_unique_max_property(d.values); }

/// Strictly increasing or strictly decreasing (a single entry counts).
inline bool is_monotone(std::span<std::uint32_t const> seq) {
  bool up = true;
  bool down = true;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    up = up && seq[i] < seq[i + 1];
    down = down && seq[i] > seq[i + 1];
  }
  return up || down;
}

inline bool is_monotone_run(std::span<BitVector const> run) {
  bool up = true;
  bool down = true;
  for (std::size_t i = 0; i + 1 < run.size(); ++i) {
    if (run[i].dimension() != run[i + 1].dimension()) throw ContractError("bit vectors of different dimension");
    up = up && run[i].value() < run[i + 1].value();
    down = down && run[i].value() > run[i + 1].value();
  }
  return up || down;
}

/// The delta-sequence of a strictly monotone run has the unique maximum
/// property. Returns the check's outcome; a false return is a counterexample.
inline bool check_prop_ump(std::span<BitVector const> run) {
  if (!is_monotone_run(run)) throw ContractError("run is not strictly monotone in reverse-lex order");
  return has_unique_max_property(delta_sequence(run));
}

}  // namespace tmpr
