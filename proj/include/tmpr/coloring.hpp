#pragma once

// Colorings of the complete k-graph on the ordered vertex set [N].

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <memory>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tmpr/errors.hpp"

namespace tmpr {

using Vertex = std::uint32_t;
using Color = std::uint64_t;

/// Binomial coefficient, saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

namespace detail {

// Saturating Pascal table for the small arguments hit by colex ranking.
class BinomialTable {
 public:
  static constexpr std::size_t rows = 1024;
  static constexpr std::size_t cols = 33;

  BinomialTable() : data_(rows * cols, 0) {
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t n = 0; n < rows; ++n) {
      data_[n * cols] = 1;
      for (std::size_t r = 1; r < cols && r <= n; ++r) {
        std::uint64_t a = data_[(n - 1) * cols + r - 1];
        std::uint64_t b = data_[(n - 1) * cols + r];
        data_[n * cols + r] = (a > top - b) ? top : a + b;
      }
    }
  }
  std::uint64_t operator()(std::size_t n, std::size_t r) const noexcept { return data_[n * cols + r]; }

  static BinomialTable const& instance() {
    static BinomialTable const table;
    return table;
  }

 private:
  std::vector<std::uint64_t> data_;
};

inline std::uint64_t small_binomial(std::uint64_t n, std::uint64_t r) {
  if (n < BinomialTable::rows && r < BinomialTable::cols) return BinomialTable::instance()(n, r);
  return binomial(n, r);
}

}  // namespace detail

/// Colex rank of a strictly increasing edge with vertices in [1, N]:
/// sum over i of C(v_i - 1, i).
inline std::uint64_t colex_rank(std::span<Vertex const> edge) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < edge.size(); ++i) r += detail::small_binomial(edge[i] - 1, i + 1);
  return r;
}

/// Calls fn(edge) for every k-subset of [N] in colex order.
template <typename Fn>
void for_each_edge(std::size_t n_vertices, std::size_t k, Fn&& fn) {
  if (k == 0 || k > n_vertices) return;
  std::vector<Vertex> e(k);
  for (std::size_t i = 0; i < k; ++i) e[i] = static_cast<Vertex>(i + 1);
  while (true) {
    fn(std::span<Vertex const>(e));
    // Colex successor: bump the lowest position that can move.
    std::size_t i = 0;
    while (i < k && e[i] + 1 == (i + 1 < k ? e[i + 1] : static_cast<Vertex>(n_vertices + 1))) ++i;
    if (i == k) return;
    ++e[i];
    for (std::size_t j = 0; j < i; ++j) e[j] = static_cast<Vertex>(j + 1);
  }
}

/// Total coloring of the edges of the complete k-graph on [N]. Colors are
/// ids in [1, palette]. Backed either by a flat table indexed by colex rank
/// or by a rule evaluated per query. Copies share the backing.
class OrderedColoring {
 public:
  using Rule = std::function<Color(std::span<Vertex const>)>;

  /// Table-backed; `table[colex_rank(e)]` is the color of e.
  OrderedColoring(std::size_t n_vertices, std::size_t k, Color palette, std::vector<Color> table)
      : n_(n_vertices), k_(k), palette_(palette), table_(std::make_shared<std::vector<Color> const>(std::move(table))) {
    if (k_ < 1) throw ContractError("uniformity must be positive");
    if (table_->size() != binomial(n_, k_)) throw ContractError("coloring table size must equal C(N, k)");
    for (Color c : *table_)
      if (c < 1 || c > palette_) throw ContractError("color id outside [1, palette]");
  }

  /// Rule-backed. The rule receives strictly increasing edges.
  OrderedColoring(std::size_t n_vertices, std::size_t k, Color palette, Rule rule)
      : n_(n_vertices), k_(k), palette_(palette), rule_(std::make_shared<Rule const>(std::move(rule))) {
    if (k_ < 1) throw ContractError("uniformity must be positive");
  }

  /// Constant coloring with color 1.
  static OrderedColoring monochromatic(std::size_t n_vertices, std::size_t k, Color palette = 1) {
    return OrderedColoring(n_vertices, k, palette, std::vector<Color>(binomial(n_vertices, k), 1));
  }

  /// Every edge gets its own color (colex rank + 1).
  static OrderedColoring rainbow(std::size_t n_vertices, std::size_t k) {
    std::vector<Color> t(binomial(n_vertices, k));
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i + 1;
    return OrderedColoring(n_vertices, k, std::max<Color>(t.size(), 1), std::move(t));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t uniformity() const noexcept { return k_; }
  Color palette() const noexcept { return palette_; }
  std::uint64_t edge_count() const { return binomial(n_, k_); }
  bool materialized() const noexcept { return static_cast<bool>(table_); }

  /// Color of a strictly increasing edge, without validation.
  Color operator()(std::span<Vertex const> edge) const {
    return table_ ? (*table_)[colex_rank(edge)] : (*rule_)(edge);
  }

  Color color(std::span<Vertex const> edge) const {
    if (edge.size() != k_) throw ContractError("edge has wrong size");
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (edge[i] < 1 || edge[i] > n_) throw RangeError("edge vertex outside [1, N]");
      if (i && edge[i - 1] >= edge[i]) throw ContractError("edge vertices must be strictly increasing");
    }
    return (*this)(edge);
  }

  std::span<Color const> table() const {
    if (!table_) throw CapabilityError("rule-backed coloring has no table; materialize it first");
    return *table_;
  }

  /// Table-backed copy; evaluates the rule on every edge.
  OrderedColoring materialize() const {
    if (table_) return *this;
    std::vector<Color> t;
    t.reserve(edge_count());
    for_each_edge(n_, k_, [&](std::span<Vertex const> e) { t.push_back((*rule_)(e)); });
    return OrderedColoring(n_, k_, palette_, std::move(t));
  }

  /// Same coloring with color c replaced by perm[c - 1].
  OrderedColoring permute_palette(std::span<Color const> perm) const {
    if (perm.size() != palette_) throw ContractError("palette permutation has wrong size");
    auto base = materialize();
    std::vector<Color> t(base.table().begin(), base.table().end());
    for (auto& c : t) c = perm[c - 1];
    return OrderedColoring(n_, k_, palette_, std::move(t));
  }

  friend bool operator==(OrderedColoring const& a, OrderedColoring const& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_ || a.palette_ != b.palette_) return false;
    auto ta = a.materialize();
    auto tb = b.materialize();
    return std::ranges::equal(ta.table(), tb.table());
  }

 private:
  std::size_t n_;
  std::size_t k_;
  Color palette_;
  std::shared_ptr<std::vector<Color> const> table_;
  std::shared_ptr<Rule const> rule_;
};

/// Lifts a k-uniform coloring to uniformity k+1 by coloring each (k+1)-edge
/// with the color of its first k vertices.
inline OrderedColoring lift_coloring(OrderedColoring const& phi) {
  if (phi.vertex_count() < phi.uniformity() + 1)
    throw ContractError("lift needs N >= k + 1 vertices");
  std::size_t const k = phi.uniformity();
  return OrderedColoring(phi.vertex_count(), k + 1, phi.palette(),
                         [phi, k](std::span<Vertex const> e) { return phi(e.first(k)); });
}

/// Two-coloring of K_{n^2} with no monochromatic monotone path of n edges.
/// Vertex v is the grid point (a, b) with v - 1 = (a - 1) n + (b - 1); an edge
/// is colored 1 when both ends share a, else 2. Color-1 paths stay inside a
/// row of n vertices and color-2 paths visit each row at most once.
inline OrderedColoring es_coloring_2(std::size_t n) {
  if (n < 2) throw ContractError("es_coloring_2 needs n >= 2");
  std::size_t const big_n = n * n;
  std::vector<Color> t;
  t.reserve(binomial(big_n, 2));
  for_each_edge(big_n, 2, [&](std::span<Vertex const> e) {
    t.push_back((e[0] - 1) / n == (e[1] - 1) / n ? 1 : 2);
  });
  return OrderedColoring(big_n, 2, 2, std::move(t));
}

// Text format: optional "# format=1" line, header "k N q", then one line per
// edge "v1 ... vk c" with ascending vertices, lines in colex order.

inline void write_coloring(std::ostream& os, OrderedColoring const& chi) {
  auto m = chi.materialize();
  auto table = m.table();
  os << "# format=1\n" << chi.uniformity() << ' ' << chi.vertex_count() << ' ' << chi.palette() << '\n';
  std::size_t idx = 0;
  for_each_edge(chi.vertex_count(), chi.uniformity(), [&](std::span<Vertex const> e) {
    for (auto v : e) os << v << ' ';
    os << table[idx++] << '\n';
  });
}

inline OrderedColoring read_coloring(std::istream& is) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ContractError("coloring file: missing header");
  std::size_t k = 0, n = 0;
  Color q = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> k >> n >> q)) throw ContractError("coloring file: malformed header, expected 'k N q'");
  }
  std::uint64_t const expected = binomial(n, k);
  std::vector<Color> table;
  table.reserve(expected);
  std::vector<Vertex> got(k);
  for_each_edge(n, k, [&](std::span<Vertex const> e) {
    if (!next_line()) throw ContractError("coloring file: fewer edge lines than C(N, k)");
    std::istringstream ls(line);
    for (auto& v : got)
      if (!(ls >> v)) throw ContractError("coloring file: malformed edge line '" + line + "'");
    Color c = 0;
    if (!(ls >> c)) throw ContractError("coloring file: missing color on line '" + line + "'");
    if (!std::ranges::equal(got, e)) throw ContractError("coloring file: edge lines must be in colex order");
    table.push_back(c);
  });
  if (next_line()) throw ContractError("coloring file: more edge lines than C(N, k)");
  return OrderedColoring(n, k, q, std::move(table));
}

}  // namespace tmpr
