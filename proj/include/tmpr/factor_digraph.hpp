#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tmpr/word.hpp"

namespace tmpr {

namespace detail {

// Vertex id of every length-`len` window, ids assigned by first occurrence.
template <Token T>
std::vector<std::size_t> window_ids(Word<T> const& s, std::size_t len) {
  std::size_t const count = s.size() - len + 1;
  std::vector<std::size_t> ids(count);
  if (s.size() <= 48) {
    std::vector<std::size_t> firsts;
    for (std::size_t i = 0; i < count; ++i) {
      auto wi = s.window(i, len);
      std::size_t id = firsts.size();
      for (std::size_t k = 0; k < firsts.size(); ++k) {
        if (std::ranges::equal(wi, s.window(firsts[k], len))) {
          id = k;
          break;
        }
      }
      if (id == firsts.size()) firsts.push_back(i);
      ids[i] = id;
    }
    return ids;
  }
  auto hash = [&](std::size_t i) { return hash_window(s.window(i, len)); };
  auto eq = [&](std::size_t i, std::size_t j) { return std::ranges::equal(s.window(i, len), s.window(j, len)); };
  std::unordered_map<std::size_t, std::size_t, decltype(hash), decltype(eq)> first_id(count, hash, eq);
  for (std::size_t i = 0; i < count; ++i) {
    auto [it, fresh] = first_id.try_emplace(i, first_id.size());
    ids[i] = it->second;
  }
  return ids;
}

}  // namespace detail

/// The factor (Rauzy) digraph D_l of a word: vertices are the distinct
/// l-blocks, arcs are the distinct (l+1)-blocks joining prefix to suffix.
/// `walk` is the vertex sequence traced by the word itself.
template <Token T>
struct FactorDigraph {
  std::size_t order;  // l
  std::vector<Block<T>> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::vector<std::size_t> walk;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t arc_count() const noexcept { return arcs.size(); }

  std::vector<std::size_t> out_degrees() const {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (auto const& [from, to] : arcs) ++deg[from];
    return deg;
  }
};

template <Token T>
FactorDigraph<T> factor_digraph(Word<T> const& s, std::size_t order) {
  if (order < 1 || order >= s.size())
    throw RangeError("factor digraph order must lie in [1, |S|-1]");
  FactorDigraph<T> g;
  g.order = order;
  g.walk = detail::window_ids(s, order);
  for (std::size_t i = 0; i < g.walk.size(); ++i) {
    if (g.walk[i] == g.vertices.size()) {
      auto w = s.window(i, order);
      g.vertices.push_back({i + 1, std::vector<T>(w.begin(), w.end())});
    }
  }
  // Arcs correspond one-to-one with distinct (l+1)-blocks, so dedupe on those.
  auto const next = detail::window_ids(s, order + 1);
  std::vector<bool> seen(g.walk.size(), false);
  for (std::size_t i = 0; i + 1 < g.walk.size(); ++i) {
    if (seen[next[i]]) continue;
    seen[next[i]] = true;
    g.arcs.emplace_back(g.walk[i], g.walk[i + 1]);
  }
  return g;
}

}  // namespace tmpr
