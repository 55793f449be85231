#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "antimagic/graph.hpp"

namespace oracle {

inline std::vector<std::int64_t> weights(const antimagic::Graph& g,
                                         const std::vector<std::int64_t>& labels) {
  std::vector<std::int64_t> w(g.order(), 0);
  for (std::size_t e = 0; e < g.size(); ++e) {
    w[g.edges()[e].u] += labels[e];
    w[g.edges()[e].v] += labels[e];
  }
  return w;
}

inline bool local_antimagic(const antimagic::Graph& g, const std::vector<std::int64_t>& labels) {
  const auto w = weights(g, labels);
  for (const auto& e : g.edges())
    if (w[e.u] == w[e.v]) return false;
  return true;
}

inline std::size_t colors(const antimagic::Graph& g, const std::vector<std::int64_t>& labels) {
  const auto w = weights(g, labels);
  return std::set<std::int64_t>(w.begin(), w.end()).size();
}

// Minimum color count over all q! labelings. nullopt if none is local
// antimagic.
inline std::optional<std::size_t> chi_la(const antimagic::Graph& g) {
  std::vector<std::int64_t> labels(g.size());
  std::iota(labels.begin(), labels.end(), 1);
  std::optional<std::size_t> best;
  do {
    if (!local_antimagic(g, labels)) continue;
    const std::size_t c = colors(g, labels);
    if (!best || c < *best) best = c;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

inline std::int64_t triangular(std::int64_t k) {
  std::int64_t s = 0;
  for (std::int64_t i = 1; i <= k; ++i) s += i;
  return s;
}

// Random connected simple graph: a random spanning tree plus extra edges.
inline antimagic::Graph random_connected(std::mt19937& rng, int p, int q) {
  using antimagic::Edge;
  using antimagic::VertexId;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<Edge> edges;
  for (int v = 1; v < p; ++v) {
    const auto parent = static_cast<VertexId>(std::uniform_int_distribution<int>(0, v - 1)(rng));
    edges.push_back({parent, static_cast<VertexId>(v)});
    seen.emplace(parent, static_cast<VertexId>(v));
  }
  const int max_edges = p * (p - 1) / 2;
  while (static_cast<int>(edges.size()) < std::min(q, max_edges)) {
    auto a = static_cast<VertexId>(std::uniform_int_distribution<int>(0, p - 1)(rng));
    auto b = static_cast<VertexId>(std::uniform_int_distribution<int>(0, p - 1)(rng));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.emplace(a, b).second) edges.push_back({a, b});
  }
  std::vector<antimagic::VertexRole> roles;
  for (int v = 1; v <= p; ++v) roles.push_back(antimagic::VertexRole::vertex(v));
  return antimagic::Graph(static_cast<std::size_t>(p), std::move(edges), std::move(roles));
}

}  // namespace oracle
