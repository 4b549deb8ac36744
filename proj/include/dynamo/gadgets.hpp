#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "dynamo/decomposition.hpp"
#include "dynamo/graph.hpp"

namespace dynamo {

/// Orientation of K5 as the union of the directed 5-cycles i -> i+1 and
/// i -> i+2 (mod 5). Every in- and out-degree is 2.
inline DirectedGraph two_regular_k5() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, (i + 2) % 5);
  }
  return build_graph(5, std::move(edges));
}

/// k disjoint copies of two_regular_k5 (copy j on ids 5j..5j+4) plus a sink
/// x = 5k fed by one edge 5j -> x from each copy.
inline DirectedGraph lower_bound_family(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "lower_bound_family needs k >= 1");
  const Vertex sink = 5 * k;
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < k; ++j) {
    const Vertex base = 5 * j;
    for (Vertex i = 0; i < 5; ++i) {
      edges.emplace_back(base + i, base + (i + 1) % 5);
      edges.emplace_back(base + i, base + (i + 2) % 5);
    }
    edges.emplace_back(base, sink);
  }
  return build_graph(5 * k + 1, std::move(edges));
}

/// Every ordered pair is an edge, so every pair is a 2-cycle.
inline DirectedGraph bidirectional_complete(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "bidirectional_complete needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) edges.emplace_back(u, v);
  return build_graph(n, std::move(edges));
}

struct ThresholdedGraph {
  DirectedGraph graph;
  ThresholdAssignment tau;
};

/// Constant-threshold-2 reduction. Each undirected edge {u,v} (in input
/// order, oriented as given) becomes the widget
///   a -> b -> c -> a,  v -> a,  a -> u,  u -> v
/// on fresh ids a, b, c appended after the original vertices. b and c have
/// in-degree 1 and so belong to every dynamo; with them seeded, a needs only
/// v. Minimum dynamo sizes satisfy d(H) = d(G) + 2|E(G)|.
inline ThresholdedGraph reduce_constant_threshold(const UndirectedGraph& gu) {
  const std::size_t n0 = gu.vertex_count();
  const std::size_t n = n0 + 3 * gu.edge_count();
  std::vector<Edge> edges;
  Vertex next = n0;
  for (const auto& [u, v] : gu.edges()) {
    const Vertex a = next++, b = next++, c = next++;
    edges.insert(edges.end(), {{a, b}, {b, c}, {c, a}, {v, a}, {a, u}, {u, v}});
  }
  DirectedGraph h = build_graph(n, std::move(edges));

  for (Vertex w = 0; w < n0; ++w)
    if (h.in_degree(w) != gu.degree(w))
      throw std::logic_error("reduce_constant_threshold: original in-degree mismatch");
  for (Vertex a = n0; a < n; a += 3)
    if (h.in_degree(a) != 2 || h.in_degree(a + 1) != 1 || h.in_degree(a + 2) != 1)
      throw std::logic_error("reduce_constant_threshold: widget in-degree mismatch");

  return {std::move(h), ThresholdAssignment::constant(n, 2)};
}

/// Strict-majority reduction. Each undirected edge {u,v} becomes an upper
/// directed triangle L -> A -> R -> L, a bridge A -> x and a lower directed
/// triangle u -> v -> x -> u, on fresh ids L, A, R, x. Original vertices
/// keep their degree as in-degree; minimum strict-majority dynamo sizes
/// satisfy dyn(H) = dyn(G) + |E(G)|.
inline DirectedGraph reduce_strict_majority(const UndirectedGraph& gu) {
  const std::size_t n0 = gu.vertex_count();
  for (Vertex w = 0; w < n0; ++w)
    if (gu.degree(w) == 0)
      throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(w) + " is isolated", w);
  const std::size_t n = n0 + 4 * gu.edge_count();
  std::vector<Edge> edges;
  Vertex next = n0;
  for (const auto& [u, v] : gu.edges()) {
    const Vertex l = next++, a = next++, r = next++, x = next++;
    edges.insert(edges.end(), {{l, a}, {a, r}, {r, l}, {a, x}, {u, v}, {v, x}, {x, u}});
  }
  DirectedGraph h = build_graph(n, std::move(edges));

  for (Vertex w = 0; w < n0; ++w)
    if (h.in_degree(w) != gu.degree(w))
      throw std::logic_error("reduce_strict_majority: original in-degree mismatch");
  for (Vertex l = n0; l < n; l += 4)
    if (h.in_degree(l) != 1 || h.in_degree(l + 1) != 1 || h.in_degree(l + 2) != 1 ||
        h.in_degree(l + 3) != 2)
      throw std::logic_error("reduce_strict_majority: widget in-degree mismatch");
  return h;
}

namespace detail {

inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

// Fisher-Yates with the portable draw above (std::shuffle is not
// reproducible across standard libraries).
template <class T>
void portable_shuffle(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[uniform_below(rng, i)]);
}

// Adds up to `extra` random edges between pairs that have no edge in
// either direction.
inline void add_random_free_edges(std::size_t n, std::vector<Edge>& edges, std::size_t extra,
                                  std::mt19937_64& rng) {
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : edges) used[u][v] = used[v][u] = true;
  std::vector<Edge> free;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!used[u][v]) free.emplace_back(u, v);
  portable_shuffle(free, rng);
  for (std::size_t i = 0; i < std::min(extra, free.size()); ++i) {
    auto [u, v] = free[i];
    if (rng() & 1) std::swap(u, v);
    edges.emplace_back(u, v);
  }
}

}  // namespace detail

/// Random Hamiltonian cycle plus up to `extra_edges` random edges, never
/// creating an antiparallel pair. Deterministic for a given seed.
inline DirectedGraph random_strongly_connected(std::size_t n, std::size_t extra_edges,
                                               std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "random_strongly_connected needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  detail::portable_shuffle(perm, rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(perm[i], perm[(i + 1) % n]);
  detail::add_random_free_edges(n, edges, extra_edges, rng);
  return build_graph(n, std::move(edges));
}

/// 2-cycle-free digraph with positive minimum in-degree and, in general,
/// several strongly connected components: random blocks (strongly connected
/// pieces of size >= 3 or singletons) in a random topological order, joined
/// by forward edges. The first block is never a singleton, and every later
/// block receives at least one edge from an earlier one.
inline DirectedGraph random_multi_component(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "random_multi_component needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> blocks;
  std::size_t placed = 0;
  while (placed < n) {
    const std::size_t left = n - placed;
    std::size_t size;
    if (!blocks.empty() && (left < 3 || detail::uniform_below(rng, 3) == 0)) {
      size = 1;
    } else {
      size = 3 + detail::uniform_below(rng, std::min<std::size_t>(left - 2, 6));
    }
    std::vector<Vertex> block;
    for (std::size_t i = 0; i < size; ++i) block.push_back(placed++);
    blocks.push_back(std::move(block));
  }

  std::vector<Vertex> relabel(n);
  for (Vertex v = 0; v < n; ++v) relabel[v] = v;
  detail::portable_shuffle(relabel, rng);

  std::vector<Edge> edges;
  for (const auto& block : blocks) {
    if (block.size() < 3) continue;
    const DirectedGraph inner =
        random_strongly_connected(block.size(), detail::uniform_below(rng, block.size()), rng());
    for (const auto& [u, v] : inner.edges()) edges.emplace_back(block[u], block[v]);
  }
  std::size_t earlier = blocks.front().size();
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b]) {
      const std::size_t feeds = (blocks[b].size() == 1 || v == blocks[b].front())
                                    ? 1 + detail::uniform_below(rng, 2)
                                    : detail::uniform_below(rng, 2);
      std::vector<Vertex> sources;
      for (std::size_t i = 0; i < feeds; ++i) {
        const Vertex u = detail::uniform_below(rng, earlier);
        if (std::find(sources.begin(), sources.end(), u) == sources.end()) sources.push_back(u);
      }
      for (Vertex u : sources) edges.emplace_back(u, v);
    }
    earlier += blocks[b].size();
  }
  for (auto& [u, v] : edges) {
    u = relabel[u];
    v = relabel[v];
  }
  return build_graph(n, std::move(edges));
}

namespace detail {

// Randomized backtracking search for a Hamiltonian cycle using only pairs
// with no edge in either direction yet. Gives up after `budget` steps.
inline bool free_hamiltonian_cycle(std::size_t n, const std::vector<std::vector<bool>>& used,
                                   std::mt19937_64& rng, std::size_t budget,
                                   std::vector<Vertex>& path) {
  std::vector<std::vector<Vertex>> options(n);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<bool> on_path(n, false);
  path.assign(1, uniform_below(rng, n));
  on_path[path[0]] = true;
  auto fill = [&](Vertex u) {
    options[u].clear();
    for (Vertex v = 0; v < n; ++v)
      if (!on_path[v] && !used[u][v] && !used[v][u]) options[u].push_back(v);
    portable_shuffle(options[u], rng);
    cursor[u] = 0;
  };
  fill(path[0]);
  for (std::size_t steps = 0; steps < budget && !path.empty(); ++steps) {
    const Vertex u = path.back();
    if (path.size() == n) {
      if (!used[u][path[0]] && !used[path[0]][u]) return true;
      on_path[u] = false;
      path.pop_back();
      continue;
    }
    bool advanced = false;
    while (cursor[u] < options[u].size()) {
      const Vertex v = options[u][cursor[u]++];
      if (on_path[v]) continue;
      path.push_back(v);
      on_path[v] = true;
      fill(v);
      advanced = true;
      break;
    }
    if (!advanced) {
      on_path[u] = false;
      path.pop_back();
    }
  }
  return false;
}

}  // namespace detail

/// Union of `cycles` random Hamiltonian cycles that share no vertex pair,
/// drawn cycle by cycle. Every in-degree equals `cycles`, so an even count
/// gives the all-even case that can end in the balanced state.
inline DirectedGraph random_regular_union(std::size_t n, std::size_t cycles, std::uint64_t seed) {
  if (n < 3 || cycles == 0 || 2 * cycles > n - 1)
    throw Error(ErrorCode::InvalidArgument, "random_regular_union needs n >= 2*cycles + 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> path;
  for (int restart = 0; restart < 500; ++restart) {
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    std::vector<Edge> edges;
    std::size_t placed = 0;
    for (; placed < cycles; ++placed) {
      if (!detail::free_hamiltonian_cycle(n, used, rng, 20 * n * n, path)) break;
      for (std::size_t i = 0; i < n; ++i) {
        const Vertex u = path[i], v = path[(i + 1) % n];
        used[u][v] = true;
        edges.emplace_back(u, v);
      }
    }
    if (placed == cycles) return build_graph(n, std::move(edges));
  }
  throw Error(ErrorCode::InvalidArgument, "random_regular_union: no admissible union found");
}

}  // namespace dynamo
