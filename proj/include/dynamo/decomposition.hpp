#pragma once

#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "dynamo/graph.hpp"

namespace dynamo {

/// Strongly connected components C_1..C_t in topological order: every edge
/// between two components goes from the lower index to the higher one.
struct Condensation {
  std::vector<std::vector<Vertex>> components;  // each sorted by id
  std::vector<std::size_t> component_of;        // vertex -> component index
  std::vector<std::pair<std::size_t, std::size_t>> dag_edges;  // sorted, deduplicated
};

namespace detail {

// Iterative Tarjan; returns component labels (arbitrary numbering) and count.
inline std::pair<std::vector<std::size_t>, std::size_t> tarjan_labels(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), label(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // vertex, next out-edge
  std::size_t counter = 0, labels = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      auto out = g.out_neighbors(v);
      if (next < out.size()) {
        Vertex w = out[next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          label[w] = labels;
        } while (w != v);
        ++labels;
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return {std::move(label), labels};
}

}  // namespace detail

/// Linear-time condensation. Among valid topological orders the one chosen
/// always emits next the available component with the smallest vertex id.
inline Condensation condensation(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  auto [label, count] = detail::tarjan_labels(g);

  std::vector<std::vector<Vertex>> raw(count);
  for (Vertex v = 0; v < n; ++v) raw[label[v]].push_back(v);  // sorted by construction

  std::vector<std::set<std::size_t>> succ(count);
  std::vector<std::size_t> indeg(count, 0);
  for (const auto& [u, v] : g.edges())
    if (label[u] != label[v] && succ[label[u]].insert(label[v]).second) ++indeg[label[v]];

  using Item = std::pair<Vertex, std::size_t>;  // (smallest id, raw label)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t c = 0; c < count; ++c)
    if (indeg[c] == 0) ready.emplace(raw[c].front(), c);

  std::vector<std::size_t> position(count);
  Condensation out;
  out.components.reserve(count);
  while (!ready.empty()) {
    auto [_, c] = ready.top();
    ready.pop();
    position[c] = out.components.size();
    out.components.push_back(std::move(raw[c]));
    for (std::size_t d : succ[c])
      if (--indeg[d] == 0) ready.emplace(raw[d].front(), d);
  }

  out.component_of.resize(n);
  for (Vertex v = 0; v < n; ++v) out.component_of[v] = position[label[v]];
  for (std::size_t c = 0; c < count; ++c)
    for (std::size_t d : succ[c]) out.dag_edges.emplace_back(position[c], position[d]);
  std::sort(out.dag_edges.begin(), out.dag_edges.end());
  return out;
}

inline bool is_strongly_connected(const DirectedGraph& g) {
  if (g.vertex_count() == 0) return false;
  return detail::tarjan_labels(g).second == 1;
}

}  // namespace dynamo
