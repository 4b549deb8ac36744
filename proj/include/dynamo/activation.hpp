#pragma once

#include <vector>

#include "dynamo/graph.hpp"

namespace dynamo {

/// Layer partition D_0, D_1, ..., D_t of one synchronous run. Each layer is
/// sorted by id; layers after the first are never empty.
struct ActivationTrace {
  std::vector<std::vector<Vertex>> layers;
  VertexSet active;
  bool complete = false;
};

/// Synchronous irreversible threshold process: in every round all inactive
/// vertices with at least tau(v) active in-neighbours switch on together.
/// Runs in O(n + m) using per-vertex counters of active in-neighbours.
inline ActivationTrace activate(const DirectedGraph& g, const ThresholdAssignment& tau,
                                const VertexSet& seed) {
  const std::size_t n = g.vertex_count();
  if (tau.size() != n)
    throw Error(ErrorCode::InvalidArgument, "threshold assignment size does not match graph");
  if (seed.universe() != n)
    throw Error(ErrorCode::InvalidArgument, "seed universe does not match graph");

  ActivationTrace trace;
  trace.active = seed;
  trace.layers.push_back(seed.members());

  std::vector<std::uint32_t> hits(n, 0);
  std::vector<Vertex> frontier = trace.layers.front();
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex v : g.out_neighbors(u)) {
        if (trace.active.contains(v)) continue;
        // Counting only from previous layers keeps the round synchronous.
        if (++hits[v] == tau[v]) next.push_back(v);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    for (Vertex v : next) trace.active.insert(v);
    trace.layers.push_back(next);
    frontier = std::move(next);
  }
  trace.complete = trace.active.size() == n;
  return trace;
}

inline bool is_dynamo(const DirectedGraph& g, const ThresholdAssignment& tau,
                      const VertexSet& seed) {
  return activate(g, tau, seed).complete;
}

}  // namespace dynamo
