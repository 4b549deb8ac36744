#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dynamo/error.hpp"

namespace dynamo {

using Edge = std::pair<Vertex, Vertex>;

/// Membership bitmap over the vertex ids 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}

  static VertexSet of(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members) {
    return of(universe, std::span<const Vertex>(members.begin(), members.size()));
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), true);
    s.count_ = universe;
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Vertex v) const { return v < bits_.size() && bits_[v]; }

  void insert(Vertex v) {
    check(v);
    if (!bits_[v]) {
      bits_[v] = true;
      ++count_;
    }
  }
  void erase(Vertex v) {
    check(v);
    if (bits_[v]) {
      bits_[v] = false;
      --count_;
    }
  }

  /// Members in increasing id order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (Vertex v = 0; v < bits_.size(); ++v)
      if (bits_[v]) out.push_back(v);
    return out;
  }

  VertexSet complement() const {
    VertexSet c(bits_.size());
    for (Vertex v = 0; v < bits_.size(); ++v)
      if (!bits_[v]) c.insert(v);
    return c;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (Vertex v = 0; v < bits_.size(); ++v)
      if (bits_[v] && !other.contains(v)) return false;
    return true;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  void check(Vertex v) const {
    if (v >= bits_.size())
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(bits_.size()),
                  v);
  }

  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// Immutable simple digraph on dense ids 0..n-1. Antiparallel pairs are
/// allowed; self-loops and repeated ordered pairs are not.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  static DirectedGraph build(std::size_t n, std::vector<Edge> edge_list) {
    for (const auto& [u, v] : edge_list) {
      if (u >= n || v >= n)
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint >= n=" + std::to_string(n),
                    u, v);
      if (u == v)
        throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(v),
                    v);
    }
    std::vector<Edge> sorted = edge_list;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(it->first) + "," +
                      std::to_string(it->second) + ") appears more than once",
                  it->first, it->second);

    DirectedGraph g;
    g.n_ = n;
    g.in_.assign(n, {});
    g.out_.assign(n, {});
    for (const auto& [u, v] : sorted) {
      g.out_[u].push_back(v);
      g.in_[v].push_back(u);
    }
    for (auto& list : g.in_) std::sort(list.begin(), list.end());
    g.edges_ = std::move(sorted);
    return g;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges sorted lexicographically by (tail, head).
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }
  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::vector<Vertex>> out_;
};

inline DirectedGraph build_graph(std::size_t n, std::vector<Edge> edge_list) {
  return DirectedGraph::build(n, std::move(edge_list));
}

/// Simple undirected graph. Edges keep their input order and orientation;
/// the reductions rely on both.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  static UndirectedGraph build(std::size_t n, std::vector<Edge> edge_list) {
    std::vector<Edge> normalized;
    normalized.reserve(edge_list.size());
    for (const auto& [u, v] : edge_list) {
      if (u >= n || v >= n)
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} has an endpoint >= n=" + std::to_string(n),
                    u, v);
      if (u == v)
        throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(v),
                    v);
      normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (auto it = std::adjacent_find(normalized.begin(), normalized.end());
        it != normalized.end())
      throw Error(ErrorCode::DuplicateEdge,
                  "edge {" + std::to_string(it->first) + "," +
                      std::to_string(it->second) + "} appears more than once",
                  it->first, it->second);

    UndirectedGraph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edge_list) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    g.edges_ = std::move(edge_list);
    return g;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Per-vertex positive integer thresholds. Values above the in-degree are
/// legal: such a vertex can only be active if it is seeded.
class ThresholdAssignment {
 public:
  ThresholdAssignment() = default;
  explicit ThresholdAssignment(std::vector<std::uint32_t> tau) : tau_(std::move(tau)) {
    for (Vertex v = 0; v < tau_.size(); ++v)
      if (tau_[v] == 0)
        throw Error(ErrorCode::InvalidArgument,
                    "threshold of vertex " + std::to_string(v) + " must be positive", v);
  }

  static ThresholdAssignment constant(std::size_t n, std::uint32_t t) {
    return ThresholdAssignment(std::vector<std::uint32_t>(n, t));
  }

  std::size_t size() const noexcept { return tau_.size(); }
  std::uint32_t operator[](Vertex v) const { return tau_.at(v); }
  std::span<const std::uint32_t> values() const noexcept { return tau_; }

  friend bool operator==(const ThresholdAssignment&, const ThresholdAssignment&) = default;

 private:
  std::vector<std::uint32_t> tau_;
};

/// d(A,B): number of edges with tail in A and head in B.
inline std::size_t edge_count_between(const DirectedGraph& g, const VertexSet& a,
                                      const VertexSet& b) {
  std::size_t count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!b.contains(v)) continue;
    for (Vertex u : g.in_neighbors(v))
      if (a.contains(u)) ++count;
  }
  return count;
}

/// d(A,{v}).
inline std::size_t edge_count_into(const DirectedGraph& g, const VertexSet& a, Vertex v) {
  std::size_t count = 0;
  for (Vertex u : g.in_neighbors(v))
    if (a.contains(u)) ++count;
  return count;
}

inline void require_positive_in_degree(const DirectedGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) == 0)
      throw Error(ErrorCode::ZeroInDegree,
                  "vertex " + std::to_string(v) + " has in-degree zero", v);
}

/// tau(v) = ceil((deg_in(v) + 1) / 2).
inline ThresholdAssignment strict_majority(const DirectedGraph& g) {
  require_positive_in_degree(g);
  std::vector<std::uint32_t> tau(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    tau[v] = static_cast<std::uint32_t>((g.in_degree(v) + 2) / 2);
  return ThresholdAssignment(std::move(tau));
}

/// tau(v) = max(1, ceil(deg_in(v) / 2)).
inline ThresholdAssignment simple_majority(const DirectedGraph& g) {
  require_positive_in_degree(g);
  std::vector<std::uint32_t> tau(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    tau[v] = std::max<std::uint32_t>(1, static_cast<std::uint32_t>((g.in_degree(v) + 1) / 2));
  return ThresholdAssignment(std::move(tau));
}

/// Some antiparallel pair (u,v) with u < v, the lexicographically smallest.
inline std::optional<Edge> has_two_cycle(const DirectedGraph& g) {
  for (const auto& [u, v] : g.edges())
    if (u < v && g.has_edge(v, u)) return Edge{u, v};
  return std::nullopt;
}

inline void require_no_two_cycle(const DirectedGraph& g) {
  if (auto pair = has_two_cycle(g))
    throw Error(ErrorCode::TwoCyclePresent,
                "antiparallel edges between " + std::to_string(pair->first) + " and " +
                    std::to_string(pair->second),
                pair->first, pair->second);
}

/// Induced subgraph plus the id maps in both directions. Local ids follow
/// increasing global id.
struct InducedSubgraph {
  DirectedGraph graph;
  std::vector<Vertex> to_global;
  std::vector<Vertex> to_local;  // Error::npos for vertices outside the set

  VertexSet lift(const VertexSet& local, std::size_t universe) const {
    VertexSet out(universe);
    for (Vertex v : local.members()) out.insert(to_global[v]);
    return out;
  }
};

inline InducedSubgraph induced_subgraph(const DirectedGraph& g, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "induced subgraph of an empty set");
  if (s.universe() != g.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "vertex set universe does not match graph");
  InducedSubgraph sub;
  sub.to_global = s.members();
  sub.to_local.assign(g.vertex_count(), Error::npos);
  for (Vertex i = 0; i < sub.to_global.size(); ++i) sub.to_local[sub.to_global[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) edges.emplace_back(sub.to_local[u], sub.to_local[v]);
  sub.graph = DirectedGraph::build(sub.to_global.size(), std::move(edges));
  return sub;
}

}  // namespace dynamo
