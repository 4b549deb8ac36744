#pragma once

#include <vector>

#include "dynamo/graph.hpp"
#include "dynamo/rational.hpp"

namespace dynamo {

/// Bijection between vertices and ranks 0..n-1 (rank 0 comes first).
class Ordering {
 public:
  Ordering() = default;

  /// `sequence[r]` is the vertex at rank r; must be a permutation of 0..n-1.
  explicit Ordering(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
    rank_.assign(seq_.size(), Error::npos);
    for (std::size_t r = 0; r < seq_.size(); ++r) {
      Vertex v = seq_[r];
      if (v >= seq_.size() || rank_[v] != Error::npos)
        throw Error(ErrorCode::InvalidArgument, "sequence is not a permutation", v);
      rank_[v] = r;
    }
  }

  static Ordering identity(std::size_t n) {
    std::vector<Vertex> seq(n);
    for (Vertex v = 0; v < n; ++v) seq[v] = v;
    return Ordering(std::move(seq));
  }

  std::size_t size() const noexcept { return seq_.size(); }
  std::size_t rank(Vertex v) const { return rank_.at(v); }
  Vertex at(std::size_t r) const { return seq_.at(r); }
  bool before(Vertex u, Vertex v) const { return rank(u) < rank(v); }
  const std::vector<Vertex>& sequence() const noexcept { return seq_; }

  Ordering reversed() const { return Ordering(std::vector<Vertex>(seq_.rbegin(), seq_.rend())); }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<Vertex> seq_;
  std::vector<std::size_t> rank_;
};

namespace detail {

inline void require_before(const Ordering& sigma, Vertex u, Vertex v) {
  if (sigma.rank(u) >= sigma.rank(v))
    throw Error(ErrorCode::NotBefore,
                "vertex " + std::to_string(u) + " is not ranked before " + std::to_string(v),
                u, v);
}

}  // namespace detail

/// Moves u to the rank currently held by v; the vertices strictly between
/// them shift one rank towards the front. Requires rank(u) < rank(v).
inline Ordering transmit_after(const Ordering& sigma, Vertex u, Vertex v) {
  detail::require_before(sigma, u, v);
  std::vector<Vertex> seq = sigma.sequence();
  const auto first = seq.begin() + static_cast<std::ptrdiff_t>(sigma.rank(u));
  const auto last = seq.begin() + static_cast<std::ptrdiff_t>(sigma.rank(v)) + 1;
  std::rotate(first, first + 1, last);
  return Ordering(std::move(seq));
}

/// Moves v to the rank currently held by u; the vertices from u up to (not
/// including) v shift one rank towards the back. Requires rank(u) < rank(v).
inline Ordering transmit_before(const Ordering& sigma, Vertex u, Vertex v) {
  detail::require_before(sigma, u, v);
  std::vector<Vertex> seq = sigma.sequence();
  const auto first = seq.begin() + static_cast<std::ptrdiff_t>(sigma.rank(u));
  const auto last = seq.begin() + static_cast<std::ptrdiff_t>(sigma.rank(v)) + 1;
  std::rotate(first, last - 1, last);
  return Ordering(std::move(seq));
}

/// Moves v to the front (no-op when it already is first).
inline Ordering transmit_to_front(const Ordering& sigma, Vertex v) {
  if (sigma.rank(v) == 0) return sigma;
  return transmit_before(sigma, sigma.at(0), v);
}

/// Moves v to the back (no-op when it already is last).
inline Ordering transmit_to_back(const Ordering& sigma, Vertex v) {
  if (sigma.rank(v) + 1 == sigma.size()) return sigma;
  return transmit_after(sigma, v, sigma.at(sigma.size() - 1));
}

/// f(v) = #(in-neighbours ranked after v) - #(in-neighbours ranked before v).
inline int f_value(const DirectedGraph& g, const Ordering& sigma, Vertex v) {
  int f = 0;
  const std::size_t r = sigma.rank(v);
  for (Vertex u : g.in_neighbors(v)) f += sigma.rank(u) > r ? 1 : -1;
  return f;
}

inline std::vector<int> f_values(const DirectedGraph& g, const Ordering& sigma) {
  std::vector<int> f(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) f[v] = f_value(g, sigma, v);
  return f;
}

/// Strict-majority seed set read off an ordering: the smaller of
/// {f >= 0} and {f <= 0}, preferring {f >= 0} on ties. Either set is a
/// dynamo, since the remaining vertices activate along sigma (resp. its
/// reverse) with a strict majority of in-neighbours already active.
inline VertexSet dynamo_from_ordering(const DirectedGraph& g, const Ordering& sigma) {
  require_positive_in_degree(g);
  const std::size_t n = g.vertex_count();
  VertexSet nonneg(n), nonpos(n);
  for (Vertex v = 0; v < n; ++v) {
    const int f = f_value(g, sigma, v);
    if (f >= 0) nonneg.insert(v);
    if (f <= 0) nonpos.insert(v);
  }
  return nonpos.size() < nonneg.size() ? nonpos : nonneg;
}

/// Vertices with fewer than tau(v) in-neighbours ranked before them. Always
/// a dynamo for (G, tau): the rest activate in sigma order.
inline VertexSet permutation_dynamo(const DirectedGraph& g, const ThresholdAssignment& tau,
                                    const Ordering& sigma) {
  const std::size_t n = g.vertex_count();
  VertexSet seeds(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t earlier = 0;
    for (Vertex u : g.in_neighbors(v))
      if (sigma.rank(u) < sigma.rank(v)) ++earlier;
    if (earlier < tau[v]) seeds.insert(v);
  }
  return seeds;
}

/// Expected size of permutation_dynamo under a uniform random ordering:
/// sum over v of min(tau(v), deg_in(v)+1) / (deg_in(v)+1).
inline Rational abw_expected_size(const DirectedGraph& g, const ThresholdAssignment& tau) {
  Rational total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t slots = g.in_degree(v) + 1;
    const std::size_t hits = std::min<std::size_t>(tau[v], slots);
    total += Rational(static_cast<long long>(hits), static_cast<long long>(slots));
  }
  return total;
}

}  // namespace dynamo
