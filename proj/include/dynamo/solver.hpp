#pragma once

#include <algorithm>
#include <stdexcept>

#include "dynamo/activation.hpp"
#include "dynamo/decomposition.hpp"
#include "dynamo/ordering.hpp"
#include "dynamo/rational.hpp"
#include "dynamo/strong_solver.hpp"

namespace dynamo {

/// Strict-majority dynamo of size at most floor(n/2) for any 2-cycle-free
/// digraph with positive minimum in-degree. Each non-trivial strongly
/// connected component is solved on its own, under thresholds computed from
/// in-degrees inside the component; singleton components contribute nothing
/// because all their in-neighbours lie in earlier components. The union is
/// re-verified against the global thresholds.
inline VertexSet strict_majority_dynamo(const DirectedGraph& g) {
  require_positive_in_degree(g);
  require_no_two_cycle(g);
  const std::size_t n = g.vertex_count();
  const Condensation cond = condensation(g);

  VertexSet result(n);
  for (const auto& component : cond.components) {
    if (component.size() == 1) continue;
    const InducedSubgraph sub = induced_subgraph(g, VertexSet::of(n, component));
    for (Vertex v : half_dynamo_strong(sub.graph).members()) result.insert(sub.to_global[v]);
  }

  if (result.size() > n / 2)
    throw std::logic_error("strict_majority_dynamo: size bound violated");
  if (!is_dynamo(g, strict_majority(g), result))
    throw std::logic_error("strict_majority_dynamo: composed set is not a dynamo");
  return result;
}

struct BoundsReport {
  Rational abw_upper;  // expected permutation_dynamo size
  Rational ksz_lower;  // n (t_bar - epsilon) / t_max
  Rational epsilon;    // |E| / n
  Rational t_bar;      // mean threshold
  std::uint32_t t_max = 0;
};

/// Lower bound on every dynamo: n (1 - eps/t_bar)(t_bar/t_max), eps = |E|/n.
/// Every non-seed consumes tau(v) distinct in-edges, so
/// |E| >= sum(tau) - |M| t_max. May be non-positive (vacuous).
inline Rational bound_ksz_lower(const DirectedGraph& g, const ThresholdAssignment& tau) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  Rational sum = 0;
  std::uint32_t t_max = 0;
  for (Vertex v = 0; v < n; ++v) {
    sum += tau[v];
    t_max = std::max(t_max, tau[v]);
  }
  const Rational t_bar = sum / static_cast<long long>(n);
  const Rational epsilon(static_cast<long long>(g.edge_count()), static_cast<long long>(n));
  return static_cast<long long>(n) * (t_bar - epsilon) / t_max;
}

inline BoundsReport bounds_report(const DirectedGraph& g, const ThresholdAssignment& tau) {
  BoundsReport report;
  const std::size_t n = g.vertex_count();
  report.abw_upper = abw_expected_size(g, tau);
  report.ksz_lower = bound_ksz_lower(g, tau);
  if (n == 0) return report;
  Rational sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    sum += tau[v];
    report.t_max = std::max(report.t_max, tau[v]);
  }
  report.t_bar = sum / static_cast<long long>(n);
  report.epsilon =
      Rational(static_cast<long long>(g.edge_count()), static_cast<long long>(n));
  return report;
}

}  // namespace dynamo
