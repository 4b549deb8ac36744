#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "dynamo/activation.hpp"
#include "dynamo/decomposition.hpp"
#include "dynamo/graph.hpp"

namespace dynamo {

/// {v : tau(v) > deg_in(v)}: vertices no dynamo can leave out.
inline VertexSet forced_vertices(const DirectedGraph& g, const ThresholdAssignment& tau) {
  VertexSet out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (tau[v] > g.in_degree(v)) out.insert(v);
  return out;
}

struct OracleOptions {
  /// Largest seed-set size to try; when set, the vertex limit is waived.
  std::optional<std::size_t> budget;
  std::size_t max_vertices = 22;
  /// Skip candidates that miss a known fort (see below). Disable only to
  /// cross-check the pruning on small graphs.
  bool prune = true;
};

struct MinDynamo {
  std::size_t size = 0;
  VertexSet witness;
};

namespace detail {

/// Activation with buffers reused across candidates.
class Activator {
 public:
  Activator(const DirectedGraph& g, const ThresholdAssignment& tau)
      : g_(g), tau_(tau), hits_(g.vertex_count()), active_(g.vertex_count()) {}

  /// Runs the process from `seed`; returns the number of active vertices.
  std::size_t run(std::span<const Vertex> seed) {
    std::fill(hits_.begin(), hits_.end(), 0);
    std::fill(active_.begin(), active_.end(), 0);
    queue_.clear();
    for (Vertex v : seed) {
      active_[v] = 1;
      queue_.push_back(v);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (Vertex v : g_.out_neighbors(queue_[head])) {
        if (active_[v]) continue;
        if (++hits_[v] >= tau_[v]) {
          active_[v] = 1;
          queue_.push_back(v);
        }
      }
    }
    return queue_.size();
  }

  bool active(Vertex v) const { return active_[v] != 0; }

 private:
  const DirectedGraph& g_;
  const ThresholdAssignment& tau_;
  std::vector<std::uint32_t> hits_;
  std::vector<std::uint8_t> active_;
  std::vector<Vertex> queue_;
};

/// Exhaustive search over k-subsets in lexicographic order.
///
/// A fort is a nonempty set F with d(V \ F, v) < tau(v) for every v in F:
/// nothing outside F can switch on the first vertex of F, so every dynamo
/// meets every fort. Forts are seeded from forced vertices and the source
/// components of G, and learned from failed candidates (the source
/// components of the inactive remainder are forts). Candidates that miss a
/// known fort are pruned without running the process.
class SubsetSearch {
 public:
  SubsetSearch(const DirectedGraph& g, const ThresholdAssignment& tau, bool prune)
      : g_(g), tau_(tau), n_(g.vertex_count()), prune_(prune), activator_(g, tau),
        forts_of_(n_), forts_ending_at_(n_), chosen_mask_(n_, 0) {
    if (prune_) {
      for (Vertex v = 0; v < n_; ++v)
        if (tau_[v] > g_.in_degree(v)) add_fort({v});
      learn(VertexSet::full(n_));
    }
  }

  /// Greedy count of pairwise disjoint known forts: a lower bound on any dynamo.
  std::size_t lower_bound() const {
    std::vector<std::size_t> idx(forts_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return forts_[a].size() < forts_[b].size(); });
    std::vector<bool> taken(n_, false);
    std::size_t count = 0;
    for (std::size_t i : idx) {
      bool free = true;
      for (Vertex v : forts_[i]) free = free && !taken[v];
      if (!free) continue;
      for (Vertex v : forts_[i]) taken[v] = true;
      ++count;
    }
    return count;
  }

  /// Visits the dynamos of size k in lexicographic order until `visit`
  /// returns false. Returns whether any was visited.
  bool enumerate(std::size_t k, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    chosen_.clear();
    found_any_ = false;
    stop_ = false;
    visit_ = &visit;
    dfs(0, k);
    return found_any_;
  }

 private:
  void add_fort(std::vector<Vertex> fort) {
    if (forts_.size() >= max_forts || !seen_.insert(fort).second) return;
    const std::size_t id = forts_.size();
    std::uint32_t hit = 0;
    for (Vertex v : fort) {
      forts_of_[v].push_back(id);
      hit += chosen_mask_[v];
    }
    forts_ending_at_[fort.back()].push_back(id);
    hits_.push_back(hit);
    if (hit == 0) ++unhit_;
    forts_.push_back(std::move(fort));
  }

  // Adds the source components of G[inactive] as forts.
  void learn(const VertexSet& inactive) {
    if (inactive.empty()) return;
    const InducedSubgraph sub = induced_subgraph(g_, inactive);
    const Condensation cond = condensation(sub.graph);
    std::vector<bool> has_pred(cond.components.size(), false);
    for (const auto& [from, to] : cond.dag_edges) has_pred[to] = true;
    for (std::size_t c = 0; c < cond.components.size(); ++c) {
      if (has_pred[c]) continue;
      std::vector<Vertex> fort;
      for (Vertex v : cond.components[c]) fort.push_back(sub.to_global[v]);
      add_fort(std::move(fort));
    }
  }

  void pick(Vertex v) {
    chosen_.push_back(v);
    chosen_mask_[v] = 1;
    for (std::size_t i = 0; i < forts_of_[v].size(); ++i)
      if (hits_[forts_of_[v][i]]++ == 0) --unhit_;
  }

  void unpick(Vertex v) {
    chosen_.pop_back();
    chosen_mask_[v] = 0;
    for (std::size_t i = 0; i < forts_of_[v].size(); ++i)
      if (--hits_[forts_of_[v][i]] == 0) ++unhit_;
  }

  void test_leaf() {
    if (prune_ && unhit_ > 0) return;
    if (activator_.run(chosen_) == n_) {
      found_any_ = true;
      if (!(*visit_)(chosen_)) stop_ = true;
      return;
    }
    if (prune_) {
      VertexSet inactive(n_);
      for (Vertex v = 0; v < n_; ++v)
        if (!activator_.active(v)) inactive.insert(v);
      learn(inactive);
    }
  }

  void dfs(Vertex next, std::size_t remaining) {
    if (stop_) return;
    if (remaining == 0) {
      test_leaf();
      return;
    }
    if (n_ - next < remaining) return;
    pick(next);
    dfs(next + 1, remaining - 1);
    unpick(next);
    if (stop_) return;
    if (prune_)
      for (std::size_t id : forts_ending_at_[next])
        if (hits_[id] == 0) return;  // skipping `next` leaves this fort unhittable
    dfs(next + 1, remaining);
  }

  static constexpr std::size_t max_forts = 50000;

  const DirectedGraph& g_;
  const ThresholdAssignment& tau_;
  std::size_t n_;
  bool prune_;
  Activator activator_;

  std::vector<std::vector<Vertex>> forts_;
  std::set<std::vector<Vertex>> seen_;
  std::vector<std::vector<std::size_t>> forts_of_;
  std::vector<std::vector<std::size_t>> forts_ending_at_;
  std::vector<std::uint32_t> hits_;
  std::size_t unhit_ = 0;

  std::vector<Vertex> chosen_;
  std::vector<std::uint8_t> chosen_mask_;
  bool found_any_ = false;
  bool stop_ = false;
  const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
};

inline void check_oracle_input(const DirectedGraph& g, const ThresholdAssignment& tau,
                               const OracleOptions& options) {
  if (tau.size() != g.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "threshold assignment size does not match graph");
  if (!options.budget && g.vertex_count() > options.max_vertices)
    throw Error(ErrorCode::TooLarge,
                "graph has " + std::to_string(g.vertex_count()) +
                    " vertices, oracle limit is " + std::to_string(options.max_vertices));
}

}  // namespace detail

/// Exact minimum dynamo with the lexicographically least witness, or
/// nullopt when no dynamo fits within `options.budget`.
inline std::optional<MinDynamo> min_dynamo(const DirectedGraph& g, const ThresholdAssignment& tau,
                                           const OracleOptions& options = {}) {
  detail::check_oracle_input(g, tau, options);
  const std::size_t n = g.vertex_count();
  detail::SubsetSearch search(g, tau, options.prune);
  const std::size_t top = std::min(n, options.budget.value_or(n));
  for (std::size_t k = options.prune ? search.lower_bound() : 0; k <= top; ++k) {
    std::optional<MinDynamo> best;
    search.enumerate(k, [&](const std::vector<Vertex>& seed) {
      best = MinDynamo{k, VertexSet::of(n, seed)};
      return false;
    });
    if (best) return best;
  }
  return std::nullopt;
}

/// Every minimum dynamo, in lexicographic order.
inline std::vector<VertexSet> all_min_dynamos(const DirectedGraph& g,
                                              const ThresholdAssignment& tau,
                                              const OracleOptions& options = {}) {
  auto best = min_dynamo(g, tau, options);
  if (!best) return {};
  const std::size_t n = g.vertex_count();
  detail::SubsetSearch search(g, tau, options.prune);
  std::vector<VertexSet> out;
  search.enumerate(best->size, [&](const std::vector<Vertex>& seed) {
    out.push_back(VertexSet::of(n, seed));
    return true;
  });
  return out;
}

}  // namespace dynamo
