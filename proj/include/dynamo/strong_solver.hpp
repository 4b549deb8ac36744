#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dynamo/activation.hpp"
#include "dynamo/decomposition.hpp"
#include "dynamo/graph.hpp"
#include "dynamo/ordering.hpp"

namespace dynamo {

/// An ordering laid out as (f > 0 vertices), pivot, (f < 0 vertices). Only
/// the pivot can have f = 0.
struct PivotOrdering {
  Ordering sigma;
  Vertex pivot = 0;
  VertexSet positive;  // f > 0
  VertexSet negative;  // f < 0
};

/// The hard case of the half bound: n odd, pivot at f = 0 and |P| = |N|.
/// `sigma` is rearranged to P2, P1, pivot, N1, N2 where
///   P1 = {v in P : d(P + pivot, v) < d(N, v)},
///   N1 = {v in N : d(N + pivot, v) < d(P, v)}.
struct BalancedState {
  Ordering sigma;
  Vertex pivot = 0;
  VertexSet positive, negative;
  VertexSet p1, p2, n1, n2;
};

/// Rearrangements tried by `improve`, in scan order.
enum class Move {
  P2PastPivot,         // v in P2 with d(P+x, v) > d(N, v): v to after x
  N2PastPivot,         // mirror for N2
  P1FeedsPivot,        // u in P1 with u->x: u to after x
  N1FeedsPivot,        // mirror for N1
  P1IntoN2,            // edge a in P1 -> b in N2: ... b a x ...
  N1IntoP2,            // mirror
  N1ToFront,           // u in N1 without a P1 out-neighbour at f = 2
  P1ToBack,            // mirror
  SharedP1Target,      // u1,u2 in N1 -> v in P1 with f(v) = 2
  SharedN1Target,      // mirror
  FeederToBack,        // last P in-neighbour y of x has no N out-neighbour at f = -2
  MatchedPairSwap,     // z in N1 with u in P1, u->z: ... z u x y ...
  FeederBehindPivot,   // z in N2, z does not feed x: ... z x y ...
  Case3ToFront,        // z in N2 feeds x, no witness w: z to the front
  Case3BeforeFeeder,   // witness w ranked before y: z to just before y
  Case3PastWitness,    // witness w in P2 ranked after y: ... z x w ...
  LocalSearch,         // bounded search over the named vertices
  SingleRelocation,    // any vertex to any rank
};

inline const char* to_string(Move m) {
  switch (m) {
    case Move::P2PastPivot: return "P2PastPivot";
    case Move::N2PastPivot: return "N2PastPivot";
    case Move::P1FeedsPivot: return "P1FeedsPivot";
    case Move::N1FeedsPivot: return "N1FeedsPivot";
    case Move::P1IntoN2: return "P1IntoN2";
    case Move::N1IntoP2: return "N1IntoP2";
    case Move::N1ToFront: return "N1ToFront";
    case Move::P1ToBack: return "P1ToBack";
    case Move::SharedP1Target: return "SharedP1Target";
    case Move::SharedN1Target: return "SharedN1Target";
    case Move::FeederToBack: return "FeederToBack";
    case Move::MatchedPairSwap: return "MatchedPairSwap";
    case Move::FeederBehindPivot: return "FeederBehindPivot";
    case Move::Case3ToFront: return "Case3ToFront";
    case Move::Case3BeforeFeeder: return "Case3BeforeFeeder";
    case Move::Case3PastWitness: return "Case3PastWitness";
    case Move::LocalSearch: return "LocalSearch";
    case Move::SingleRelocation: return "SingleRelocation";
  }
  return "Unknown";
}

struct Improvement {
  Ordering sigma;
  Move move = Move::P2PastPivot;
  /// Catalog moves whose precondition held but which did not make progress.
  std::vector<Move> stalled;
};

namespace detail {

struct Layout {
  std::vector<Vertex> seq;
  Vertex pivot = 0;
};

// Recursive pivot layout of a strongly connected graph, in its own ids.
inline Layout pivot_layout(const DirectedGraph& h, std::optional<Vertex> preferred) {
  const std::size_t n = h.vertex_count();
  if (n == 1) return {{0}, 0};

  Vertex x = preferred.value_or(0);
  for (Vertex v = 0; v < n; ++v)
    if (h.in_degree(v) % 2 == 1) {
      x = v;
      break;
    }

  VertexSet rest = VertexSet::full(n);
  rest.erase(x);
  const InducedSubgraph without_x = induced_subgraph(h, rest);
  const Condensation cond = condensation(without_x.graph);

  std::vector<Vertex> prefix{x};
  VertexSet in_prefix(n);
  in_prefix.insert(x);
  for (const auto& local_component : cond.components) {
    VertexSet component(n);
    for (Vertex c : local_component) component.insert(without_x.to_global[c]);
    const std::vector<Vertex> members = component.members();

    // Entry vertex: lowest id fed by the part already laid out.
    std::optional<Vertex> entry;
    for (Vertex w : members) {
      if (edge_count_into(h, in_prefix, w) > 0) {
        entry = w;
        break;
      }
    }
    if (!entry) throw std::logic_error("pivot_layout: component unreachable from prefix");

    const InducedSubgraph child = induced_subgraph(h, component);
    const Layout inner = pivot_layout(child.graph, child.to_local[*entry]);
    const Ordering inner_sigma(inner.seq);
    std::vector<Vertex> nonneg, neg;
    for (Vertex c : inner.seq) {
      const Vertex v = child.to_global[c];
      (f_value(child.graph, inner_sigma, c) < 0 ? neg : nonneg).push_back(v);
    }

    std::vector<Vertex> next;
    next.reserve(prefix.size() + members.size());
    next.insert(next.end(), nonneg.begin(), nonneg.end());
    next.insert(next.end(), prefix.begin(), prefix.end());
    next.insert(next.end(), neg.begin(), neg.end());
    prefix = std::move(next);
    for (Vertex v : members) in_prefix.insert(v);
  }
  return {std::move(prefix), x};
}

inline void require_strong_input(const DirectedGraph& g) {
  if (g.vertex_count() == 0 || !is_strongly_connected(g))
    throw Error(ErrorCode::NotStronglyConnected, "graph is not strongly connected");
  require_no_two_cycle(g);
}

inline PivotOrdering make_pivot_ordering(const DirectedGraph& g, Ordering sigma, Vertex pivot) {
  PivotOrdering po{std::move(sigma), pivot, VertexSet(g.vertex_count()),
                   VertexSet(g.vertex_count())};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int f = f_value(g, po.sigma, v);
    if (f > 0) po.positive.insert(v);
    if (f < 0) po.negative.insert(v);
  }
  return po;
}

inline bool layout_holds(const DirectedGraph& g, const Ordering& sigma, Vertex pivot) {
  const std::size_t p = sigma.rank(pivot);
  for (std::size_t r = 0; r < sigma.size(); ++r) {
    const int f = f_value(g, sigma, sigma.at(r));
    if (r < p && f <= 0) return false;
    if (r > p && f >= 0) return false;
  }
  return true;
}

inline std::vector<Vertex> in_order(const Ordering& sigma, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : sigma.sequence())
    if (s.contains(v)) out.push_back(v);
  return out;
}

inline std::vector<Vertex> without(const std::vector<Vertex>& xs,
                                   std::initializer_list<Vertex> drop) {
  std::vector<Vertex> out;
  for (Vertex v : xs)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

inline Ordering join(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> seq;
  for (const auto& part : parts) seq.insert(seq.end(), part.begin(), part.end());
  return Ordering(std::move(seq));
}

}  // namespace detail

/// Pivot ordering of a strongly connected, 2-cycle-free graph. The pivot is
/// the lowest-id odd in-degree vertex, else `preferred`, else vertex 0; the
/// remaining graph is split into strongly connected components that are
/// laid out recursively, each wrapped around the part already placed.
inline PivotOrdering construct_pivot_ordering(const DirectedGraph& g,
                                              std::optional<Vertex> preferred = std::nullopt) {
  detail::require_strong_input(g);
  if (preferred && *preferred >= g.vertex_count())
    throw Error(ErrorCode::VertexOutOfRange, "preferred pivot out of range", *preferred);
  detail::Layout layout = detail::pivot_layout(g, preferred);
  Ordering sigma(std::move(layout.seq));
  if (!detail::layout_holds(g, sigma, layout.pivot))
    throw std::logic_error("construct_pivot_ordering: layout invariant violated");
  return detail::make_pivot_ordering(g, std::move(sigma), layout.pivot);
}

inline bool is_balanced(const DirectedGraph& g, const PivotOrdering& po) {
  return f_value(g, po.sigma, po.pivot) == 0 && po.positive.size() == po.negative.size();
}

inline BalancedState classify(const DirectedGraph& g, const PivotOrdering& po) {
  if (!is_balanced(g, po))
    throw Error(ErrorCode::NotBalanced, "pivot ordering is not in the balanced case");
  const std::size_t n = g.vertex_count();
  const Vertex x = po.pivot;
  VertexSet p_and_x = po.positive, n_and_x = po.negative;
  p_and_x.insert(x);
  n_and_x.insert(x);

  BalancedState bs{po.sigma, x, po.positive, po.negative,
                   VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex v : po.positive.members())
    (edge_count_into(g, p_and_x, v) < edge_count_into(g, po.negative, v) ? bs.p1 : bs.p2)
        .insert(v);
  for (Vertex v : po.negative.members())
    (edge_count_into(g, n_and_x, v) < edge_count_into(g, po.positive, v) ? bs.n1 : bs.n2)
        .insert(v);

  bs.sigma = detail::join({detail::in_order(po.sigma, bs.p2), detail::in_order(po.sigma, bs.p1),
                           {x}, detail::in_order(po.sigma, bs.n1),
                           detail::in_order(po.sigma, bs.n2)});
  for (Vertex v = 0; v < n; ++v) {
    const int f = f_value(g, bs.sigma, v);
    if ((bs.positive.contains(v) && f <= 0) || (bs.negative.contains(v) && f >= 0) ||
        (v == x && f != 0))
      throw std::logic_error("classify: rearrangement changed a sign");
  }
  return bs;
}

namespace detail {

class Improver {
 public:
  Improver(const DirectedGraph& g, const PivotOrdering& po)
      : g_(g), bs_(classify(g, po)), f_(f_values(g, bs_.sigma)), half_(bs_.positive.size()) {
    x_ = bs_.pivot;
    p_ = in_order(bs_.sigma, bs_.positive);
    n_ = in_order(bs_.sigma, bs_.negative);
    p1_ = in_order(bs_.sigma, bs_.p1);
    p2_ = in_order(bs_.sigma, bs_.p2);
    n1_ = in_order(bs_.sigma, bs_.n1);
    n2_ = in_order(bs_.sigma, bs_.n2);
    p_and_x_ = bs_.positive;
    p_and_x_.insert(x_);
    n_and_x_ = bs_.negative;
    n_and_x_.insert(x_);
  }

  Improvement run() {
    if (auto r = catalog()) return std::move(*r);
    if (auto r = local_search()) return std::move(*r);
    if (auto r = single_relocation()) return std::move(*r);
    throw Error(ErrorCode::NoProgressingMove, "no rearrangement increases |P| or |N|");
  }

 private:
  bool progress(const Ordering& sigma) const {
    std::size_t pos = 0, neg = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      const int f = f_value(g_, sigma, v);
      pos += f > 0;
      neg += f < 0;
    }
    return pos > half_ || neg > half_;
  }

  // Returns the improvement if `sigma` progresses, else records a stall.
  std::optional<Improvement> attempt(Ordering sigma, Move move) {
    if (progress(sigma)) return Improvement{std::move(sigma), move, stalled_};
    stalled_.push_back(move);
    return std::nullopt;
  }

  bool edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }

  std::optional<Improvement> catalog() {
    const Ordering& s = bs_.sigma;
    // Surplus vertices of P2 / N2.
    for (Vertex v : p2_)
      if (edge_count_into(g_, p_and_x_, v) > edge_count_into(g_, bs_.negative, v))
        if (auto r = attempt(transmit_after(s, v, x_), Move::P2PastPivot)) return r;
    for (Vertex v : n2_)
      if (edge_count_into(g_, n_and_x_, v) > edge_count_into(g_, bs_.positive, v))
        if (auto r = attempt(transmit_before(s, x_, v), Move::N2PastPivot)) return r;
    // P1 / N1 vertices feeding the pivot.
    for (Vertex u : p1_)
      if (edge(u, x_))
        if (auto r = attempt(transmit_after(s, u, x_), Move::P1FeedsPivot)) return r;
    for (Vertex u : n1_)
      if (edge(u, x_))
        if (auto r = attempt(transmit_before(s, x_, u), Move::N1FeedsPivot)) return r;
    // Cross edges P1 -> N2 and N1 -> P2.
    for (Vertex a : sorted(p1_))
      for (Vertex b : g_.out_neighbors(a))
        if (bs_.n2.contains(b))
          if (auto r = attempt(join({p2_, without(p1_, {a}), {b, a, x_}, n1_, without(n2_, {b})}),
                               Move::P1IntoN2))
            return r;
    for (Vertex a : sorted(n1_))
      for (Vertex b : g_.out_neighbors(a))
        if (bs_.p2.contains(b))
          if (auto r = attempt(join({without(p2_, {b}), p1_, {x_, a, b}, without(n1_, {a}), n2_}),
                               Move::N1IntoP2))
            return r;
    // Every N1 vertex must feed a P1 vertex at f = 2, and symmetrically.
    for (Vertex u : sorted(n1_)) {
      bool fed = false;
      for (Vertex v : g_.out_neighbors(u)) fed |= bs_.p1.contains(v) && f_[v] == 2;
      if (!fed)
        if (auto r = attempt(transmit_to_front(s, u), Move::N1ToFront)) return r;
    }
    for (Vertex u : sorted(p1_)) {
      bool fed = false;
      for (Vertex v : g_.out_neighbors(u)) fed |= bs_.n1.contains(v) && f_[v] == -2;
      if (!fed)
        if (auto r = attempt(transmit_to_back(s, u), Move::P1ToBack)) return r;
    }
    // No P1 vertex at f = 2 may have two N1 in-neighbours, and symmetrically.
    for (Vertex v : sorted(p1_)) {
      if (f_[v] != 2) continue;
      std::vector<Vertex> feeders;
      for (Vertex u : g_.in_neighbors(v))
        if (bs_.n1.contains(u)) feeders.push_back(u);
      if (feeders.size() < 2) continue;
      auto [u1, u2] = ranked_pair(feeders[0], feeders[1]);
      if (auto r = attempt(join({p2_, without(p1_, {v}), {u1, u2, x_, v},
                                 without(n1_, {u1, u2}), n2_}),
                           Move::SharedP1Target))
        return r;
    }
    for (Vertex v : sorted(n1_)) {
      if (f_[v] != -2) continue;
      std::vector<Vertex> feeders;
      for (Vertex u : g_.in_neighbors(v))
        if (bs_.p1.contains(u)) feeders.push_back(u);
      if (feeders.size() < 2) continue;
      auto [u1, u2] = ranked_pair(feeders[0], feeders[1]);
      if (auto r = attempt(join({p2_, without(p1_, {u1, u2}), {v, x_, u1, u2},
                                 without(n1_, {v}), n2_}),
                           Move::SharedN1Target))
        return r;
    }

    // y: the P in-neighbour of the pivot ranked closest to it.
    for (Vertex v : p_)
      if (edge(v, x_)) y_ = v;
    if (!y_) return std::nullopt;
    const Vertex y = *y_;
    // z: first N out-neighbour of y with f = -2.
    for (Vertex v : n_)
      if (edge(y, v) && f_[v] == -2) {
        z_ = v;
        break;
      }
    if (!z_) return attempt(transmit_to_back(s, y), Move::FeederToBack);
    const Vertex z = *z_;

    if (bs_.n1.contains(z)) {
      for (Vertex u : sorted(p1_))
        if (edge(u, z) && u != y)
          return attempt(join({without(p2_, {y}), without(p1_, {u, y}), {z, u, x_, y},
                               without(n1_, {z}), n2_}),
                         Move::MatchedPairSwap);
      return std::nullopt;
    }
    if (!edge(z, x_))
      return attempt(join({without(p2_, {y}), without(p1_, {y}), {z, x_, y}, n1_,
                           without(n2_, {z})}),
                     Move::FeederBehindPivot);

    // z in N2 feeds the pivot: w is the last P vertex with f = 2 fed by z.
    for (Vertex v : p_)
      if (f_[v] == 2 && edge(z, v)) w_ = v;
    if (!w_) return attempt(transmit_to_front(s, z), Move::Case3ToFront);
    const Vertex w = *w_;
    if (s.before(w, y)) return attempt(transmit_before(s, y, z), Move::Case3BeforeFeeder);
    if (bs_.p2.contains(w))
      return attempt(join({without(p_, {w}), {z, x_, w}, without(n_, {z})}),
                     Move::Case3PastWitness);
    return std::nullopt;
  }

  // Up to three named vertices relocated next to the pivot or to either end.
  std::optional<Improvement> local_search() {
    std::vector<Vertex> named;
    auto add = [&](Vertex v) {
      if (std::find(named.begin(), named.end(), v) == named.end()) named.push_back(v);
    };
    for (const auto& anchor : {y_, z_, w_})
      if (anchor) add(*anchor);
    for (const auto& anchor : {y_, z_, w_}) {
      if (!anchor) continue;
      for (Vertex v : sorted(p1_))
        if (edge(v, *anchor) || edge(*anchor, v)) add(v);
      for (Vertex v : sorted(n1_))
        if (edge(v, *anchor) || edge(*anchor, v)) add(v);
    }
    if (named.empty()) {
      for (Vertex v : sorted(p1_)) add(v);
      for (Vertex v : sorted(n1_)) add(v);
    }
    constexpr std::size_t max_named = 12;
    if (named.size() > max_named) named.resize(max_named);

    std::vector<bool> used(named.size(), false);
    std::optional<Ordering> found;
    search(bs_.sigma, named, used, 3, found);
    if (found) return Improvement{std::move(*found), Move::LocalSearch, stalled_};
    return std::nullopt;
  }

  void search(const Ordering& sigma, const std::vector<Vertex>& named, std::vector<bool>& used,
              int depth, std::optional<Ordering>& found) {
    if (depth == 0) return;
    for (std::size_t i = 0; i < named.size() && !found; ++i) {
      if (used[i]) continue;
      const Vertex v = named[i];
      used[i] = true;
      for (int slot = 0; slot < 4 && !found; ++slot) {
        std::vector<Vertex> seq = sigma.sequence();
        seq.erase(std::find(seq.begin(), seq.end(), v));
        const auto px = std::find(seq.begin(), seq.end(), x_);
        switch (slot) {
          case 0: seq.insert(px, v); break;
          case 1: seq.insert(px + 1, v); break;
          case 2: seq.insert(seq.begin(), v); break;
          default: seq.push_back(v); break;
        }
        Ordering candidate(std::move(seq));
        if (candidate == sigma) continue;
        if (progress(candidate)) {
          found = std::move(candidate);
        } else {
          search(candidate, named, used, depth - 1, found);
        }
      }
      used[i] = false;
    }
  }

  std::optional<Improvement> single_relocation() {
    const std::size_t n = g_.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Vertex> seq = bs_.sigma.sequence();
        seq.erase(std::find(seq.begin(), seq.end(), v));
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(r), v);
        Ordering candidate(std::move(seq));
        if (progress(candidate))
          return Improvement{std::move(candidate), Move::SingleRelocation, stalled_};
      }
    }
    return std::nullopt;
  }

  static std::vector<Vertex> sorted(std::vector<Vertex> xs) {
    std::sort(xs.begin(), xs.end());
    return xs;
  }

  std::pair<Vertex, Vertex> ranked_pair(Vertex a, Vertex b) const {
    return bs_.sigma.before(a, b) ? std::pair{a, b} : std::pair{b, a};
  }

  const DirectedGraph& g_;
  BalancedState bs_;
  std::vector<int> f_;
  std::size_t half_;
  Vertex x_ = 0;
  std::vector<Vertex> p_, n_, p1_, p2_, n1_, n2_;
  VertexSet p_and_x_, n_and_x_;
  std::optional<Vertex> y_, z_, w_;
  std::vector<Move> stalled_;
};

}  // namespace detail

/// From a balanced pivot ordering, finds an ordering with more than (n-1)/2
/// vertices of one strict sign. The catalog is scanned in order; a move
/// whose precondition holds but which fails to progress is recorded in
/// `stalled` and the scan continues, then two bounded searches follow.
/// Throws NoProgressingMove if all of that fails.
inline Improvement improve(const DirectedGraph& g, const PivotOrdering& po) {
  return detail::Improver(g, po).run();
}

struct StrongSolve {
  VertexSet dynamo;
  PivotOrdering initial;
  std::optional<Improvement> improvement;
};

/// Strict-majority dynamo of size at most floor(n/2) for a strongly
/// connected, 2-cycle-free graph, with the orderings that produced it.
inline StrongSolve half_dynamo_strong_detailed(const DirectedGraph& g) {
  detail::require_strong_input(g);
  require_positive_in_degree(g);
  StrongSolve out{VertexSet(g.vertex_count()), construct_pivot_ordering(g), std::nullopt};
  Ordering sigma = out.initial.sigma;
  if (is_balanced(g, out.initial)) {
    out.improvement = improve(g, out.initial);
    sigma = out.improvement->sigma;
  }
  out.dynamo = dynamo_from_ordering(g, sigma);
  if (out.dynamo.size() > g.vertex_count() / 2)
    throw std::logic_error("half_dynamo_strong: size bound violated");
  if (!is_dynamo(g, strict_majority(g), out.dynamo))
    throw std::logic_error("half_dynamo_strong: result is not a dynamo");
  return out;
}

inline VertexSet half_dynamo_strong(const DirectedGraph& g) {
  return half_dynamo_strong_detailed(g).dynamo;
}

}  // namespace dynamo
