// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dynamo/dynamo.hpp"
#include "support/reference.hpp"

using namespace dynamo;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool ok = true;
  std::ostringstream why;

  void fail(const std::string& what) {
    if (ok) why << what;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, const Verdict& v, const std::string& detail) {
  std::cout << "criterion " << id << " [" << name << "]: " << (v.ok ? "PASS" : "FAIL") << " - "
            << (v.ok ? detail : v.why.str()) << std::endl;
  if (!v.ok) ++failures;
}

ref::Mask mask_of(const VertexSet& s) {
  ref::Mask m = 0;
  for (Vertex v : s.members()) m |= ref::bit(v);
  return m;
}

// Graphs collected from criteria 1 and 2 with the solver's answer size.
struct Solved {
  DirectedGraph graph;
  std::size_t size;
};
std::vector<Solved> sandwich_pool;

void criterion_half_bound() {
  Verdict v;
  std::mt19937_64 rng(20240601);
  std::size_t strong = 0, multi = 0, worst_num = 0, worst_den = 1;
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng() % 13;
    DirectedGraph g;
    if (trial % 4 == 0 && n >= 5) {
      g = random_regular_union(n % 2 ? n : n - 1, 2, rng());
    } else if (trial % 2 == 0) {
      g = random_strongly_connected(n, rng() % (2 * n), rng());
    } else {
      g = random_multi_component(n, rng());
    }
    (is_strongly_connected(g) ? strong : multi) += 1;
    try {
      const VertexSet d = strict_majority_dynamo(g);
      const std::size_t nn = g.vertex_count();
      if (!is_dynamo(g, strict_majority(g), d)) v.fail("not a dynamo at trial " + std::to_string(trial));
      if (d.size() > nn / 2) v.fail("size above n/2 at trial " + std::to_string(trial));
      if (d.size() * worst_den > worst_num * nn) worst_num = d.size(), worst_den = nn;
      sandwich_pool.push_back({g, d.size()});
    } catch (const std::exception& e) {
      v.fail(std::string("trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 10.0) v.fail("took " + std::to_string(secs) + "s");
  if (strong == 0 || multi == 0) v.fail("instance mix is one-sided");
  std::ostringstream d;
  d << "200 graphs (" << strong << " strongly connected, " << multi
    << " multi-component), worst |D|/n = " << worst_num << "/" << worst_den << ", " << secs << "s";
  report(1, "half bound", v, d.str());
}

void criterion_exhaustive() {
  Verdict v;
  std::size_t graphs = 0, balanced = 0;
  const auto t0 = Clock::now();
  for (std::size_t n : {4u, 5u}) {
    ref::for_each_two_cycle_free(n, [&](const DirectedGraph& g) {
      if (!is_strongly_connected(g)) return;
      ++graphs;
      try {
        const StrongSolve s = half_dynamo_strong_detailed(g);
        if (s.dynamo.size() > n / 2) v.fail("size above n/2");
        sandwich_pool.push_back({g, s.dynamo.size()});
        // Also drive improve from every balanced pivot choice.
        for (Vertex x = 0; x < n; ++x) {
          const PivotOrdering po = construct_pivot_ordering(g, x);
          if (!is_balanced(g, po)) continue;
          ++balanced;
          improve(g, po);
        }
      } catch (const Error& e) {
        v.fail(e.what());
      } catch (const std::exception& e) {
        v.fail(e.what());
      }
    });
  }
  std::ostringstream d;
  d << graphs << " strongly connected 2-cycle-free graphs on 4 and 5 vertices, " << balanced
    << " balanced pivot orderings improved, " << seconds_since(t0) << "s";
  report(2, "exhaustive n=4,5", v, d.str());
}

void criterion_sandwich() {
  Verdict v;
  std::size_t checked = 0, tight = 0;
  for (const Solved& s : sandwich_pool) {
    const DirectedGraph& g = s.graph;
    if (g.vertex_count() > 12) continue;
    ++checked;
    const ThresholdAssignment tau = strict_majority(g);
    const auto best = min_dynamo(g, tau);
    if (!best) {
      v.fail("oracle found nothing");
      continue;
    }
    const BoundsReport r = bounds_report(g, tau);
    const auto k = static_cast<long long>(best->size);
    if (best->size > s.size) v.fail("oracle above solver");
    if (r.ksz_lower > Rational(k)) v.fail("lower bound above oracle");
    if (k > floor(r.abw_upper)) v.fail("oracle above floor of expectation");
    tight += best->size == s.size;
  }
  std::ostringstream d;
  d << checked << " graphs with n <= 12: lower <= oracle <= min(solver, floor(abw)); solver optimal on "
    << tight;
  report(3, "oracle sandwich", v, d.str());
}

void criterion_abw() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(6);
  const std::vector<std::pair<std::string, DirectedGraph>> cases = {
      {"3-cycle", build_graph(3, {{0, 1}, {1, 2}, {2, 0}})},
      {"2-regular K5", two_regular_k5()},
      {"random n=6", random_strongly_connected(6, 5, rng())}};
  std::ostringstream d;
  for (const auto& [name, g] : cases) {
    const ThresholdAssignment tau = strict_majority(g);
    Rational total = 0;
    long long count = 0;
    ref::for_each_permutation(g.vertex_count(), [&](const std::vector<Vertex>& p) {
      const VertexSet m = permutation_dynamo(g, tau, Ordering(p));
      if (!is_dynamo(g, tau, m)) v.fail(name + ": ordering gave a non-dynamo");
      total += static_cast<long long>(m.size());
      ++count;
    });
    const Rational mean = total / count;
    if (mean != abw_expected_size(g, tau))
      v.fail(name + ": mean " + to_string(mean) + " != " + to_string(abw_expected_size(g, tau)));
    d << name << " " << to_string(mean) << " over " << count << "; ";
  }
  const double secs = seconds_since(t0);
  if (secs >= 30.0) v.fail("took " + std::to_string(secs) + "s");
  d << secs << "s";
  report(4, "ABW expectation", v, d.str());
}

void criterion_reductions() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(5);
  OracleOptions roomy;
  roomy.max_vertices = 64;
  std::size_t largest = 0;
  for (int trial = 0; trial < 20; ++trial) {
    ref::Undirected gu;
    // Resample until every vertex has an edge so both reductions apply.
    for (;;) {
      const std::size_t n = 2 + rng() % 4;
      const std::size_t m = 1 + rng() % std::min<std::size_t>(7, n * (n - 1) / 2);
      gu = ref::random_undirected(n, m, rng);
      bool isolated = false;
      for (std::size_t deg : gu.degrees()) isolated = isolated || deg == 0;
      if (!isolated) break;
    }
    const UndirectedGraph g = UndirectedGraph::build(gu.n, gu.edges);
    const std::size_t m = gu.edges.size();

    const ThresholdedGraph h2 = reduce_constant_threshold(g);
    const std::size_t d_h = min_dynamo(h2.graph, h2.tau, roomy)->size;
    if (d_h != gu.min_constant(2) + 2 * m) v.fail("constant-2 identity broken at trial " + std::to_string(trial));

    const DirectedGraph hm = reduce_strict_majority(g);
    const std::size_t dyn_h = min_dynamo(hm, strict_majority(hm), roomy)->size;
    if (dyn_h != gu.min_strict_majority() + m)
      v.fail("strict-majority identity broken at trial " + std::to_string(trial));
    largest = std::max(largest, hm.vertex_count());
  }
  const double secs = seconds_since(t0);
  if (secs >= 60.0) v.fail("took " + std::to_string(secs) + "s");
  std::ostringstream d;
  d << "20 graphs, both identities exact, largest reduced graph " << largest << " vertices, " << secs
    << "s";
  report(5, "reduction identities", v, d.str());
}

void criterion_family() {
  Verdict v;
  std::ostringstream d;
  Rational previous = 0;
  for (std::size_t k : {1u, 2u}) {
    const DirectedGraph g = lower_bound_family(k);
    const auto best = min_dynamo(g, strict_majority(g));
    if (!best || best->size != 2 * k) v.fail("minimum of G_" + std::to_string(k) + " is not 2k");
    const Rational ratio(static_cast<long long>(best ? best->size : 0),
                         static_cast<long long>(g.vertex_count()));
    if (ratio <= previous || ratio >= Rational(2, 5)) v.fail("ratio not increasing towards 2/5");
    previous = ratio;
    d << "G_" << k << " min " << (best ? best->size : 0) << " ratio " << to_string(ratio) << "; ";
  }
  if (previous != Rational(4, 11)) v.fail("G_2 ratio is not 4/11");
  d << "limit 2/5";
  report(6, "extremal family", v, d.str());
}

void criterion_counterexample() {
  Verdict v;
  const DirectedGraph g = bidirectional_complete(5);
  try {
    strict_majority_dynamo(g);
    v.fail("solver accepted a graph with 2-cycles");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TwoCyclePresent) v.fail(std::string("wrong error ") + e.what());
  }
  const auto best = min_dynamo(g, strict_majority(g));
  if (!best || best->size != 3) v.fail("oracle minimum is not 3");
  report(7, "counterexample guard", v, "TwoCyclePresent raised; oracle minimum 3 = (5+1)/2");
}

void criterion_invariants() {
  Verdict v;
  constexpr int trials = 1000;
  std::mt19937_64 rng(8);
  int layout = 0, parity = 0, confluence = 0, monotone = 0, transmit = 0;

  for (int t = 0; t < trials; ++t) {
    const std::size_t n = 3 + rng() % 18;
    const DirectedGraph g = (t % 3 == 0 && n >= 5) ? random_regular_union(n % 2 ? n : n - 1, 2, rng())
                                                   : random_strongly_connected(n, rng() % (2 * n), rng());
    const PivotOrdering po = construct_pivot_ordering(g);
    const std::vector<int> f = f_values(g, po.sigma);
    const std::size_t p = po.sigma.rank(po.pivot);
    bool ok = true;
    std::size_t zeros = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const std::size_t r = po.sigma.rank(u);
      ok = ok && (r >= p || f[u] > 0) && (r <= p || f[u] < 0);
      zeros += f[u] == 0;
    }
    ok = ok && zeros <= 1 && (zeros == 0 || f[po.pivot] == 0);
    layout += ok;
  }

  for (int t = 0; t < trials; ++t) {
    const DirectedGraph g = random_multi_component(3 + rng() % 18, rng());
    const Ordering s(ref::random_permutation(g.vertex_count(), rng));
    bool ok = true;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      ok = ok && (f_value(g, s, u) + static_cast<int>(g.in_degree(u))) % 2 == 0;
    parity += ok;
  }

  for (int t = 0; t < trials; ++t) {
    const DirectedGraph g = random_multi_component(3 + rng() % 18, rng());
    const ThresholdAssignment tau = (t % 2) ? strict_majority(g) : simple_majority(g);
    const ref::Mask seed = static_cast<ref::Mask>(rng()) & ref::full(g.vertex_count());
    const VertexSet sync = activate(g, tau, VertexSet::of(g.vertex_count(), ref::members(seed))).active;
    confluence += mask_of(sync) == ref::async_closure(g, tau, seed, rng);
  }

  for (int t = 0; t < trials; ++t) {
    const DirectedGraph g = random_multi_component(3 + rng() % 18, rng());
    const ThresholdAssignment tau = strict_majority(g);
    const std::size_t n = g.vertex_count();
    const ref::Mask a = static_cast<ref::Mask>(rng()) & ref::full(n);
    const ref::Mask b = a | (static_cast<ref::Mask>(rng()) & ref::full(n));
    const VertexSet small = VertexSet::of(n, ref::members(a));
    const VertexSet big = VertexSet::of(n, ref::members(b));
    monotone += activate(g, tau, small).active.is_subset_of(activate(g, tau, big).active) &&
                (!is_dynamo(g, tau, small) || is_dynamo(g, tau, big));
  }

  for (int t = 0; t < trials; ++t) {
    const std::size_t n = 2 + rng() % 30;
    const Ordering s(ref::random_permutation(n, rng));
    const std::size_t i = rng() % (n - 1);
    const std::size_t j = i + 1 + rng() % (n - 1 - i);
    const Ordering a = transmit_after(s, s.at(i), s.at(j));
    const Ordering b = transmit_before(s, s.at(i), s.at(j));
    const bool moved = a.at(j) == s.at(i) && b.at(i) == s.at(j);
    transmit += moved && transmit_before(a, a.at(i), a.at(j)) == s &&
                transmit_after(b, b.at(i), b.at(j)) == s;
  }

  std::ostringstream d;
  d << "layout " << layout << ", f-parity " << parity << ", confluence " << confluence
    << ", monotonicity " << monotone << ", transmit " << transmit << " of " << trials;
  for (int count : {layout, parity, confluence, monotone, transmit})
    if (count != trials) v.fail(d.str());
  report(8, "invariant suite", v, d.str());
}

}  // namespace

int main() {
  criterion_half_bound();
  criterion_exhaustive();
  criterion_sandwich();
  criterion_abw();
  criterion_reductions();
  criterion_family();
  criterion_counterexample();
  criterion_invariants();
  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << 8 - failures
            << "/8 criteria)" << std::endl;
  return failures ? 1 : 0;
}
