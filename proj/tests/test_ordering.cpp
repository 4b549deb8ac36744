#include <map>
#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace dynamo;
using fixtures::set;
using fixtures::three_cycle;

TEST(Ordering, RankAndAt) {
  const Ordering s({2, 0, 1});
  EXPECT_EQ(s.rank(2), 0u);
  EXPECT_EQ(s.at(2), 1u);
  EXPECT_TRUE(s.before(0, 1));
  EXPECT_EQ(s.reversed(), Ordering({1, 0, 2}));
  EXPECT_DYNAMO_ERROR(Ordering({0, 0, 1}), ErrorCode::InvalidArgument);
  EXPECT_DYNAMO_ERROR(Ordering({0, 3, 1}), ErrorCode::InvalidArgument);
}

TEST(FValue, TwoRegularK5Identity) {
  EXPECT_EQ(f_values(two_regular_k5(), Ordering::identity(5)), (std::vector<int>{2, 0, -2, -2, -2}));
}

TEST(FValue, ThreeCycleIdentity) {
  EXPECT_EQ(f_values(three_cycle(), Ordering::identity(3)), (std::vector<int>{1, -1, -1}));
}

TEST(FValue, FirstWithAllInNeighboursAfter) {
  const DirectedGraph g = build_graph(4, {{1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(f_value(g, Ordering::identity(4), 0), 3);
}

// a b c d as 0 1 2 3.
TEST(Transmit, AfterMovesBlockForward) {
  EXPECT_EQ(transmit_after(Ordering::identity(4), 0, 2), Ordering({1, 2, 0, 3}));
  EXPECT_EQ(transmit_after(Ordering::identity(2), 0, 1), Ordering({1, 0}));
}

TEST(Transmit, BeforeMovesBlockBack) {
  EXPECT_EQ(transmit_before(Ordering::identity(4), 1, 3), Ordering({0, 3, 1, 2}));
  EXPECT_EQ(transmit_before(Ordering::identity(2), 0, 1), Ordering({1, 0}));
}

TEST(Transmit, RequiresOrder) {
  try {
    transmit_after(Ordering::identity(3), 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBefore);
    EXPECT_EQ(e.first(), 2u);
    EXPECT_EQ(e.second(), 1u);
  }
  EXPECT_DYNAMO_ERROR(transmit_before(Ordering::identity(3), 1, 1), ErrorCode::NotBefore);
}

TEST(Transmit, FrontAndBack) {
  EXPECT_EQ(transmit_to_front(Ordering::identity(4), 2), Ordering({2, 0, 1, 3}));
  EXPECT_EQ(transmit_to_back(Ordering::identity(4), 1), Ordering({0, 2, 3, 1}));
  EXPECT_EQ(transmit_to_front(Ordering::identity(3), 0), Ordering::identity(3));
  EXPECT_EQ(transmit_to_back(Ordering::identity(3), 2), Ordering::identity(3));
}

// For fixed ranks i < j both operations permute S_n, and each is undone by
// the other applied at the same ranks.
TEST(Transmit, BijectiveExhaustivelyUpToFive) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::set<std::vector<Vertex>> after_images, before_images;
        std::size_t count = 0;
        ref::for_each_permutation(n, [&](const std::vector<Vertex>& p) {
          ++count;
          const Ordering s(p);
          const Ordering a = transmit_after(s, s.at(i), s.at(j));
          const Ordering b = transmit_before(s, s.at(i), s.at(j));
          after_images.insert(a.sequence());
          before_images.insert(b.sequence());
          EXPECT_EQ(transmit_before(a, a.at(i), a.at(j)), s);
          EXPECT_EQ(transmit_after(b, b.at(i), b.at(j)), s);
        });
        EXPECT_EQ(after_images.size(), count);
        EXPECT_EQ(before_images.size(), count);
      }
    }
  }
}

TEST(FValue, ParityAndSumIdentities) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const DirectedGraph g = random_multi_component(3 + rng() % 14, rng());
    const Ordering s(ref::random_permutation(g.vertex_count(), rng));
    const std::vector<int> f = f_values(g, s);
    int sum = 0, backward = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ((f[v] + static_cast<int>(g.in_degree(v))) % 2, 0);
      EXPECT_LE(std::abs(f[v]), static_cast<int>(g.in_degree(v)));
      sum += f[v];
    }
    for (const auto& [u, v] : g.edges()) backward += s.before(v, u) ? 1 : -1;
    EXPECT_EQ(sum, backward);
    const std::vector<int> rf = f_values(g, s.reversed());
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(rf[v], -f[v]);
  }
}

TEST(DynamoFromOrdering, Examples) {
  EXPECT_EQ(dynamo_from_ordering(two_regular_k5(), Ordering::identity(5)), set(5, {0, 1}));
  EXPECT_EQ(dynamo_from_ordering(three_cycle(), Ordering::identity(3)), set(3, {0}));
  EXPECT_EQ(dynamo_from_ordering(three_cycle(), Ordering({2, 1, 0})), set(3, {0}));
  EXPECT_DYNAMO_ERROR(dynamo_from_ordering(build_graph(2, {{0, 1}}), Ordering::identity(2)),
                      ErrorCode::ZeroInDegree);
}

TEST(DynamoFromOrdering, AlwaysAStrictMajorityDynamoOfAtMostHalfPlus) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const DirectedGraph g = random_multi_component(3 + rng() % 14, rng());
    const Ordering s(ref::random_permutation(g.vertex_count(), rng));
    const VertexSet d = dynamo_from_ordering(g, s);
    EXPECT_TRUE(is_dynamo(g, strict_majority(g), d));
    // The two candidate sets overlap only on f = 0 vertices.
    std::size_t zeros = 0;
    for (int f : f_values(g, s)) zeros += f == 0;
    EXPECT_LE(2 * d.size(), g.vertex_count() + zeros);
  }
}

TEST(PermutationDynamo, Examples) {
  EXPECT_EQ(permutation_dynamo(two_regular_k5(), ThresholdAssignment::constant(5, 2),
                               Ordering::identity(5)),
            set(5, {0, 1}));
  // Order 2,1,0 against the cycle 0->1->2->0: both 2 and 1 precede their
  // only in-neighbour.
  EXPECT_EQ(permutation_dynamo(three_cycle(), ThresholdAssignment::constant(3, 1), Ordering({2, 1, 0})),
            set(3, {1, 2}));
  EXPECT_EQ(permutation_dynamo(three_cycle(), ThresholdAssignment::constant(3, 1), Ordering::identity(3)),
            set(3, {0}));
}

TEST(PermutationDynamo, ForcedVertexAlwaysSeeded) {
  const DirectedGraph g = three_cycle();
  const ThresholdAssignment tau({1, 2, 1});
  ref::for_each_permutation(3, [&](const std::vector<Vertex>& p) {
    EXPECT_TRUE(permutation_dynamo(g, tau, Ordering(p)).contains(1));
  });
}

TEST(PermutationDynamo, MatchesNonNegativeFUnderStrictMajority) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const DirectedGraph g = random_multi_component(3 + rng() % 14, rng());
    const Ordering s(ref::random_permutation(g.vertex_count(), rng));
    const VertexSet m = permutation_dynamo(g, strict_majority(g), s);
    const std::vector<int> f = f_values(g, s);
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(m.contains(v), f[v] >= 0);
    EXPECT_TRUE(is_dynamo(g, strict_majority(g), m));
  }
}

TEST(AbwExpectedSize, Formula) {
  EXPECT_EQ(to_string(abw_expected_size(three_cycle(), strict_majority(three_cycle()))), "3/2");
  EXPECT_EQ(to_string(abw_expected_size(two_regular_k5(), ThresholdAssignment::constant(5, 2))), "10/3");
  const DirectedGraph g = fixtures::cycle_with_pendant();
  EXPECT_EQ(abw_expected_size(g, ThresholdAssignment({2, 2, 2, 2})), Rational(4));
  // Thresholds above deg_in + 1 are clamped.
  EXPECT_EQ(abw_expected_size(g, ThresholdAssignment({9, 9, 9, 9})), Rational(4));
}

static Rational average_over_permutations(const DirectedGraph& g, const ThresholdAssignment& tau) {
  Rational total = 0;
  long long count = 0;
  ref::for_each_permutation(g.vertex_count(), [&](const std::vector<Vertex>& p) {
    const VertexSet m = permutation_dynamo(g, tau, Ordering(p));
    EXPECT_TRUE(is_dynamo(g, tau, m));
    total += static_cast<long long>(m.size());
    ++count;
  });
  return total / count;
}

TEST(AbwExpectedSize, EqualsAverageOverAllOrderings) {
  EXPECT_EQ(average_over_permutations(three_cycle(), strict_majority(three_cycle())),
            abw_expected_size(three_cycle(), strict_majority(three_cycle())));
  const DirectedGraph k5 = two_regular_k5();
  EXPECT_EQ(average_over_permutations(k5, strict_majority(k5)), Rational(10, 3));
  const DirectedGraph g = fixtures::cycle_with_pendant();
  const ThresholdAssignment tau({1, 1, 1, 2});
  EXPECT_EQ(average_over_permutations(g, tau), abw_expected_size(g, tau));
}

TEST(Rational, Printing) {
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(floor(Rational(10, 3)), 3);
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
}
