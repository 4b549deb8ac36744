#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "dynamo/dynamo.hpp"

namespace fixtures {

using namespace dynamo;

inline DirectedGraph three_cycle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// 3-cycle with an extra vertex 3 fed only by 0.
inline DirectedGraph cycle_with_pendant() {
  return build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
}

inline VertexSet set(std::size_t n, std::initializer_list<Vertex> xs) {
  return VertexSet::of(n, xs);
}

}  // namespace fixtures

#define EXPECT_DYNAMO_ERROR(stmt, expected)                  \
  do {                                                       \
    try {                                                    \
      stmt;                                                  \
      ADD_FAILURE() << "expected " << to_string(expected);   \
    } catch (const ::dynamo::Error& e) {                     \
      EXPECT_EQ(e.code(), expected) << e.what();             \
    }                                                        \
  } while (0)
