#pragma once

#include <cstddef>

namespace cnum {

// Size guards for the exponential routines. Every routine that enumerates or
// memoizes checks its input against one of these before doing any work.
struct Limits {
  // Permutation oracle and full enumeration of construction sequences.
  int enumeration_elements = 11;
  // Subset DP over placed vertices (count_dp, count_based).
  int dp_elements = 28;
  int dp_vertices = 24;
  // Exact minimum-cost DP.
  int optimize_vertices = 22;
  // greedy_all runs every vertex order.
  int greedy_all_vertices = 8;
  // Distinct memo entries any single DP may allocate.
  std::size_t max_states = std::size_t{1} << 26;
  // Largest graph build_family will materialize.
  int build_elements = 1 << 16;
};

}  // namespace cnum
