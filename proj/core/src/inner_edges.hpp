#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cnum/graph.hpp"

namespace cnum::detail {

// e(V') for every vertex subset V' (bit v-1 = vertex v): edge records with
// both endpoints in V', loops once their vertex is in V'. Requires p <= 30.
inline std::vector<int> inner_edge_counts(const Graph& g) {
  const int p = g.vertex_count();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(p));
  for (const Edge& e : g.edges()) {
    incident[static_cast<std::size_t>(e.u - 1)].push_back(e.w - 1);
    if (!e.is_loop()) incident[static_cast<std::size_t>(e.w - 1)].push_back(e.u - 1);
  }
  std::vector<int> count(std::size_t{1} << p, 0);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << p); ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    int added = 0;
    for (int other : incident[static_cast<std::size_t>(v)])
      if (other == v || ((rest >> other) & 1u)) ++added;
    count[mask] = count[rest] + added;
  }
  return count;
}

}  // namespace cnum::detail
