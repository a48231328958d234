#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cnum/bigint.hpp"
#include "cnum/csequence.hpp"
#include "cnum/graph.hpp"
#include "cnum/limits.hpp"

namespace cnum {

enum class TieBreakPolicy { Lexicographic, CycleAvoiding, SeededRandom };

// How greedy picks among several available edges. Lexicographic takes the
// smallest edge id; CycleAvoiding prefers edges that join two components and
// then the smallest id; SeededRandom draws from a fixed-seed mt19937_64.
struct TieBreak {
  TieBreakPolicy policy = TieBreakPolicy::Lexicographic;
  std::uint64_t seed = 0;
};

std::string to_string(const TieBreak& tb);

// Places vertices in vertex_order, but emits an available edge (both
// endpoints placed, edge not yet placed) whenever one exists.
CSeq greedy(const Graph& g, std::span<const int> vertex_order, const TieBreak& tb = {});

// Distinct greedy outputs over all p! vertex orders, sorted.
std::vector<CSeq> greedy_all(const Graph& g, const TieBreak& tb = {}, const Limits& limits = {});

// Every sequence some greedy run can produce under some vertex order and
// some tie resolution: exactly the sequences that never place a vertex while
// an edge is available. Sorted.
std::vector<CSeq> greedy_exhaustive(const Graph& g, const Limits& limits = {});
bool is_greedy_reachable(const Graph& g, const CSeq& x);

struct OptResult {
  std::int64_t min_cost = 0;
  BigInt num_optimal = 0;
  std::vector<CSeq> witnesses;  // lexicographically first ones, up to the requested cap
};

// Exact ν(G) and c'(G). Total cost is the position-weighted sum
// Σ_s w(s) x(s) with w(edge) = 2 and w(v) = -deg(v), so a DP over
// (placed vertices, placed edge count) that adds w(s)·t when s lands at
// position t carries (minimum, number of minimizers) exactly.
OptResult min_cost(const Graph& g, std::size_t max_witnesses = 0, const Limits& limits = {});

// All minimum-cost sequences by full enumeration, in lexicographic order.
std::vector<CSeq> enumerate_economical(const Graph& g, const Limits& limits = {});

struct ConjectureReport {
  std::string mode;  // "exhaustive" or the tie-break policy name
  bool connected = false;
  bool holds = false;
  std::int64_t min_cost = 0;
  std::size_t economical = 0;
  std::size_t greedy_sequences = 0;
  std::vector<CSeq> unreachable;  // economical sequences greedy never produces
};

// Checks that every economical sequence is a greedy output. With no tie-break
// the greedy side ranges over all tie resolutions; otherwise over all vertex
// orders with that single policy.
ConjectureReport check_conjecture(const Graph& g, std::optional<TieBreak> tb = std::nullopt,
                                  const Limits& limits = {});

// For the n-leaf star: floor(n/2) leaves, the hub, their edges, then each
// remaining leaf followed by its edge.
CSeq star_schedule(int n);

// Pairs (i, j) of the corpus with c'(G_i) < c'(G_j) but c(G_i) >= c(G_j).
struct ImplicationSurvey {
  std::size_t comparable_pairs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;
};
ImplicationSurvey survey_economical_implication(std::span<const Graph> corpus, const Limits& limits = {});

}  // namespace cnum
