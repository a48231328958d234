#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cnum/counting.hpp"
#include "cnum/csequence.hpp"
#include "cnum/errors.hpp"
#include "cnum/graph.hpp"
#include "cnum/optimize.hpp"
#include "support/oracles.hpp"

using namespace cnum;

namespace {

std::vector<int> natural(int p) {
  std::vector<int> v(static_cast<std::size_t>(p));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

TEST(Greedy, PathNaturalOrder) {
  for (int n = 2; n <= 8; ++n) {
    const Graph g = path_graph(n);
    const CSeq x = greedy(g, natural(n));
    std::string expect = "v1";
    for (int k = 2; k <= n; ++k) expect += " v" + std::to_string(k) + " e" + std::to_string(k - 1);
    EXPECT_EQ(format_sequence(x.elements()), expect);
    EXPECT_EQ(total_cost(g, x), 4 * n - 5);
  }
}

TEST(Greedy, StarFromHubAndReversedEdge) {
  for (int n = 1; n <= 10; ++n) {
    const Graph g = star_graph(n);
    EXPECT_EQ(total_cost(g, greedy(g, natural(n + 1))), (n + 1) * (n + 1) - 1) << n;
  }
  const Graph p2 = path_graph(2);
  const std::vector<int> order = {2, 1};
  const CSeq x = greedy(p2, order);
  EXPECT_EQ(format_sequence(x.elements()), "v2 v1 e1");
  EXPECT_EQ(total_cost(p2, x), 3);
}

TEST(Greedy, RejectsBadVertexOrders) {
  const Graph p3 = path_graph(3);
  const std::vector<int> short_order = {1, 2}, dup = {1, 1, 2}, range = {1, 2, 4};
  EXPECT_THROW(greedy(p3, short_order), DomainError);
  EXPECT_THROW(greedy(p3, dup), DomainError);
  EXPECT_THROW(greedy(p3, range), DomainError);
}

TEST(Greedy, TieBreakPolicies) {
  // K4 from the natural order offers several edges at once.
  const Graph k4 = complete_graph(4);
  for (TieBreakPolicy policy : {TieBreakPolicy::Lexicographic, TieBreakPolicy::CycleAvoiding, TieBreakPolicy::SeededRandom}) {
    const TieBreak tb{policy, 17};
    const CSeq a = greedy(k4, natural(4), tb);
    const CSeq b = greedy(k4, natural(4), tb);
    EXPECT_EQ(a, b) << to_string(tb);
    EXPECT_TRUE(validate(k4, a.elements()).valid());
  }
  // After v1 v2 e1 v3 the lexicographic choice is e2 = {1,3}.
  const CSeq lex = greedy(k4, natural(4));
  EXPECT_EQ(lex[5], ElementId::edge(2));
}

TEST(Greedy, CycleAvoidingPrefersBridges) {
  // When v2 arrives both the loop e1 and the bridge e2 are available.
  const Graph g(2, {{2, 2}, {1, 2}}, GraphMode::Multi);
  const std::vector<int> order = {1, 2};
  EXPECT_EQ(format_sequence(greedy(g, order).elements()), "v1 v2 e1 e2");
  EXPECT_EQ(format_sequence(greedy(g, order, {TieBreakPolicy::CycleAvoiding, 0}).elements()), "v1 v2 e2 e1");
}

TEST(GreedyAll, Examples) {
  const auto p3 = greedy_all(path_graph(3));
  const auto p3_econ = enumerate_economical(path_graph(3));
  for (const CSeq& x : p3_econ) EXPECT_NE(std::find(p3.begin(), p3.end(), x), p3.end());
  EXPECT_EQ(greedy_all(star_graph(1)).size(), 2u);

  // The lexicographic policy fixes the order of the two closing edges, so it reaches
  // half of the economical sequences of the triangle; branching over ties reaches all.
  const auto c3 = greedy_all(cycle_graph(3));
  const auto c3_eager = greedy_exhaustive(cycle_graph(3));
  const auto c3_econ = enumerate_economical(cycle_graph(3));
  EXPECT_EQ(c3_econ.size(), 12u);
  std::size_t lex_hits = 0;
  for (const CSeq& x : c3_econ) {
    lex_hits += std::find(c3.begin(), c3.end(), x) != c3.end();
    EXPECT_TRUE(std::binary_search(c3_eager.begin(), c3_eager.end(), x));
  }
  EXPECT_EQ(lex_hits, 6u);
  EXPECT_TRUE(std::is_sorted(c3.begin(), c3.end()));

  EXPECT_THROW(greedy_all(path_graph(9)), ResourceLimitError);
}

TEST(MinCost, PathsAndCycles) {
  for (int n = 2; n <= 8; ++n) {
    const OptResult r = min_cost(path_graph(n));
    EXPECT_EQ(r.min_cost, 4 * n - 5) << n;
    EXPECT_EQ(r.num_optimal, 2) << n;
  }
  for (int n = 3; n <= 8; ++n) {
    const OptResult r = min_cost(cycle_graph(n));
    EXPECT_EQ(r.min_cost, 6 * n - 4) << n;
    // Each new vertex may extend the arc at either end and the two closing edges
    // may come in either order: n * 2^(n-1) economical sequences.
    EXPECT_EQ(r.num_optimal, BigInt(n) << (n - 1)) << n;
  }
}

TEST(MinCost, StarFive) {
  const OptResult r = min_cost(star_graph(5), 5);
  const auto brute = oracle::min_cost(oracle::raw(star_graph(5)));
  EXPECT_EQ(r.min_cost, brute.cost);
  EXPECT_EQ(r.num_optimal, BigInt(brute.count));
  EXPECT_LE(r.min_cost, 30);
  ASSERT_EQ(r.witnesses.size(), 5u);
  for (const CSeq& x : r.witnesses) EXPECT_EQ(total_cost(star_graph(5), x), r.min_cost);
  EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
}

TEST(MinCost, WitnessesAreTheFirstEconomicalSequences) {
  const Graph g = build_family("wedge(cycle:3@1, path:3@2)");
  const auto econ = enumerate_economical(g);
  const OptResult r = min_cost(g, 1000);
  ASSERT_EQ(BigInt(econ.size()), r.num_optimal);
  EXPECT_EQ(r.witnesses, econ);
  EXPECT_EQ(min_cost(g, 2).witnesses, std::vector<CSeq>(econ.begin(), econ.begin() + 2));
}

TEST(MinCost, EdgelessAndLimits) {
  const OptResult r = min_cost(Graph(3, {}));
  EXPECT_EQ(r.min_cost, 0);
  EXPECT_EQ(r.num_optimal, 6);
  EXPECT_THROW(min_cost(path_graph(23)), ResourceLimitError);
}

TEST(Economical, CountsAndProfiles) {
  EXPECT_EQ(enumerate_economical(path_graph(4)).size(), 2u);
  EXPECT_EQ(enumerate_economical(cycle_graph(4)).size(), 32u);
  for (int n = 3; n <= 5; ++n) {
    const auto brute = oracle::min_cost(oracle::raw(cycle_graph(n)));
    EXPECT_EQ(brute.cost, 6 * n - 4);
    EXPECT_EQ(brute.count, static_cast<std::uint64_t>(n) << (n - 1));
  }
  for (int n = 2; n <= 5; ++n) {
    const Graph g = path_graph(n);
    for (const CSeq& x : enumerate_economical(g)) EXPECT_LE(component_profile(g, x).beta, 2);
  }
}

TEST(StarSchedule, Costs) {
  EXPECT_EQ(total_cost(star_graph(5), star_schedule(5)), 30);
  EXPECT_EQ(total_cost(star_graph(2), star_schedule(2)), 7);
  EXPECT_EQ(total_cost(star_graph(2), star_schedule(2)), min_cost(path_graph(3)).min_cost);
  EXPECT_EQ(total_cost(star_graph(1), star_schedule(1)), 3);
  for (int n = 1; n <= 10; ++n) {
    const std::int64_t schedule = total_cost(star_graph(n), star_schedule(n));
    const std::int64_t hub_first = (n + 1) * (n + 1) - 1;
    if (n >= 2) {
      EXPECT_LT(schedule, hub_first) << n;
    } else {
      EXPECT_LE(schedule, hub_first) << n;
    }
  }
  EXPECT_THROW(star_schedule(0), DomainError);
}

TEST(Conjecture, SmallFamilies) {
  for (const char* spec : {"path:1", "path:2", "path:3", "path:4", "path:5", "cycle:3", "cycle:4", "cycle:5"}) {
    const ConjectureReport r = check_conjecture(build_family(spec));
    EXPECT_EQ(r.mode, "exhaustive");
    EXPECT_TRUE(r.holds) << spec;
    EXPECT_TRUE(r.unreachable.empty()) << spec;
  }
}

TEST(Conjecture, ReportsAreConsistent) {
  for (const char* spec : {"star:3", "complete:4", "union(path:2,path:2)"}) {
    const Graph g = build_family(spec);
    const ConjectureReport r = check_conjecture(g);
    EXPECT_EQ(r.min_cost, min_cost(g).min_cost);
    EXPECT_EQ(BigInt(r.economical), min_cost(g).num_optimal);
    EXPECT_EQ(r.holds, r.unreachable.empty());
    for (const CSeq& x : r.unreachable) {
      EXPECT_EQ(total_cost(g, x), r.min_cost);
      EXPECT_FALSE(is_greedy_reachable(g, x));
    }
    const ConjectureReport lex = check_conjecture(g, TieBreak{});
    EXPECT_EQ(lex.mode, "lexicographic");
    EXPECT_LE(lex.greedy_sequences, r.greedy_sequences);
  }
}

TEST(Conjecture, ExhaustiveGreedyContainsEveryPolicyRun) {
  const Graph g = complete_graph(4);
  const auto eager = greedy_exhaustive(g);
  for (TieBreakPolicy policy : {TieBreakPolicy::Lexicographic, TieBreakPolicy::CycleAvoiding, TieBreakPolicy::SeededRandom}) {
    for (const CSeq& x : greedy_all(g, {policy, 3})) {
      EXPECT_TRUE(std::binary_search(eager.begin(), eager.end(), x));
      EXPECT_TRUE(is_greedy_reachable(g, x));
    }
  }
}

TEST(Conjecture, EdgeFirstCharacterizationMatchesOrderEnumeration) {
  // Running greedy over every vertex order while branching over every edge choice
  // must give exactly the eager sequences.
  for (const char* spec : {"cycle:4", "star:3", "complete:4", "union(path:3,cycle:3)"}) {
    const Graph g = build_family(spec);
    std::set<CSeq> via_orders;
    const int p = g.vertex_count();
    std::vector<int> order = natural(p);
    std::function<void(std::vector<ElementId>&, std::size_t, std::vector<bool>&, std::vector<bool>&)> branch;
    branch = [&](std::vector<ElementId>& prefix, std::size_t next, std::vector<bool>& placed_v, std::vector<bool>& placed_e) {
      std::vector<int> available;
      for (int e = 1; e <= g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!placed_e[static_cast<std::size_t>(e)] && placed_v[static_cast<std::size_t>(ed.u)] && placed_v[static_cast<std::size_t>(ed.w)])
          available.push_back(e);
      }
      if (!available.empty()) {
        for (int e : available) {
          placed_e[static_cast<std::size_t>(e)] = true;
          prefix.push_back(ElementId::edge(e));
          branch(prefix, next, placed_v, placed_e);
          prefix.pop_back();
          placed_e[static_cast<std::size_t>(e)] = false;
        }
        return;
      }
      if (next == order.size()) {
        via_orders.insert(CSeq(g, prefix));
        return;
      }
      const int v = order[next];
      placed_v[static_cast<std::size_t>(v)] = true;
      prefix.push_back(ElementId::vertex(v));
      branch(prefix, next + 1, placed_v, placed_e);
      prefix.pop_back();
      placed_v[static_cast<std::size_t>(v)] = false;
    };
    do {
      std::vector<ElementId> prefix;
      std::vector<bool> pv(static_cast<std::size_t>(p) + 1), pe(static_cast<std::size_t>(g.edge_count()) + 1);
      branch(prefix, 0, pv, pe);
    } while (std::next_permutation(order.begin(), order.end()));
    const auto eager = greedy_exhaustive(g);
    EXPECT_EQ(std::vector<CSeq>(via_orders.begin(), via_orders.end()), eager) << spec;
  }
}

TEST(OptimizeProperties, RandomGraphsAgainstPermutationOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, trial % 4 == 0);
    const auto brute = oracle::min_cost(oracle::raw(g));
    const OptResult r = min_cost(g, 50);
    EXPECT_EQ(r.min_cost, brute.cost) << to_graph_text(g);
    EXPECT_EQ(r.num_optimal, BigInt(brute.count)) << to_graph_text(g);
    for (const CSeq& x : r.witnesses) {
      EXPECT_EQ(total_cost(g, x), r.min_cost);
      EXPECT_EQ(total_cost_linear(g, x), r.min_cost);
    }
    EXPECT_EQ(BigInt(enumerate_economical(g).size()), r.num_optimal);
  }
}

TEST(Implication, SurveyRunsOverCorpus) {
  std::vector<Graph> corpus;
  for (const char* spec : {"path:3", "path:4", "star:3", "cycle:4", "complete:3"}) corpus.push_back(build_family(spec));
  const ImplicationSurvey s = survey_economical_implication(corpus);
  EXPECT_GT(s.comparable_pairs, 0u);
  for (const auto& [a, b] : s.failures) {
    EXPECT_LT(min_cost(corpus[a]).num_optimal, min_cost(corpus[b]).num_optimal);
    EXPECT_GE(count_dp(corpus[a]), count_dp(corpus[b]));
  }
}
