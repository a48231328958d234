#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cnum/bigint.hpp"
#include "cnum/graph.hpp"
#include "cnum/limits.hpp"

namespace cnum {

// All labeled trees on vertices 1..n (n^(n-2) of them).
struct LabeledTrees {
  int n = 2;
};

// All simple graphs on vertices 1..p with exactly q edges.
struct GraphsPQ {
  int p = 1;
  int q = 0;
};

struct ExplicitFamily {
  std::vector<Graph> graphs;
};

using Family = std::variant<LabeledTrees, GraphsPQ, ExplicitFamily>;

// "trees:5", "pq:4:3"; "explicit" for an explicit list.
std::string family_name(const Family& family);
Family parse_family(std::string_view text);

// Decodes a Prüfer word over 1..n of length n-2. Edges come out as (min, max)
// pairs in lexicographic order.
Graph prufer_decode(std::span<const int> word, int n);

// Visits the trees of every Prüfer word, words in lexicographic order.
void labeled_trees(int n, const std::function<void(const Graph&)>& visit);

// Visits every q-subset of the pairs of [p], pairs and subsets in
// lexicographic order.
void graphs_pq(int p, int q, const std::function<void(const Graph&)>& visit);

void for_each_graph(const Family& family, const std::function<void(const Graph&)>& visit);

// Same vertex count and the same multiset of unordered endpoint pairs.
bool same_labeled_graph(const Graph& a, const Graph& b);

bool is_star(const Graph& g);
bool is_path(const Graph& g);

// Mean construction number over the family.
Rational alpha(const Family& family, const Limits& limits = {});

// c(G) / α(F). Throws DomainError when g is not a member of the family.
Rational xi(const Graph& g, const Family& family, const Limits& limits = {});

struct XiRow {
  std::size_t id = 0;  // 0-based position in the family's visiting order
  Graph graph;
  BigInt c;
  Rational xi;
};

struct XiReport {
  std::string family;
  std::size_t size = 0;
  Rational alpha;
  std::vector<XiRow> rows;
};

XiReport xi_report(const Family& family, const Limits& limits = {});

}  // namespace cnum
