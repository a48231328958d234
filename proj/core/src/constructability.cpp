#include "cnum/constructability.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "cnum/counting.hpp"
#include "cnum/errors.hpp"

namespace cnum {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::pair<int, int>> normalized_edges(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(std::min(e.u, e.w), std::max(e.u, e.w));
  std::sort(edges.begin(), edges.end());
  return edges;
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("malformed family '" + std::string(whole) + "'");
  return value;
}

}  // namespace

std::string family_name(const Family& family) {
  return std::visit(Overloaded{
                        [](const LabeledTrees& f) { return "trees:" + std::to_string(f.n); },
                        [](const GraphsPQ& f) { return "pq:" + std::to_string(f.p) + ":" + std::to_string(f.q); },
                        [](const ExplicitFamily&) { return std::string("explicit"); },
                    },
                    family);
}

Family parse_family(std::string_view text) {
  if (text.starts_with("trees:")) return LabeledTrees{parse_int(text.substr(6), text)};
  if (text.starts_with("pq:")) {
    const std::string_view rest = text.substr(3);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw DomainError("malformed family '" + std::string(text) + "'");
    return GraphsPQ{parse_int(rest.substr(0, colon), text), parse_int(rest.substr(colon + 1), text)};
  }
  throw DomainError("unknown family '" + std::string(text) + "' (expected trees:n or pq:p:q)");
}

Graph prufer_decode(std::span<const int> word, int n) {
  if (n < 2 || static_cast<int>(word.size()) != n - 2) throw DomainError("Prüfer word has the wrong length");
  std::vector<int> degree(at(n + 1), 1);
  for (int v : word) {
    if (v < 1 || v > n) throw DomainError("Prüfer word entry out of range");
    ++degree[at(v)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[at(v)] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (int v : word) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    if (--degree[at(v)] == 1) leaves.push(v);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.u, x.w) < std::pair(y.u, y.w);
  });
  return Graph(n, std::move(edges));
}

void labeled_trees(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 2 || n > 8) throw DomainError("labeled tree generation supports 2 <= n <= 8");
  std::vector<int> word(at(n - 2), 1);
  while (true) {
    visit(prufer_decode(word, n));
    int i = n - 3;
    while (i >= 0 && word[at(i)] == n) word[at(i--)] = 1;
    if (i < 0) break;
    ++word[at(i)];
  }
}

void graphs_pq(int p, int q, const std::function<void(const Graph&)>& visit) {
  if (p < 1 || p > 7) throw DomainError("graph family generation supports 1 <= p <= 7");
  std::vector<Edge> pairs;
  for (int u = 1; u <= p; ++u)
    for (int w = u + 1; w <= p; ++w) pairs.push_back({u, w});
  const int total = static_cast<int>(pairs.size());
  if (q < 0 || q > total) throw DomainError("q must lie in 0.." + std::to_string(total));

  std::vector<int> pick(at(q));
  for (int i = 0; i < q; ++i) pick[at(i)] = i;
  while (true) {
    std::vector<Edge> edges;
    for (int i : pick) edges.push_back(pairs[at(i)]);
    visit(Graph(p, std::move(edges)));
    int i = q - 1;
    while (i >= 0 && pick[at(i)] == total - q + i) --i;
    if (i < 0) break;
    ++pick[at(i)];
    for (int j = i + 1; j < q; ++j) pick[at(j)] = pick[at(j - 1)] + 1;
  }
}

void for_each_graph(const Family& family, const std::function<void(const Graph&)>& visit) {
  std::visit(Overloaded{
                 [&](const LabeledTrees& f) { labeled_trees(f.n, visit); },
                 [&](const GraphsPQ& f) { graphs_pq(f.p, f.q, visit); },
                 [&](const ExplicitFamily& f) {
                   for (const Graph& g : f.graphs) visit(g);
                 },
             },
             family);
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && normalized_edges(a) == normalized_edges(b);
}

bool is_star(const Graph& g) {
  const int p = g.vertex_count();
  if (p < 2 || g.edge_count() != p - 1 || !g.is_connected()) return false;
  for (int v = 1; v <= p; ++v)
    if (g.degree(v) == p - 1) return true;
  return false;
}

bool is_path(const Graph& g) {
  const int p = g.vertex_count();
  if (p < 1 || g.edge_count() != p - 1 || !g.is_connected()) return false;
  for (int v = 1; v <= p; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

Rational alpha(const Family& family, const Limits& limits) {
  BigInt sum = 0;
  std::size_t size = 0;
  for_each_graph(family, [&](const Graph& g) {
    sum += count_dp(g, limits);
    ++size;
  });
  if (size == 0) throw DomainError("family " + family_name(family) + " is empty");
  return Rational(sum, BigInt(size));
}

Rational xi(const Graph& g, const Family& family, const Limits& limits) {
  bool member = false;
  for_each_graph(family, [&](const Graph& h) { member = member || same_labeled_graph(g, h); });
  if (!member) throw DomainError("graph is not a member of family " + family_name(family));
  return Rational(count_dp(g, limits)) / alpha(family, limits);
}

XiReport xi_report(const Family& family, const Limits& limits) {
  XiReport report;
  report.family = family_name(family);
  BigInt sum = 0;
  for_each_graph(family, [&](const Graph& g) {
    XiRow row;
    row.id = report.rows.size();
    row.graph = g;
    row.c = count_dp(g, limits);
    sum += row.c;
    report.rows.push_back(std::move(row));
  });
  report.size = report.rows.size();
  if (report.size == 0) throw DomainError("family " + report.family + " is empty");
  report.alpha = Rational(sum, BigInt(report.size));
  for (XiRow& row : report.rows) row.xi = Rational(row.c) / report.alpha;
  return report;
}

}  // namespace cnum
