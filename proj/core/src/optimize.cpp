#include "cnum/optimize.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "cnum/counting.hpp"
#include "cnum/errors.hpp"
#include "cnum/union_find.hpp"
#include "inner_edges.hpp"

namespace cnum {

namespace {

std::size_t at(std::int64_t i) { return static_cast<std::size_t>(i); }

void require_vertex_order(const Graph& g, std::span<const int> order) {
  const int p = g.vertex_count();
  std::vector<bool> seen(at(p + 1), false);
  if (static_cast<int>(order.size()) != p)
    throw DomainError("vertex order must list all " + std::to_string(p) + " vertices");
  for (int v : order) {
    if (v < 1 || v > p || seen[at(v)]) throw DomainError("vertex order is not a permutation of 1.." + std::to_string(p));
    seen[at(v)] = true;
  }
}

}  // namespace

std::string to_string(const TieBreak& tb) {
  switch (tb.policy) {
    case TieBreakPolicy::Lexicographic:
      return "lexicographic";
    case TieBreakPolicy::CycleAvoiding:
      return "cycle-avoiding";
    case TieBreakPolicy::SeededRandom:
      return "seeded-random(" + std::to_string(tb.seed) + ")";
  }
  return "unknown";
}

CSeq greedy(const Graph& g, std::span<const int> vertex_order, const TieBreak& tb) {
  require_vertex_order(g, vertex_order);
  const int q = g.edge_count();
  std::vector<bool> vertex_placed(at(g.vertex_count() + 1), false);
  std::vector<bool> edge_placed(at(q + 1), false);
  UnionFind components(at(g.vertex_count() + 1));
  std::mt19937_64 rng(tb.seed);

  std::vector<ElementId> seq;
  std::size_t next_vertex = 0;
  std::vector<int> available;
  while (static_cast<int>(seq.size()) < g.element_count()) {
    available.clear();
    for (int id = 1; id <= q; ++id) {
      const Edge& e = g.edge(id);
      if (!edge_placed[at(id)] && vertex_placed[at(e.u)] && vertex_placed[at(e.w)]) available.push_back(id);
    }
    if (available.empty()) {
      const int v = vertex_order[next_vertex++];
      vertex_placed[at(v)] = true;
      seq.push_back(ElementId::vertex(v));
      continue;
    }
    int chosen = available.front();
    switch (tb.policy) {
      case TieBreakPolicy::Lexicographic:
        break;
      case TieBreakPolicy::CycleAvoiding:
        for (int id : available) {
          const Edge& e = g.edge(id);
          if (!components.connected(at(e.u), at(e.w))) {
            chosen = id;
            break;
          }
        }
        break;
      case TieBreakPolicy::SeededRandom:
        chosen = available[at(static_cast<std::int64_t>(rng() % available.size()))];
        break;
    }
    const Edge& e = g.edge(chosen);
    components.unite(at(e.u), at(e.w));
    edge_placed[at(chosen)] = true;
    seq.push_back(ElementId::edge(chosen));
  }
  return CSeq(g, std::move(seq));
}

std::vector<CSeq> greedy_all(const Graph& g, const TieBreak& tb, const Limits& limits) {
  if (g.vertex_count() > limits.greedy_all_vertices)
    throw ResourceLimitError("greedy_all runs every vertex order; at most " +
                             std::to_string(limits.greedy_all_vertices) + " vertices are allowed");
  std::vector<int> order(at(g.vertex_count()));
  std::iota(order.begin(), order.end(), 1);
  std::set<CSeq> outputs;
  do {
    outputs.insert(greedy(g, order, tb));
  } while (std::next_permutation(order.begin(), order.end()));
  return {outputs.begin(), outputs.end()};
}

namespace {

class EagerEnumerator {
 public:
  explicit EagerEnumerator(const Graph& g) : g_(g), placed_(at(g.element_count()), false) {}

  std::vector<CSeq> run() {
    extend();
    return std::move(out_);
  }

 private:
  bool edge_available(int id) const {
    const Edge& e = g_.edge(id);
    return !placed_[at(g_.vertex_count() + id - 1)] && placed_[at(e.u - 1)] && placed_[at(e.w - 1)];
  }

  void place(int d) {
    placed_[at(d)] = true;
    prefix_.push_back(g_.element(d));
    extend();
    prefix_.pop_back();
    placed_[at(d)] = false;
  }

  void extend() {
    if (static_cast<int>(prefix_.size()) == g_.element_count()) {
      out_.emplace_back(g_, prefix_);
      return;
    }
    bool any_edge = false;
    for (int id = 1; id <= g_.edge_count(); ++id) {
      if (!edge_available(id)) continue;
      any_edge = true;
      place(g_.vertex_count() + id - 1);
    }
    if (any_edge) return;
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (!placed_[at(v)]) place(v);
  }

  const Graph& g_;
  std::vector<bool> placed_;
  std::vector<ElementId> prefix_;
  std::vector<CSeq> out_;
};

}  // namespace

std::vector<CSeq> greedy_exhaustive(const Graph& g, const Limits& limits) {
  if (g.element_count() > limits.enumeration_elements)
    throw ResourceLimitError("exhaustive greedy enumeration needs at most " +
                             std::to_string(limits.enumeration_elements) + " elements");
  std::vector<CSeq> out = EagerEnumerator(g).run();
  std::sort(out.begin(), out.end());
  return out;
}

bool is_greedy_reachable(const Graph& g, const CSeq& x) {
  const int p = g.vertex_count();
  std::vector<bool> vertex_placed(at(p + 1), false);
  // Count of edges whose endpoints are placed but which are not yet placed.
  int pending = 0;
  std::vector<std::vector<int>> incident(at(p + 1));
  for (int id = 1; id <= g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    incident[at(e.u)].push_back(id);
    if (!e.is_loop()) incident[at(e.w)].push_back(id);
  }
  for (const ElementId s : x.elements()) {
    if (s.is_edge()) {
      --pending;
      continue;
    }
    if (pending > 0) return false;
    vertex_placed[at(s.index)] = true;
    for (int id : incident[at(s.index)]) {
      const Edge& e = g.edge(id);
      if (vertex_placed[at(e.u)] && vertex_placed[at(e.w)]) ++pending;
    }
  }
  return true;
}

namespace {

struct Best {
  std::int64_t cost = std::numeric_limits<std::int64_t>::max();
  BigInt count = 0;

  void offer(std::int64_t c, const BigInt& n) {
    if (c < cost) {
      cost = c;
      count = n;
    } else if (c == cost) {
      count += n;
    }
  }
};

class CostTable {
 public:
  CostTable(const Graph& g, const Limits& limits) : g_(g), p_(g.vertex_count()) {
    if (p_ > limits.optimize_vertices || p_ > 30)
      throw ResourceLimitError("minimum-cost DP supports at most " + std::to_string(limits.optimize_vertices) +
                               " vertices");
    full_ = (std::uint32_t{1} << p_) - 1;
    inner_ = detail::inner_edge_counts(g);
    offset_.resize(at(full_) + 1);
    std::size_t total = 0;
    for (std::uint32_t mask = 0; mask <= full_; ++mask) {
      offset_[mask] = total;
      total += at(inner_[mask]) + 1;
      if (total > limits.max_states)
        throw ResourceLimitError("minimum-cost DP needs more than " + std::to_string(limits.max_states) + " states");
    }
    table_.resize(total);

    for (std::uint32_t mask = full_ + 1; mask-- > 0;) {
      const int e = inner_[mask];
      for (int m = e; m >= 0; --m) {
        const std::int64_t t = std::popcount(mask) + m + 1;
        Best best;
        if (mask == full_ && m == e) {
          best = {0, 1};
        } else {
          if (m < e) {
            const Best& next = at_state(mask, m + 1);
            best.offer(2 * t + next.cost, next.count * (e - m));
          }
          for (std::uint32_t open = full_ & ~mask; open; open &= open - 1) {
            const int v = std::countr_zero(open);
            const Best& next = at_state(mask | (std::uint32_t{1} << v), m);
            best.offer(-std::int64_t{g.degree(v + 1)} * t + next.cost, next.count);
          }
        }
        table_[offset_[mask] + at(m)] = std::move(best);
      }
    }
  }

  const Best& at_state(std::uint32_t mask, int m) const { return table_[offset_[mask] + at(m)]; }

  std::vector<CSeq> witnesses(std::size_t cap) const {
    std::vector<CSeq> out;
    if (cap == 0) return out;
    std::vector<bool> edge_placed(at(g_.edge_count() + 1), false);
    std::vector<ElementId> prefix;
    walk(0, 0, edge_placed, prefix, out, cap);
    return out;
  }

 private:
  void walk(std::uint32_t mask, int m, std::vector<bool>& edge_placed, std::vector<ElementId>& prefix,
            std::vector<CSeq>& out, std::size_t cap) const {
    if (out.size() >= cap) return;
    if (static_cast<int>(prefix.size()) == g_.element_count()) {
      out.emplace_back(g_, prefix);
      return;
    }
    const std::int64_t t = std::popcount(mask) + m + 1;
    const std::int64_t target = at_state(mask, m).cost;
    for (std::uint32_t open = full_ & ~mask; open; open &= open - 1) {
      const int v = std::countr_zero(open);
      const std::uint32_t next = mask | (std::uint32_t{1} << v);
      if (-std::int64_t{g_.degree(v + 1)} * t + at_state(next, m).cost != target) continue;
      prefix.push_back(ElementId::vertex(v + 1));
      walk(next, m, edge_placed, prefix, out, cap);
      prefix.pop_back();
      if (out.size() >= cap) return;
    }
    if (m < inner_[mask] && 2 * t + at_state(mask, m + 1).cost == target) {
      for (int id = 1; id <= g_.edge_count(); ++id) {
        const Edge& e = g_.edge(id);
        if (edge_placed[at(id)] || !((mask >> (e.u - 1)) & 1u) || !((mask >> (e.w - 1)) & 1u)) continue;
        edge_placed[at(id)] = true;
        prefix.push_back(ElementId::edge(id));
        walk(mask, m + 1, edge_placed, prefix, out, cap);
        prefix.pop_back();
        edge_placed[at(id)] = false;
        if (out.size() >= cap) return;
      }
    }
  }

  const Graph& g_;
  int p_;
  std::uint32_t full_ = 0;
  std::vector<int> inner_;
  std::vector<std::size_t> offset_;
  std::vector<Best> table_;
};

}  // namespace

OptResult min_cost(const Graph& g, std::size_t max_witnesses, const Limits& limits) {
  if (g.vertex_count() == 0) return {0, 1, {}};
  const CostTable table(g, limits);
  const Best& root = table.at_state(0, 0);
  return {root.cost, root.count, table.witnesses(max_witnesses)};
}

std::vector<CSeq> enumerate_economical(const Graph& g, const Limits& limits) {
  std::vector<CSeq> best;
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  enumerate_csequences(
      g,
      [&](const CSeq& x) {
        const std::int64_t c = total_cost(g, x);
        if (c < best_cost) {
          best_cost = c;
          best.clear();
        }
        if (c == best_cost) best.push_back(x);
      },
      limits);
  return best;
}

ConjectureReport check_conjecture(const Graph& g, std::optional<TieBreak> tb, const Limits& limits) {
  ConjectureReport report;
  report.mode = tb ? to_string(*tb) : "exhaustive";
  report.connected = g.is_connected();
  const std::vector<CSeq> economical = enumerate_economical(g, limits);
  report.economical = economical.size();
  if (!economical.empty()) report.min_cost = total_cost(g, economical.front());

  const std::vector<CSeq> runs = tb ? greedy_all(g, *tb, limits) : greedy_exhaustive(g, limits);
  report.greedy_sequences = runs.size();
  for (const CSeq& x : economical)
    if (!std::binary_search(runs.begin(), runs.end(), x)) report.unreachable.push_back(x);
  report.holds = report.unreachable.empty();
  return report;
}

CSeq star_schedule(int n) {
  if (n < 1) throw DomainError("star schedule needs n >= 1");
  const Graph star = star_graph(n);
  const int early = n / 2;
  std::vector<ElementId> seq;
  for (int leaf = 2; leaf <= early + 1; ++leaf) seq.push_back(ElementId::vertex(leaf));
  seq.push_back(ElementId::vertex(1));
  for (int id = 1; id <= early; ++id) seq.push_back(ElementId::edge(id));
  for (int id = early + 1; id <= n; ++id) {
    seq.push_back(ElementId::vertex(id + 1));
    seq.push_back(ElementId::edge(id));
  }
  return CSeq(star, std::move(seq));
}

ImplicationSurvey survey_economical_implication(std::span<const Graph> corpus, const Limits& limits) {
  std::vector<BigInt> c;
  std::vector<BigInt> c_prime;
  for (const Graph& g : corpus) {
    c.push_back(count_dp(g, limits));
    c_prime.push_back(min_cost(g, 0, limits).num_optimal);
  }
  ImplicationSurvey survey;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      if (!(c_prime[i] < c_prime[j])) continue;
      ++survey.comparable_pairs;
      if (!(c[i] < c[j])) survey.failures.emplace_back(i, j);
    }
  }
  return survey;
}

}  // namespace cnum
