#include "cnum/csequence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cnum/errors.hpp"
#include "cnum/union_find.hpp"

namespace cnum {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Validation validate(const Graph& g, std::span<const ElementId> seq) {
  Validation result;
  auto report = [&](Violation::Kind kind, ElementId element, std::string message, ElementId endpoint = {}) {
    result.violations.push_back({kind, element, endpoint, std::move(message)});
  };

  const int l = g.element_count();
  if (static_cast<int>(seq.size()) != l) {
    report(Violation::Kind::WrongLength, {},
           "sequence has " + std::to_string(seq.size()) + " elements; the graph has " + std::to_string(l));
  }

  std::vector<int> pos(at(l), 0);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const ElementId s = seq[j];
    if (!g.contains(s)) {
      report(Violation::Kind::UnknownElement, s, to_string(s) + " is not an element of the graph");
      continue;
    }
    int& slot = pos[at(g.dense(s))];
    if (slot != 0) {
      report(Violation::Kind::Repeated, s, to_string(s) + " appears more than once");
      continue;
    }
    slot = static_cast<int>(j) + 1;
  }
  for (int d = 0; d < l; ++d) {
    if (pos[at(d)] == 0) report(Violation::Kind::Missing, g.element(d), to_string(g.element(d)) + " is missing");
  }

  for (int id = 1; id <= g.edge_count(); ++id) {
    const int xe = pos[at(g.dense(ElementId::edge(id)))];
    if (xe == 0) continue;
    const Edge& e = g.edge(id);
    for (int v : {e.u, e.w}) {
      const int xv = pos[at(v - 1)];
      if (xv != 0 && xv > xe) {
        report(Violation::Kind::EdgeBeforeEndpoint, ElementId::edge(id),
               "e" + std::to_string(id) + " appears before its endpoint v" + std::to_string(v),
               ElementId::vertex(v));
      }
      if (e.is_loop()) break;
    }
  }
  return result;
}

CSeq::CSeq(const Graph& g, std::vector<ElementId> seq) : p_(g.vertex_count()), seq_(std::move(seq)) {
  const Validation check = validate(g, seq_);
  if (!check.valid()) throw DomainError("not a construction sequence: " + check.violations.front().message);
  pos_.assign(seq_.size(), 0);
  for (std::size_t j = 0; j < seq_.size(); ++j) pos_[at(g.dense(seq_[j]))] = static_cast<int>(j) + 1;
}

std::vector<ElementId> parse_sequence(std::string_view text) {
  std::vector<ElementId> seq;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'v' && token[0] != 'e'))
      throw DomainError("bad sequence token '" + token + "' (expected v<i> or e<j>)");
    int index = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
    if (ec != std::errc() || ptr != token.data() + token.size() || index < 1)
      throw DomainError("bad sequence token '" + token + "' (expected v<i> or e<j>)");
    seq.push_back(token[0] == 'v' ? ElementId::vertex(index) : ElementId::edge(index));
  }
  return seq;
}

std::string format_sequence(std::span<const ElementId> seq) {
  std::string out;
  for (const ElementId s : seq) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

std::string format_short(std::span<const ElementId> seq, bool zero_hub) {
  std::string out;
  for (const ElementId s : seq) {
    if (!out.empty()) out += ' ';
    if (s.is_vertex()) {
      out += std::to_string(zero_hub ? s.index - 1 : s.index);
    } else {
      out += std::to_string(s.index) + "'";
    }
  }
  return out;
}

ComponentProfile component_profile(const Graph& g, const CSeq& x) {
  ComponentProfile profile;
  UnionFind sets(at(g.vertex_count()));
  int components = 0;
  for (const ElementId s : x.elements()) {
    if (s.is_vertex()) {
      ++components;
    } else {
      const Edge& e = g.edge(s.index);
      if (sets.unite(at(e.u - 1), at(e.w - 1))) --components;
    }
    profile.b.push_back(components);
    profile.beta = std::max(profile.beta, components);
  }
  return profile;
}

std::int64_t edge_cost(const Graph& g, const CSeq& x, int edge) {
  if (edge < 1 || edge > g.edge_count()) throw DomainError("e" + std::to_string(edge) + " is not an edge of the graph");
  const Edge& e = g.edge(edge);
  return 2 * std::int64_t{x.edge_position(edge)} - x.vertex_position(e.u) - x.vertex_position(e.w);
}

std::vector<std::int64_t> edge_costs(const Graph& g, const CSeq& x) {
  std::vector<std::int64_t> costs;
  for (int id = 1; id <= g.edge_count(); ++id) costs.push_back(edge_cost(g, x, id));
  return costs;
}

std::int64_t total_cost(const Graph& g, const CSeq& x) {
  std::int64_t total = 0;
  for (int id = 1; id <= g.edge_count(); ++id) total += edge_cost(g, x, id);
  return total;
}

std::int64_t total_cost_linear(const Graph& g, const CSeq& x) {
  std::int64_t total = 0;
  for (int id = 1; id <= g.edge_count(); ++id) total += 2 * std::int64_t{x.edge_position(id)};
  for (int v = 1; v <= g.vertex_count(); ++v) total -= std::int64_t{g.degree(v)} * x.vertex_position(v);
  return total;
}

namespace {

// Σ_{e ∋ v} x(e), each incident edge record once (a loop counts once).
std::vector<std::int64_t> incident_position_sums(const Graph& g, const CSeq& x) {
  std::vector<std::int64_t> sums(at(g.vertex_count()), 0);
  for (int id = 1; id <= g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    sums[at(e.u - 1)] += x.edge_position(id);
    if (!e.is_loop()) sums[at(e.w - 1)] += x.edge_position(id);
  }
  return sums;
}

std::vector<int> incident_edge_counts(const Graph& g) {
  std::vector<int> counts(at(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    ++counts[at(e.u - 1)];
    if (!e.is_loop()) ++counts[at(e.w - 1)];
  }
  return counts;
}

void require_no_isolated_vertex(const Graph& g) {
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw DomainError("kappa cost is undefined: vertex v" + std::to_string(v) + " is isolated");
}

}  // namespace

Rational kappa_cost(const Graph& g, const CSeq& x) {
  require_no_isolated_vertex(g);
  const auto sums = incident_position_sums(g, x);
  Rational total = 0;
  for (int v = 1; v <= g.vertex_count(); ++v)
    total += Rational(sums[at(v - 1)] - x.vertex_position(v), g.degree(v));
  return total;
}

Rational kappa_cost_per_edge(const Graph& g, const CSeq& x) {
  require_no_isolated_vertex(g);
  const auto sums = incident_position_sums(g, x);
  const auto counts = incident_edge_counts(g);
  Rational total = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const std::int64_t delay = sums[at(v - 1)] - std::int64_t{counts[at(v - 1)]} * x.vertex_position(v);
    total += Rational(delay, g.degree(v));
  }
  return total;
}

TimeAssignment::TimeAssignment(const Graph& g, std::vector<Rational> times) : g_(g), times_(std::move(times)) {
  if (static_cast<int>(times_.size()) != g.element_count())
    throw DomainError("time assignment needs one value per element");
  for (int d = 0; d < g.element_count(); ++d) {
    const Rational& t = times_[static_cast<std::size_t>(d)];
    if (t < 0 || t > 1) throw DomainError("time of " + to_string(g.element(d)) + " lies outside [0,1]");
  }
  for (int id = 1; id <= g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const Rational& te = at(ElementId::edge(id));
    if (!(te > at(ElementId::vertex(e.u)) && te > at(ElementId::vertex(e.w))))
      throw DomainError("time of e" + std::to_string(id) + " does not exceed the times of both endpoints");
  }
}

Rational continuous_cost(const TimeAssignment& h, int edge) {
  const Graph& g = h.graph();
  if (edge < 1 || edge > g.edge_count()) throw DomainError("e" + std::to_string(edge) + " is not an edge of the graph");
  const Edge& e = g.edge(edge);
  return 2 * h.at(ElementId::edge(edge)) - h.at(ElementId::vertex(e.u)) - h.at(ElementId::vertex(e.w));
}

namespace {

void require_canonical_path(const Graph& g) {
  if (!is_canonical_path(g)) throw DomainError("up-down correspondence needs a canonically labeled path");
}

ElementId from_consecutive(int label) {
  return label % 2 == 1 ? ElementId::vertex((label + 1) / 2) : ElementId::edge(label / 2);
}

}  // namespace

std::vector<int> to_updown(const Graph& path, const CSeq& x) {
  require_canonical_path(path);
  const int l = path.element_count();
  std::vector<int> inverse(at(l));
  for (int k = 1; k <= l; ++k) inverse[at(k - 1)] = x.position(from_consecutive(k));
  return inverse;
}

CSeq from_updown(const Graph& path, std::span<const int> updown) {
  require_canonical_path(path);
  const int l = path.element_count();
  if (static_cast<int>(updown.size()) != l)
    throw DomainError("up-down permutation must have length " + std::to_string(l));
  std::vector<int> pi(at(l), 0);
  for (int k = 1; k <= l; ++k) {
    const int position = updown[at(k - 1)];
    if (position < 1 || position > l || pi[at(position - 1)] != 0)
      throw DomainError("input is not a permutation of 1.." + std::to_string(l));
    pi[at(position - 1)] = k;
  }
  if (!is_updown(updown)) throw DomainError("input permutation is not up-down");
  std::vector<ElementId> seq;
  seq.reserve(at(l));
  for (int label : pi) seq.push_back(from_consecutive(label));
  return CSeq(path, std::move(seq));
}

bool is_updown(std::span<const int> perm) {
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    const bool rising = perm[i] < perm[i + 1];
    if (rising != (i % 2 == 0)) return false;
  }
  return true;
}

CSeq easy_sequence(const Graph& g, std::span<const int> vertex_order, std::span<const int> edge_order) {
  std::vector<ElementId> seq;
  for (int v : vertex_order) seq.push_back(ElementId::vertex(v));
  for (int e : edge_order) seq.push_back(ElementId::edge(e));
  return CSeq(g, std::move(seq));
}

}  // namespace cnum
