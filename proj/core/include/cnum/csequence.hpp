#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnum/bigint.hpp"
#include "cnum/graph.hpp"

namespace cnum {

// A valid construction sequence of a particular graph: a permutation of its
// vertices and edges in which every edge follows both endpoints. Positions
// are 1-based, as in x(s) = j iff seq[j] = s.
class CSeq {
 public:
  // Throws DomainError naming the first violation when seq is not a valid
  // construction sequence of g.
  CSeq(const Graph& g, std::vector<ElementId> seq);

  std::span<const ElementId> elements() const { return seq_; }
  int length() const { return static_cast<int>(seq_.size()); }
  ElementId operator[](int position) const { return seq_[static_cast<std::size_t>(position - 1)]; }

  int position(ElementId id) const {
    return pos_[static_cast<std::size_t>(id.is_vertex() ? id.index - 1 : p_ + id.index - 1)];
  }
  int vertex_position(int v) const { return pos_[static_cast<std::size_t>(v - 1)]; }
  int edge_position(int e) const { return pos_[static_cast<std::size_t>(p_ + e - 1)]; }

  friend bool operator==(const CSeq& a, const CSeq& b) { return a.seq_ == b.seq_; }
  friend auto operator<=>(const CSeq& a, const CSeq& b) { return a.seq_ <=> b.seq_; }

 private:
  int p_ = 0;
  std::vector<ElementId> seq_;
  std::vector<int> pos_;
};

struct Violation {
  enum class Kind { WrongLength, UnknownElement, Repeated, Missing, EdgeBeforeEndpoint };
  Kind kind;
  ElementId element;        // offending element (the edge, for EdgeBeforeEndpoint)
  ElementId endpoint = {};  // the endpoint it precedes, for EdgeBeforeEndpoint
  std::string message;
};

struct Validation {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

Validation validate(const Graph& g, std::span<const ElementId> seq);

// "v1 v2 e1"; accepts any whitespace. Throws DomainError on bad tokens.
std::vector<ElementId> parse_sequence(std::string_view text);
std::string format_sequence(std::span<const ElementId> seq);

// Short display: vertex labels and primed edge ids ("1 2 1' 3 2'"). With
// zero_hub the vertex labels are shifted down by one, so a star's hub shows
// as 0 and edge i joins 0 to i.
std::string format_short(std::span<const ElementId> seq, bool zero_hub = false);

struct ComponentProfile {
  std::vector<int> b;  // b[i-1] = components of the subgraph spanned by the first i elements
  int beta = 0;
};

ComponentProfile component_profile(const Graph& g, const CSeq& x);

// 2x(e) - x(u) - x(w); a loop at u costs 2x(e) - 2x(u).
std::int64_t edge_cost(const Graph& g, const CSeq& x, int edge);
std::vector<std::int64_t> edge_costs(const Graph& g, const CSeq& x);
std::int64_t total_cost(const Graph& g, const CSeq& x);

// Same total via 2 Σ_e x(e) - Σ_v deg(v) x(v).
std::int64_t total_cost_linear(const Graph& g, const CSeq& x);

// Vertex-attributed cost Σ_v (Σ_{e ∋ v} x(e) - x(v)) / deg(v), with x(v)
// subtracted once per vertex. Throws DomainError on an isolated vertex.
Rational kappa_cost(const Graph& g, const CSeq& x);

// The other reading, Σ_v Σ_{e ∋ v} (x(e) - x(v)) / deg(v). Kept so the two
// can be compared side by side.
Rational kappa_cost_per_edge(const Graph& g, const CSeq& x);

// Rational time stamps h(s) in [0,1] for every element, indexed densely
// (vertex v at v-1, edge e at p+e-1), with h(e) > max(h(u), h(w)).
class TimeAssignment {
 public:
  TimeAssignment(const Graph& g, std::vector<Rational> times);
  const Rational& at(ElementId id) const { return times_[static_cast<std::size_t>(g_.dense(id))]; }
  const Graph& graph() const { return g_; }

 private:
  Graph g_;
  std::vector<Rational> times_;
};

// 2h(e) - h(u) - h(w), always positive.
Rational continuous_cost(const TimeAssignment& h, int edge);

// Consecutive numbering of a canonical path: vertex i -> 2i-1, edge j -> 2j.
// With π the sequence in that numbering, returns π⁻¹ (π⁻¹[k-1] = position of
// element k), which is up-down exactly when the sequence is valid.
std::vector<int> to_updown(const Graph& path, const CSeq& x);
CSeq from_updown(const Graph& path, std::span<const int> updown);

// Consecutive differences alternate in sign, the first one positive.
bool is_updown(std::span<const int> perm);

// vertex_order (labels 1..p) followed by edge_order (ids 1..q).
CSeq easy_sequence(const Graph& g, std::span<const int> vertex_order, std::span<const int> edge_order);

}  // namespace cnum
