#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnum/limits.hpp"

namespace cnum {

class Poset;

enum class ElementKind : unsigned char { Vertex = 0, Edge = 1 };

// A vertex or an edge of a graph, identified by its 1-based label within its
// class. Ordering puts every vertex before every edge, then compares labels;
// this is the "lexicographic element order" used for enumeration output.
struct ElementId {
  ElementKind kind = ElementKind::Vertex;
  int index = 1;

  static constexpr ElementId vertex(int v) { return {ElementKind::Vertex, v}; }
  static constexpr ElementId edge(int e) { return {ElementKind::Edge, e}; }

  constexpr bool is_vertex() const { return kind == ElementKind::Vertex; }
  constexpr bool is_edge() const { return kind == ElementKind::Edge; }

  friend constexpr auto operator<=>(const ElementId&, const ElementId&) = default;
};

// "v3" / "e2"
std::string to_string(ElementId id);

// Endpoints of an edge record. A loop has u == w.
struct Edge {
  int u = 1;
  int w = 1;

  constexpr bool is_loop() const { return u == w; }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphMode : unsigned char { Simple, Multi };

// Labeled (multi)graph on vertices 1..p with edge records 1..q in list order.
// Immutable once built; the constructor enforces the mode's invariants.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges, GraphMode mode = GraphMode::Simple);

  int vertex_count() const { return p_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int element_count() const { return p_ + edge_count(); }
  GraphMode mode() const { return mode_; }

  // 1-based edge id.
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id - 1)]; }
  std::span<const Edge> edges() const { return edges_; }

  // Loops count twice.
  int degree(int v) const { return degree_[static_cast<std::size_t>(v - 1)]; }
  int min_degree() const;

  bool is_connected() const;
  int component_count() const;

  // Dense numbering of elements: vertex v -> v-1, edge e -> p+e-1.
  int dense(ElementId id) const {
    return id.is_vertex() ? id.index - 1 : p_ + id.index - 1;
  }
  ElementId element(int dense_index) const {
    return dense_index < p_ ? ElementId::vertex(dense_index + 1)
                            : ElementId::edge(dense_index - p_ + 1);
  }
  bool contains(ElementId id) const {
    return id.index >= 1 && id.index <= (id.is_vertex() ? p_ : edge_count());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.p_ == b.p_ && a.edges_ == b.edges_;
  }

 private:
  int p_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  GraphMode mode_ = GraphMode::Simple;
};

// Parses a family constructor:
//   path:n | star:n | cycle:n | complete:n
//   union(spec, spec, ...) | wedge(spec@v, spec@v, ...)
// Labelings are canonical: paths in order with edge i = {i, i+1}; stars have
// hub 1 and edge i = {1, i+1}; cycles add edge n = {n, 1}; complete graphs list
// edges in lexicographic endpoint order. cycle:1 and cycle:2 are multigraphs.
Graph build_family(std::string_view spec, const Limits& limits = {});

Graph path_graph(int n);
Graph star_graph(int leaves);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Vertex and edge labels are shifted block-wise in list order.
Graph disjoint_union(std::span<const Graph> parts);

struct WedgePart {
  Graph graph;
  int base = 1;
};

// Identifies every base point with vertex 1 of the result. The non-base
// vertices of each part keep their relative order and are numbered after all
// vertices of earlier parts; edges follow part order.
Graph wedge(std::span<const WedgePart> parts);

// sigma[v-1] is the new label of vertex v. Edge ids are preserved.
Graph relabel(const Graph& g, std::span<const int> sigma);

// Height-2 order: vertices 0..p-1 are minimal, edge e is element p+e-1 and
// covers its endpoints (a loop covers its vertex once).
Poset incidence_poset(const Graph& g);

// Text graph format: "p q", then q lines "u w"; lines starting with '#' are
// comments. Loops and parallel edges require GraphMode::Multi.
Graph parse_graph_text(std::string_view text, GraphMode mode = GraphMode::Simple);
std::string to_graph_text(const Graph& g);

// Accepts "family:<spec>" or a file path.
Graph load_graph(std::string_view source, GraphMode mode = GraphMode::Simple,
                 const Limits& limits = {});

// True when g is path:n as labeled by build_family (either edge orientation).
bool is_canonical_path(const Graph& g);

}  // namespace cnum
