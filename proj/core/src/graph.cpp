#include "cnum/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "cnum/errors.hpp"
#include "cnum/poset.hpp"
#include "cnum/union_find.hpp"

namespace cnum {

std::string to_string(ElementId id) {
  return (id.is_vertex() ? "v" : "e") + std::to_string(id.index);
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, GraphMode mode)
    : p_(vertex_count), edges_(std::move(edges)), mode_(mode) {
  if (p_ < 0) throw DomainError("vertex count must be non-negative");
  degree_.assign(static_cast<std::size_t>(p_), 0);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 1 || e.u > p_ || e.w < 1 || e.w > p_) {
      throw DomainError("edge e" + std::to_string(i + 1) + " has an endpoint outside 1.." +
                        std::to_string(p_));
    }
    if (mode_ == GraphMode::Simple) {
      if (e.is_loop()) {
        throw DomainError("edge e" + std::to_string(i + 1) + " is a loop; loops need multigraph mode");
      }
      if (!seen.insert({std::min(e.u, e.w), std::max(e.u, e.w)}).second) {
        throw DomainError("edge e" + std::to_string(i + 1) +
                          " duplicates an earlier edge; parallel edges need multigraph mode");
      }
    }
    ++degree_[static_cast<std::size_t>(e.u - 1)];
    ++degree_[static_cast<std::size_t>(e.w - 1)];
  }
}

int Graph::min_degree() const {
  if (degree_.empty()) return 0;
  return *std::min_element(degree_.begin(), degree_.end());
}

int Graph::component_count() const {
  UnionFind sets(static_cast<std::size_t>(p_));
  int components = p_;
  for (const Edge& e : edges_)
    if (sets.unite(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.w - 1))) --components;
  return components;
}

bool Graph::is_connected() const { return p_ > 0 && component_count() == 1; }

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw DomainError("star needs n >= 0");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({1, i + 1});
  return Graph(leaves + 1, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 1) throw DomainError("cycle needs n >= 1");
  if (n == 1) return Graph(1, {{1, 1}}, GraphMode::Multi);
  if (n == 2) return Graph(2, {{1, 2}, {2, 1}}, GraphMode::Multi);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({n, 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw DomainError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

namespace {

GraphMode combined_mode(std::span<const Graph> parts) {
  for (const Graph& g : parts)
    if (g.mode() == GraphMode::Multi) return GraphMode::Multi;
  return GraphMode::Simple;
}

class FamilyParser {
 public:
  FamilyParser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

  Graph parse() {
    Graph g = spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("malformed family spec '" + std::string(text_) + "' at offset " +
                      std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int number() {
    skip_space();
    int value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void check_size(long long elements) const {
    if (elements > limits_.build_elements) {
      throw ResourceLimitError("family spec '" + std::string(text_) + "' would have " +
                               std::to_string(elements) + " elements (limit " +
                               std::to_string(limits_.build_elements) + ")");
    }
  }

  Graph spec() {
    const std::string name = word();
    if (name == "union" || name == "wedge") {
      expect('(');
      std::vector<Graph> graphs;
      std::vector<WedgePart> wedge_parts;
      do {
        Graph part = spec();
        if (name == "wedge") {
          expect('@');
          const int base = number();
          wedge_parts.push_back({std::move(part), base});
        } else {
          graphs.push_back(std::move(part));
        }
      } while (consume(','));
      expect(')');
      Graph g = name == "union" ? disjoint_union(graphs) : wedge(wedge_parts);
      check_size(g.element_count());
      return g;
    }
    if (name.empty()) fail("expected a family name");
    expect(':');
    const int n = number();
    if (n == 0) fail("n must be at least 1");
    const long long nn = n;
    if (name == "path") {
      check_size(2 * nn - 1);
      return path_graph(n);
    }
    if (name == "star") {
      check_size(2 * nn + 1);
      return star_graph(n);
    }
    if (name == "cycle") {
      check_size(2 * nn);
      return cycle_graph(n);
    }
    if (name == "complete") {
      check_size(nn + nn * (nn - 1) / 2);
      return complete_graph(n);
    }
    fail("unknown family '" + name + "'");
  }

  std::string_view text_;
  const Limits& limits_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph build_family(std::string_view spec, const Limits& limits) {
  return FamilyParser(spec, limits).parse();
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw DomainError("disjoint union of an empty list");
  int offset = 0;
  std::vector<Edge> edges;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) edges.push_back({e.u + offset, e.w + offset});
    offset += g.vertex_count();
  }
  return Graph(offset, std::move(edges), combined_mode(parts));
}

Graph wedge(std::span<const WedgePart> parts) {
  if (parts.empty()) throw DomainError("wedge of an empty list");
  int next = 2;
  std::vector<Edge> edges;
  std::vector<Graph> graphs;
  for (const WedgePart& part : parts) {
    const Graph& g = part.graph;
    if (part.base < 1 || part.base > g.vertex_count()) {
      throw DomainError("wedge base point " + std::to_string(part.base) +
                        " is not a vertex of a part with " + std::to_string(g.vertex_count()) +
                        " vertices");
    }
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count() + 1));
    for (int v = 1; v <= g.vertex_count(); ++v) label[static_cast<std::size_t>(v)] = v == part.base ? 1 : next++;
    for (const Edge& e : g.edges())
      edges.push_back({label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.w)]});
    graphs.push_back(g);
  }
  return Graph(next - 1, std::move(edges), combined_mode(graphs));
}

Graph relabel(const Graph& g, std::span<const int> sigma) {
  const int p = g.vertex_count();
  if (static_cast<int>(sigma.size()) != p) throw DomainError("relabeling has the wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(p + 1), false);
  for (int image : sigma) {
    if (image < 1 || image > p || hit[static_cast<std::size_t>(image)])
      throw DomainError("relabeling is not a permutation of 1.." + std::to_string(p));
    hit[static_cast<std::size_t>(image)] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back({sigma[static_cast<std::size_t>(e.u - 1)], sigma[static_cast<std::size_t>(e.w - 1)]});
  return Graph(p, std::move(edges), g.mode());
}

Poset incidence_poset(const Graph& g) {
  const int p = g.vertex_count();
  std::vector<std::pair<int, int>> covers;
  for (int id = 1; id <= g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const int top = p + id - 1;
    covers.emplace_back(e.u - 1, top);
    if (!e.is_loop()) covers.emplace_back(e.w - 1, top);
  }
  return Poset(g.element_count(), std::move(covers));
}

Graph parse_graph_text(std::string_view text, GraphMode mode) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long long>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<long long> row;
    std::string token;
    while (fields >> token) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw DomainError("graph text line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      row.push_back(value);
    }
    if (row.size() != 2)
      throw DomainError("graph text line " + std::to_string(line_no) + ": expected two integers");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DomainError("graph text is empty");
  const long long p = rows[0][0];
  const long long q = rows[0][1];
  if (p < 0 || q < 0 || p > (1 << 20)) throw DomainError("graph text header has an invalid size");
  if (static_cast<long long>(rows.size()) - 1 != q)
    throw DomainError("graph text declares " + std::to_string(q) + " edges but lists " +
                      std::to_string(rows.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const long long u = rows[i][0];
    const long long w = rows[i][1];
    if (u < 1 || u > p || w < 1 || w > p)
      throw DomainError("graph text edge " + std::to_string(i) + " has an endpoint outside 1.." + std::to_string(p));
    edges.push_back({static_cast<int>(u), static_cast<int>(w)});
  }
  return Graph(static_cast<int>(p), std::move(edges), mode);
}

std::string to_graph_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.w) + "\n";
  return out;
}

Graph load_graph(std::string_view source, GraphMode mode, const Limits& limits) {
  constexpr std::string_view kPrefix = "family:";
  if (source.starts_with(kPrefix)) return build_family(source.substr(kPrefix.size()), limits);
  std::ifstream file{std::string(source)};
  if (!file) throw DomainError("cannot open graph file '" + std::string(source) + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_graph_text(buffer.str(), mode);
}

bool is_canonical_path(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1 || g.edge_count() != n - 1) return false;
  for (int i = 1; i < n; ++i) {
    const Edge& e = g.edge(i);
    if (std::min(e.u, e.w) != i || std::max(e.u, e.w) != i + 1) return false;
  }
  return true;
}

}  // namespace cnum
