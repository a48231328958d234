#include "cli.hpp"

#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnum/constructability.hpp"
#include "cnum/counting.hpp"
#include "cnum/csequence.hpp"
#include "cnum/errors.hpp"
#include "cnum/graph.hpp"
#include "cnum/optimize.hpp"

namespace cnum::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { Json, Csv, Plain };

struct Options {
  std::string format;  // empty: the subcommand's default
  int limit_elements = Limits{}.enumeration_elements;
  std::size_t limit_states = Limits{}.max_states;
  std::uint64_t seed = 0;
  bool multigraph = false;
  std::string route = "dp";
  std::optional<int> based;
  std::size_t witnesses = 1000;
  std::size_t max_sequences = 0;
  std::string tie = "lex";
  std::string order;
  bool all_orders = false;
  int table_max = 6;
  std::string family;
  std::string graph;
  std::string sequence;
  std::string kind;
};

Limits limits_from(const Options& o) {
  Limits limits;
  limits.enumeration_elements = o.limit_elements;
  limits.max_states = o.limit_states;
  return limits;
}

Format format_from(const Options& o, Format fallback) {
  if (o.format.empty()) return fallback;
  if (o.format == "json") return Format::Json;
  if (o.format == "csv") return Format::Csv;
  if (o.format == "plain") return Format::Plain;
  throw UsageError("unknown format '" + o.format + "' (json|csv|plain)");
}

Graph load(const Options& o) {
  return load_graph(o.graph, o.multigraph ? GraphMode::Multi : GraphMode::Simple, limits_from(o));
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.w);
  }
  return out;
}

TieBreak tie_break_from(const Options& o) {
  if (o.tie == "lex" || o.tie == "lexicographic") return {TieBreakPolicy::Lexicographic, o.seed};
  if (o.tie == "cycle" || o.tie == "cycle-avoiding") return {TieBreakPolicy::CycleAvoiding, o.seed};
  if (o.tie == "random" || o.tie == "seeded-random") return {TieBreakPolicy::SeededRandom, o.seed};
  throw UsageError("unknown tie-break '" + o.tie + "' (lex|cycle|random)");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw UsageError("'" + token + "' is not an integer");
    }
  }
  return values;
}

// ---------------------------------------------------------------------------
// Routes for family identification: which closed forms apply to a graph.

enum class Kind { Path, Star, Cycle, Other };

struct Identified {
  Kind kind = Kind::Other;
  int n = 0;
};

Identified identify(const Graph& g) {
  const int p = g.vertex_count();
  if (p >= 1 && g == path_graph(p)) return {Kind::Path, p};
  if (p >= 2 && g == star_graph(p - 1)) return {Kind::Star, p - 1};
  if (p >= 1 && g == cycle_graph(p)) return {Kind::Cycle, p};
  return {};
}

BigInt star_recursion(std::uint32_t n) {
  BigInt c = 1;
  for (std::uint32_t k = 1; k <= n; ++k) c *= BigInt(2) * k * k;
  return c;
}

using Cell = std::optional<BigInt>;

struct RouteColumns {
  std::vector<std::string> names;
  std::vector<Cell> values;
  bool agree() const {
    const BigInt* first = nullptr;
    for (const Cell& c : values) {
      if (!c) continue;
      if (!first) {
        first = &*c;
      } else if (*c != *first) {
        return false;
      }
    }
    return true;
  }
};

bool wants(const std::string& route, const char* name) { return route == "all" || route == name; }

void require_route(const std::string& route) {
  static const char* const kRoutes[] = {"dp", "oracle", "formula", "recursion", "all"};
  for (const char* r : kRoutes)
    if (route == r) return;
  throw UsageError("unknown route '" + route + "' (dp|oracle|formula|recursion|all)");
}

template <class F>
Cell attempt(F&& f) {
  try {
    return f();
  } catch (const ResourceLimitError&) {
    return std::nullopt;
  }
}

// Unbased counts for graph g through every requested route.
RouteColumns graph_routes(const Graph& g, const Identified& id, const std::string& route, std::optional<int> based,
                          const Limits& limits, bool lenient) {
  RouteColumns cols;
  auto add = [&](const char* name, Cell value) {
    cols.names.emplace_back(name);
    cols.values.push_back(std::move(value));
  };
  auto run_route = [&](auto&& f) -> Cell { return lenient ? attempt(f) : Cell(f()); };

  if (wants(route, "dp"))
    add("dp", run_route([&] { return based ? count_based(g, *based, limits) : count_dp(g, limits); }));
  if (wants(route, "oracle")) add("oracle", run_route([&] { return count_bruteforce(g, limits, based); }));

  const auto n = static_cast<std::uint32_t>(id.n);
  if (wants(route, "formula")) {
    Cell formula;
    Cell zigzag;
    if (!based) {
      if (id.kind == Kind::Path && n <= 20) formula = path_formula_bernoulli(n);
      if (id.kind == Kind::Path) zigzag = zigzag_numbers(n).T(n);
      if (id.kind == Kind::Star) formula = star_formula(n);
      if (id.kind == Kind::Cycle && n <= 20) formula = cycle_formula(n);
    } else {
      if (id.kind == Kind::Path && (*based == 1 || *based == id.n)) formula = zigzag_numbers(n).S(n);
      if (id.kind == Kind::Star && *based == 1) formula = star_hub_formula(n);
    }
    if (formula || route == "formula") add("formula", formula);
    if (zigzag) add("zigzag", zigzag);
  }
  if (wants(route, "recursion")) {
    Cell recursion;
    Cell street;
    if (!based) {
      if (id.kind == Kind::Path) {
        recursion = path_recursion(n);
        street = street_J(2 * n - 1);
      }
      if (id.kind == Kind::Star) recursion = star_recursion(n);
      if (id.kind == Kind::Cycle) recursion = BigInt(n) * path_recursion(n);
    } else if (id.kind == Kind::Star && *based == 1) {
      std::vector<CountedPart> parts(n, CountedPart{1, 3});
      recursion = wedge_count(parts);
    }
    if (recursion || route == "recursion") add("recursion", recursion);
    if (street) add("street", street);
  }
  if (!lenient) {
    for (std::size_t i = 0; i < cols.names.size(); ++i)
      if (!cols.values[i])
        throw DomainError("route '" + cols.names[i] + "' has no closed form for this graph");
  }
  return cols;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_count(const Options& o, std::ostream& out) {
  require_route(o.route);
  const Graph g = load(o);
  const Limits limits = limits_from(o);
  const RouteColumns cols = graph_routes(g, identify(g), o.route, o.based, limits, false);
  const Format format = format_from(o, Format::Plain);
  const bool agree = cols.agree();
  if (format == Format::Json) {
    Json j;
    j["graph"] = o.graph;
    j["p"] = g.vertex_count();
    j["q"] = g.edge_count();
    if (o.based) j["based"] = *o.based;
    Json counts = Json::object();
    for (std::size_t i = 0; i < cols.names.size(); ++i) counts[cols.names[i]] = to_string(*cols.values[i]);
    j["counts"] = counts;
    j["agree"] = agree;
    emit_json(out, j);
  } else if (format == Format::Csv) {
    out << "route,count\n";
    for (std::size_t i = 0; i < cols.names.size(); ++i) out << cols.names[i] << "," << *cols.values[i] << "\n";
  } else if (cols.names.size() == 1) {
    out << *cols.values[0] << "\n";
  } else {
    for (std::size_t i = 0; i < cols.names.size(); ++i) out << cols.names[i] << " " << *cols.values[i] << "\n";
  }
  if (!agree) throw DomainError("counting routes disagree");
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Graph g = load(o);
  const Format format = format_from(o, Format::Plain);
  std::vector<std::string> lines;
  std::size_t total = 0;
  enumerate_csequences(
      g,
      [&](const CSeq& x) {
        ++total;
        if (o.max_sequences == 0 || lines.size() < o.max_sequences) lines.push_back(format_sequence(x.elements()));
      },
      limits_from(o));
  if (format == Format::Json) {
    Json j;
    j["graph"] = o.graph;
    j["count"] = std::to_string(total);
    j["sequences"] = lines;
    emit_json(out, j);
  } else if (format == Format::Csv) {
    out << "index,sequence\n";
    for (std::size_t i = 0; i < lines.size(); ++i) out << i + 1 << "," << csv_quote(lines[i]) << "\n";
  } else {
    for (const std::string& line : lines) out << line << "\n";
  }
  return kOk;
}

const char* violation_kind(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::WrongLength:
      return "wrong-length";
    case Violation::Kind::UnknownElement:
      return "unknown-element";
    case Violation::Kind::Repeated:
      return "repeated";
    case Violation::Kind::Missing:
      return "missing";
    case Violation::Kind::EdgeBeforeEndpoint:
      return "edge-before-endpoint";
  }
  return "unknown";
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Graph g = load(o);
  const std::vector<ElementId> seq = parse_sequence(o.sequence);
  const Validation result = validate(g, seq);
  const Format format = format_from(o, Format::Plain);
  if (format == Format::Json) {
    Json j;
    j["sequence"] = format_sequence(seq);
    j["valid"] = result.valid();
    Json list = Json::array();
    for (const Violation& v : result.violations) {
      Json item;
      item["kind"] = violation_kind(v.kind);
      item["message"] = v.message;
      list.push_back(item);
    }
    j["violations"] = list;
    emit_json(out, j);
  } else if (format == Format::Csv) {
    out << "kind,message\n";
    for (const Violation& v : result.violations) out << violation_kind(v.kind) << "," << csv_quote(v.message) << "\n";
  } else if (result.valid()) {
    out << "valid\n";
  } else {
    for (const Violation& v : result.violations) out << "violation: " << v.message << "\n";
  }
  return result.valid() ? kOk : kDomainError;
}

int cmd_cost(const Options& o, std::ostream& out) {
  const Graph g = load(o);
  const CSeq x(g, parse_sequence(o.sequence));
  const auto costs = edge_costs(g, x);
  const ComponentProfile profile = component_profile(g, x);
  const std::int64_t total = total_cost(g, x);
  std::optional<Rational> kappa;
  std::optional<Rational> kappa_alt;
  try {
    kappa = kappa_cost(g, x);
    kappa_alt = kappa_cost_per_edge(g, x);
  } catch (const DomainError&) {
  }
  const Format format = format_from(o, Format::Json);
  if (format == Format::Json) {
    Json j;
    j["sequence"] = format_sequence(x.elements());
    Json per_edge = Json::array();
    for (std::size_t i = 0; i < costs.size(); ++i) per_edge.push_back({{"edge", "e" + std::to_string(i + 1)}, {"cost", costs[i]}});
    j["per_edge"] = per_edge;
    j["total"] = total;
    j["kappa"] = kappa ? Json(to_string(*kappa)) : Json(nullptr);
    j["kappa_per_edge"] = kappa_alt ? Json(to_string(*kappa_alt)) : Json(nullptr);
    j["b"] = profile.b;
    j["beta"] = profile.beta;
    emit_json(out, j);
  } else if (format == Format::Csv) {
    out << "edge,cost\n";
    for (std::size_t i = 0; i < costs.size(); ++i) out << "e" << i + 1 << "," << costs[i] << "\n";
    out << "total," << total << "\n";
  } else {
    for (std::size_t i = 0; i < costs.size(); ++i) out << "e" << i + 1 << " " << costs[i] << "\n";
    out << "total " << total << "\n";
    if (kappa) out << "kappa " << to_string(*kappa) << "\n";
    out << "beta " << profile.beta << "\n";
  }
  return kOk;
}

int cmd_optimize(const Options& o, std::ostream& out) {
  const Graph g = load(o);
  const OptResult result = min_cost(g, o.witnesses, limits_from(o));
  const Format format = format_from(o, Format::Json);
  if (format == Format::Json) {
    Json j;
    j["min_cost"] = result.min_cost;
    j["num_optimal"] = to_string(result.num_optimal);
    Json witnesses = Json::array();
    for (const CSeq& x : result.witnesses) witnesses.push_back(format_sequence(x.elements()));
    j["witnesses"] = witnesses;
    emit_json(out, j);
  } else if (format == Format::Csv) {
    out << "min_cost,num_optimal\n" << result.min_cost << "," << result.num_optimal << "\n";
  } else {
    out << "min_cost " << result.min_cost << "\nnum_optimal " << result.num_optimal << "\n";
    for (const CSeq& x : result.witnesses) out << format_sequence(x.elements()) << "\n";
  }
  return kOk;
}

int cmd_greedy(const Options& o, std::ostream& out) {
  const Graph g = load(o);
  const TieBreak tb = tie_break_from(o);
  std::vector<CSeq> runs;
  if (o.all_orders) {
    runs = greedy_all(g, tb, limits_from(o));
  } else {
    std::vector<int> order = parse_int_list(o.order);
    if (order.empty())
      for (int v = 1; v <= g.vertex_count(); ++v) order.push_back(v);
    runs.push_back(greedy(g, order, tb));
  }
  const Format format = format_from(o, Format::Json);
  if (format == Format::Json) {
    Json j;
    j["tie_break"] = to_string(tb);
    Json list = Json::array();
    for (const CSeq& x : runs)
      list.push_back({{"sequence", format_sequence(x.elements())}, {"cost", total_cost(g, x)}});
    j["runs"] = list;
    emit_json(out, j);
  } else if (format == Format::Csv) {
    out << "sequence,cost\n";
    for (const CSeq& x : runs) out << csv_quote(format_sequence(x.elements())) << "," << total_cost(g, x) << "\n";
  } else {
    for (const CSeq& x : runs) out << format_sequence(x.elements()) << "  cost " << total_cost(g, x) << "\n";
  }
  return kOk;
}

int cmd_family_table(const Options& o, std::ostream& out) {
  require_route(o.route);
  struct TableKind {
    std::string family;
    Kind kind;
    bool based;
  };
  static const std::map<std::string, TableKind> kKinds = {
      {"path", {"path", Kind::Path, false}},       {"star", {"star", Kind::Star, false}},
      {"cycle", {"cycle", Kind::Cycle, false}},    {"based-path", {"path", Kind::Path, true}},
      {"based-star", {"star", Kind::Star, true}},
  };
  const auto kind = kKinds.find(o.kind);
  if (kind == kKinds.end())
    throw UsageError("unknown table kind '" + o.kind + "' (path|star|cycle|based-path|based-star)");
  if (o.table_max < 1) throw UsageError("--max must be at least 1");
  const Limits limits = limits_from(o);

  std::vector<std::string> columns;
  std::vector<std::pair<int, RouteColumns>> rows;
  for (int n = 1; n <= o.table_max; ++n) {
    const Graph g = build_family(kind->second.family + ":" + std::to_string(n), limits);
    const std::optional<int> based = kind->second.based ? std::optional<int>(1) : std::nullopt;
    RouteColumns cols = graph_routes(g, {kind->second.kind, n}, o.route, based, limits, true);
    for (const std::string& name : cols.names)
      if (std::find(columns.begin(), columns.end(), name) == columns.end()) columns.push_back(name);
    rows.emplace_back(n, std::move(cols));
  }
  auto cell = [](const RouteColumns& cols, const std::string& name) -> std::string {
    for (std::size_t i = 0; i < cols.names.size(); ++i)
      if (cols.names[i] == name) return cols.values[i] ? to_string(*cols.values[i]) : "-";
    return "-";
  };

  bool all_agree = true;
  const Format format = format_from(o, Format::Json);
  if (format == Format::Json) {
    Json j;
    j["kind"] = o.kind;
    j["columns"] = columns;
    Json list = Json::array();
    for (const auto& [n, cols] : rows) {
      Json row;
      row["n"] = n;
      for (const std::string& name : columns) {
        const std::string value = cell(cols, name);
        row[name] = value == "-" ? Json(nullptr) : Json(value);
      }
      row["agree"] = cols.agree();
      all_agree = all_agree && cols.agree();
      list.push_back(row);
    }
    j["rows"] = list;
    emit_json(out, j);
  } else {
    const char sep = format == Format::Csv ? ',' : ' ';
    out << "n";
    for (const std::string& name : columns) out << sep << name;
    out << sep << "agree\n";
    for (const auto& [n, cols] : rows) {
      out << n;
      for (const std::string& name : columns) out << sep << cell(cols, name);
      out << sep << (cols.agree() ? "yes" : "NO") << "\n";
      all_agree = all_agree && cols.agree();
    }
  }
  if (!all_agree) throw DomainError("counting routes disagree");
  return kOk;
}

int cmd_xi(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("xi needs --family trees:n or pq:p:q");
  const Family family = parse_family(o.family);
  const Limits limits = limits_from(o);
  XiReport report = xi_report(family, limits);
  if (!o.graph.empty()) {
    const Graph g = load(o);
    std::erase_if(report.rows, [&](const XiRow& row) { return !same_labeled_graph(row.graph, g); });
    if (report.rows.empty()) throw DomainError("graph is not a member of family " + report.family);
  }
  const Format format = format_from(o, Format::Json);
  if (format == Format::Json) {
    Json j;
    j["family"] = report.family;
    j["size"] = report.size;
    j["alpha"] = to_string(report.alpha);
    j["alpha_decimal"] = to_decimal(report.alpha);
    Json graphs = Json::array();
    for (const XiRow& row : report.rows) {
      graphs.push_back({{"id", row.id},
                        {"edges", edge_list(row.graph)},
                        {"c", to_string(row.c)},
                        {"xi", to_string(row.xi)},
                        {"xi_decimal", to_decimal(row.xi)}});
    }
    j["graphs"] = graphs;
    emit_json(out, j);
  } else {
    const char sep = format == Format::Csv ? ',' : ' ';
    out << "id" << sep << "edges" << sep << "c" << sep << "xi\n";
    for (const XiRow& row : report.rows) {
      const std::string edges = edge_list(row.graph);
      out << row.id << sep << (format == Format::Csv ? csv_quote(edges) : "[" + edges + "]") << sep << row.c << sep
          << to_decimal(row.xi) << "\n";
    }
  }
  return kOk;
}

int cmd_check_conjecture(const Options& o, std::ostream& out) {
  const Graph g = load(o);
  std::optional<TieBreak> tb;
  if (o.tie != "exhaustive") tb = tie_break_from(o);
  const ConjectureReport report = check_conjecture(g, tb, limits_from(o));
  const Format format = format_from(o, Format::Json);
  if (format == Format::Json) {
    Json j;
    j["graph"] = o.graph;
    j["mode"] = report.mode;
    j["connected"] = report.connected;
    j["holds"] = report.holds;
    j["min_cost"] = report.min_cost;
    j["economical"] = report.economical;
    j["greedy_sequences"] = report.greedy_sequences;
    j["counterexample"] =
        report.unreachable.empty() ? Json(nullptr) : Json(format_sequence(report.unreachable.front().elements()));
    Json unreachable = Json::array();
    for (const CSeq& x : report.unreachable) unreachable.push_back(format_sequence(x.elements()));
    j["unreachable"] = unreachable;
    emit_json(out, j);
  } else {
    out << (report.holds ? "holds" : "counterexample") << " (" << report.mode << ", " << report.economical
        << " economical, " << report.greedy_sequences << " greedy)\n";
    for (const CSeq& x : report.unreachable) out << format_sequence(x.elements()) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construction sequences of graphs: counting, validation and cost optimization", "cnum"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format: json, csv or plain");
  app.add_option("--limit-elements", o.limit_elements, "Element limit for enumeration and the brute-force oracle");
  app.add_option("--limit-states", o.limit_states, "Memo-state limit for the DP routes");
  app.add_option("--seed", o.seed, "Seed for the seeded-random tie-break");
  app.add_flag("--multigraph", o.multigraph, "Allow loops and parallel edges in graph files");

  const char* kGraphHelp = "Graph file or family:<spec>";

  auto* count = app.add_subcommand("count", "Count construction sequences");
  count->add_option("graph", o.graph, kGraphHelp)->required();
  count->add_option("--route", o.route, "dp, oracle, formula, recursion or all");
  count->add_option("--based", o.based, "Count only sequences starting at this vertex");

  auto* enumerate = app.add_subcommand("enumerate", "List construction sequences in lexicographic order");
  enumerate->add_option("graph", o.graph, kGraphHelp)->required();
  enumerate->add_option("--max", o.max_sequences, "Print at most this many (0 = all)");

  auto* validate_cmd = app.add_subcommand("validate", "Check a sequence against a graph");
  validate_cmd->add_option("graph", o.graph, kGraphHelp)->required();
  validate_cmd->add_option("sequence", o.sequence, "Quoted tokens, e.g. \"v1 v2 e1\"")->required();

  auto* cost = app.add_subcommand("cost", "Edge costs, kappa and component profile of a sequence");
  cost->add_option("graph", o.graph, kGraphHelp)->required();
  cost->add_option("sequence", o.sequence, "Quoted tokens, e.g. \"v1 v2 e1\"")->required();

  auto* optimize = app.add_subcommand("optimize", "Minimum total cost and number of economical sequences");
  optimize->add_option("graph", o.graph, kGraphHelp)->required();
  optimize->add_option("--witnesses", o.witnesses, "Emit up to N minimum-cost sequences");

  auto* greedy_cmd = app.add_subcommand("greedy", "Run the greedy construction");
  greedy_cmd->add_option("graph", o.graph, kGraphHelp)->required();
  greedy_cmd->add_option("--order", o.order, "Vertex order, e.g. \"2 1 3\" (default natural)");
  greedy_cmd->add_option("--tie", o.tie, "lex, cycle or random");
  greedy_cmd->add_flag("--all", o.all_orders, "Run every vertex order");

  auto* table = app.add_subcommand("family-table", "Per-n counts for a family through several routes");
  table->add_option("kind", o.kind, "path, star, cycle, based-path or based-star")->required();
  table->add_option("--max", o.table_max, "Largest n");
  table->add_option("--route", o.route, "dp, oracle, formula, recursion or all");

  auto* xi_cmd = app.add_subcommand("xi", "Constructability over a graph family");
  xi_cmd->add_option("--family", o.family, "trees:n or pq:p:q")->required();
  xi_cmd->add_option("--graph", o.graph, "Report only this member");

  auto* conjecture = app.add_subcommand("check-conjecture", "Are all economical sequences greedy outputs?");
  conjecture->add_option("graph", o.graph, kGraphHelp)->required();
  conjecture->add_option("--tie", o.tie, "exhaustive, lex, cycle or random")->default_str("exhaustive");

  std::vector<const char*> argv{"cnum"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (conjecture->parsed() && conjecture->count("--tie") == 0) o.tie = "exhaustive";
    if (count->parsed()) return cmd_count(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (cost->parsed()) return cmd_cost(o, out);
    if (optimize->parsed()) return cmd_optimize(o, out);
    if (greedy_cmd->parsed()) return cmd_greedy(o, out);
    if (table->parsed()) return cmd_family_table(o, out);
    if (xi_cmd->parsed()) return cmd_xi(o, out);
    if (conjecture->parsed()) return cmd_check_conjecture(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace cnum::cli
