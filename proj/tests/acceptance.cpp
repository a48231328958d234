// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cnum/constructability.hpp"
#include "cnum/counting.hpp"
#include "cnum/csequence.hpp"
#include "cnum/graph.hpp"
#include "cnum/optimize.hpp"
#include "cnum/poset.hpp"
#include "support/oracles.hpp"

#ifndef CNUM_CLI_PATH
#error "CNUM_CLI_PATH must name the cnum executable"
#endif

using namespace cnum;

namespace {

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    return ok() ? std::to_string(checks_) + " checks" : std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: " + detail_;
  }
  void note(const std::string& s) { extra_ += (extra_.empty() ? "" : ", ") + s; }
  const std::string& extra() const { return extra_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string detail_;
  std::string extra_;
};

std::string n_str(const std::string& label, int n) { return label + std::to_string(n); }

std::vector<Graph> named_small_families() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n) out.push_back(path_graph(n));
  for (int n = 1; n <= 4; ++n) out.push_back(star_graph(n));
  for (int n = 1; n <= 5; ++n) out.push_back(cycle_graph(n));
  for (int n = 1; n <= 4; ++n) out.push_back(complete_graph(n));
  return out;
}

std::vector<Graph> random_corpus(int count, int max_elements, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_graph(rng, max_elements, i % 5 == 0));
  return out;
}

void path_counts(Check& c) {
  const std::array<int, 6> want = {1, 2, 16, 272, 7936, 353792};
  for (int n = 1; n <= 6; ++n) c.equal(count_dp(path_graph(n)), want[static_cast<std::size_t>(n - 1)], n_str("dp P", n));
  for (int n = 1; n <= 5; ++n) {
    c.equal(count_bruteforce(path_graph(n)), want[static_cast<std::size_t>(n - 1)], n_str("brute P", n));
    c.equal(oracle::count(oracle::raw(path_graph(n))), static_cast<std::uint64_t>(want[static_cast<std::size_t>(n - 1)]),
            n_str("permutation oracle P", n));
  }
}

void star_counts(Check& c) {
  const std::array<int, 5> want = {2, 16, 288, 9216, 460800};
  for (int n = 1; n <= 5; ++n) c.equal(count_dp(star_graph(n)), want[static_cast<std::size_t>(n - 1)], n_str("dp K1,", n));
  for (std::uint32_t n = 0; n <= 10; ++n) {
    const BigInt expected = (BigInt(1) << n) * factorial(n) * factorial(n);
    c.equal(count_dp(star_graph(static_cast<int>(n))), expected, n_str("dp vs 2^n(n!)^2 n=", static_cast<int>(n)));
    c.equal(star_formula(n), expected, n_str("star_formula n=", static_cast<int>(n)));
  }
}

void cycle_relation(Check& c) {
  for (int n = 3; n <= 8; ++n)
    c.equal(count_dp(cycle_graph(n)), BigInt(n) * count_dp(path_graph(n)), n_str("C vs n*P n=", n));
  for (std::uint32_t n = 1; n <= 10; ++n)
    c.equal(cycle_formula(n), count_dp(cycle_graph(static_cast<int>(n))), n_str("Bernoulli cycle n=", static_cast<int>(n)));
  c.equal(cycle_formula(1), 1, "cycle_formula(1)");
  c.equal(cycle_formula(2), 4, "cycle_formula(2)");
  c.equal(count_bruteforce(cycle_graph(1)), 1, "oracle C1");
  c.equal(count_bruteforce(cycle_graph(2)), 4, "oracle C2");
  c.equal(oracle::count(oracle::raw(cycle_graph(2))), 4ULL, "permutation oracle C2");
}

void based_counts(Check& c) {
  const std::array<int, 4> want = {1, 1, 5, 61};
  const ZigzagNumbers z = zigzag_numbers(4);
  for (int n = 1; n <= 4; ++n) {
    const BigInt first = count_based(path_graph(n), 1);
    c.equal(first, want[static_cast<std::size_t>(n - 1)], n_str("based P at v1 n=", n));
    c.equal(count_based(path_graph(n), n), want[static_cast<std::size_t>(n - 1)], n_str("based P at far end n=", n));
    c.equal(first, z.S(static_cast<std::uint32_t>(n)), n_str("secant n=", n));
  }
  std::vector<Graph> corpus = named_small_families();
  for (const Graph& g : random_corpus(200, 9, 7)) corpus.push_back(g);
  for (const Graph& g : corpus) {
    BigInt sum = 0;
    const auto all = count_based_all(g);
    for (int v = 1; v <= g.vertex_count(); ++v) {
      const BigInt single = count_based(g, v);
      c.expect(single == all[static_cast<std::size_t>(v - 1)], "count_based vs count_based_all on " + to_graph_text(g));
      sum += single;
    }
    c.expect(sum == count_dp(g), "sum of based counts on " + to_graph_text(g));
  }
  c.note(std::to_string(corpus.size()) + " corpus graphs");
}

void extension_counts(Check& c) {
  int from_12a = 0, from_21a = 0, total = 0;
  enumerate_csequences(path_graph(3), [&](const CSeq& x) {
    ++total;
    // Restricting to {v1, v2, e1} leaves (1,2,a) or (2,1,a).
    if (x.vertex_position(1) < x.vertex_position(2)) {
      ++from_12a;
    } else {
      ++from_21a;
    }
  });
  c.equal(total, 16, "C(P3)");
  c.equal(from_12a, 7, "extensions of (1,2,a)");
  c.equal(from_21a, 9, "extensions of (2,1,a)");
}

void route_agreement(Check& c) {
  const ZigzagNumbers z = zigzag_numbers(12);
  const auto j = street_J_table(23);
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const BigInt rec = path_recursion(n);
    const std::string tag = " n=" + std::to_string(n);
    c.equal(rec, z.T(n), "recursion vs tangent" + tag);
    c.equal(rec, path_formula_bernoulli(n), "recursion vs Bernoulli" + tag);
    c.equal(rec, j[2 * n - 1], "recursion vs J(2n-1)" + tag);
    c.equal(rec, BigInt(oracle::tangent_numbers()[n - 1]), "recursion vs known tangent" + tag);
  }
  for (std::uint32_t k = 1; k <= 6; ++k) c.equal(street_J(2 * k), 0, n_str("J_2k k=", static_cast<int>(k)));
}

void updown_bijection(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    const Graph g = path_graph(n);
    std::set<std::vector<int>> images;
    enumerate_csequences(g, [&](const CSeq& x) {
      const std::vector<int> u = to_updown(g, x);
      c.expect(is_updown(u), n_str("image not up-down, n=", n));
      c.expect(from_updown(g, u) == x, n_str("round trip failed, n=", n));
      images.insert(u);
    });
    // Every up-down permutation of [2n-1] must be hit exactly once.
    std::vector<int> perm(static_cast<std::size_t>(2 * n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    std::size_t updown = 0;
    do {
      if (!is_updown(perm)) continue;
      ++updown;
      c.expect(images.count(perm) == 1, n_str("up-down permutation missed, n=", n));
      c.expect(to_updown(g, from_updown(g, perm)) == perm, n_str("reverse round trip failed, n=", n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    c.equal(images.size(), updown, n_str("|C(P)| vs |U| n=", n));
  }
  // Consecutive labels 5,9,7,6,3,8,4,1,2 on the 5-vertex path.
  const Graph p5 = path_graph(5);
  const CSeq pi(p5, parse_sequence("v3 v5 v4 e3 v2 e4 e2 v1 e1"));
  std::string got;
  for (int v : to_updown(p5, pi)) got += (got.empty() ? "" : ",") + std::to_string(v);
  c.equal(got, std::string("8,9,5,7,1,4,3,6,2"), "worked example");
}

void composition_laws(Check& c) {
  const std::vector<std::pair<std::string, Graph>> base = {
      {"P1", path_graph(1)}, {"P2", path_graph(2)}, {"P3", path_graph(3)},
      {"K1,1", star_graph(1)}, {"K1,2", star_graph(2)}, {"C3", cycle_graph(3)}};
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t k = i; k < base.size(); ++k) {
      const Graph& a = base[i].second;
      const Graph& b = base[k].second;
      const std::vector<Graph> both = {a, b};
      const std::vector<CountedPart> parts = {{count_dp(a), static_cast<std::uint32_t>(a.element_count())},
                                              {count_dp(b), static_cast<std::uint32_t>(b.element_count())}};
      c.equal(union_count(parts), count_dp(disjoint_union(both)), "union " + base[i].first + "+" + base[k].first);
    }
  }
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const std::vector<CountedPart> edges(n, CountedPart{1, 3});
    const BigInt want = factorial(2 * n) / (BigInt(1) << n);
    c.equal(wedge_count(edges), want, n_str("wedge n=", static_cast<int>(n)));
    c.equal(count_based(star_graph(static_cast<int>(n)), 1), want, n_str("hub-based dp n=", static_cast<int>(n)));
  }
}

void costs(Check& c) {
  for (int n = 2; n <= 8; ++n) {
    const OptResult r = min_cost(path_graph(n));
    c.equal(r.min_cost, 4 * n - 5, n_str("nu(P) n=", n));
    c.equal(r.num_optimal, 2, n_str("c'(P) n=", n));
    std::vector<int> vs(static_cast<std::size_t>(n)), es(static_cast<std::size_t>(n - 1));
    std::iota(vs.begin(), vs.end(), 1);
    std::iota(es.begin(), es.end(), 1);
    std::reverse(es.begin(), es.end());
    c.equal(total_cost(path_graph(n), easy_sequence(path_graph(n), vs, es)), static_cast<std::int64_t>((2 * n - 1) * (2 * n - 2) / 2),
            n_str("easy P n=", n));
  }
  for (int n = 3; n <= 8; ++n) {
    const OptResult r = min_cost(cycle_graph(n));
    c.equal(r.min_cost, 6 * n - 4, n_str("nu(C) n=", n));
    c.equal(r.num_optimal, 2 * n, n_str("c'(C) n=", n));
  }
  const std::vector<int> hub_first = {1, 2, 3, 4, 5, 6};
  c.equal(total_cost(star_graph(5), greedy(star_graph(5), hub_first)), 35, "star:5 greedy from hub");
  c.equal(total_cost(star_graph(5), star_schedule(5)), 30, "star_schedule(5)");
}

void oracle_equivalence(Check& c) {
  std::vector<Graph> corpus = random_corpus(200, 9, 2024);
  for (const Graph& g : named_small_families()) corpus.push_back(g);
  for (const Graph& g : corpus) {
    const oracle::RawGraph raw = oracle::raw(g);
    const BigInt dp = count_dp(g);
    const std::string tag = " on " + to_graph_text(g);
    c.expect(dp == BigInt(oracle::count(raw)), "dp vs permutations" + tag);
    Limits wide;
    wide.enumeration_elements = 11;
    c.expect(dp == count_bruteforce(g, wide), "dp vs count_bruteforce" + tag);
    c.expect(dp == count_linear_extensions(incidence_poset(g)), "dp vs poset engine" + tag);
    const oracle::MinCost brute = oracle::min_cost(raw);
    const OptResult opt = min_cost(g);
    c.expect(opt.min_cost == brute.cost, "min_cost" + tag);
    c.expect(opt.num_optimal == BigInt(brute.count), "num_optimal" + tag);
  }
  c.note(std::to_string(corpus.size()) + " graphs");
}

void conjecture_harness(Check& c) {
  std::vector<std::string> specs;
  for (int n = 1; n <= 5; ++n) specs.push_back(n_str("path:", n));
  for (int n = 1; n <= 5; ++n) specs.push_back(n_str("cycle:", n));
  for (int n = 1; n <= 4; ++n) specs.push_back(n_str("star:", n));
  specs.push_back("complete:4");
  int holds = 0;
  for (const std::string& spec : specs) {
    const Graph g = build_family(spec);
    const ConjectureReport r = check_conjecture(g);
    c.expect(r.mode == "exhaustive", spec + " mode");
    c.expect(r.economical > 0, spec + " found no economical sequences");
    c.expect(r.holds == r.unreachable.empty(), spec + " inconsistent report");
    if (r.holds) {
      ++holds;
      continue;
    }
    // A counterexample must be reproducible: valid, economical, and unreachable on a rerun.
    const ConjectureReport again = check_conjecture(g);
    c.expect(again.unreachable == r.unreachable, spec + " counterexample not reproducible");
    for (const CSeq& x : r.unreachable) {
      c.expect(validate(g, x.elements()).valid(), spec + " counterexample invalid");
      c.expect(total_cost(g, x) == r.min_cost, spec + " counterexample not economical");
      c.expect(!is_greedy_reachable(g, x), spec + " counterexample reachable");
    }
    std::cout << "      counterexample for " << spec << ": " << format_sequence(r.unreachable.front().elements()) << "\n";
  }
  c.note(std::to_string(holds) + "/" + std::to_string(specs.size()) + " hold");
}

void constructability(Check& c) {
  for (int n : {5, 6}) {
    const XiReport report = xi_report(LabeledTrees{n});
    BigInt lo = report.rows.front().c, hi = report.rows.front().c;
    for (const XiRow& row : report.rows) {
      lo = std::min(lo, row.c);
      hi = std::max(hi, row.c);
    }
    int stars = 0, paths = 0;
    for (const XiRow& row : report.rows) {
      int max_deg = 0;
      for (int v = 1; v <= n; ++v) max_deg = std::max(max_deg, row.graph.degree(v));
      const bool star = max_deg == n - 1;
      const bool path = max_deg <= 2;
      stars += star;
      paths += path;
      c.expect((row.c == hi) == star, n_str("max attained exactly by stars, n=", n));
      c.expect((row.c == lo) == path, n_str("min attained exactly by paths, n=", n));
      if (star) c.expect(row.xi > 1, n_str("xi(star) > 1, n=", n));
      if (path) c.expect(row.xi < 1, n_str("xi(path) < 1, n=", n));
    }
    c.expect(stars == n && paths > 0, n_str("family shape, n=", n));
  }
}

void wagon_bound(Check& c) {
  std::vector<Graph> corpus;
  for (int p = 1; p <= 4; ++p)
    for (int q = 0; q <= p * (p - 1) / 2; ++q) graphs_pq(p, q, [&](const Graph& g) { corpus.push_back(g); });
  for (int q : {4, 5}) graphs_pq(5, q, [&](const Graph& g) { corpus.push_back(g); });
  for (int n = 3; n <= 5; ++n) corpus.push_back(cycle_graph(n));
  corpus.push_back(build_family("wedge(cycle:3@1, cycle:3@1)"));
  std::size_t graphs = 0, sequences = 0;
  for (const Graph& g : corpus) {
    if (!g.is_connected() || g.edge_count() == 0) continue;
    ++graphs;
    const int k = g.min_degree();
    const int l = g.element_count();
    enumerate_csequences(g, [&](const CSeq& x) {
      ++sequences;
      for (int i = l - k + 1; i <= l; ++i) c.expect(x[i].is_edge(), "last k entries are edges on " + to_graph_text(g));
      for (int v = 1; v <= g.vertex_count(); ++v)
        c.expect(x.vertex_position(v) <= l - g.degree(v), "x(v) <= l - deg(v) on " + to_graph_text(g));
    });
  }
  c.note(std::to_string(graphs) + " graphs, " + std::to_string(sequences) + " sequences");
}

std::string capture(const std::string& args) {
  const std::string command = std::string(CNUM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

void determinism(Check& c) {
  const std::vector<std::string> invocations = {
      "greedy family:complete:5 --tie random --seed 42 --all",
      "greedy family:complete:4 --tie random --seed 7 --order '4 2 3 1'",
      "check-conjecture family:complete:4 --tie random --seed 3",
      "optimize family:star:5 --witnesses 20",
      "family-table path --max 8 --route all",
      "xi --family trees:5",
      "enumerate family:cycle:3 --format csv",
  };
  for (const std::string& args : invocations) {
    const std::string first = capture(args);
    const std::string second = capture(args);
    c.expect(first.find("<status 0>") != std::string::npos, "non-zero exit: " + args);
    c.expect(first == second, "output differs: " + args);
  }
}

struct Criterion {
  const char* name;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"path counts", path_counts},
      {"star counts", star_counts},
      {"cycle relation and cycle formula", cycle_relation},
      {"based counts", based_counts},
      {"extension counts in C(P3)", extension_counts},
      {"path route agreement", route_agreement},
      {"up-down bijection", updown_bijection},
      {"union and wedge laws", composition_laws},
      {"path, cycle, easy and star costs", costs},
      {"oracle equivalence on random graphs", oracle_equivalence},
      {"greedy conjecture harness", conjecture_harness},
      {"tree constructability extremes", constructability},
      {"last-k-edges bound", wagon_bound},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!check.ok()) ++failed;
    char prefix[64];
    std::snprintf(prefix, sizeof prefix, "[%s] %02d ", check.ok() ? "PASS" : "FAIL", index);
    std::cout << prefix << criterion.name << " (" << check.summary();
    if (!check.extra().empty()) std::cout << "; " << check.extra();
    std::cout << "; " << static_cast<int>(seconds * 1000) << " ms)" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
