#include "cnum/counting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cnum/errors.hpp"
#include "inner_edges.hpp"

namespace cnum {

namespace {

std::size_t at(std::int64_t i) { return static_cast<std::size_t>(i); }

void require_enumerable(const Graph& g, const Limits& limits, const char* what) {
  if (g.element_count() > limits.enumeration_elements)
    throw ResourceLimitError(std::string(what) + " needs at most " + std::to_string(limits.enumeration_elements) +
                             " elements; the graph has " + std::to_string(g.element_count()));
}

// Full f(V', m) table for count_dp and count_based.
class CountTable {
 public:
  CountTable(const Graph& g, const Limits& limits) : p_(g.vertex_count()), inner_(inner_edge_counts_checked(g, limits)) {
    const std::uint32_t full = (std::uint32_t{1} << p_) - 1;
    offset_.resize(at(full) + 2);
    std::size_t total = 0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      offset_[mask] = total;
      total += at(inner_[mask]) + 1;
      if (total > limits.max_states)
        throw ResourceLimitError("construction-count DP needs more than " + std::to_string(limits.max_states) +
                                 " states");
    }
    offset_[at(full) + 1] = total;
    value_.resize(total);

    for (std::uint32_t mask = full + 1; mask-- > 0;) {
      const int e = inner_[mask];
      for (int m = e; m >= 0; --m) {
        BigInt f = 0;
        if (m < e) {
          f = value(mask, m + 1) * (e - m);
        } else if (mask == full) {
          f = 1;  // m == q
        }
        for (std::uint32_t open = full & ~mask; open; open &= open - 1)
          f += value(mask | (open & (~open + 1)), m);
        value_[offset_[mask] + at(m)] = std::move(f);
      }
    }
  }

  const BigInt& value(std::uint32_t mask, int m) const { return value_[offset_[mask] + at(m)]; }

 private:
  static std::vector<int> inner_edge_counts_checked(const Graph& g, const Limits& limits) {
    if (g.vertex_count() > limits.dp_vertices || g.element_count() > limits.dp_elements)
      throw ResourceLimitError("construction-count DP supports at most " + std::to_string(limits.dp_vertices) +
                               " vertices and " + std::to_string(limits.dp_elements) + " elements");
    if (g.vertex_count() > 30) throw ResourceLimitError("construction-count DP supports at most 30 vertices");
    return detail::inner_edge_counts(g);
  }

  int p_;
  std::vector<int> inner_;
  std::vector<std::size_t> offset_;
  std::vector<BigInt> value_;
};

}  // namespace

BigInt count_bruteforce(const Graph& g, const Limits& limits, std::optional<int> base) {
  require_enumerable(g, limits, "brute-force counting");
  const int p = g.vertex_count();
  const int l = g.element_count();
  if (base && (*base < 1 || *base > p)) throw DomainError("base vertex v" + std::to_string(*base) + " is not in the graph");

  std::vector<int> order(at(l));
  std::iota(order.begin(), order.end(), 0);
  auto free_begin = order.begin();
  if (base) {
    std::swap(order[0], order[at(*base - 1)]);
    std::sort(order.begin() + 1, order.end());
    free_begin = order.begin() + 1;
  }

  std::vector<int> pos(at(l));
  std::uint64_t hits = 0;
  do {
    for (int j = 0; j < l; ++j) pos[at(order[at(j)])] = j;
    bool ok = true;
    for (int id = 1; id <= g.edge_count() && ok; ++id) {
      const Edge& e = g.edge(id);
      const int xe = pos[at(p + id - 1)];
      ok = pos[at(e.u - 1)] < xe && pos[at(e.w - 1)] < xe;
    }
    if (ok) ++hits;
  } while (std::next_permutation(free_begin, order.end()));
  return hits;
}

BigInt count_dp(const Graph& g, const Limits& limits) {
  if (g.vertex_count() == 0) return 1;
  return CountTable(g, limits).value(0, 0);
}

BigInt count_based(const Graph& g, int v, const Limits& limits) {
  if (v < 1 || v > g.vertex_count()) throw DomainError("base vertex v" + std::to_string(v) + " is not in the graph");
  return CountTable(g, limits).value(std::uint32_t{1} << (v - 1), 0);
}

std::vector<BigInt> count_based_all(const Graph& g, const Limits& limits) {
  std::vector<BigInt> counts;
  if (g.vertex_count() == 0) return counts;
  const CountTable table(g, limits);
  for (int v = 1; v <= g.vertex_count(); ++v) counts.push_back(table.value(std::uint32_t{1} << (v - 1), 0));
  return counts;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, const std::function<void(const CSeq&)>& visit)
      : g_(g), visit_(visit), placed_(at(g.element_count()), false) {}

  void run() { extend(); }

 private:
  bool available(int d) const {
    if (placed_[at(d)]) return false;
    if (d < g_.vertex_count()) return true;
    const Edge& e = g_.edge(d - g_.vertex_count() + 1);
    return placed_[at(e.u - 1)] && placed_[at(e.w - 1)];
  }

  void extend() {
    if (static_cast<int>(prefix_.size()) == g_.element_count()) {
      visit_(CSeq(g_, prefix_));
      return;
    }
    for (int d = 0; d < g_.element_count(); ++d) {
      if (!available(d)) continue;
      placed_[at(d)] = true;
      prefix_.push_back(g_.element(d));
      extend();
      prefix_.pop_back();
      placed_[at(d)] = false;
    }
  }

  const Graph& g_;
  const std::function<void(const CSeq&)>& visit_;
  std::vector<bool> placed_;
  std::vector<ElementId> prefix_;
};

}  // namespace

void enumerate_csequences(const Graph& g, const std::function<void(const CSeq&)>& visit, const Limits& limits) {
  require_enumerable(g, limits, "enumeration");
  Enumerator(g, visit).run();
}

std::vector<CSeq> all_csequences(const Graph& g, const Limits& limits) {
  std::vector<CSeq> out;
  enumerate_csequences(g, [&](const CSeq& x) { out.push_back(x); }, limits);
  return out;
}

BigInt star_formula(std::uint32_t n) {
  const BigInt f = factorial(n);
  return (BigInt(1) << n) * f * f;
}

BigInt star_hub_formula(std::uint32_t n) { return factorial(2 * n) >> n; }

std::vector<BigInt> path_recursion_table(std::uint32_t n_max) {
  std::vector<BigInt> c(n_max + 1, 0);
  if (n_max >= 1) c[1] = 1;
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    BigInt sum = 0;
    for (std::uint32_t k = 1; k < n; ++k) sum += c[k] * c[n - k] * binomial(2 * n - 2, 2 * k - 1);
    c[n] = std::move(sum);
  }
  return c;
}

BigInt path_recursion(std::uint32_t n) {
  if (n < 1) throw DomainError("path recursion needs n >= 1");
  return path_recursion_table(n)[n];
}

std::vector<BigInt> euler_zigzag(std::uint32_t m) {
  // row[k] = Entringer number E(n, k); E(n, k) = E(n, k-1) + E(n-1, n-k).
  std::vector<BigInt> zigzag{1};
  std::vector<BigInt> row{1};
  for (std::uint32_t n = 1; n <= m; ++n) {
    std::vector<BigInt> next(n + 1, 0);
    for (std::uint32_t k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
    zigzag.push_back(next[n]);
    row = std::move(next);
  }
  return zigzag;
}

ZigzagNumbers zigzag_numbers(std::uint32_t n_max) {
  if (n_max < 1) throw DomainError("zigzag table needs N >= 1");
  const std::vector<BigInt> e = euler_zigzag(2 * n_max - 1);
  ZigzagNumbers z;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    z.tangent.push_back(e[2 * n - 1]);
    z.secant.push_back(e[2 * n - 2]);
  }
  return z;
}

Rational bernoulli(std::uint32_t k) {
  if (k > 40) throw DomainError("Bernoulli numbers are provided for indices 0..40");
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (std::uint32_t m = 1; m <= k; ++m) {
    Rational sum = 0;
    for (std::uint32_t j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -sum / (m + 1);
  }
  return b[k];
}

namespace {

Rational cycle_formula_rational(std::uint32_t n) {
  if (n < 1 || n > 20) throw DomainError("Bernoulli-based formulas are provided for 1 <= n <= 20");
  const BigInt top = BigInt(1) << (2 * n);
  return Rational(binomial(top, 2)) * boost::multiprecision::abs(bernoulli(2 * n));
}

BigInt exact_integer(const Rational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error(std::string(what) + " produced the non-integer " + to_string(r));
  return boost::multiprecision::numerator(r);
}

}  // namespace

BigInt path_formula_bernoulli(std::uint32_t n) {
  return exact_integer(cycle_formula_rational(n) / n, "path formula");
}

BigInt cycle_formula(std::uint32_t n) { return exact_integer(cycle_formula_rational(n), "cycle formula"); }

std::vector<BigInt> street_J_table(std::uint32_t r_max) {
  std::vector<BigInt> j(std::max<std::uint32_t>(r_max, 2) + 1, 0);
  j[1] = 1;
  for (std::uint32_t r = 3; r <= r_max; ++r) {
    BigInt sum = 0;
    for (std::uint32_t m = 0; m < r; ++m) sum += binomial(r - 1, m) * j[m] * j[r - 1 - m];
    j[r] = std::move(sum);
  }
  j.resize(r_max + 1);
  return j;
}

BigInt street_J(std::uint32_t r) { return street_J_table(r)[r]; }

BigInt union_count(std::span<const CountedPart> parts) {
  BigInt product = 1;
  std::vector<std::uint32_t> lengths;
  for (const CountedPart& part : parts) {
    if (part.length < 1) throw DomainError("union parts need at least one element");
    product *= part.count;
    lengths.push_back(part.length);
  }
  return product * multinomial(lengths);
}

BigInt wedge_count(std::span<const CountedPart> parts) {
  BigInt product = 1;
  std::vector<std::uint32_t> lengths;
  for (const CountedPart& part : parts) {
    if (part.length < 1) throw DomainError("wedge parts need at least one element");
    product *= part.count;
    lengths.push_back(part.length - 1);
  }
  return product * multinomial(lengths);
}

}  // namespace cnum
