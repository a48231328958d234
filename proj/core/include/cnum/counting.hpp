#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cnum/bigint.hpp"
#include "cnum/csequence.hpp"
#include "cnum/graph.hpp"
#include "cnum/limits.hpp"

namespace cnum {

// Ground truth: walks all ℓ! orderings of the elements (with base set, all
// orderings that start with that vertex) and counts the valid ones.
BigInt count_bruteforce(const Graph& g, const Limits& limits = {}, std::optional<int> base = std::nullopt);

// Exact c(G) by a DP over (placed vertex set V', number m of placed edges):
//   f(V', m) = (e(V') - m) f(V', m+1) + Σ_{v ∉ V'} f(V' ∪ {v}, m),
// f(V, q) = 1, answer f(∅, 0). Edges whose endpoints are both placed are
// interchangeable, so (V', m) determines the number of completions.
BigInt count_dp(const Graph& g, const Limits& limits = {});

// Sequences starting with vertex v: f({v}, 0) from the same table.
BigInt count_based(const Graph& g, int v, const Limits& limits = {});

// All based counts at once, index v-1.
std::vector<BigInt> count_based_all(const Graph& g, const Limits& limits = {});

// Emits every construction sequence in lexicographic element order
// (vertices before edges, then by label).
void enumerate_csequences(const Graph& g, const std::function<void(const CSeq&)>& visit,
                          const Limits& limits = {});
std::vector<CSeq> all_csequences(const Graph& g, const Limits& limits = {});

// 2^n (n!)^2
BigInt star_formula(std::uint32_t n);

// (2n)! / 2^n: sequences of the n-leaf star that start at the hub.
BigInt star_hub_formula(std::uint32_t n);

// c(P_1) = 1, c(P_n) = Σ_{k=1}^{n-1} c(P_k) c(P_{n-k}) C(2n-2, 2k-1).
BigInt path_recursion(std::uint32_t n);
std::vector<BigInt> path_recursion_table(std::uint32_t n_max);

// Euler zigzag numbers E_0..E_m from the Seidel–Entringer triangle.
std::vector<BigInt> euler_zigzag(std::uint32_t m);

struct ZigzagNumbers {
  std::vector<BigInt> tangent;  // tangent[n-1] = T_n = E_{2n-1}
  std::vector<BigInt> secant;   // secant[n-1] = S_n = E_{2n-2}, the endpoint-based path count
  const BigInt& T(std::uint32_t n) const { return tangent[n - 1]; }
  const BigInt& S(std::uint32_t n) const { return secant[n - 1]; }
};

// T_1..T_N and S_1..S_N.
ZigzagNumbers zigzag_numbers(std::uint32_t n_max);

// Exact B_k for 0 <= k <= 40 (B_1 = -1/2) from Σ_{j<=k} C(k+1, j) B_j = 0.
Rational bernoulli(std::uint32_t k);

// c(P_n) = C(2^{2n}, 2) |B_{2n}| / n and c(C_n) = C(2^{2n}, 2) |B_{2n}|,
// for 1 <= n <= 20. A non-integral result throws std::logic_error.
BigInt path_formula_bernoulli(std::uint32_t n);
BigInt cycle_formula(std::uint32_t n);

// Street's tremolo numbers with J_0 = 0, J_1 = 1, J_2 = 0 and
// J_r = Σ_{m=0}^{r-1} C(r-1, m) J_m J_{r-1-m} for r >= 3.
BigInt street_J(std::uint32_t r);
std::vector<BigInt> street_J_table(std::uint32_t r_max);

struct CountedPart {
  BigInt count;
  std::uint32_t length = 1;  // element count ℓ of the part
};

// Π c_i · multinomial(ℓ_1, ..., ℓ_n): construction number of a disjoint union.
BigInt union_count(std::span<const CountedPart> parts);

// Π c(G_i, v_i) · multinomial(ℓ_1 - 1, ..., ℓ_n - 1): based count of a wedge
// at its base point, from based counts of the parts.
BigInt wedge_count(std::span<const CountedPart> parts);

}  // namespace cnum
