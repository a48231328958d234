#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnum/bigint.hpp"

namespace cnum {

// Finite partial order on elements 0..n-1 given by its cover relation.
// The constructor rejects cycles, self-covers, duplicates and covers implied
// by transitivity. At most 64 elements (downsets are 64-bit words).
class Poset {
 public:
  static constexpr int kMaxElements = 64;

  Poset() = default;
  Poset(int n, std::vector<std::pair<int, int>> covers);

  int size() const { return n_; }
  std::span<const std::pair<int, int>> covers() const { return covers_; }

  // Bit j set iff j covers i.
  std::uint64_t upper_covers(int i) const { return up_[static_cast<std::size_t>(i)]; }
  // Bit j set iff i covers j.
  std::uint64_t lower_covers(int i) const { return down_[static_cast<std::size_t>(i)]; }
  // Bit j set iff j < i in the order.
  std::uint64_t strictly_below(int i) const { return below_[static_cast<std::size_t>(i)]; }

  bool less(int a, int b) const { return (below_[static_cast<std::size_t>(b)] >> a) & 1u; }
  bool is_downset(std::uint64_t set) const;

  // Number of elements in a longest chain (0 for the empty poset).
  int height() const;

  std::uint64_t full_set() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> below_;
};

// Exact number of linear extensions (smaller elements first). Memoized over
// downsets: L(A) = sum over maximal x of A of L(A \ {x}), L(empty) = 1.
// Throws ResourceLimitError once more than max_states downsets are stored.
BigInt count_linear_extensions(const Poset& poset,
                               std::size_t max_states = std::size_t{1} << 26);

// Two-layer order: vertices 1..p become elements 0..p-1, hyperedge i becomes
// element p+i and covers exactly its members.
Poset poset_from_hypergraph(int vertex_count, std::span<const std::vector<int>> hyperedges);

struct Face {
  int id = 0;
  std::vector<int> vertices;
};

// Face poset ordered by containment of vertex sets; covers are immediate
// containments. Singleton faces play the role of vertices, and every member
// of every face must appear as a singleton face. Element i is faces[i].
Poset poset_from_faces(std::span<const Face> faces);

// Applies sigma (element i becomes sigma[i]) to every cover.
Poset renumber(const Poset& poset, std::span<const int> sigma);

// "n" then one "l u" cover per line, 0-based; '#' comment lines.
Poset parse_poset_text(std::string_view text);
std::string to_poset_text(const Poset& poset);

}  // namespace cnum
