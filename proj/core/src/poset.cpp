#include "cnum/poset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cnum/errors.hpp"

namespace cnum {

Poset::Poset(int n, std::vector<std::pair<int, int>> covers) : n_(n), covers_(std::move(covers)) {
  if (n_ < 0) throw DomainError("poset size must be non-negative");
  if (n_ > kMaxElements)
    throw ResourceLimitError("poset has " + std::to_string(n_) + " elements; at most " +
                             std::to_string(kMaxElements) + " are supported");
  const auto un = static_cast<std::size_t>(n_);
  up_.assign(un, 0);
  down_.assign(un, 0);
  below_.assign(un, 0);

  for (const auto& [lo, hi] : covers_) {
    if (lo < 0 || lo >= n_ || hi < 0 || hi >= n_)
      throw DomainError("cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") is out of range");
    if (lo == hi) throw DomainError("element " + std::to_string(lo) + " covers itself");
    const std::uint64_t bit = std::uint64_t{1} << hi;
    if (up_[static_cast<std::size_t>(lo)] & bit)
      throw DomainError("duplicate cover (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
    up_[static_cast<std::size_t>(lo)] |= bit;
    down_[static_cast<std::size_t>(hi)] |= std::uint64_t{1} << lo;
  }

  // Kahn order; leftover elements sit on a cycle.
  std::vector<int> indegree(un, 0);
  for (int i = 0; i < n_; ++i) indegree[static_cast<std::size_t>(i)] = std::popcount(down_[static_cast<std::size_t>(i)]);
  std::vector<int> order;
  for (int i = 0; i < n_; ++i)
    if (indegree[static_cast<std::size_t>(i)] == 0) order.push_back(i);
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::uint64_t up = up_[static_cast<std::size_t>(order[k])]; up; up &= up - 1) {
      const int j = std::countr_zero(up);
      if (--indegree[static_cast<std::size_t>(j)] == 0) order.push_back(j);
    }
  }
  if (static_cast<int>(order.size()) != n_) throw DomainError("cover relation contains a cycle");

  for (int i : order) {
    std::uint64_t below = 0;
    for (std::uint64_t down = down_[static_cast<std::size_t>(i)]; down; down &= down - 1) {
      const int j = std::countr_zero(down);
      below |= (std::uint64_t{1} << j) | below_[static_cast<std::size_t>(j)];
    }
    below_[static_cast<std::size_t>(i)] = below;
  }

  // A cover lo < hi is redundant when lo lies strictly below some other lower
  // cover of hi.
  for (const auto& [lo, hi] : covers_) {
    std::uint64_t others = down_[static_cast<std::size_t>(hi)] & ~(std::uint64_t{1} << lo);
    for (; others; others &= others - 1) {
      const int mid = std::countr_zero(others);
      if (less(lo, mid))
        throw DomainError("cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                          ") is implied by transitivity through " + std::to_string(mid));
    }
  }
}

bool Poset::is_downset(std::uint64_t set) const {
  for (std::uint64_t s = set; s; s &= s - 1) {
    const int i = std::countr_zero(s);
    if (below_[static_cast<std::size_t>(i)] & ~set) return false;
  }
  return true;
}

int Poset::height() const {
  // Elements in increasing order of |strictly below| form a linear extension.
  std::vector<int> order(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(below_[static_cast<std::size_t>(a)]) < std::popcount(below_[static_cast<std::size_t>(b)]);
  });
  std::vector<int> chain(static_cast<std::size_t>(n_), 1);
  int best = 0;
  for (int i : order) {
    for (std::uint64_t down = down_[static_cast<std::size_t>(i)]; down; down &= down - 1) {
      const int j = std::countr_zero(down);
      chain[static_cast<std::size_t>(i)] = std::max(chain[static_cast<std::size_t>(i)], chain[static_cast<std::size_t>(j)] + 1);
    }
    best = std::max(best, chain[static_cast<std::size_t>(i)]);
  }
  return best;
}

namespace {

class ExtensionCounter {
 public:
  ExtensionCounter(const Poset& poset, std::size_t max_states)
      : poset_(poset), max_states_(max_states) {}

  BigInt count(std::uint64_t downset) {
    if (downset == 0) return 1;
    if (auto it = memo_.find(downset); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (std::uint64_t rest = downset; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if ((poset_.upper_covers(x) & downset) == 0) total += count(downset & ~(std::uint64_t{1} << x));
    }
    if (memo_.size() >= max_states_)
      throw ResourceLimitError("linear-extension DP exceeded " + std::to_string(max_states_) +
                               " memo states");
    memo_.emplace(downset, total);
    return total;
  }

 private:
  const Poset& poset_;
  std::size_t max_states_;
  std::unordered_map<std::uint64_t, BigInt> memo_;
};

}  // namespace

BigInt count_linear_extensions(const Poset& poset, std::size_t max_states) {
  return ExtensionCounter(poset, max_states).count(poset.full_set());
}

Poset poset_from_hypergraph(int vertex_count, std::span<const std::vector<int>> hyperedges) {
  if (vertex_count < 0) throw DomainError("vertex count must be non-negative");
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < hyperedges.size(); ++i) {
    const std::set<int> members(hyperedges[i].begin(), hyperedges[i].end());
    if (members.empty()) throw DomainError("hyperedge " + std::to_string(i + 1) + " is empty");
    for (int v : members) {
      if (v < 1 || v > vertex_count)
        throw DomainError("hyperedge " + std::to_string(i + 1) + " has member " + std::to_string(v) +
                          " outside 1.." + std::to_string(vertex_count));
      covers.emplace_back(v - 1, vertex_count + static_cast<int>(i));
    }
  }
  return Poset(vertex_count + static_cast<int>(hyperedges.size()), std::move(covers));
}

Poset poset_from_faces(std::span<const Face> faces) {
  std::set<int> ids;
  std::vector<std::set<int>> members;
  std::set<int> singletons;
  for (const Face& face : faces) {
    if (!ids.insert(face.id).second) throw DomainError("duplicate face id " + std::to_string(face.id));
    std::set<int> m(face.vertices.begin(), face.vertices.end());
    if (m.empty()) throw DomainError("face " + std::to_string(face.id) + " has no vertices");
    if (m.size() == 1) singletons.insert(*m.begin());
    members.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (int v : members[i])
      if (!singletons.count(v))
        throw DomainError("face " + std::to_string(faces[i].id) + " uses vertex " + std::to_string(v) +
                          " which is not a singleton face");

  auto proper_subset = [](const std::set<int>& a, const std::set<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  const std::size_t n = faces.size();
  std::vector<std::pair<int, int>> covers;
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (!proper_subset(members[lo], members[hi])) continue;
      bool immediate = true;
      for (std::size_t mid = 0; mid < n && immediate; ++mid)
        if (proper_subset(members[lo], members[mid]) && proper_subset(members[mid], members[hi])) immediate = false;
      if (immediate) covers.emplace_back(static_cast<int>(lo), static_cast<int>(hi));
    }
  }
  return Poset(static_cast<int>(n), std::move(covers));
}

Poset renumber(const Poset& poset, std::span<const int> sigma) {
  const int n = poset.size();
  if (static_cast<int>(sigma.size()) != n) throw DomainError("renumbering has the wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int s : sigma) {
    if (s < 0 || s >= n || hit[static_cast<std::size_t>(s)]) throw DomainError("renumbering is not a permutation");
    hit[static_cast<std::size_t>(s)] = true;
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& [lo, hi] : poset.covers())
    covers.emplace_back(sigma[static_cast<std::size_t>(lo)], sigma[static_cast<std::size_t>(hi)]);
  return Poset(n, std::move(covers));
}

Poset parse_poset_text(std::string_view text) {
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
        throw DomainError("poset text line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      row.push_back(value);
    }
    const std::size_t expected = rows.empty() ? 1 : 2;
    if (row.size() != expected)
      throw DomainError("poset text line " + std::to_string(line_no) + ": expected " +
                        std::to_string(expected) + " integer(s)");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DomainError("poset text is empty");
  const long long n = rows[0][0];
  if (n < 0 || n > Poset::kMaxElements) throw DomainError("poset size out of range");
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 1; i < rows.size(); ++i)
    covers.emplace_back(static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1]));
  return Poset(static_cast<int>(n), std::move(covers));
}

std::string to_poset_text(const Poset& poset) {
  std::string out = std::to_string(poset.size()) + "\n";
  for (const auto& [lo, hi] : poset.covers()) out += std::to_string(lo) + " " + std::to_string(hi) + "\n";
  return out;
}

}  // namespace cnum
