#ifndef EKNIGHT_TESTS_ORACLES_HPP
#define EKNIGHT_TESTS_ORACLES_HPP

// Brute-force reference computations for tests. Nothing here uses the
// library's board indexing, offset generation, or search code: cells are
// plain coordinate vectors and adjacency is the squared distance computed
// pairwise.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Cell = std::vector<int>;

/// All cells of the box in odometer (lexicographic) order, minus holes.
inline std::vector<Cell> cells(const std::vector<int>& sides, const std::set<Cell>& holes = {}) {
  std::vector<Cell> out;
  Cell c(sides.size(), 0);
  while (true) {
    if (!holes.count(c)) out.push_back(c);
    std::size_t axis = sides.size();
    while (axis > 0) {
      --axis;
      if (++c[axis] < sides[axis]) break;
      c[axis] = 0;
      if (axis == 0) return out;
    }
    if (sides.empty()) return out;
  }
}

inline long long sq(const Cell& a, const Cell& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

inline bool knight(const Cell& a, const Cell& b) { return sq(a, b) == 5; }

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency(const std::vector<Cell>& cs) {
  Matrix m(cs.size(), std::vector<char>(cs.size(), 0));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) m[i][j] = knight(cs[i], cs[j]);
  return m;
}

/// All-pairs jump counts; -1 for unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const Matrix& adj) {
  const std::size_t n = adj.size();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

struct HamiltonVerdict {
  bool path = false;
  bool cycle = false;
};

/// Enumerates vertex permutations in lexicographic order. When the prefix
/// up to position i already contains an illegal link, every permutation
/// sharing that prefix is skipped by reversing the (descending-after-sort)
/// suffix so next_permutation advances position i.
inline HamiltonVerdict hamiltonian_by_permutations(const Matrix& adj) {
  HamiltonVerdict v;
  const std::size_t n = adj.size();
  if (n == 0) return v;
  if (n == 1) {
    v.path = true;
    return v;
  }
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::size_t bad = n;
    for (std::size_t i = 1; i < n; ++i) {
      if (!adj[p[i - 1]][p[i]]) {
        bad = i;
        break;
      }
    }
    if (bad == n) {
      v.path = true;
      if (n >= 3 && adj[p[n - 1]][p[0]]) {
        v.cycle = true;
        return v;
      }
      continue;
    }
    // skip every permutation with this prefix p[0..bad]
    std::sort(p.begin() + static_cast<std::ptrdiff_t>(bad) + 1, p.end(), std::greater<>());
  } while (std::next_permutation(p.begin(), p.end()));
  return v;
}

/// Longest simple path (vertex count) by subset dynamic programming.
inline std::size_t longest_path_vertices(const Matrix& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  std::vector<std::vector<char>> reach(std::size_t{1} << n, std::vector<char>(n, 0));
  std::size_t best = 1;
  for (std::size_t i = 0; i < n; ++i) reach[std::size_t{1} << i][i] = 1;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    for (std::size_t last = 0; last < n; ++last) {
      if (!reach[mask][last]) continue;
      best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
      for (std::size_t nxt = 0; nxt < n; ++nxt) {
        if (!(mask >> nxt & 1) && adj[last][nxt]) reach[mask | (std::size_t{1} << nxt)][nxt] = 1;
      }
    }
  }
  return best;
}

/// A random small box (at most `max_cells` cells, at least one axis of
/// length >= 2) with random holes leaving at least one vertex.
struct RandomBoard {
  std::vector<int> sides;
  std::set<Cell> holes;
};

inline RandomBoard random_board(std::mt19937& rng, std::size_t max_vertices) {
  static const std::vector<std::vector<int>> shapes = {
      {3, 3}, {3, 4}, {4, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {2, 6}, {4, 4}, {2, 2, 3},
      {2, 3, 2}, {3, 3, 2}, {2, 2, 2, 2}, {1, 3, 4}, {2, 7}, {4, 5}, {3, 6}, {2, 2, 2, 2, 2}};
  RandomBoard b;
  b.sides = shapes[rng() % shapes.size()];
  auto all = cells(b.sides);
  std::shuffle(all.begin(), all.end(), rng);
  std::size_t keep = all.size();
  if (keep > max_vertices) keep = max_vertices;
  // extra random holes
  std::size_t extra = keep > 1 ? rng() % std::min<std::size_t>(keep, 4) : 0;
  keep -= extra;
  if (keep == 0) keep = 1;
  for (std::size_t i = keep; i < all.size(); ++i) b.holes.insert(all[i]);
  return b;
}

}  // namespace oracle

#endif  // EKNIGHT_TESTS_ORACLES_HPP
