#ifndef EKNIGHT_FEASIBILITY_HPP
#define EKNIGHT_FEASIBILITY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "eknight/board.hpp"

// Necessary conditions for tours. An "infeasible" verdict is a proof that no
// tour exists; "feasible" only means none of the checks failed.

namespace eknight {

enum class Color { dark, light };

inline const char* to_string(Color c) { return c == Color::dark ? "dark" : "light"; }

/// Dark iff the coordinate sum is even. Every knight move flips the color.
inline Color color(const Vertex& v) {
  long long sum = 0;
  for (int c : v) sum += c;
  return (sum % 2 == 0) ? Color::dark : Color::light;
}

struct ColorCounts {
  std::uint64_t dark = 0;
  std::uint64_t light = 0;

  std::uint64_t imbalance() const noexcept { return dark > light ? dark - light : light - dark; }
  friend bool operator==(const ColorCounts&, const ColorCounts&) = default;
};

inline ColorCounts color_counts(const Board& board) {
  ColorCounts counts;
  for (std::uint64_t c = 0; c < board.cell_count(); ++c) {
    if (board.is_hole_cell(c)) continue;
    if (color(board.decode(c)) == Color::dark) {
      ++counts.dark;
    } else {
      ++counts.light;
    }
  }
  return counts;
}

/// Multisets of nonzero |t_i| with sum of squares 5 and at most `dimension`
/// terms, each sorted descending: {2,1} for k >= 2, {1,1,1,1,1} for k >= 5.
inline std::vector<std::vector<int>> move_decompositions(std::size_t dimension) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int budget, int max_part) -> void {
    if (budget == 0) {
      out.push_back(parts);
      return;
    }
    if (parts.size() == dimension) return;
    for (int p = std::min(max_part, budget); p >= 1; --p) {
      if (p * p > budget) continue;
      parts.push_back(p);
      self(self, budget - p * p, p);
      parts.pop_back();
    }
  };
  recurse(recurse, static_cast<int>(knight_squared_length), static_cast<int>(knight_squared_length));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

enum class Violation {
  odd_vertex_count,
  color_imbalance,
  disconnected,
  min_degree_below_two,
  too_few_vertices,
  too_many_degree_one,
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::odd_vertex_count: return "odd_vertex_count";
    case Violation::color_imbalance: return "color_imbalance";
    case Violation::disconnected: return "disconnected";
    case Violation::min_degree_below_two: return "min_degree_below_two";
    case Violation::too_few_vertices: return "too_few_vertices";
    case Violation::too_many_degree_one: return "too_many_degree_one";
  }
  return "unknown";
}

struct Reason {
  Violation code;
  std::string message;
};

struct FeasibilityVerdict {
  bool feasible = true;
  std::vector<Reason> reasons;
  /// Informational findings that do not affect the verdict.
  std::vector<std::string> notes;

  bool has(Violation v) const {
    return std::any_of(reasons.begin(), reasons.end(), [v](const Reason& r) { return r.code == v; });
  }

  void fail(Violation code, std::string message) {
    feasible = false;
    reasons.push_back({code, std::move(message)});
  }
};

/// Hamiltonian cycle requirements: at least 3 vertices, even count, equal
/// colors, connected, minimum degree 2.
inline FeasibilityVerdict closed_tour_necessary(const KnightGraph& graph) {
  FeasibilityVerdict v;
  const auto n = graph.size();
  const auto counts = color_counts(graph.board());
  if (n % 2 != 0) v.fail(Violation::odd_vertex_count, "odd vertex count (" + std::to_string(n) + ")");
  if (counts.dark != counts.light) {
    v.fail(Violation::color_imbalance,
           "dark/light imbalance " + std::to_string(counts.dark) + "/" + std::to_string(counts.light));
  }
  if (n > 0 && !is_connected(graph)) v.fail(Violation::disconnected, "disconnected");
  if (n > 0) {
    std::size_t min_degree = graph.degree(0);
    for (KnightGraph::Node i = 1; i < n; ++i) min_degree = std::min(min_degree, graph.degree(i));
    if (min_degree < 2) {
      v.fail(Violation::min_degree_below_two, "min degree " + std::to_string(min_degree) + " < 2");
    }
  }
  if (n < 3) v.fail(Violation::too_few_vertices, "fewer than 3 vertices");
  return v;
}

inline FeasibilityVerdict closed_tour_necessary(const Board& board) {
  return closed_tour_necessary(KnightGraph(board));
}

/// Hamiltonian path requirements: |dark - light| <= 1, connected, at most
/// two vertices of degree 1.
inline FeasibilityVerdict open_tour_necessary(const KnightGraph& graph) {
  FeasibilityVerdict v;
  const auto counts = color_counts(graph.board());
  if (counts.imbalance() > 1) {
    v.fail(Violation::color_imbalance,
           "dark/light imbalance " + std::to_string(counts.dark) + "/" + std::to_string(counts.light));
  }
  if (graph.size() == 0 || !is_connected(graph)) v.fail(Violation::disconnected, "disconnected");
  std::size_t degree_one = 0;
  for (KnightGraph::Node i = 0; i < graph.size(); ++i) degree_one += graph.degree(i) == 1;
  if (degree_one > 2) {
    v.fail(Violation::too_many_degree_one, std::to_string(degree_one) + " vertices of degree 1");
  }
  if (counts.imbalance() == 1) {
    v.notes.push_back(std::string("both endpoints must be ") +
                      (counts.dark > counts.light ? "dark" : "light") + " (majority color)");
  }
  return v;
}

inline FeasibilityVerdict open_tour_necessary(const Board& board) { return open_tour_necessary(KnightGraph(board)); }

/// Closed tour criterion for the classical (L-move only) knight on a box
/// n_1 <= ... <= n_k, k >= 3: even cell count, n_{k-1} >= 3, n_k >= 4.
/// Sides are sorted before evaluation.
inline bool classical_closed_tour_condition(std::vector<int> sides) {
  if (sides.size() < 3) throw std::domain_error("classical condition needs at least 3 axes");
  if (std::any_of(sides.begin(), sides.end(), [](int s) { return s < 2; })) {
    throw std::domain_error("classical condition needs every side >= 2");
  }
  std::sort(sides.begin(), sides.end());
  const bool even_product = std::any_of(sides.begin(), sides.end(), [](int s) { return s % 2 == 0; });
  const std::size_t k = sides.size();
  return even_product && sides[k - 2] >= 3 && sides[k - 1] >= 4;
}

}  // namespace eknight

#endif  // EKNIGHT_FEASIBILITY_HPP
