#ifndef EKNIGHT_DOT_HPP
#define EKNIGHT_DOT_HPP

#include <string>

#include "eknight/board.hpp"
#include "eknight/tour.hpp"

// Graphviz output for inspecting knight graphs and tours.

namespace eknight {

namespace detail {

inline std::string dot_id(const Vertex& v) { return "\"" + v.to_string() + "\""; }

inline std::string dot_move_label(const Vertex& a, const Vertex& b) {
  if (!is_knight_move(a, b)) return "illegal";
  return to_string(classify_move(a, b));
}

}  // namespace detail

/// Undirected knight graph; each edge labelled L_move or diagonal5.
inline std::string board_to_dot(const KnightGraph& graph) {
  std::string out = "graph knight {\n";
  for (const auto& v : graph.vertices()) out += "  " + detail::dot_id(v) + ";\n";
  for (KnightGraph::Node a = 0; a < graph.size(); ++a) {
    for (auto b : graph.neighbors(a)) {
      if (b <= a) continue;
      const auto& va = graph.vertex(a);
      const auto& vb = graph.vertex(b);
      out += "  " + detail::dot_id(va) + " -- " + detail::dot_id(vb) + " [label=\"" +
             detail::dot_move_label(va, vb) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

/// Directed chain of the tour's links (plus the closing link when closed),
/// labelled with step number and move class.
inline std::string tour_to_dot(const Tour& tour) {
  std::string out = "digraph tour {\n";
  const auto& vs = tour.vertices;
  auto link = [&](std::size_t step, const Vertex& a, const Vertex& b) {
    out += "  " + detail::dot_id(a) + " -> " + detail::dot_id(b) + " [label=\"" + std::to_string(step) + " " +
           detail::dot_move_label(a, b) + "\"];\n";
  };
  if (vs.size() == 1) out += "  " + detail::dot_id(vs.front()) + ";\n";
  for (std::size_t i = 1; i < vs.size(); ++i) link(i, vs[i - 1], vs[i]);
  if (tour.kind == TourKind::closed && vs.size() > 2) link(vs.size(), vs.back(), vs.front());
  out += "}\n";
  return out;
}

}  // namespace eknight

#endif  // EKNIGHT_DOT_HPP
