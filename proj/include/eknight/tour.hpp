#ifndef EKNIGHT_TOUR_HPP
#define EKNIGHT_TOUR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eknight/board.hpp"

namespace eknight {

/// open: Hamiltonian path. closed: Hamiltonian cycle (last adjacent to
/// first). near_closed: closed walk covering the board with one vertex
/// visited twice. path: distinct vertices joined by legal moves, coverage
/// not required.
enum class TourKind { open, closed, near_closed, path };

inline const char* to_string(TourKind k) {
  switch (k) {
    case TourKind::open: return "open";
    case TourKind::closed: return "closed";
    case TourKind::near_closed: return "near_closed";
    case TourKind::path: return "path";
  }
  return "unknown";
}

inline std::optional<TourKind> parse_tour_kind(std::string_view s) {
  if (s == "open") return TourKind::open;
  if (s == "closed") return TourKind::closed;
  if (s == "near_closed") return TourKind::near_closed;
  if (s == "path") return TourKind::path;
  return std::nullopt;
}

struct Tour {
  Board board;
  TourKind kind = TourKind::open;
  std::vector<Vertex> vertices;

  friend bool operator==(const Tour&, const Tour&) = default;
};

enum class MoveClass { l_move, diagonal5 };

inline const char* to_string(MoveClass c) { return c == MoveClass::l_move ? "L_move" : "diagonal5"; }

/// L_move: one +-2 and one +-1 (taxicab 3). diagonal5: five +-1 (taxicab 5).
/// Throws std::domain_error if the pair is not a knight move.
inline MoveClass classify_move(const Vertex& a, const Vertex& b) {
  if (!is_knight_move(a, b)) {
    throw std::domain_error("not a knight move: " + a.to_string() + " -> " + b.to_string());
  }
  return taxicab_distance(a, b) == 3 ? MoveClass::l_move : MoveClass::diagonal5;
}

enum class Check { membership, step, coverage, closure };

inline const char* to_string(Check c) {
  switch (c) {
    case Check::membership: return "membership";
    case Check::step: return "step";
    case Check::coverage: return "coverage";
    case Check::closure: return "closure";
  }
  return "unknown";
}

struct TourViolation {
  Check check;
  /// Index into the vertex sequence; for step violations the index of the
  /// arriving vertex, for coverage/closure failures the sequence length.
  std::size_t index;
  std::string description;
};

struct VerificationReport {
  bool valid = false;
  TourKind kind = TourKind::open;
  std::optional<TourViolation> first_violation;
  /// Every violation found, filled only when requested.
  std::vector<TourViolation> violations;
  std::int64_t endpoint_squared_distance = 0;
  /// taxicab length -> number of links; includes the closing link of a
  /// closed tour.
  std::map<std::int64_t, std::size_t> move_taxicab_counts;
  std::size_t link_count = 0;
  std::size_t distinct_vertices = 0;
  std::size_t board_vertices = 0;
};

struct VerifyOptions {
  bool collect_all = false;
};

/// Checks membership, then step legality, then coverage and multiplicity,
/// then closure; the first violation is the lowest index of the first
/// failing check. Throws std::domain_error on dimension mismatch or an empty
/// sequence; every other defect is reported.
inline VerificationReport verify(const Board& board, std::span<const Vertex> vertices, TourKind claimed,
                                 VerifyOptions options = {}) {
  if (vertices.empty()) throw std::domain_error("empty vertex sequence");
  for (const auto& v : vertices) {
    if (v.dimension() != board.dimension()) {
      throw std::domain_error("vertex " + v.to_string() + " has dimension " + std::to_string(v.dimension()) +
                              ", board has " + std::to_string(board.dimension()));
    }
  }

  VerificationReport report;
  report.kind = claimed;
  report.board_vertices = static_cast<std::size_t>(board.vertex_count());
  const std::size_t n = vertices.size();
  report.endpoint_squared_distance = squared_distance(vertices.front(), vertices.back());

  std::vector<TourViolation> found;
  auto record = [&](Check check, std::size_t index, std::string text) {
    found.push_back({check, index, std::move(text)});
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (!board.in_box(vertices[i])) {
      record(Check::membership, i, "vertex " + vertices[i].to_string() + " lies outside the board");
    } else if (board.is_hole(vertices[i])) {
      record(Check::membership, i, "vertex " + vertices[i].to_string() + " is a hole");
    }
  }

  const bool closes = claimed == TourKind::closed && n > 1;
  for (std::size_t i = 1; i < n; ++i) {
    const auto sq = squared_distance(vertices[i - 1], vertices[i]);
    ++report.move_taxicab_counts[taxicab_distance(vertices[i - 1], vertices[i])];
    if (sq != knight_squared_length) {
      record(Check::step, i,
             "link " + vertices[i - 1].to_string() + " -> " + vertices[i].to_string() + " has squared length " +
                 std::to_string(sq));
    }
  }
  report.link_count = n - 1;
  if (closes) {
    ++report.move_taxicab_counts[taxicab_distance(vertices.back(), vertices.front())];
    ++report.link_count;
  }

  // Multiplicity over in-box cells; out-of-box vertices were already reported.
  std::vector<std::uint32_t> seen(static_cast<std::size_t>(board.cell_count()), 0);
  std::size_t distinct = 0;
  std::vector<std::size_t> repeats;  // indices of second or later occurrences
  for (std::size_t i = 0; i < n; ++i) {
    if (!board.in_box(vertices[i])) continue;
    auto& count = seen[board.encode(vertices[i])];
    if (count++ == 0) {
      ++distinct;
    } else {
      repeats.push_back(i);
    }
  }
  report.distinct_vertices = distinct;

  const auto board_n = report.board_vertices;
  if (claimed == TourKind::near_closed) {
    // first == last and exactly one interior vertex repeated once.
    std::size_t doubled_interior = 0;
    for (std::size_t i : repeats) {
      if (i == n - 1 && vertices[i] == vertices.front()) continue;
      const auto c = seen[board.encode(vertices[i])];
      const bool endpoint = vertices[i] == vertices.front();
      if (c == 2 && !endpoint) {
        ++doubled_interior;
      } else {
        record(Check::coverage, i, "vertex " + vertices[i].to_string() + " visited too often");
      }
    }
    if (doubled_interior != 1) {
      record(Check::coverage, n,
             std::to_string(doubled_interior) + " doubled interior vertices, expected exactly 1");
    }
    if (n != board_n + 2) {
      record(Check::coverage, n,
             "walk has " + std::to_string(n) + " entries, expected " + std::to_string(board_n + 2));
    }
  } else {
    for (std::size_t i : repeats) {
      record(Check::coverage, i, "vertex " + vertices[i].to_string() + " visited twice");
    }
  }
  if (claimed != TourKind::path && distinct != board_n) {
    record(Check::coverage, n,
           "covers " + std::to_string(distinct) + " of " + std::to_string(board_n) + " vertices");
  }

  if (claimed == TourKind::closed) {
    if (n < 3) {
      record(Check::closure, n, "a closed tour needs at least 3 vertices");
    } else if (report.endpoint_squared_distance != knight_squared_length) {
      record(Check::closure, n - 1,
             "closing link " + vertices.back().to_string() + " -> " + vertices.front().to_string() +
                 " has squared length " + std::to_string(report.endpoint_squared_distance));
    }
  } else if (claimed == TourKind::near_closed && vertices.front() != vertices.back()) {
    record(Check::closure, n - 1, "walk does not return to its start");
  }

  std::stable_sort(found.begin(), found.end(), [](const TourViolation& a, const TourViolation& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.index < b.index;
  });
  report.valid = found.empty();
  if (!found.empty()) report.first_violation = found.front();
  if (options.collect_all) report.violations = std::move(found);
  return report;
}

inline VerificationReport verify(const Tour& tour, VerifyOptions options = {}) {
  return verify(tour.board, tour.vertices, tour.kind, options);
}

/// Canonical tour file text: `board:` header, `hole:` lines, `kind:` line,
/// then one vertex per line; `\n` line endings, no trailing whitespace.
inline std::string serialize_tour(const Board& board, TourKind kind, std::span<const Vertex> vertices) {
  std::string out = "board: " + format_sides(board.sides()) + "\n";
  for (const auto& h : board.holes()) out += "hole: " + h.to_string() + "\n";
  out += std::string("kind: ") + to_string(kind) + "\n";
  for (const auto& v : vertices) out += v.to_string() + "\n";
  return out;
}

inline std::string serialize_tour(const Tour& tour) { return serialize_tour(tour.board, tour.kind, tour.vertices); }

/// Throws ParseError (with the offending line) on malformed input.
inline Tour parse_tour(std::string_view text) {
  std::optional<std::vector<int>> sides;
  std::vector<Vertex> holes;
  std::optional<TourKind> kind;
  std::vector<Vertex> vertices;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!sides) {
      if (!line.starts_with("board:")) throw ParseError(line_no, "expected 'board: n1 x ... x nk'");
      sides = parse_sides(line.substr(6), line_no);
      continue;
    }
    if (!kind && line.starts_with("hole:")) {
      auto h = parse_vertex(line.substr(5), line_no);
      if (h.dimension() != sides->size()) {
        throw ParseError(line_no, "hole has " + std::to_string(h.dimension()) + " coordinates, expected " +
                                      std::to_string(sides->size()));
      }
      holes.push_back(std::move(h));
      continue;
    }
    if (!kind) {
      if (!line.starts_with("kind:")) throw ParseError(line_no, "expected 'kind: open|closed|near_closed|path'");
      kind = parse_tour_kind(detail::trim(line.substr(5)));
      if (!kind) throw ParseError(line_no, "unknown tour kind '" + std::string(detail::trim(line.substr(5))) + "'");
      continue;
    }
    auto v = parse_vertex(line, line_no);
    if (v.dimension() != sides->size()) {
      throw ParseError(line_no, "vertex has " + std::to_string(v.dimension()) + " coordinates, expected " +
                                    std::to_string(sides->size()));
    }
    vertices.push_back(std::move(v));
  }
  if (!sides) throw ParseError(0, "missing 'board:' header");
  if (!kind) throw ParseError(0, "missing 'kind:' line");
  if (vertices.empty()) throw ParseError(0, "tour has no vertices");
  try {
    return Tour{Board(std::move(*sides), std::move(holes)), *kind, std::move(vertices)};
  } catch (const std::domain_error& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace eknight

#endif  // EKNIGHT_TOUR_HPP
