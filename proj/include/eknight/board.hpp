#ifndef EKNIGHT_BOARD_HPP
#define EKNIGHT_BOARD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Boards of arbitrary dimension under the Euclidean knight rule: two cells
// are joined iff their squared distance is exactly 5.

namespace eknight {

/// Squared length of every Euclidean knight move.
inline constexpr std::int64_t knight_squared_length = 5;

/// Malformed text input (board descriptions, tour files, CLI coordinates).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number, 0 when the input has no line structure.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A board cell, identified by its integer coordinates.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> coords) : coords_(std::move(coords)) {}
  Vertex(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t dimension() const noexcept { return coords_.size(); }
  int operator[](std::size_t axis) const { return coords_[axis]; }
  int& operator[](std::size_t axis) { return coords_[axis]; }
  std::span<const int> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  /// Copy with one more trailing coordinate.
  Vertex extended(int last) const {
    std::vector<int> c = coords_;
    c.push_back(last);
    return Vertex(std::move(c));
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

  /// `c1,c2,...,ck`
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coords_[i]);
    }
    return out;
  }

 private:
  std::vector<int> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << '(' << v.to_string() << ')';
}

namespace detail {

inline void require_same_dimension(const Vertex& a, const Vertex& b) {
  if (a.dimension() != b.dimension()) {
    throw std::domain_error("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                            std::to_string(b.dimension()));
  }
}

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline int parse_int(std::string_view token, std::size_t line) {
  token = trim(token);
  if (token.empty()) throw ParseError(line, "empty integer field");
  int value = 0;
  bool negative = false;
  std::size_t i = 0;
  if (token[0] == '-' || token[0] == '+') {
    negative = token[0] == '-';
    i = 1;
    if (token.size() == 1) throw ParseError(line, "bad integer '" + std::string(token) + "'");
  }
  for (; i < token.size(); ++i) {
    const char c = token[i];
    if (c < '0' || c > '9') throw ParseError(line, "bad integer '" + std::string(token) + "'");
    if (value > (std::numeric_limits<int>::max() - (c - '0')) / 10) {
      throw ParseError(line, "integer out of range '" + std::string(token) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace detail

/// Parses `c1,c2,...,ck`.
inline Vertex parse_vertex(std::string_view text, std::size_t line = 0) {
  std::vector<int> coords;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    coords.push_back(detail::parse_int(text.substr(pos, comma - pos), line));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Vertex(std::move(coords));
}

inline std::int64_t squared_distance(const Vertex& a, const Vertex& b) {
  detail::require_same_dimension(a, b);
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    const std::int64_t d = std::int64_t{a[j]} - b[j];
    sum += d * d;
  }
  return sum;
}

inline std::int64_t taxicab_distance(const Vertex& a, const Vertex& b) {
  detail::require_same_dimension(a, b);
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    const std::int64_t d = std::int64_t{a[j]} - b[j];
    sum += d < 0 ? -d : d;
  }
  return sum;
}

/// Throws std::domain_error on dimension mismatch.
inline bool is_knight_move(const Vertex& a, const Vertex& b) {
  return squared_distance(a, b) == knight_squared_length;
}

/// An ordered pair of cells with its derived lengths.
struct Move {
  Vertex from;
  Vertex to;
  std::int64_t squared_length = 0;
  std::int64_t taxicab_length = 0;

  static Move between(Vertex a, Vertex b) {
    Move m{std::move(a), std::move(b), 0, 0};
    m.squared_length = squared_distance(m.from, m.to);
    m.taxicab_length = taxicab_distance(m.from, m.to);
    return m;
  }

  bool is_knight_move() const noexcept { return squared_length == knight_squared_length; }
};

/// Every coordinate offset of squared length 5 in `dimension` axes,
/// in lexicographic order.
inline std::vector<std::vector<int>> knight_offsets(std::size_t dimension) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(dimension, 0);
  // budget = remaining squared length
  auto recurse = [&](auto&& self, std::size_t axis, int budget) -> void {
    if (axis == dimension) {
      if (budget == 0) out.push_back(current);
      return;
    }
    for (int d = -2; d <= 2; ++d) {
      if (d * d > budget) continue;
      current[axis] = d;
      self(self, axis + 1, budget - d * d);
    }
    current[axis] = 0;
  };
  recurse(recurse, 0, static_cast<int>(knight_squared_length));
  return out;
}

/// A box n_1 x ... x n_k with optional removed cells (holes).
///
/// Cells are numbered in mixed radix with the first axis most significant,
/// so cell order equals lexicographic coordinate order.
class Board {
 public:
  /// Largest box this library will index.
  static constexpr std::uint64_t max_cells = std::uint64_t{1} << 30;

  explicit Board(std::vector<int> sides, std::vector<Vertex> holes = {}) : sides_(std::move(sides)) {
    if (sides_.empty()) throw std::domain_error("board needs at least one axis");
    cells_ = 1;
    for (int s : sides_) {
      if (s < 1) throw std::domain_error("board side must be positive, got " + std::to_string(s));
      if (cells_ > max_cells / static_cast<std::uint64_t>(s)) {
        throw std::domain_error("board too large to index");
      }
      cells_ *= static_cast<std::uint64_t>(s);
    }
    for (const auto& h : holes) {
      if (!in_box(h)) throw std::domain_error("hole " + h.to_string() + " lies outside the board");
      hole_cells_.push_back(encode(h));
    }
    std::sort(hole_cells_.begin(), hole_cells_.end());
    if (std::adjacent_find(hole_cells_.begin(), hole_cells_.end()) != hole_cells_.end()) {
      throw std::domain_error("duplicate hole");
    }
  }

  /// C(n, k): the uniform board {0..n-1}^k.
  static Board cube(int side, std::size_t dimension, std::vector<Vertex> holes = {}) {
    return Board(std::vector<int>(dimension, side), std::move(holes));
  }

  std::size_t dimension() const noexcept { return sides_.size(); }
  std::span<const int> sides() const noexcept { return sides_; }
  std::uint64_t cell_count() const noexcept { return cells_; }
  std::uint64_t vertex_count() const noexcept { return cells_ - hole_cells_.size(); }
  std::size_t hole_count() const noexcept { return hole_cells_.size(); }

  /// Holes in lexicographic order.
  std::vector<Vertex> holes() const {
    std::vector<Vertex> out;
    out.reserve(hole_cells_.size());
    for (auto c : hole_cells_) out.push_back(decode(c));
    return out;
  }

  bool is_uniform() const noexcept {
    return std::adjacent_find(sides_.begin(), sides_.end(), std::not_equal_to<>()) == sides_.end();
  }

  bool in_box(const Vertex& v) const noexcept {
    if (v.dimension() != sides_.size()) return false;
    for (std::size_t j = 0; j < sides_.size(); ++j) {
      if (v[j] < 0 || v[j] >= sides_[j]) return false;
    }
    return true;
  }

  bool is_hole_cell(std::uint64_t cell) const noexcept {
    return std::binary_search(hole_cells_.begin(), hole_cells_.end(), cell);
  }

  bool is_hole(const Vertex& v) const { return in_box(v) && is_hole_cell(encode(v)); }

  /// In the box and not a hole.
  bool contains(const Vertex& v) const { return in_box(v) && !is_hole_cell(encode(v)); }

  /// Throws std::domain_error unless `v` is a usable vertex of this board.
  void require_vertex(const Vertex& v) const {
    if (v.dimension() != dimension()) {
      throw std::domain_error("vertex " + v.to_string() + " has dimension " + std::to_string(v.dimension()) +
                              ", board has " + std::to_string(dimension()));
    }
    if (!in_box(v)) throw std::domain_error("vertex " + v.to_string() + " lies outside the board");
    if (is_hole(v)) throw std::domain_error("vertex " + v.to_string() + " is a hole");
  }

  /// Mixed-radix cell index; `v` must be in the box.
  std::uint64_t encode(const Vertex& v) const noexcept {
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < sides_.size(); ++j) {
      index = index * static_cast<std::uint64_t>(sides_[j]) + static_cast<std::uint64_t>(v[j]);
    }
    return index;
  }

  Vertex decode(std::uint64_t cell) const {
    std::vector<int> coords(sides_.size());
    for (std::size_t j = sides_.size(); j-- > 0;) {
      coords[j] = static_cast<int>(cell % static_cast<std::uint64_t>(sides_[j]));
      cell /= static_cast<std::uint64_t>(sides_[j]);
    }
    return Vertex(std::move(coords));
  }

  /// Non-hole vertices in lexicographic order.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(vertex_count()));
    for (std::uint64_t c = 0; c < cells_; ++c) {
      if (!is_hole_cell(c)) out.push_back(decode(c));
    }
    return out;
  }

  friend bool operator==(const Board& a, const Board& b) {
    return a.sides_ == b.sides_ && a.hole_cells_ == b.hole_cells_;
  }

 private:
  std::vector<int> sides_;
  std::vector<std::uint64_t> hole_cells_;
  std::uint64_t cells_ = 0;
};

inline Board make_board(std::vector<int> sides, std::vector<Vertex> holes = {}) {
  return Board(std::move(sides), std::move(holes));
}

/// `n1 x n2 x ... x nk`
inline std::string format_sides(std::span<const int> sides) {
  std::string out;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (i) out += " x ";
    out += std::to_string(sides[i]);
  }
  return out;
}

inline std::vector<int> parse_sides(std::string_view text, std::size_t line = 0) {
  std::vector<int> sides;
  std::size_t pos = 0;
  while (true) {
    const auto sep = text.find('x', pos);
    const auto token = detail::trim(text.substr(pos, sep - pos));
    if (token.empty()) throw ParseError(line, "empty side in board header");
    sides.push_back(detail::parse_int(token, line));
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return sides;
}

/// Board description: a header line `n1 x ... x nk`, then `hole: c1,...,ck`
/// lines.
inline std::string format_board_description(const Board& board) {
  std::string out = format_sides(board.sides()) + "\n";
  for (const auto& h : board.holes()) out += "hole: " + h.to_string() + "\n";
  return out;
}

inline Board parse_board_description(std::string_view text) {
  std::optional<std::vector<int>> sides;
  std::vector<Vertex> holes;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!sides) {
      sides = parse_sides(line, line_no);
    } else if (line.starts_with("hole:")) {
      holes.push_back(parse_vertex(line.substr(5), line_no));
      if (holes.back().dimension() != sides->size()) {
        throw ParseError(line_no, "hole has " + std::to_string(holes.back().dimension()) + " coordinates, expected " +
                                      std::to_string(sides->size()));
      }
    } else {
      throw ParseError(line_no, "expected 'hole: ...'");
    }
  }
  if (!sides) throw ParseError(0, "missing board header");
  try {
    return Board(std::move(*sides), std::move(holes));
  } catch (const std::domain_error& e) {
    throw ParseError(0, e.what());
  }
}

/// Knight neighbours of `v`, lexicographically ordered. Throws
/// std::domain_error if `v` is not a vertex of the board.
inline std::vector<Vertex> neighbors(const Board& board, const Vertex& v) {
  board.require_vertex(v);
  std::vector<Vertex> out;
  for (const auto& offset : knight_offsets(board.dimension())) {
    std::vector<int> c(v.begin(), v.end());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += offset[j];
    Vertex w(std::move(c));
    if (board.contains(w)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Compressed adjacency of a board's knight graph. Nodes are the non-hole
/// vertices numbered in lexicographic order, so neighbour lists sorted by
/// node id are also lexicographic.
class KnightGraph {
 public:
  using Node = std::uint32_t;

  explicit KnightGraph(const Board& board) : board_(board) {
    const auto n = board.vertex_count();
    if (n > std::numeric_limits<Node>::max() / 2) throw std::domain_error("board too large for graph search");
    vertices_ = board.vertices();
    cell_to_node_.assign(static_cast<std::size_t>(board.cell_count()), no_node);
    for (Node i = 0; i < vertices_.size(); ++i) cell_to_node_[board.encode(vertices_[i])] = i;

    const auto offsets = knight_offsets(board.dimension());
    offsets_.reserve(vertices_.size() + 1);
    offsets_.push_back(0);
    std::vector<int> c(board.dimension());
    for (const auto& v : vertices_) {
      const auto first = adjacency_.size();
      for (const auto& off : offsets) {
        bool inside = true;
        for (std::size_t j = 0; j < c.size(); ++j) {
          c[j] = v[j] + off[j];
          if (c[j] < 0 || c[j] >= board.sides()[j]) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        std::uint64_t cell = 0;
        for (std::size_t j = 0; j < c.size(); ++j) cell = cell * static_cast<std::uint64_t>(board.sides()[j]) + c[j];
        const Node w = cell_to_node_[cell];
        if (w != no_node) adjacency_.push_back(w);
      }
      std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(first), adjacency_.end());
      offsets_.push_back(adjacency_.size());
    }
  }

  const Board& board() const noexcept { return board_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  const Vertex& vertex(Node n) const { return vertices_[n]; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  std::span<const Node> neighbors(Node n) const {
    return std::span<const Node>(adjacency_).subspan(offsets_[n], offsets_[n + 1] - offsets_[n]);
  }
  std::size_t degree(Node n) const { return offsets_[n + 1] - offsets_[n]; }

  bool adjacent(Node a, Node b) const {
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Throws std::domain_error unless `v` is a vertex of the board.
  Node node_of(const Vertex& v) const {
    board_.require_vertex(v);
    return cell_to_node_[board_.encode(v)];
  }

  /// Component id per node, ids assigned in order of first node.
  std::vector<std::uint32_t> components() const {
    std::vector<std::uint32_t> comp(size(), std::numeric_limits<std::uint32_t>::max());
    std::uint32_t next = 0;
    std::vector<Node> queue;
    for (Node s = 0; s < size(); ++s) {
      if (comp[s] != std::numeric_limits<std::uint32_t>::max()) continue;
      comp[s] = next;
      queue.assign(1, s);
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (Node w : neighbors(queue[h])) {
          if (comp[w] == std::numeric_limits<std::uint32_t>::max()) {
            comp[w] = next;
            queue.push_back(w);
          }
        }
      }
      ++next;
    }
    return comp;
  }

  /// Breadth-first jump counts from `source`; unreachable nodes get nullopt.
  std::vector<std::optional<std::uint32_t>> distances_from(Node source) const {
    std::vector<std::optional<std::uint32_t>> dist(size());
    dist[source] = 0;
    std::vector<Node> queue{source};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Node u = queue[h];
      for (Node w : neighbors(u)) {
        if (!dist[w]) {
          dist[w] = *dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

 private:
  static constexpr Node no_node = std::numeric_limits<Node>::max();

  Board board_;
  std::vector<Vertex> vertices_;
  std::vector<Node> cell_to_node_;
  std::vector<std::size_t> offsets_;
  std::vector<Node> adjacency_;
};

/// degree -> number of vertices with that degree
inline std::map<std::size_t, std::size_t> degree_histogram(const KnightGraph& graph) {
  std::map<std::size_t, std::size_t> hist;
  for (KnightGraph::Node n = 0; n < graph.size(); ++n) ++hist[graph.degree(n)];
  return hist;
}

inline std::map<std::size_t, std::size_t> degree_histogram(const Board& board) {
  return degree_histogram(KnightGraph(board));
}

/// An empty board is reported as not connected.
inline bool is_connected(const KnightGraph& graph) {
  if (graph.size() == 0) return false;
  const auto comp = graph.components();
  return std::all_of(comp.begin(), comp.end(), [](auto c) { return c == 0; });
}

inline bool is_connected(const Board& board) { return is_connected(KnightGraph(board)); }

/// Minimum number of knight jumps from `a` to `b`; nullopt if unreachable.
inline std::optional<std::uint32_t> knight_distance(const KnightGraph& graph, const Vertex& a, const Vertex& b) {
  const auto source = graph.node_of(a);
  const auto target = graph.node_of(b);
  if (source == target) return 0;
  return graph.distances_from(source)[target];
}

inline std::optional<std::uint32_t> knight_distance(const Board& board, const Vertex& a, const Vertex& b) {
  board.require_vertex(a);
  board.require_vertex(b);
  return knight_distance(KnightGraph(board), a, b);
}

}  // namespace eknight

#endif  // EKNIGHT_BOARD_HPP
