#ifndef EKNIGHT_SEARCH_HPP
#define EKNIGHT_SEARCH_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eknight/board.hpp"
#include "eknight/feasibility.hpp"
#include "eknight/tour.hpp"

// Depth-first tour search with an explicit stack. Every returned tour has
// been passed through verify().

namespace eknight {

enum class SearchStatus { found, exhausted_none, budget_exceeded };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted_none: return "exhausted_none";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

struct SearchConfig {
  TourKind target = TourKind::open;  // open or closed
  std::optional<Vertex> start;
  bool use_warnsdorff = true;
  std::optional<std::uint64_t> node_budget;
  /// Same inputs give the same tour regardless of parallel_width.
  bool deterministic = true;
  /// Worker threads for the root split; 0 runs on the calling thread.
  unsigned parallel_width = 0;
  /// Run the feasibility checks first and skip the search when they fail.
  bool precheck = true;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted_none;
  std::optional<Tour> tour;
  std::uint64_t nodes_expanded = 0;
  std::size_t max_depth_reached = 0;
  /// Feasibility reasons when the pre-check decided the outcome.
  std::vector<std::string> precheck_reasons;
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

 private:
  std::vector<std::uint64_t> words_;
};

enum class Goal { open, closed, longest };

struct Budget {
  std::atomic<std::uint64_t> used{0};
  std::optional<std::uint64_t> limit;

  /// False once the limit is hit.
  bool take() noexcept {
    const auto n = used.fetch_add(1, std::memory_order_relaxed) + 1;
    return !limit || n <= *limit;
  }
  std::uint64_t expanded() const noexcept {
    const auto n = used.load(std::memory_order_relaxed);
    return limit ? std::min(n, *limit) : n;
  }
};

/// A root of the search: a start vertex, optionally with the first move fixed.
struct RootTask {
  KnightGraph::Node start;
  std::optional<KnightGraph::Node> second;
};

enum class RunResult { found, exhausted, budget, cancelled };

/// Backtracking state for one worker. Owns its visited set and path; shares
/// only the immutable graph and the budget counter.
class PathDfs {
 public:
  using Node = KnightGraph::Node;

  PathDfs(const KnightGraph& graph, Goal goal, bool warnsdorff, Budget& budget)
      : graph_(graph),
        goal_(goal),
        warnsdorff_(warnsdorff),
        budget_(budget),
        visited_(graph.size()),
        free_degree_(graph.size()),
        dark_(graph.size()) {
    for (Node n = 0; n < graph.size(); ++n) {
      free_degree_[n] = static_cast<std::uint32_t>(graph.degree(n));
      dark_[n] = color(graph.vertex(n)) == Color::dark;
      ++(dark_[n] ? unvisited_dark_ : unvisited_light_);
      if (free_degree_[n] < 2) ++low_[free_degree_[n]];
    }
  }

  const std::vector<Node>& path() const noexcept { return path_; }
  const std::vector<Node>& best() const noexcept { return best_; }
  std::size_t max_depth() const noexcept { return max_depth_; }

  /// Stops a longest-path run once a path of this many vertices is found.
  void set_length_bound(std::size_t bound) noexcept { length_bound_ = bound; }

  /// Explores every path from the task's root. `cancelled` is polled
  /// periodically.
  template <typename Cancelled>
  RunResult run(const RootTask& task, Cancelled&& cancelled) {
    unwind();
    if (!budget_.take()) return RunResult::budget;
    push(task.start);
    std::size_t base = 1;
    auto verdict = evaluate();
    if (verdict == Eval::complete) return RunResult::found;
    if (task.second) {
      if (verdict == Eval::prune || !graph_.adjacent(task.start, *task.second)) {
        unwind();
        return RunResult::exhausted;
      }
      if (!budget_.take()) {
        unwind();
        return RunResult::budget;
      }
      push(*task.second);
      base = 2;
      verdict = evaluate();
      if (verdict == Eval::complete) return RunResult::found;
    }
    if (verdict == Eval::prune) {
      unwind();
      return RunResult::exhausted;
    }
    expand();

    std::uint32_t poll = 0;
    while (!frames_.empty()) {
      if ((++poll & 1023u) == 0 && cancelled()) {
        unwind();
        return RunResult::cancelled;
      }
      auto& frame = frames_.back();
      if (frame.next == frame.end) {
        candidates_.resize(frame.begin);
        frames_.pop_back();
        if (path_.size() > base) pop();
        continue;
      }
      const Node w = candidates_[frame.next++];
      if (!budget_.take()) {
        unwind();
        return RunResult::budget;
      }
      push(w);
      switch (evaluate()) {
        case Eval::complete: return RunResult::found;
        case Eval::prune: pop(); break;
        case Eval::extend: expand(); break;
      }
      if (goal_ == Goal::longest && best_.size() >= length_bound_) {
        unwind();
        return RunResult::found;
      }
    }
    unwind();
    return RunResult::exhausted;
  }

 private:
  enum class Eval { complete, prune, extend };

  struct Frame {
    std::size_t begin;
    std::size_t end;
    std::size_t next;
  };

  // low_[d]: unvisited vertices with exactly d unvisited neighbours, d < 2.
  void track(Node w, int delta) {
    if (free_degree_[w] < 2) low_[free_degree_[w]] += static_cast<std::size_t>(delta);
  }

  void push(Node v) {
    track(v, -1);
    visited_.set(v);
    for (Node w : graph_.neighbors(v)) {
      if (visited_.test(w)) {
        --free_degree_[w];
        continue;
      }
      track(w, -1);
      --free_degree_[w];
      track(w, +1);
    }
    --(dark_[v] ? unvisited_dark_ : unvisited_light_);
    path_.push_back(v);
    max_depth_ = std::max(max_depth_, path_.size());
  }

  void pop() {
    const Node v = path_.back();
    path_.pop_back();
    visited_.reset(v);
    for (Node w : graph_.neighbors(v)) {
      if (visited_.test(w)) {
        ++free_degree_[w];
        continue;
      }
      track(w, -1);
      ++free_degree_[w];
      track(w, +1);
    }
    track(v, +1);
    ++(dark_[v] ? unvisited_dark_ : unvisited_light_);
  }

  void unwind() {
    while (!path_.empty()) pop();
    frames_.clear();
    candidates_.clear();
  }

  Eval evaluate() {
    const Node v = path_.back();
    const std::size_t remaining = unvisited_dark_ + unvisited_light_;
    // Alternating colors: the rest of the path starts with the opposite color.
    const std::size_t opposite = dark_[v] ? unvisited_light_ : unvisited_dark_;
    const std::size_t same = dark_[v] ? unvisited_dark_ : unvisited_light_;

    if (goal_ == Goal::longest) {
      if (path_.size() > best_.size()) best_ = path_;
      const std::size_t reach = opposite > same ? 2 * same + 1 : 2 * opposite;
      if (remaining == 0 || path_.size() + reach <= best_.size()) return Eval::prune;
      return Eval::extend;
    }

    if (remaining == 0) {
      if (goal_ == Goal::open) return Eval::complete;
      const bool closes = path_.size() >= 3 && graph_.adjacent(v, path_.front()) && path_[1] < v;
      return closes ? Eval::complete : Eval::prune;
    }
    if (opposite != same && opposite != same + 1) return Eval::prune;

    // An unvisited neighbour with no other unvisited neighbour must be the
    // next and final vertex.
    std::size_t stranded = 0, thin = 0;
    for (Node w : graph_.neighbors(v)) {
      if (visited_.test(w)) continue;
      if (free_degree_[w] == 0) ++stranded;
      if (free_degree_[w] == 1) ++thin;
    }
    if (stranded > 1 || (stranded == 1 && remaining > 1)) return Eval::prune;
    // Away from v: degree 0 is unreachable, degree 1 can only end the path.
    if (low_[0] > stranded) return Eval::prune;
    if (low_[1] - thin + stranded > 1) return Eval::prune;

    if (goal_ == Goal::closed && path_.size() >= 2) {
      // Canonical orientation: the closing vertex must exceed the second one.
      const Node start = path_.front();
      const Node second = path_[1];
      bool can_close = false;
      for (Node u : graph_.neighbors(start)) {
        if (u > second && !visited_.test(u)) {
          can_close = true;
          break;
        }
      }
      if (!can_close) return Eval::prune;
    }
    return Eval::extend;
  }

  void expand() {
    const Node v = path_.back();
    const std::size_t begin = candidates_.size();
    for (Node w : graph_.neighbors(v)) {
      if (!visited_.test(w)) candidates_.push_back(w);
    }
    if (warnsdorff_) {
      // Ascending onward degree; neighbour lists are already in node order,
      // so a stable sort keeps ties lexicographic.
      std::stable_sort(candidates_.begin() + static_cast<std::ptrdiff_t>(begin), candidates_.end(),
                       [this](Node a, Node b) { return free_degree_[a] < free_degree_[b]; });
    }
    frames_.push_back({begin, candidates_.size(), begin});
  }

  const KnightGraph& graph_;
  Goal goal_;
  bool warnsdorff_;
  Budget& budget_;
  Bitset visited_;
  std::vector<std::uint32_t> free_degree_;
  std::vector<bool> dark_;
  std::array<std::size_t, 2> low_{};
  std::size_t unvisited_dark_ = 0;
  std::size_t unvisited_light_ = 0;
  std::vector<Node> path_;
  std::vector<Node> best_;
  std::vector<Frame> frames_;
  std::vector<Node> candidates_;
  std::size_t max_depth_ = 0;
  std::size_t length_bound_ = std::numeric_limits<std::size_t>::max();
};

/// First moves from `start` in the order the search would try them.
inline std::vector<KnightGraph::Node> ordered_first_moves(const KnightGraph& graph, KnightGraph::Node start,
                                                          bool warnsdorff) {
  std::vector<KnightGraph::Node> out(graph.neighbors(start).begin(), graph.neighbors(start).end());
  if (warnsdorff) {
    // onward degree once `start` is visited
    std::stable_sort(out.begin(), out.end(),
                     [&](auto a, auto b) { return graph.degree(a) < graph.degree(b); });
  }
  return out;
}

inline std::vector<KnightGraph::Node> start_nodes(const KnightGraph& graph, const SearchConfig& config) {
  using Node = KnightGraph::Node;
  if (config.start) return {graph.node_of(*config.start)};
  if (graph.size() == 0) return {};
  if (config.target == TourKind::closed) return {0};
  std::size_t dark = 0;
  for (Node n = 0; n < graph.size(); ++n) dark += color(graph.vertex(n)) == Color::dark;
  const std::size_t light = graph.size() - dark;
  std::vector<Node> out;
  for (Node n = 0; n < graph.size(); ++n) {
    const bool is_dark = color(graph.vertex(n)) == Color::dark;
    // With one extra vertex of a color, both endpoints have that color.
    if (dark == light + 1 && !is_dark) continue;
    if (light == dark + 1 && is_dark) continue;
    out.push_back(n);
  }
  return out;
}

inline Tour to_tour(const KnightGraph& graph, TourKind kind, const std::vector<KnightGraph::Node>& nodes) {
  Tour t{graph.board(), kind, {}};
  t.vertices.reserve(nodes.size());
  for (auto n : nodes) t.vertices.push_back(graph.vertex(n));
  return t;
}

inline SearchOutcome finish_found(const KnightGraph& graph, TourKind kind, const std::vector<KnightGraph::Node>& nodes,
                                  SearchOutcome out) {
  out.status = SearchStatus::found;
  out.tour = to_tour(graph, kind, nodes);
  const auto report = verify(*out.tour);
  if (!report.valid) {
    throw std::logic_error("search produced an invalid tour: " + report.first_violation->description);
  }
  return out;
}

}  // namespace detail

/// Searches for an open or closed tour. Closed searches fix the start
/// (default: the lexicographically smallest vertex) and only accept the
/// orientation whose last vertex exceeds the second.
inline SearchOutcome find_tour(const KnightGraph& graph, const SearchConfig& config) {
  using detail::RootTask;
  using detail::RunResult;
  using Node = KnightGraph::Node;

  if (config.target != TourKind::open && config.target != TourKind::closed) {
    throw std::domain_error("search target must be open or closed");
  }
  if (config.start) graph.node_of(*config.start);  // throws on holes and outside cells

  SearchOutcome out;
  if (config.precheck) {
    const auto verdict =
        config.target == TourKind::closed ? closed_tour_necessary(graph) : open_tour_necessary(graph);
    if (!verdict.feasible) {
      out.status = SearchStatus::exhausted_none;
      for (const auto& r : verdict.reasons) out.precheck_reasons.push_back(r.message);
      return out;
    }
  }
  if (graph.size() == 0) return out;

  const auto goal = config.target == TourKind::closed ? detail::Goal::closed : detail::Goal::open;
  std::vector<RootTask> tasks;
  for (Node s : detail::start_nodes(graph, config)) {
    if (graph.size() == 1 || config.parallel_width == 0) {
      tasks.push_back({s, std::nullopt});
      continue;
    }
    for (Node w : detail::ordered_first_moves(graph, s, config.use_warnsdorff)) tasks.push_back({s, w});
  }

  detail::Budget budget;
  budget.limit = config.node_budget;

  if (config.parallel_width == 0) {
    detail::PathDfs dfs(graph, goal, config.use_warnsdorff, budget);
    for (const auto& task : tasks) {
      const auto r = dfs.run(task, [] { return false; });
      out.nodes_expanded = budget.expanded();
      out.max_depth_reached = dfs.max_depth();
      if (r == RunResult::found) return detail::finish_found(graph, config.target, dfs.path(), std::move(out));
      if (r == RunResult::budget) {
        out.status = SearchStatus::budget_exceeded;
        return out;
      }
    }
    out.status = SearchStatus::exhausted_none;
    return out;
  }

  // Root split. Deterministic mode keeps the result of the earliest task in
  // sequential order that found a tour, so the answer matches width 0.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<RunResult> results(tasks.size(), RunResult::cancelled);
  std::vector<std::vector<Node>> paths(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> earliest_found{none};
  std::atomic<std::size_t> max_depth{0};

  auto worker = [&] {
    detail::PathDfs dfs(graph, goal, config.use_warnsdorff, budget);
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      auto stop = [&] {
        const auto f = earliest_found.load();
        return config.deterministic ? f < i : f != none;
      };
      if (stop()) continue;
      const auto r = dfs.run(tasks[i], stop);
      results[i] = r;
      if (r == RunResult::found) {
        paths[i] = dfs.path();
        auto cur = earliest_found.load();
        while (i < cur && !earliest_found.compare_exchange_weak(cur, i)) {
        }
      }
    }
    auto d = max_depth.load();
    while (dfs.max_depth() > d && !max_depth.compare_exchange_weak(d, dfs.max_depth())) {
    }
  };
  std::vector<std::jthread> pool;
  const unsigned width = std::min<unsigned>(config.parallel_width, static_cast<unsigned>(tasks.size()));
  for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
  pool.clear();  // join

  out.nodes_expanded = budget.expanded();
  out.max_depth_reached = max_depth.load();
  if (!config.deterministic) {
    // Whichever worker finished first; a found tour outranks a budget cut.
    const auto f = earliest_found.load();
    if (f != none) return detail::finish_found(graph, config.target, paths[f], std::move(out));
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (results[i] == RunResult::found) return detail::finish_found(graph, config.target, paths[i], std::move(out));
    if (results[i] == RunResult::budget) {
      out.status = SearchStatus::budget_exceeded;
      return out;
    }
  }
  out.status = SearchStatus::exhausted_none;
  return out;
}

inline SearchOutcome find_tour(const Board& board, const SearchConfig& config) {
  if (config.start) board.require_vertex(*config.start);
  return find_tour(KnightGraph(board), config);
}

/// Exhaustive search without the feasibility shortcut: every start for open
/// targets (restricted to the majority color when the counts differ by one),
/// one start for closed ones.
inline SearchOutcome prove_nonexistence(const Board& board, TourKind target,
                                        std::optional<std::uint64_t> node_budget = std::nullopt) {
  SearchConfig config;
  config.target = target;
  config.precheck = false;
  config.node_budget = node_budget;
  return find_tour(board, config);
}

/// Maximum number of vertices on a simple path, by exhaustive search. The
/// search stops early once a path meets the color-alternation bound of the
/// largest component. Status is found unless the budget ran out, in which
/// case the best path so far is still returned.
inline SearchOutcome longest_path(const Board& board, std::optional<std::uint64_t> node_budget = std::nullopt) {
  using Node = KnightGraph::Node;
  const KnightGraph graph(board);
  SearchOutcome out;
  if (graph.size() == 0) {
    out.status = SearchStatus::exhausted_none;
    return out;
  }

  const auto comp = graph.components();
  const auto comp_count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::size_t> dark(comp_count, 0), light(comp_count, 0);
  for (Node n = 0; n < graph.size(); ++n) ++(color(graph.vertex(n)) == Color::dark ? dark : light)[comp[n]];
  std::size_t bound = 0;
  for (std::size_t c = 0; c < comp_count; ++c) {
    const auto lo = std::min(dark[c], light[c]);
    bound = std::max(bound, dark[c] == light[c] ? 2 * lo : 2 * lo + 1);
  }

  detail::Budget budget;
  budget.limit = node_budget;
  detail::PathDfs dfs(graph, detail::Goal::longest, true, budget);
  dfs.set_length_bound(bound);
  bool cut = false;
  for (Node s = 0; s < graph.size() && dfs.best().size() < bound; ++s) {
    if (dfs.run({s, std::nullopt}, [] { return false; }) == detail::RunResult::budget) {
      cut = true;
      break;
    }
  }
  out.nodes_expanded = budget.expanded();
  out.max_depth_reached = dfs.best().size();
  if (!dfs.best().empty()) {
    out.tour = detail::to_tour(graph, TourKind::path, dfs.best());
    if (!verify(*out.tour).valid) throw std::logic_error("longest path search produced an invalid path");
  }
  out.status = cut ? SearchStatus::budget_exceeded : SearchStatus::found;
  return out;
}

}  // namespace eknight

#endif  // EKNIGHT_SEARCH_HPP
