#ifndef EKNIGHT_CONSTRUCT_HPP
#define EKNIGHT_CONSTRUCT_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eknight/board.hpp"
#include "eknight/corpus.hpp"
#include "eknight/tour.hpp"

// Doubling construction of closed tours on {0,1}^k: copy the tour onto the
// face x_{k+1} = 0, copy it again onto x_{k+1} = 1 with four coordinates
// flipped and the order reversed, and join the two copies. On 0/1
// coordinates the joins differ in the four flipped axes plus the new one,
// so both have squared length 5.

namespace eknight {

/// Four distinct axes whose coordinates are swapped 0 <-> 1.
class FlipMask {
 public:
  FlipMask() = default;
  explicit FlipMask(std::vector<std::size_t> axes) : axes_(std::move(axes)) {
    std::sort(axes_.begin(), axes_.end());
  }

  /// {0,1,2,3}
  static FlipMask lowest() { return FlipMask({0, 1, 2, 3}); }

  const std::vector<std::size_t>& axes() const noexcept { return axes_; }

  /// Throws std::domain_error unless the mask has exactly four distinct axes
  /// below `dimension`.
  void require_valid(std::size_t dimension) const {
    if (axes_.size() != 4) {
      throw std::domain_error("flip mask needs exactly 4 axes, got " + std::to_string(axes_.size()));
    }
    if (std::adjacent_find(axes_.begin(), axes_.end()) != axes_.end()) {
      throw std::domain_error("flip mask axes must be distinct");
    }
    if (axes_.back() >= dimension) {
      throw std::domain_error("flip mask axis " + std::to_string(axes_.back()) + " outside dimension " +
                              std::to_string(dimension));
    }
  }

  Vertex apply(const Vertex& v) const {
    Vertex out = v;
    for (auto a : axes_) out[a] = 1 - out[a];
    return out;
  }

  friend bool operator==(const FlipMask&, const FlipMask&) = default;

 private:
  std::vector<std::size_t> axes_;
};

namespace detail {

inline void require_hypercube(const Board& board) {
  if (board.hole_count() != 0 || !board.is_uniform() || board.sides()[0] != 2) {
    throw std::domain_error("expected a 2 x ... x 2 board without holes");
  }
}

}  // namespace detail

/// Extends a closed tour on C(2,k), k >= 6, to one on C(2,k+1). The input
/// must verify as closed; the output is verified before it is returned.
inline Tour extend_closed_tour(const Tour& base, const std::optional<FlipMask>& mask = std::nullopt) {
  detail::require_hypercube(base.board);
  const std::size_t k = base.board.dimension();
  if (k < 6) throw std::domain_error("base board must have dimension >= 6");
  if (base.kind != TourKind::closed) throw std::domain_error("base tour must be closed");
  const auto base_report = verify(base);
  if (!base_report.valid) {
    throw std::domain_error("base tour is not a closed tour: " + base_report.first_violation->description);
  }
  const FlipMask flips = mask.value_or(FlipMask::lowest());
  flips.require_valid(k);

  Tour out{Board::cube(2, k + 1), TourKind::closed, {}};
  out.vertices.reserve(2 * base.vertices.size());
  for (const auto& v : base.vertices) out.vertices.push_back(v.extended(0));
  for (auto it = base.vertices.rbegin(); it != base.vertices.rend(); ++it) {
    out.vertices.push_back(flips.apply(*it).extended(1));
  }

  const auto report = verify(out);
  if (!report.valid) {
    throw std::logic_error("doubling produced an invalid tour: " + report.first_violation->description);
  }
  return out;
}

/// Closed tour on C(2,k): the embedded 6-cube tour, doubled k - 6 times.
/// `masks[i]` (when present) is used for the step from dimension 6 + i.
inline Tour closed_tour_on_hypercube(std::size_t k, const std::vector<FlipMask>& masks = {}) {
  if (k < 6) {
    throw std::domain_error("no Euclidean knight's tour on C(2," + std::to_string(k) + ") for k < 6; need k >= 6");
  }
  Tour tour = corpus::get(corpus::Id::pc_2_6).tour;
  for (std::size_t dim = 6; dim < k; ++dim) {
    const std::size_t level = dim - 6;
    tour = extend_closed_tour(tour, level < masks.size() ? std::optional<FlipMask>(masks[level]) : std::nullopt);
  }
  return tour;
}

}  // namespace eknight

#endif  // EKNIGHT_CONSTRUCT_HPP
