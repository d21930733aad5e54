#include <gtest/gtest.h>

#include <random>

#include "eknight/feasibility.hpp"
#include "eknight/search.hpp"
#include "oracles.hpp"

using namespace eknight;

TEST(Feasibility, Color) {
  EXPECT_EQ(color(Vertex{1, 0, 2, 0, 1}), Color::dark);
  EXPECT_EQ(color(Vertex{0, 0, 0, 0, 0, 0}), Color::dark);
  EXPECT_EQ(color(Vertex{1, 0, 0, 0, 0}), Color::light);
}

TEST(Feasibility, ColorCounts) {
  EXPECT_EQ(color_counts(Board::cube(3, 5)), (ColorCounts{122, 121}));
  EXPECT_EQ(color_counts(Board::cube(2, 6)), (ColorCounts{32, 32}));
  EXPECT_EQ(color_counts(Board::cube(3, 4, {Vertex{1, 1, 1, 1}})), (ColorCounts{40, 40}));
  for (int n : {3, 5}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto c = color_counts(Board::cube(n, k));
      EXPECT_EQ(c.dark, c.light + 1) << n << "^" << k;
    }
  }
}

TEST(Feasibility, MoveDecompositions) {
  using D = std::vector<std::vector<int>>;
  EXPECT_EQ(move_decompositions(1), D{});
  EXPECT_EQ(move_decompositions(2), (D{{2, 1}}));
  EXPECT_EQ(move_decompositions(4), (D{{2, 1}}));
  EXPECT_EQ(move_decompositions(5), (D{{2, 1}, {1, 1, 1, 1, 1}}));
  EXPECT_EQ(move_decompositions(9), (D{{2, 1}, {1, 1, 1, 1, 1}}));
}

// Every knight move flips color; taxicab length is 3 or 5, and 5 needs k >= 5.
TEST(Feasibility, AlternationAndTaxicabDichotomy) {
  for (const Board& b : {Board::cube(3, 5), Board::cube(2, 6), Board::cube(3, 4)}) {
    const KnightGraph g(b);
    std::size_t edges = 0;
    for (KnightGraph::Node a = 0; a < g.size(); ++a) {
      for (auto w : g.neighbors(a)) {
        ++edges;
        EXPECT_NE(color(g.vertex(a)), color(g.vertex(w)));
        const auto t = taxicab_distance(g.vertex(a), g.vertex(w));
        EXPECT_TRUE(t == 3 || t == 5);
        if (b.dimension() < 5) {
          EXPECT_EQ(t, 3);
        }
      }
    }
    EXPECT_GT(edges, 0u);
  }
}

TEST(Feasibility, ClosedTourNecessary) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto v = closed_tour_necessary(Board::cube(3, k));
    EXPECT_FALSE(v.feasible);
    EXPECT_TRUE(v.has(Violation::odd_vertex_count)) << k;
  }
  const auto c26 = closed_tour_necessary(Board::cube(2, 6));
  EXPECT_TRUE(c26.feasible);
  EXPECT_TRUE(c26.reasons.empty());

  const auto c25 = closed_tour_necessary(Board::cube(2, 5));
  EXPECT_FALSE(c25.feasible);
  EXPECT_TRUE(c25.has(Violation::min_degree_below_two));
  EXPECT_TRUE(c25.has(Violation::disconnected));
  bool mentions_degree = false;
  for (const auto& r : c25.reasons) mentions_degree |= r.message == "min degree 1 < 2";
  EXPECT_TRUE(mentions_degree);

  EXPECT_TRUE(closed_tour_necessary(Board::cube(3, 2, {Vertex{1, 1}})).feasible);
}

TEST(Feasibility, OpenTourNecessary) {
  const auto c35 = open_tour_necessary(Board::cube(3, 5));
  EXPECT_TRUE(c35.feasible);
  ASSERT_EQ(c35.notes.size(), 1u);  // endpoints must be dark

  const auto c34 = open_tour_necessary(Board::cube(3, 4));
  EXPECT_FALSE(c34.feasible);
  EXPECT_TRUE(c34.has(Violation::disconnected));

  const auto c25 = open_tour_necessary(Board::cube(2, 5));
  EXPECT_FALSE(c25.feasible);
  ASSERT_TRUE(c25.has(Violation::too_many_degree_one));
  bool found = false;
  for (const auto& r : c25.reasons) found |= r.message == "32 vertices of degree 1";
  EXPECT_TRUE(found);

  // C(3,3) minus its centre: 14 dark vs 12 light
  const auto holed = open_tour_necessary(Board::cube(3, 3, {Vertex{1, 1, 1}}));
  EXPECT_TRUE(holed.has(Violation::color_imbalance));
}

TEST(Feasibility, ClassicalCondition) {
  EXPECT_FALSE(classical_closed_tour_condition({2, 2, 2, 2, 2, 2}));
  EXPECT_TRUE(classical_closed_tour_condition({2, 3, 4}));
  EXPECT_TRUE(classical_closed_tour_condition({3, 3, 4}));
  EXPECT_FALSE(classical_closed_tour_condition({3, 3, 3}));
  EXPECT_TRUE(classical_closed_tour_condition({4, 3, 2}));  // sorted internally
  EXPECT_THROW(classical_closed_tour_condition({3, 4}), std::domain_error);
  EXPECT_THROW(classical_closed_tour_condition({1, 3, 4}), std::domain_error);
}

// Infeasible verdicts are sound: exhaustive search agrees on small boards.
TEST(Feasibility, InfeasibleVerdictsAreConfirmedBySearch) {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto rb = oracle::random_board(rng, 12);
    std::vector<Vertex> holes;
    for (const auto& h : rb.holes) holes.emplace_back(h);
    const Board board(rb.sides, holes);
    for (auto kind : {TourKind::open, TourKind::closed}) {
      const auto verdict = kind == TourKind::open ? open_tour_necessary(board) : closed_tour_necessary(board);
      if (verdict.feasible) continue;
      ++checked;
      EXPECT_EQ(prove_nonexistence(board, kind).status, SearchStatus::exhausted_none);
    }
  }
  EXPECT_GT(checked, 50);
}
