#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "eknight/corpus.hpp"
#include "eknight/feasibility.hpp"

using namespace eknight;
using corpus::Id;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Corpus, EveryEntryVerifies) {
  for (const auto& d : corpus::descriptors) {
    const auto c = corpus::check(d.id);
    const auto& r = c.as_corrected ? *c.as_corrected : c.as_printed;
    EXPECT_TRUE(c.ok()) << d.name << ": " << (r.first_violation ? r.first_violation->description : "");
    EXPECT_EQ(c.as_printed.valid, !d.misprint) << d.name;
  }
}

TEST(Corpus, EmbeddedDataMatchesFiles) {
  for (const auto& d : corpus::descriptors) {
    EXPECT_EQ(read(std::string(EKNIGHT_CORPUS_DIR) + "/" + std::string(d.file_name)), d.text) << d.name;
  }
}

TEST(Corpus, VertexCounts) {
  EXPECT_EQ(corpus::get(Id::po_3_5).tour.vertices.size(), 243u);
  EXPECT_EQ(corpus::get(Id::pc_3_2_hole).tour.vertices.size(), 8u);
  EXPECT_EQ(corpus::get(Id::pbar_3_3_two_holes).tour.vertices.size(), 25u);
  EXPECT_EQ(corpus::get(Id::pc_3_4_hole).tour.vertices.size(), 80u);
  EXPECT_EQ(corpus::get(Id::pc_2_6).tour.vertices.size(), 64u);
  EXPECT_EQ(corpus::get(Id::near_closed_3_5).tour.vertices.size(), 245u);
}

TEST(Corpus, Endpoints) {
  const auto po = corpus::get("PO_3_5").tour;
  EXPECT_EQ(po.vertices.front(), (Vertex{1, 0, 2, 0, 1}));
  EXPECT_EQ(po.vertices.back(), (Vertex{1, 2, 2, 0, 1}));

  const auto pc = corpus::get("pc_2_6.tour").tour;
  EXPECT_EQ(pc.vertices.front(), (Vertex{0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(pc.vertices.back(), (Vertex{0, 1, 1, 1, 1, 1}));

  const auto pc34 = corpus::get(Id::pc_3_4_hole).tour;
  EXPECT_EQ(squared_distance(pc34.vertices.back(), pc34.vertices.front()), 5);
  EXPECT_EQ(pc34.vertices.back(), (Vertex{0, 2, 0, 1}));
  EXPECT_EQ(pc34.vertices.front(), (Vertex{0, 0, 0, 2}));

  const auto pc32 = corpus::get(Id::pc_3_2_hole).tour;
  EXPECT_TRUE(is_knight_move(pc32.vertices.back(), pc32.vertices.front()));

  EXPECT_THROW(corpus::get("PX_9_9"), std::out_of_range);
}

TEST(Corpus, OpenTourDiagonalLinks) {
  const auto po = corpus::get(Id::po_3_5).tour;
  std::vector<std::size_t> diagonal;
  for (std::size_t i = 1; i < po.vertices.size(); ++i) {
    if (classify_move(po.vertices[i - 1], po.vertices[i]) == MoveClass::diagonal5) diagonal.push_back(i);
  }
  // V82 -> V83 -> V84 with V0 the first vertex
  EXPECT_EQ(diagonal, (std::vector<std::size_t>{83, 84}));
  EXPECT_EQ(po.vertices[83], (Vertex{1, 1, 1, 1, 1}));
}

TEST(Corpus, ChainOnHoledThreeCube) {
  const auto e = corpus::get(Id::pbar_3_3_two_holes);
  EXPECT_EQ(e.tour.kind, TourKind::path);
  EXPECT_EQ(e.tour.board, Board::cube(3, 3, {Vertex{1, 1, 1}}));
  EXPECT_EQ(e.tour.vertices[15], (Vertex{2, 0, 0}));
  const auto& vs = e.tour.vertices;
  EXPECT_EQ(std::find(vs.begin(), vs.end(), Vertex{2, 0, 1}), vs.end());
  EXPECT_EQ(std::set<Vertex>(vs.begin(), vs.end()).size(), 25u);
  EXPECT_FALSE(verify(e.tour.board, vs, TourKind::open).valid);

  // As printed, both links at (2,0,0) are illegal.
  const auto printed = verify(e.tour, {.collect_all = true});
  ASSERT_EQ(printed.violations.size(), 2u);
  EXPECT_EQ(printed.violations[0].index, 15u);
  EXPECT_EQ(printed.violations[1].index, 16u);
  EXPECT_EQ(squared_distance(vs[14], vs[15]), 6);
  EXPECT_EQ(squared_distance(vs[15], vs[16]), 8);

  // Read as (2,0,1) it is an open tour of C(3,3) minus both labelled cells.
  const auto fixed = corpus::corrected(Id::pbar_3_3_two_holes).tour;
  EXPECT_EQ(fixed.vertices[15], (Vertex{2, 0, 1}));
  EXPECT_TRUE(verify(fixed).valid);
  EXPECT_TRUE(verify(Board::cube(3, 3, {Vertex{1, 1, 1}, Vertex{2, 0, 0}}), fixed.vertices, TourKind::open).valid);
  EXPECT_EQ(corpus::corrected(Id::po_3_5).tour, corpus::get(Id::po_3_5).tour);
}

TEST(Corpus, NearClosedExtension) {
  const auto ext = corpus::near_closed_extension();
  EXPECT_EQ(ext.tour, corpus::get(Id::near_closed_3_5).tour);
  const auto& vs = ext.tour.vertices;
  ASSERT_EQ(vs.size(), 245u);
  EXPECT_EQ(vs.size() - 1, 244u);  // 3^5 + 1 jumps
  EXPECT_EQ(vs.front(), vs.back());
  EXPECT_EQ(squared_distance(vs[242], vs[243]), 5);
  EXPECT_EQ(squared_distance(vs[243], vs[244]), 5);
  std::map<Vertex, int> mult;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) ++mult[vs[i]];
  std::vector<Vertex> doubled;
  for (const auto& [v, m] : mult)
    if (m == 2) doubled.push_back(v);
  EXPECT_EQ(doubled, (std::vector<Vertex>{Vertex{1, 1, 0, 0, 1}}));
  EXPECT_EQ(mult.size(), 243u);
}
