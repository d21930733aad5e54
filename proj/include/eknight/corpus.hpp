#ifndef EKNIGHT_CORPUS_HPP
#define EKNIGHT_CORPUS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eknight/corpus_data.hpp"  // generated from corpus/*.tour at configure time
#include "eknight/tour.hpp"

// Explicit tours from the literature, shipped as tour files under corpus/
// and embedded into the library at build time.

namespace eknight::corpus {

enum class Id {
  po_3_5,
  pc_3_2_hole,
  pbar_3_3_two_holes,
  pc_3_4_hole,
  pc_2_6,
  near_closed_3_5,
};

struct Entry {
  Id id;
  Tour tour;
  std::string_view provenance;
};

// A vertex printed wrong in the published sequence. The file keeps the
// sequence as printed; `corrected` substitutes the replacement.
struct Misprint {
  std::size_t index;
  std::string_view printed;
  std::string_view replacement;
};

struct Descriptor {
  Id id;
  std::string_view name;       // PO_3_5, ...
  std::string_view file_name;  // po_3_5.tour, ...
  std::string_view text;
  std::string_view provenance;
  std::optional<Misprint> misprint{};
};

inline constexpr std::array<Descriptor, 6> descriptors{{
    {Id::po_3_5, "PO_3_5", "po_3_5.tour", data::po_3_5,
     "Open Euclidean tour on C(3,5), 243 vertices; links 82-83 and 83-84 are five-axis diagonals."},
    {Id::pc_3_2_hole, "PC_3_2_HOLE", "pc_3_2_hole.tour", data::pc_3_2_hole,
     "Closed classical tour on C(3,2) minus (1,1); closing link (0,0) -> (2,1)."},
    {Id::pbar_3_3_two_holes, "PBAR_3_3_TWO_HOLES", "pbar_3_3_two_holes.tour", data::pbar_3_3_two_holes,
     "25-vertex chain on C(3,3) minus (1,1,1), published under the label {(1,1,1),(2,0,0)}. As printed it "
     "visits (2,0,0) as its 16th vertex, leaving (2,0,1) unvisited, and both links at (2,0,0) are illegal "
     "(squared lengths 6 and 8). Reading (2,0,1) there gives a legal chain over C(3,3) minus the two labelled "
     "cells.",
     Misprint{15, "2,0,0", "2,0,1"}},
    {Id::pc_3_4_hole, "PC_3_4_HOLE", "pc_3_4_hole.tour", data::pc_3_4_hole,
     "Closed classical tour on C(3,4) minus (1,1,1,1); closing link (0,2,0,1) -> (0,0,0,2)."},
    {Id::pc_2_6, "PC_2_6", "pc_2_6.tour", data::pc_2_6,
     "Closed Euclidean tour on C(2,6); closing link (0,1,1,1,1,1) -> (0,0,0,0,0,0)."},
    {Id::near_closed_3_5, "NEAR_CLOSED_3_5", "near_closed_3_5.tour", data::near_closed_3_5,
     "PO_3_5 extended by (1,1,0,0,1) and back to (1,0,2,0,1): 244 jumps, (1,1,0,0,1) visited twice."},
}};

inline const Descriptor& descriptor(Id id) {
  for (const auto& d : descriptors) {
    if (d.id == id) return d;
  }
  throw std::out_of_range("unknown corpus id");
}

/// Accepts the upper-case id (PO_3_5) or the file name (po_3_5.tour).
inline std::optional<Id> parse_id(std::string_view name) {
  for (const auto& d : descriptors) {
    if (name == d.name || name == d.file_name) return d.id;
  }
  return std::nullopt;
}

inline Entry get(Id id) {
  const auto& d = descriptor(id);
  return Entry{id, parse_tour(d.text), d.provenance};
}

inline Entry get(std::string_view name) {
  const auto id = parse_id(name);
  if (!id) throw std::out_of_range("unknown corpus id '" + std::string(name) + "'");
  return get(*id);
}

/// The entry with its misprint (if any) replaced.
inline Entry corrected(Id id) {
  Entry e = get(id);
  if (const auto& m = descriptor(id).misprint) {
    Vertex& v = e.tour.vertices.at(m->index);
    if (v != parse_vertex(m->printed)) throw std::logic_error("corpus misprint record does not match the data");
    v = parse_vertex(m->replacement);
  }
  return e;
}

struct EntryCheck {
  VerificationReport as_printed;
  std::optional<VerificationReport> as_corrected;  // only for entries with a misprint
  bool ok() const { return as_corrected ? as_corrected->valid : as_printed.valid; }
};

/// Verifies an entry as printed and, when it carries a misprint record, as
/// corrected. A misprinted entry passes when the correction verifies and every
/// printed violation touches the misprinted position.
inline EntryCheck check(Id id) {
  const auto& d = descriptor(id);
  EntryCheck out{verify(get(id).tour, {.collect_all = true}), std::nullopt};
  if (!d.misprint) return out;
  out.as_corrected = verify(corrected(id).tour);
  const std::size_t at = d.misprint->index;
  for (const auto& v : out.as_printed.violations) {
    if (v.check != Check::step || (v.index != at && v.index != at + 1)) out.as_corrected->valid = false;
  }
  return out;
}

/// The open tour on C(3,5) closed up by revisiting (1,1,0,0,1): the last
/// vertex (1,2,2,0,1) jumps to it, and it jumps back to the start.
inline Entry near_closed_extension() {
  Tour walk = get(Id::po_3_5).tour;
  const Vertex start = walk.vertices.front();
  walk.vertices.push_back(Vertex{1, 1, 0, 0, 1});
  walk.vertices.push_back(start);
  walk.kind = TourKind::near_closed;
  return Entry{Id::near_closed_3_5, std::move(walk), descriptor(Id::near_closed_3_5).provenance};
}

}  // namespace eknight::corpus

#endif  // EKNIGHT_CORPUS_HPP
