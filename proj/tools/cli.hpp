#ifndef EKNIGHT_TOOLS_CLI_HPP
#define EKNIGHT_TOOLS_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eknight/eknight.hpp"

namespace eknight::cli {

/// Process exit codes.
enum Exit : int {
  ok = 0,       // valid / feasible / found
  negative = 1, // invalid tour, infeasible board, no tour exists
  usage = 2,    // bad arguments or input, domain errors
  undecided = 3 // search budget ran out
};

using nlohmann::json;

namespace detail {

struct BoardArgs {
  std::vector<int> sides;
  std::vector<std::string> holes;
  std::string board_file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--sides", sides, "Side lengths, e.g. 3,3,3,3,3")->delimiter(',');
    cmd->add_option("--hole", holes, "Removed cell c1,...,ck (repeatable)")->take_all();
    cmd->add_option("--board", board_file, "Board description file");
  }

  bool given() const { return !sides.empty() || !board_file.empty(); }

  Board build() const {
    if (!board_file.empty()) {
      if (!sides.empty() || !holes.empty()) throw ParseError(0, "use either --board or --sides/--hole");
      return parse_board_description(read_file(board_file));
    }
    if (sides.empty()) throw ParseError(0, "a board is required (--sides or --board)");
    std::vector<Vertex> hs;
    for (const auto& h : holes) hs.push_back(parse_vertex(h));
    return Board(sides, std::move(hs));
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

inline json to_json(const Vertex& v) { return json(std::vector<int>(v.begin(), v.end())); }

inline json to_json(const VerificationReport& r) {
  json j;
  j["valid"] = r.valid;
  j["kind"] = to_string(r.kind);
  if (r.first_violation) {
    j["first_violation"] = {{"check", to_string(r.first_violation->check)},
                            {"index", r.first_violation->index},
                            {"description", r.first_violation->description}};
  } else {
    j["first_violation"] = nullptr;
  }
  j["endpoint_squared_distance"] = r.endpoint_squared_distance;
  json counts = json::object();
  for (const auto& [len, n] : r.move_taxicab_counts) counts[std::to_string(len)] = n;
  j["move_taxicab_counts"] = counts;
  j["link_count"] = r.link_count;
  j["distinct_vertices"] = r.distinct_vertices;
  j["board_vertices"] = r.board_vertices;
  if (!r.violations.empty()) {
    json all = json::array();
    for (const auto& v : r.violations) {
      all.push_back({{"check", to_string(v.check)}, {"index", v.index}, {"description", v.description}});
    }
    j["violations"] = all;
  }
  return j;
}

inline json to_json(const FeasibilityVerdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons) reasons.push_back({{"code", to_string(r.code)}, {"message", r.message}});
  return {{"feasible", v.feasible}, {"reasons", reasons}, {"notes", v.notes}};
}

inline std::string links_text(const VerificationReport& r) {
  if (r.kind == TourKind::closed) return std::to_string(r.link_count - 1) + "+1 links";
  return std::to_string(r.link_count) + " links";
}

inline void print_report_text(std::ostream& out, const VerificationReport& r) {
  if (r.valid) {
    out << "valid " << to_string(r.kind) << " tour: " << r.distinct_vertices << " vertices, " << links_text(r)
        << "\n";
  } else {
    out << "invalid " << to_string(r.kind) << " tour: " << r.first_violation->description << " (at index "
        << r.first_violation->index << ", " << to_string(r.first_violation->check) << " check)\n";
    for (std::size_t i = 1; i < r.violations.size(); ++i) {
      out << "  also: " << r.violations[i].description << " (at index " << r.violations[i].index << ")\n";
    }
  }
  out << "endpoint squared distance: " << r.endpoint_squared_distance << "\n";
  out << "taxicab lengths:";
  for (const auto& [len, n] : r.move_taxicab_counts) out << " " << len << "=" << n;
  out << "\n";
}

inline void print_verdict_text(std::ostream& out, const char* label, const FeasibilityVerdict& v) {
  out << label << ": " << (v.feasible ? "feasible" : "infeasible");
  if (!v.feasible) {
    out << " (";
    for (std::size_t i = 0; i < v.reasons.size(); ++i) out << (i ? "; " : "") << v.reasons[i].message;
    out << ")";
  }
  out << "\n";
  for (const auto& n : v.notes) out << "  note: " << n << "\n";
}

inline json to_json(const SearchOutcome& o) {
  json j;
  j["status"] = to_string(o.status);
  j["nodes_expanded"] = o.nodes_expanded;
  j["max_depth_reached"] = o.max_depth_reached;
  j["tour"] = o.tour ? json(serialize_tour(*o.tour)) : json(nullptr);
  j["precheck_reasons"] = o.precheck_reasons;
  return j;
}

inline int exit_for(const SearchOutcome& o) {
  switch (o.status) {
    case SearchStatus::found: return ok;
    case SearchStatus::exhausted_none: return negative;
    case SearchStatus::budget_exceeded: return undecided;
  }
  return usage;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::BoardArgs;

  CLI::App app{"Euclidean knight's tours on k-dimensional boards", "eknight"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Verify a tour file");
  std::string verify_file;
  std::string verify_kind;
  bool all_violations = false;
  verify_cmd->add_option("file", verify_file, "Tour file")->required();
  verify_cmd->add_option("--kind", verify_kind, "Override the claimed kind")
      ->check(CLI::IsMember({"open", "closed", "near_closed", "path"}));
  verify_cmd->add_flag("--all-violations", all_violations, "Report every violation");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Feasibility diagnostics for a board");
  BoardArgs analyze_board;
  analyze_board.add_to(analyze_cmd);
  std::string analyze_kind = "open";
  analyze_cmd->add_option("--kind", analyze_kind, "Verdict that decides the exit status")
      ->check(CLI::IsMember({"open", "closed"}));

  // search
  auto* search_cmd = app.add_subcommand("search", "Search for a tour, prove nonexistence, or find a longest path");
  BoardArgs search_board;
  search_board.add_to(search_cmd);
  std::string target = "open";
  std::string mode = "find";
  std::string start;
  bool no_warnsdorff = false;
  bool nondeterministic = false;
  std::uint64_t budget = 0;
  unsigned parallel = 0;
  search_cmd->add_option("--target", target)->check(CLI::IsMember({"open", "closed"}));
  search_cmd->add_option("--mode", mode)->check(CLI::IsMember({"find", "prove", "longest"}));
  search_cmd->add_option("--start", start, "Start vertex c1,...,ck");
  search_cmd->add_flag("--no-warnsdorff", no_warnsdorff, "Plain lexicographic successor order");
  search_cmd->add_option("--budget", budget, "Node budget (0 = unlimited)");
  search_cmd->add_option("--parallel", parallel, "Worker threads for the root split");
  search_cmd->add_flag("--nondeterministic", nondeterministic, "Take the first tour any worker finds");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Closed tour on C(2,k) by repeated doubling");
  std::size_t construct_k = 0;
  std::vector<std::string> masks;
  bool verify_only = false;
  construct_cmd->add_option("--k", construct_k, "Dimension")->required();
  construct_cmd->add_option("--mask", masks, "Flip axes i,j,l,m for one doubling step (repeat per level)")
      ->take_all();
  construct_cmd->add_flag("--verify-only", verify_only, "Print the verification report instead of the tour");

  // distance
  auto* distance_cmd = app.add_subcommand("distance", "Knight distance between two vertices");
  BoardArgs distance_board;
  distance_board.add_to(distance_cmd);
  std::string from, to;
  distance_cmd->add_option("--from", from)->required();
  distance_cmd->add_option("--to", to)->required();

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "Embedded tours");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List corpus ids");
  auto* corpus_show = corpus_cmd->add_subcommand("show", "Print a corpus tour file");
  std::string show_id;
  corpus_show->add_option("id", show_id)->required();
  auto* corpus_check = corpus_cmd->add_subcommand("check-all", "Verify every corpus entry");

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export of a board graph or a tour");
  BoardArgs dot_board;
  dot_board.add_to(dot_cmd);
  std::string dot_tour;
  dot_cmd->add_option("--tour", dot_tour, "Tour file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  const bool as_json = format == "json";

  try {
    if (*verify_cmd) {
      auto tour = parse_tour(BoardArgs::read_file(verify_file));
      if (!verify_kind.empty()) tour.kind = *parse_tour_kind(verify_kind);
      const auto report = verify(tour, {.collect_all = all_violations});
      if (as_json) {
        out << detail::to_json(report).dump(2) << "\n";
      } else {
        detail::print_report_text(out, report);
      }
      return report.valid ? ok : negative;
    }

    if (*analyze_cmd) {
      const Board board = analyze_board.build();
      const KnightGraph graph(board);
      const auto counts = color_counts(board);
      const bool connected = is_connected(graph);
      const auto hist = degree_histogram(graph);
      const auto open_v = open_tour_necessary(graph);
      const auto closed_v = closed_tour_necessary(graph);
      if (as_json) {
        json h = json::object();
        for (const auto& [d, n] : hist) h[std::to_string(d)] = n;
        out << json{{"board", format_sides(board.sides())},
                    {"holes", board.hole_count()},
                    {"vertex_count", board.vertex_count()},
                    {"dark", counts.dark},
                    {"light", counts.light},
                    {"connected", connected},
                    {"degree_histogram", h},
                    {"open", detail::to_json(open_v)},
                    {"closed", detail::to_json(closed_v)}}
                   .dump(2)
            << "\n";
      } else {
        out << "board: " << format_sides(board.sides()) << " (" << board.hole_count() << " holes)\n";
        out << "vertices: " << board.vertex_count() << "\n";
        out << "dark/light: " << counts.dark << "/" << counts.light << "\n";
        out << "connected: " << (connected ? "yes" : "no") << "\n";
        out << "degree histogram:";
        for (const auto& [d, n] : hist) out << " " << d << ":" << n;
        out << "\n";
        detail::print_verdict_text(out, "open tour", open_v);
        detail::print_verdict_text(out, "closed tour", closed_v);
      }
      const auto& decisive = analyze_kind == "closed" ? closed_v : open_v;
      return decisive.feasible ? ok : negative;
    }

    if (*search_cmd) {
      const Board board = search_board.build();
      const TourKind kind = target == "closed" ? TourKind::closed : TourKind::open;
      const std::optional<std::uint64_t> node_budget = budget ? std::optional(budget) : std::nullopt;
      SearchOutcome outcome;
      if (mode == "longest") {
        outcome = longest_path(board, node_budget);
      } else if (mode == "prove") {
        outcome = prove_nonexistence(board, kind, node_budget);
      } else {
        SearchConfig config;
        config.target = kind;
        if (!start.empty()) config.start = parse_vertex(start);
        config.use_warnsdorff = !no_warnsdorff;
        config.node_budget = node_budget;
        config.deterministic = !nondeterministic;
        config.parallel_width = parallel;
        outcome = find_tour(board, config);
      }
      if (as_json) {
        out << detail::to_json(outcome).dump(2) << "\n";
      } else if (outcome.tour) {
        out << serialize_tour(*outcome.tour);
      }
      err << "status: " << to_string(outcome.status) << ", nodes expanded: " << outcome.nodes_expanded
          << ", max depth: " << outcome.max_depth_reached << "\n";
      for (const auto& r : outcome.precheck_reasons) err << "pre-check: " << r << "\n";
      if (mode == "longest") {
        return outcome.status == SearchStatus::budget_exceeded ? undecided : ok;
      }
      return detail::exit_for(outcome);
    }

    if (*construct_cmd) {
      std::vector<FlipMask> parsed;
      for (const auto& m : masks) {
        const auto v = parse_vertex(m);
        std::vector<std::size_t> axes;
        for (int a : v) {
          if (a < 0) throw std::domain_error("flip mask axes must be nonnegative");
          axes.push_back(static_cast<std::size_t>(a));
        }
        parsed.emplace_back(std::move(axes));
      }
      if (construct_k >= 6 && parsed.size() > construct_k - 6) {
        throw std::domain_error("more masks than doubling steps");
      }
      const Tour tour = closed_tour_on_hypercube(construct_k, parsed);
      if (verify_only) {
        const auto report = verify(tour);
        if (as_json) {
          out << detail::to_json(report).dump(2) << "\n";
        } else {
          detail::print_report_text(out, report);
        }
        return report.valid ? ok : negative;
      }
      if (as_json) {
        out << json{{"k", construct_k}, {"vertex_count", tour.vertices.size()}, {"tour", serialize_tour(tour)}}
                   .dump(2)
            << "\n";
      } else {
        out << serialize_tour(tour);
      }
      return ok;
    }

    if (*distance_cmd) {
      const Board board = distance_board.build();
      const auto d = knight_distance(board, parse_vertex(from), parse_vertex(to));
      if (as_json) {
        out << json{{"from", from}, {"to", to}, {"distance", d ? json(*d) : json(nullptr)}}.dump(2) << "\n";
      } else {
        out << (d ? std::to_string(*d) : std::string("unreachable")) << "\n";
      }
      return d ? ok : negative;
    }

    if (*corpus_cmd) {
      if (*corpus_list) {
        json list = json::array();
        for (const auto& d : corpus::descriptors) {
          if (as_json) {
            list.push_back({{"id", d.name}, {"file", d.file_name}, {"provenance", d.provenance}});
          } else {
            out << d.name << "  " << d.file_name << "  " << d.provenance << "\n";
          }
        }
        if (as_json) out << list.dump(2) << "\n";
        return ok;
      }
      if (*corpus_show) {
        const auto id = corpus::parse_id(show_id);
        if (!id) {
          err << "unknown corpus id '" << show_id << "'\n";
          return usage;
        }
        out << corpus::descriptor(*id).text;
        return ok;
      }
      if (*corpus_check) {
        bool all_valid = true;
        json list = json::array();
        for (const auto& d : corpus::descriptors) {
          const auto entry = corpus::get(d.id);
          const auto result = corpus::check(d.id);
          const auto& report = result.as_printed;
          all_valid = all_valid && result.ok();
          if (as_json) {
            auto j = detail::to_json(report);
            j["id"] = d.name;
            j["ok"] = result.ok();
            if (result.as_corrected) j["corrected"] = detail::to_json(*result.as_corrected);
            list.push_back(j);
          } else {
            out << d.name << ": " << (result.ok() ? "ok" : "FAILED") << " (" << to_string(entry.tour.kind) << ", "
                << entry.tour.vertices.size() << " entries, " << detail::links_text(report);
            if (d.misprint) {
              out << "; vertex " << d.misprint->index << " printed as " << d.misprint->printed << ", read as "
                  << d.misprint->replacement << ": " << (result.ok() ? "valid" : "invalid");
            }
            out << ")\n";
          }
        }
        if (as_json) out << list.dump(2) << "\n";
        return all_valid ? ok : negative;
      }
    }

    if (*dot_cmd) {
      if (!dot_tour.empty()) {
        if (dot_board.given()) throw ParseError(0, "use either --tour or a board");
        out << tour_to_dot(parse_tour(BoardArgs::read_file(dot_tour)));
      } else {
        out << board_to_dot(KnightGraph(dot_board.build()));
      }
      return ok;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace eknight::cli

#endif  // EKNIGHT_TOOLS_CLI_HPP
