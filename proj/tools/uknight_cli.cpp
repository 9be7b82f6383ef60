// Command-line front end. Talks to the library through the C interface only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "uknight/uknight.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Owns a string handed out by the library.
struct LibString {
  char* ptr = nullptr;
  ~LibString() { uk_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct TourHandle {
  uk_tour* ptr = nullptr;
  ~TourHandle() { uk_tour_free(ptr); }
};

void diag(const std::string& msg) { std::cerr << "uknight: " << msg << "\n"; }

// Loads a tour from a file or stdin ("-"). Returns the status, reporting
// failures on stderr.
uk_status load_tour(const std::string& path, TourHandle& out) {
  uk_status st;
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    st = uk_tour_decode(text.c_str(), &out.ptr);
  } else {
    st = uk_tour_load(path.c_str(), &out.ptr);
  }
  if (st != UK_OK) diag(path + ": " + uk_last_error());
  return st;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    diag("cannot write " + path);
    return false;
  }
  return true;
}

const char* stop_name(uk_stop s) {
  switch (s) {
    case UK_STOP_COMPLETED: return "completed";
    case UK_STOP_TIME_LIMIT: return "time_limit";
    case UK_STOP_TARGET_REACHED: return "target_reached";
  }
  return "?";
}

std::string compare_text(uk_compare_kind kind, int64_t delta) {
  switch (kind) {
    case UK_COMPARE_BELOW: return "below(" + std::to_string(delta) + ")";
    case UK_COMPARE_MATCHES: return "matches";
    case UK_COMPARE_IMPROVES: return "improves(" + std::to_string(delta) + ")";
    case UK_COMPARE_UNLISTED: return "unlisted";
  }
  return "unlisted";
}

struct SolveArgs {
  std::string box;
  bool closed = false;
  std::string mode = "heuristic";
  std::optional<double> time_limit;
  uint64_t seed = 0;
  int restarts = 64;
  int beam = 1;
  int threads = 1;
  std::optional<int64_t> target_length;
  std::string out;
  std::string format = "doc";
};

int run_solve(const SolveArgs& a) {
  uk_solve_config cfg;
  uk_solve_config_init(&cfg);
  if (uk_parse_box(a.box.c_str(), cfg.dims) != UK_OK) {
    diag(uk_last_error());
    return kExitUsage;
  }
  cfg.closed = a.closed ? 1 : 0;
  cfg.mode = a.mode == "exhaustive" ? UK_MODE_EXHAUSTIVE : UK_MODE_HEURISTIC;
  cfg.time_limit = a.time_limit.value_or(0.0);
  cfg.seed = a.seed;
  cfg.restarts = a.restarts;
  cfg.beam_width = a.beam;
  cfg.threads = a.threads;
  cfg.target_length = a.target_length.value_or(-1);

  uk_result* result = nullptr;
  if (uk_solve(&cfg, &result) != UK_OK) {
    diag(uk_last_error());
    return kExitUsage;
  }
  uk_result_info info;
  uk_result_get_info(result, &info);
  TourHandle tour;
  const uk_status st = uk_result_tour(result, &tour.ptr);
  uk_result_free(result);
  if (st != UK_OK) {
    diag(uk_last_error());
    return kExitFail;
  }

  LibString text;
  if (uk_tour_encode(tour.ptr, a.format == "layers" ? UK_FORMAT_LAYERS : UK_FORMAT_DOC,
                     &text.ptr) != UK_OK) {
    diag(uk_last_error());
    return kExitFail;
  }
  if (!write_output(a.out, text.str())) return kExitFail;

  uk_compare_kind kind = UK_COMPARE_UNLISTED;
  int64_t delta = 0;
  int64_t record = -1;
  uk_compare(cfg.dims, cfg.closed, info.length, &kind, &delta, &record);
  std::ostringstream summary;
  summary << "length " << info.length << (a.closed ? " closed" : " open")
          << ", optimal " << (info.optimal ? "yes" : "no") << ", stopped_by "
          << stop_name(info.stopped_by) << ", nodes " << info.nodes_expanded;
  if (cfg.mode == UK_MODE_HEURISTIC) summary << ", restarts " << info.restarts_done;
  summary << ", elapsed " << info.elapsed << "s, record " << compare_text(kind, delta);
  if (record >= 0) summary << " (record " << record << ")";
  diag(summary.str());
  return kExitOk;
}

int run_verify(const std::string& file) {
  TourHandle tour;
  if (load_tour(file, tour) != UK_OK) return kExitUsage;
  uk_report* report = nullptr;
  if (uk_verify(tour.ptr, &report) != UK_OK) {
    diag(uk_last_error());
    return kExitUsage;
  }
  LibString text;
  uk_report_text(report, &text.ptr);
  const bool ok = uk_report_ok(report) != 0;
  uk_report_free(report);
  std::cout << text.str();
  return ok ? kExitOk : kExitFail;
}

int run_render(const std::string& file, const std::string& format) {
  TourHandle tour;
  if (load_tour(file, tour) != UK_OK) return kExitUsage;
  const uk_format fmt = format == "layers"  ? UK_FORMAT_LAYERS
                        : format == "doc"   ? UK_FORMAT_DOC
                                            : UK_FORMAT_POLYLINE;
  LibString text;
  const uk_status st = uk_tour_encode(tour.ptr, fmt, &text.ptr);
  if (st != UK_OK) {
    diag(uk_last_error());
    return st == UK_ERR_UNVERIFIED ? kExitFail : kExitUsage;
  }
  std::cout << text.str();
  return kExitOk;
}

int run_records(const std::string& box, const std::string& compare_file, bool json) {
  int32_t dims[3];
  const int32_t* filter = nullptr;
  if (!box.empty()) {
    if (uk_parse_box(box.c_str(), dims) != UK_OK) {
      diag(uk_last_error());
      return kExitUsage;
    }
    filter = dims;
  }
  if (compare_file.empty() || !box.empty()) {
    LibString text;
    if (uk_records_encode(filter, json ? 1 : 0, &text.ptr) != UK_OK) {
      diag(uk_last_error());
      return kExitUsage;
    }
    std::cout << text.str();
  }
  if (compare_file.empty()) return kExitOk;

  TourHandle tour;
  if (load_tour(compare_file, tour) != UK_OK) return kExitUsage;
  uk_report* report = nullptr;
  if (uk_verify(tour.ptr, &report) != UK_OK) {
    diag(uk_last_error());
    return kExitUsage;
  }
  const bool ok = uk_report_ok(report) != 0;
  uk_report_free(report);
  if (!ok) {
    diag(compare_file + ": tour fails verification; run 'uknight verify' for details");
    return kExitFail;
  }
  int32_t tdims[3];
  uk_tour_dims(tour.ptr, tdims);
  uk_compare_kind kind = UK_COMPARE_UNLISTED;
  int64_t delta = 0;
  int64_t record = -1;
  if (uk_compare(tdims, uk_tour_closed(tour.ptr), uk_tour_length(tour.ptr), &kind, &delta,
                 &record) != UK_OK) {
    diag(uk_last_error());
    return kExitUsage;
  }
  std::cout << "compare: " << compare_text(kind, delta) << " (length " << uk_tour_length(tour.ptr);
  if (record >= 0) std::cout << ", record " << record;
  std::cout << ")\n";
  return kind == UK_COMPARE_BELOW ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest non-crossing knight paths in 3D boxes: search, verify, render."};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Search for a long non-crossing knight path");
  solve_cmd->add_option("--box", solve.box, "Box extents, MxNxK")->required();
  solve_cmd->add_flag("--closed", solve.closed, "Search closed (reentrant) tours");
  solve_cmd->add_option("--mode", solve.mode, "Search mode")
      ->check(CLI::IsMember({"exhaustive", "heuristic"}));
  solve_cmd->add_option("--time-limit", solve.time_limit, "Wall-clock limit in seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve.seed, "Heuristic seed");
  solve_cmd->add_option("--restarts", solve.restarts, "Heuristic restarts")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--beam", solve.beam, "Heuristic beam width (1 = greedy)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--target-length", solve.target_length, "Stop once this length is reached")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--out", solve.out, "Output file (default stdout)");
  solve_cmd->add_option("--format", solve.format, "Output format")
      ->check(CLI::IsMember({"doc", "layers"}));

  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a tour file; exit 0 iff it is valid");
  verify_cmd->add_option("file", verify_file, "Tour document or layer table ('-' for stdin)")
      ->required();

  std::string render_file;
  std::string render_format = "layers";
  auto* render_cmd = app.add_subcommand("render", "Re-emit a verified tour in another format");
  render_cmd->add_option("file", render_file, "Tour document or layer table ('-' for stdin)")
      ->required();
  render_cmd->add_option("--format", render_format, "Output format")
      ->check(CLI::IsMember({"layers", "doc", "polyline"}));

  std::string records_box;
  std::string records_compare;
  bool records_json = false;
  auto* records_cmd = app.add_subcommand("records", "Show published records or compare a tour");
  records_cmd->add_option("--box", records_box, "Restrict to one box shape, MxNxK");
  records_cmd->add_option("--compare", records_compare, "Tour file to compare with the registry");
  records_cmd->add_flag("--json", records_json, "Print the registry as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*solve_cmd) return run_solve(solve);
  if (*verify_cmd) return run_verify(verify_file);
  if (*render_cmd) return run_render(render_file, render_format);
  if (*records_cmd) return run_records(records_box, records_compare, records_json);
  return kExitUsage;
}
