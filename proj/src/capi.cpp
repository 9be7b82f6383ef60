#include "uknight/uknight.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "uknight/codec.hpp"
#include "uknight/records.hpp"
#include "uknight/search.hpp"
#include "uknight/tour.hpp"

struct uk_tour {
  uknight::TourDocument doc;
};

struct uk_report {
  uknight::VerifyReport report;
};

struct uk_result {
  uknight::SearchResult result;
  nlohmann::ordered_json metadata;
};

static_assert(UK_STOP_TIME_LIMIT == static_cast<int>(uknight::StopReason::kTimeLimit));
static_assert(UK_STOP_TARGET_REACHED == static_cast<int>(uknight::StopReason::kTargetReached));
static_assert(UK_VIOLATION_CROSSING == static_cast<int>(uknight::Violation::Kind::kCrossing));
static_assert(UK_VIOLATION_CLOSURE_NOT_KNIGHT_STEP ==
              static_cast<int>(uknight::Violation::Kind::kClosureNotKnightStep));
static_assert(UK_COMPARE_UNLISTED == static_cast<int>(uknight::CompareStatus::Kind::kUnlisted));

namespace {

thread_local std::string last_error;

uk_status fail(uk_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
uk_status guarded(Fn&& fn) {
  try {
    fn();
    return UK_OK;
  } catch (const uknight::ParseError& e) {
    return fail(UK_ERR_PARSE, e.what());
  } catch (const uknight::UnverifiedTour& e) {
    return fail(UK_ERR_UNVERIFIED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(UK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(UK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(UK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(UK_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

uknight::Box box_from(const int32_t dims[3]) { return uknight::Box(dims[0], dims[1], dims[2]); }

std::string records_text(const std::vector<uknight::RecordEntry>& records) {
  std::ostringstream os;
  os << "dims     kind    length  coverage  source\n";
  for (const auto& r : records) {
    const uknight::Box box(r.dims[0], r.dims[1], r.dims[2]);
    const auto cov = uknight::coverage_for_length(r.length, box, r.closed);
    std::string dims = box.to_string();
    std::string kind = r.closed ? "closed" : "open";
    std::string length = std::to_string(r.length);
    std::string percent = std::to_string(cov.percent) + "%";
    os << dims << std::string(9 - std::min<std::size_t>(dims.size(), 8), ' ') << kind
       << std::string(8 - kind.size(), ' ') << length
       << std::string(8 - std::min<std::size_t>(length.size(), 7), ' ') << percent
       << std::string(10 - std::min<std::size_t>(percent.size(), 9), ' ') << r.source << "\n";
  }
  return os.str();
}

std::string records_json(const std::vector<uknight::RecordEntry>& records) {
  nlohmann::ordered_json doc;
  doc["schema"] = "uknight.records/1";
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    const uknight::Box box(r.dims[0], r.dims[1], r.dims[2]);
    nlohmann::ordered_json entry;
    entry["dims"] = r.dims;
    entry["closed"] = r.closed;
    entry["length"] = r.length;
    entry["coverage_percent"] = uknight::coverage_for_length(r.length, box, r.closed).percent;
    entry["source"] = r.source;
    doc["records"].push_back(entry);
  }
  return doc.dump(2) + "\n";
}

}  // namespace

extern "C" {

const char* uk_version(void) { return "1.0.0"; }

const char* uk_last_error(void) { return last_error.c_str(); }

void uk_string_free(char* s) { std::free(s); }

uk_status uk_parse_box(const char* text, int32_t dims[3]) {
  if (text == nullptr || dims == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto box = uknight::parse_box(text);
    for (int i = 0; i < 3; ++i) dims[i] = box.extent(i);
  });
}

uk_status uk_tour_create(const int32_t dims[3], const int32_t* xyz, size_t ncells, int closed,
                         uk_tour** out) {
  if (dims == nullptr || out == nullptr || (xyz == nullptr && ncells > 0)) {
    return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    uknight::Tour tour{box_from(dims), {}, closed != 0};
    tour.cells.reserve(ncells);
    for (size_t i = 0; i < ncells; ++i) {
      tour.cells.push_back({xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]});
    }
    *out = new uk_tour{uknight::TourDocument{std::move(tour)}};
  });
}

uk_status uk_tour_decode(const char* text, uk_tour** out) {
  if (text == nullptr || out == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new uk_tour{uknight::decode_any(text)}; });
}

uk_status uk_tour_load(const char* path, uk_tour** out) {
  if (path == nullptr || out == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(UK_ERR_IO, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return fail(UK_ERR_IO, std::string("cannot read ") + path);
  const std::string text = buf.str();
  return uk_tour_decode(text.c_str(), out);
}

void uk_tour_free(uk_tour* tour) { delete tour; }

void uk_tour_dims(const uk_tour* tour, int32_t dims[3]) {
  for (int i = 0; i < 3; ++i) dims[i] = tour->doc.tour.box.extent(i);
}

size_t uk_tour_cell_count(const uk_tour* tour) { return tour->doc.tour.cells.size(); }

int64_t uk_tour_length(const uk_tour* tour) { return tour->doc.tour.length(); }

int uk_tour_closed(const uk_tour* tour) { return tour->doc.tour.closed ? 1 : 0; }

uk_status uk_tour_cells(const uk_tour* tour, int32_t* xyz, size_t capacity) {
  if (tour == nullptr || (xyz == nullptr && capacity > 0)) {
    return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  }
  const auto& cells = tour->doc.tour.cells;
  const size_t n = std::min(capacity, cells.size());
  for (size_t i = 0; i < n; ++i) {
    xyz[3 * i] = cells[i].x;
    xyz[3 * i + 1] = cells[i].y;
    xyz[3 * i + 2] = cells[i].z;
  }
  return UK_OK;
}

uk_status uk_tour_encode(const uk_tour* tour, uk_format format, char** out) {
  if (tour == nullptr || out == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    switch (format) {
      case UK_FORMAT_DOC: *out = dup_string(uknight::encode_document(tour->doc)); return;
      case UK_FORMAT_LAYERS: *out = dup_string(uknight::render_layers(tour->doc.tour)); return;
      case UK_FORMAT_POLYLINE: *out = dup_string(uknight::export_polyline(tour->doc.tour)); return;
    }
    throw std::invalid_argument("unknown format");
  });
}

uk_status uk_verify(const uk_tour* tour, uk_report** out) {
  if (tour == nullptr || out == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new uk_report{uknight::verify(tour->doc.tour)}; });
}

void uk_report_free(uk_report* report) { delete report; }

int uk_report_ok(const uk_report* report) { return report->report.ok ? 1 : 0; }

int64_t uk_report_length(const uk_report* report) { return report->report.length; }

void uk_report_coverage(const uk_report* report, int64_t* visited, int64_t* volume, int* percent) {
  const auto& c = report->report.coverage;
  if (visited != nullptr) *visited = c.visited;
  if (volume != nullptr) *volume = c.volume;
  if (percent != nullptr) *percent = c.percent;
}

size_t uk_report_violation_count(const uk_report* report) {
  return report->report.violations.size();
}

uk_status uk_report_violation(const uk_report* report, size_t i, uk_violation_kind* kind,
                              int64_t* first, int64_t* second) {
  if (report == nullptr || i >= report->report.violations.size()) {
    return fail(UK_ERR_INVALID_ARGUMENT, "violation index out of range");
  }
  const auto& v = report->report.violations[i];
  if (kind != nullptr) *kind = static_cast<uk_violation_kind>(v.kind);
  if (first != nullptr) *first = v.first;
  if (second != nullptr) *second = v.second;
  return UK_OK;
}

uk_status uk_report_text(const uk_report* report, char** out) {
  if (report == nullptr || out == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(report->report.to_string()); });
}

void uk_solve_config_init(uk_solve_config* config) {
  *config = uk_solve_config{};
  config->dims[0] = config->dims[1] = config->dims[2] = 1;
  config->closed = 0;
  config->mode = UK_MODE_HEURISTIC;
  config->time_limit = 0.0;
  config->seed = 0;
  config->restarts = 64;
  config->beam_width = 1;
  config->threads = 1;
  config->target_length = -1;
}

uk_status uk_solve(const uk_solve_config* config, uk_result** out) {
  if (config == nullptr || out == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto box = box_from(config->dims);
    uknight::SearchConfig sc;
    sc.mode = config->mode == UK_MODE_EXHAUSTIVE ? uknight::SearchMode::kExhaustive
                                                 : uknight::SearchMode::kHeuristic;
    sc.closed = config->closed != 0;
    if (config->time_limit > 0.0) sc.time_limit = config->time_limit;
    sc.seed = config->seed;
    sc.restarts = config->restarts;
    sc.beam_width = config->beam_width;
    sc.threads = config->threads;
    if (config->target_length >= 0) sc.target_length = config->target_length;

    auto res = std::make_unique<uk_result>();
    res->result = uknight::solve(box, sc);
    auto& meta = res->metadata;
    meta["mode"] = uknight::to_string(sc.mode);
    if (sc.mode == uknight::SearchMode::kHeuristic) {
      meta["generator"] = uknight::kGeneratorName;
      meta["seed"] = sc.seed;
      meta["restarts"] = sc.restarts;
      meta["beam_width"] = sc.beam_width;
    }
    meta["length"] = res->result.length;
    meta["optimal"] = res->result.optimal;
    meta["stopped_by"] = uknight::to_string(res->result.stopped_by);
    *out = res.release();
  });
}

void uk_result_free(uk_result* result) { delete result; }

void uk_result_get_info(const uk_result* result, uk_result_info* info) {
  const auto& r = result->result;
  info->length = r.length;
  info->optimal = r.optimal ? 1 : 0;
  info->nodes_expanded = r.nodes_expanded;
  info->restarts_done = r.restarts_done;
  info->elapsed = r.elapsed;
  info->stopped_by = static_cast<uk_stop>(r.stopped_by);
  info->target_length = r.target_length ? *r.target_length : -1;
}

uk_status uk_result_tour(const uk_result* result, uk_tour** out) {
  if (result == nullptr || out == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new uk_tour{{result->result.best, result->metadata}}; });
}

uk_status uk_records_encode(const int32_t* dims, int json, char** out) {
  if (out == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<uknight::RecordEntry> selected;
    if (dims == nullptr) {
      selected = uknight::builtin_records();
    } else {
      const auto want = box_from(dims).sorted_dims();
      for (const auto& r : uknight::builtin_records()) {
        if (r.dims == want) selected.push_back(r);
      }
    }
    *out = dup_string(json != 0 ? records_json(selected) : records_text(selected));
  });
}

uk_status uk_compare(const int32_t dims[3], int closed, int64_t length, uk_compare_kind* kind,
                     int64_t* delta, int64_t* record_length) {
  if (dims == nullptr) return fail(UK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto status = uknight::compare(box_from(dims), closed != 0, length);
    if (kind != nullptr) *kind = static_cast<uk_compare_kind>(status.kind);
    if (delta != nullptr) *delta = status.delta;
    if (record_length != nullptr) *record_length = status.record ? status.record->length : -1;
  });
}

}  // extern "C"
