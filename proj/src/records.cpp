#include "uknight/records.hpp"

#include <algorithm>

#include "uknight/search.hpp"

namespace uknight {

const std::vector<RecordEntry>& builtin_records() {
  static const std::vector<RecordEntry> records = {
      {{2, 2, 3}, 4, true, "published"},   {{2, 3, 3}, 8, true, "published"},
      {{2, 4, 4}, 14, false, "published"}, {{3, 3, 4}, 20, false, "published"},
      {{3, 4, 4}, 27, false, "published"}, {{3, 3, 3}, 15, false, "published"},
      {{4, 4, 4}, 46, false, "published"}, {{5, 5, 5}, 88, false, "published"},
      {{6, 6, 6}, 159, false, "published"}, {{7, 7, 7}, 258, false, "published"},
      {{8, 8, 8}, 395, false, "published"},
  };
  return records;
}

std::optional<RecordEntry> find_record(const std::vector<RecordEntry>& registry,
                                       std::array<int, 3> dims, bool closed) {
  std::sort(dims.begin(), dims.end());
  for (const auto& r : registry) {
    if (r.dims == dims && r.closed == closed) return r;
  }
  return std::nullopt;
}

std::optional<RecordEntry> find_record(const Box& box, bool closed) {
  return find_record(builtin_records(), box.extents(), closed);
}

std::string CompareStatus::to_string() const {
  switch (kind) {
    case Kind::kBelow: return "below(" + std::to_string(delta) + ")";
    case Kind::kMatches: return "matches";
    case Kind::kImproves: return "improves(" + std::to_string(delta) + ")";
    case Kind::kUnlisted: return "unlisted";
  }
  return "unlisted";
}

CompareStatus compare(const Box& box, bool closed, std::int64_t length,
                      const std::vector<RecordEntry>& registry) {
  CompareStatus status;
  status.record = find_record(registry, box.extents(), closed);
  if (!status.record) return status;
  const std::int64_t diff = length - status.record->length;
  if (diff < 0) {
    status.kind = CompareStatus::Kind::kBelow;
    status.delta = -diff;
  } else if (diff == 0) {
    status.kind = CompareStatus::Kind::kMatches;
  } else {
    status.kind = CompareStatus::Kind::kImproves;
    status.delta = diff;
  }
  return status;
}

CompareStatus compare(const SearchResult& result, const std::vector<RecordEntry>& registry) {
  return compare(result.best.box, result.best.closed, result.length, registry);
}

}  // namespace uknight
