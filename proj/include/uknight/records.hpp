#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uknight/lattice.hpp"

namespace uknight {

struct SearchResult;

struct RecordEntry {
  std::array<int, 3> dims;  // ascending
  std::int64_t length = 0;
  bool closed = false;
  std::string source;
};

/// Published record lengths for small cuboids and the 3³…8³ cubes.
const std::vector<RecordEntry>& builtin_records();

/// Entry for the box shape (any axis order) and tour kind, if registered.
std::optional<RecordEntry> find_record(const std::vector<RecordEntry>& registry,
                                       std::array<int, 3> dims, bool closed);
std::optional<RecordEntry> find_record(const Box& box, bool closed);

struct CompareStatus {
  enum class Kind { kBelow, kMatches, kImproves, kUnlisted };

  Kind kind = Kind::kUnlisted;
  std::int64_t delta = 0;  // |length − record| for kBelow / kImproves
  std::optional<RecordEntry> record;

  /// "below(3)", "matches", "improves(2)" or "unlisted".
  std::string to_string() const;
};

CompareStatus compare(const Box& box, bool closed, std::int64_t length,
                      const std::vector<RecordEntry>& registry = builtin_records());
CompareStatus compare(const SearchResult& result,
                      const std::vector<RecordEntry>& registry = builtin_records());

}  // namespace uknight
