#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uknight/geometry.hpp"
#include "uknight/lattice.hpp"

namespace uknight {

/// Ordered cell sequence inside a box. A closed tour returns from the last
/// cell to the first; that closing step is implied, not stored.
///
/// Construction does not validate anything: arbitrary sequences are
/// representable so that verify() can report what is wrong with them.
struct Tour {
  Box box{1, 1, 1};
  std::vector<Cell> cells;
  bool closed = false;

  /// Number of knight moves: |cells| − 1 when open, |cells| when closed.
  std::int64_t length() const;

  friend bool operator==(const Tour&, const Tour&) = default;
};

/// Consecutive-cell segments in visit order, plus the closing segment for a
/// closed tour. Empty for fewer than two cells.
std::vector<Segment> segments_of(const Tour& tour);

/// Tour with cell order reversed (same cycle for closed tours).
Tour reversed(const Tour& tour);

/// Tour with every cell mapped through `t`.
Tour transformed(const Tour& tour, const BoxTransform& t);

struct Coverage {
  std::int64_t visited = 0;
  std::int64_t volume = 1;
  Rational fraction;
  int percent = 0;  // nearest integer, halves round up
};

/// visited / volume with the percent rounded half up.
Coverage coverage_of(std::int64_t visited, std::int64_t volume);

/// Coverage of a tour of `length` moves: length + 1 cells when open, length
/// when closed.
Coverage coverage_for_length(std::int64_t length, const Box& box, bool closed);

Coverage coverage(const Tour& tour);

struct Violation {
  enum class Kind { kOutOfBounds, kRepeatedCell, kNotKnightStep, kCrossing, kClosureNotKnightStep };

  Kind kind;
  // Cell indices for everything except kCrossing, which carries segment
  // indices. kOutOfBounds uses only `first`.
  std::int64_t first = 0;
  std::int64_t second = 0;

  std::string to_string() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

const char* kind_name(Violation::Kind kind);

struct VerifyReport {
  bool ok = false;
  std::int64_t length = 0;
  std::int64_t cells_visited = 0;
  Coverage coverage;
  std::vector<Violation> violations;

  std::string to_string() const;
};

/// Independent checker for arbitrary tours. Runs bounds, distinctness and
/// knight-step checks (closure included), then tests every pair of segments
/// for a shared point; consecutive segments may share only their joint.
/// Reports every violation found and never throws on malformed input.
VerifyReport verify(const Tour& tour);

}  // namespace uknight
