#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "uknight/lattice.hpp"

namespace uknight {

/// Reduced fraction with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  static Rational integer(std::int64_t v) { return {v, 1}; }

  bool is_integer() const { return den == 1; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

using RationalPoint = std::array<Rational, 3>;

std::string to_string(const RationalPoint& p);

struct Segment {
  Cell a;
  Cell b;

  friend bool operator==(const Segment&, const Segment&) = default;
};

class InvalidSegment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IntersectionKind {
  enum class Kind { kDisjoint, kPoint, kOverlap };

  Kind kind = Kind::kDisjoint;
  RationalPoint point{};  // meaningful for kPoint only

  static IntersectionKind disjoint() { return {}; }
  static IntersectionKind overlap() { return {Kind::kOverlap, {}}; }
  static IntersectionKind at(const RationalPoint& p) { return {Kind::kPoint, p}; }

  bool is_disjoint() const { return kind == Kind::kDisjoint; }
  bool is_point() const { return kind == Kind::kPoint; }
  bool is_overlap() const { return kind == Kind::kOverlap; }

  /// True for a kPoint whose coordinates equal the lattice cell `c`.
  bool is_point_at(Cell c) const;

  friend bool operator==(const IntersectionKind&, const IntersectionKind&) = default;
};

/// Exact classification of how two closed segments meet. Integer arithmetic
/// only: a scalar triple product rejects skew pairs, a 2D cross-product solve
/// in the dominant projection plane handles coplanar non-parallel pairs, and
/// collinear pairs reduce to an interval overlap along the shared direction.
///
/// Throws InvalidSegment for zero-length segments or coordinates beyond
/// ±kMaxExtent.
IntersectionKind classify_intersection(const Segment& s, const Segment& t);

/// True iff the segments share any point other than `allowed_shared`, where
/// the exemption only applies when that cell is an endpoint of both segments.
bool segments_conflict(const Segment& s, const Segment& t,
                       std::optional<Cell> allowed_shared = std::nullopt);

/// Same rule with two exempt joints; used for the closing segment of a cycle,
/// which touches both the first and the last segment of the path.
bool segments_conflict(const Segment& s, const Segment& t, std::optional<Cell> allowed_a,
                       std::optional<Cell> allowed_b);

}  // namespace uknight
