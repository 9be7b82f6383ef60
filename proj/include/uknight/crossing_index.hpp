#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uknight/geometry.hpp"
#include "uknight/lattice.hpp"

namespace uknight {

/// Broad-phase index over committed path segments with stack-order removal.
///
/// Each segment is filed under every unit cube [i, i+1)³ containing a point of
/// its bounding box; with integer endpoints those are the cubes i ∈ [min, max]
/// on every axis, so a knight segment lands in 3·2·1 = 6 buckets. Any shared
/// point lies in exactly one such half-open cube, so two segments that meet
/// always share a bucket and the narrow phase is never skipped for them.
class CrossingIndex {
 public:
  explicit CrossingIndex(const Box& box);

  const Box& box() const { return box_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  const std::vector<Segment>& segments() const { return segments_; }

  /// Commits `s` and returns its id (the insertion count before the call).
  /// Throws std::out_of_range for endpoints outside the box and
  /// InvalidSegment for zero-length segments.
  std::size_t insert(const Segment& s);

  /// Drops the most recently inserted segment. Throws std::logic_error when
  /// empty.
  void remove_last();

  /// True iff some committed segment conflicts with `candidate` under
  /// segments_conflict, with the same exempt joints.
  bool conflicts(const Segment& candidate, std::optional<Cell> allowed_shared = std::nullopt) const;
  bool conflicts(const Segment& candidate, std::optional<Cell> allowed_a,
                 std::optional<Cell> allowed_b) const;

  /// Bucket ids (linear cube indices) touched by `s`, clipped to the box.
  std::vector<std::int64_t> buckets_of(const Segment& s) const;

  friend bool operator==(const CrossingIndex& l, const CrossingIndex& r) {
    return l.box_ == r.box_ && l.segments_ == r.segments_ && l.buckets_ == r.buckets_;
  }

 private:
  template <typename Fn>
  void for_each_bucket(const Segment& s, Fn&& fn) const;

  Box box_;
  std::vector<Segment> segments_;
  std::vector<std::vector<std::uint32_t>> buckets_;
  // Per-segment stamp of the last query that tested it; avoids re-testing a
  // segment reachable through several buckets.
  mutable std::vector<std::uint64_t> seen_;
  mutable std::uint64_t query_ = 0;
};

}  // namespace uknight
