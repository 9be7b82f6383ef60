#include "uknight/crossing_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace uknight {

CrossingIndex::CrossingIndex(const Box& box)
    : box_(box), buckets_(static_cast<std::size_t>(box.volume())) {}

template <typename Fn>
void CrossingIndex::for_each_bucket(const Segment& s, Fn&& fn) const {
  const int x0 = std::max(0, std::min(s.a.x, s.b.x));
  const int x1 = std::min(box_.nx() - 1, std::max(s.a.x, s.b.x));
  const int y0 = std::max(0, std::min(s.a.y, s.b.y));
  const int y1 = std::min(box_.ny() - 1, std::max(s.a.y, s.b.y));
  const int z0 = std::max(0, std::min(s.a.z, s.b.z));
  const int z1 = std::min(box_.nz() - 1, std::max(s.a.z, s.b.z));
  for (int x = x0; x <= x1; ++x) {
    for (int y = y0; y <= y1; ++y) {
      for (int z = z0; z <= z1; ++z) fn(box_.index_of({x, y, z}));
    }
  }
}

std::vector<std::int64_t> CrossingIndex::buckets_of(const Segment& s) const {
  std::vector<std::int64_t> out;
  for_each_bucket(s, [&](std::int64_t b) { out.push_back(b); });
  return out;
}

std::size_t CrossingIndex::insert(const Segment& s) {
  if (!box_.contains(s.a) || !box_.contains(s.b)) {
    throw std::out_of_range("segment " + to_string(s.a) + "-" + to_string(s.b) + " leaves box " +
                            box_.to_string());
  }
  if (s.a == s.b) throw InvalidSegment("zero-length segment at " + to_string(s.a));
  const auto id = static_cast<std::uint32_t>(segments_.size());
  segments_.push_back(s);
  seen_.push_back(0);
  for_each_bucket(s, [&](std::int64_t b) { buckets_[static_cast<std::size_t>(b)].push_back(id); });
  return id;
}

void CrossingIndex::remove_last() {
  if (segments_.empty()) throw std::logic_error("remove_last on an empty crossing index");
  for_each_bucket(segments_.back(),
                  [&](std::int64_t b) { buckets_[static_cast<std::size_t>(b)].pop_back(); });
  segments_.pop_back();
  seen_.pop_back();
}

bool CrossingIndex::conflicts(const Segment& candidate, std::optional<Cell> allowed_shared) const {
  return conflicts(candidate, allowed_shared, std::nullopt);
}

bool CrossingIndex::conflicts(const Segment& candidate, std::optional<Cell> allowed_a,
                              std::optional<Cell> allowed_b) const {
  if (segments_.empty()) return false;
  const std::uint64_t stamp = ++query_;
  bool hit = false;
  for_each_bucket(candidate, [&](std::int64_t b) {
    if (hit) return;
    for (std::uint32_t id : buckets_[static_cast<std::size_t>(b)]) {
      if (seen_[id] == stamp) continue;
      seen_[id] = stamp;
      if (segments_conflict(segments_[id], candidate, allowed_a, allowed_b)) {
        hit = true;
        return;
      }
    }
  });
  return hit;
}

}  // namespace uknight
