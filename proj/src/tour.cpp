#include "uknight/tour.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace uknight {

std::int64_t Tour::length() const {
  const auto n = static_cast<std::int64_t>(cells.size());
  if (n == 0) return 0;
  return closed ? n : n - 1;
}

std::vector<Segment> segments_of(const Tour& tour) {
  std::vector<Segment> out;
  const auto& cells = tour.cells;
  if (cells.size() < 2) return out;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) out.push_back({cells[i], cells[i + 1]});
  if (tour.closed) out.push_back({cells.back(), cells.front()});
  return out;
}

Tour reversed(const Tour& tour) {
  Tour out = tour;
  std::reverse(out.cells.begin(), out.cells.end());
  return out;
}

Tour transformed(const Tour& tour, const BoxTransform& t) {
  Tour out = tour;
  for (Cell& c : out.cells) c = t.apply(tour.box, c);
  return out;
}

Coverage coverage_of(std::int64_t visited, std::int64_t volume) {
  Coverage c;
  c.visited = visited;
  c.volume = volume;
  c.fraction = Rational::make(visited, volume);
  // round(100·v/V) with halves up == floor((200·v + V) / (2·V))
  c.percent = static_cast<int>((200 * visited + volume) / (2 * volume));
  return c;
}

Coverage coverage_for_length(std::int64_t length, const Box& box, bool closed) {
  const std::int64_t visited = closed ? length : (length + 1);
  return coverage_of(visited, box.volume());
}

Coverage coverage(const Tour& tour) {
  return coverage_of(static_cast<std::int64_t>(tour.cells.size()), tour.box.volume());
}

const char* kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kOutOfBounds: return "OutOfBounds";
    case Violation::Kind::kRepeatedCell: return "RepeatedCell";
    case Violation::Kind::kNotKnightStep: return "NotKnightStep";
    case Violation::Kind::kCrossing: return "Crossing";
    case Violation::Kind::kClosureNotKnightStep: return "ClosureNotKnightStep";
  }
  return "?";
}

std::string Violation::to_string() const {
  std::string out = kind_name(kind);
  out += "(" + std::to_string(first);
  if (kind != Kind::kOutOfBounds) out += "," + std::to_string(second);
  return out + ")";
}

std::string VerifyReport::to_string() const {
  std::ostringstream os;
  os << "ok: " << (ok ? "true" : "false") << "\n"
     << "length: " << length << "\n"
     << "cells_visited: " << cells_visited << "\n"
     << "coverage: " << coverage.fraction.to_string() << " (" << coverage.percent << "%)\n"
     << "violations: " << violations.size() << "\n";
  for (const auto& v : violations) os << "  " << v.to_string() << "\n";
  return os.str();
}

VerifyReport verify(const Tour& tour) {
  using Kind = Violation::Kind;
  VerifyReport report;
  const auto& cells = tour.cells;
  const auto n = static_cast<std::int64_t>(cells.size());
  report.length = tour.length();
  report.cells_visited = n;
  report.coverage = coverage(tour);

  std::vector<bool> in_box(cells.size());
  for (std::int64_t i = 0; i < n; ++i) {
    in_box[static_cast<std::size_t>(i)] = tour.box.contains(cells[static_cast<std::size_t>(i)]);
    if (!in_box[static_cast<std::size_t>(i)]) report.violations.push_back({Kind::kOutOfBounds, i, i});
  }

  std::map<Cell, std::int64_t> first_seen;
  for (std::int64_t i = 0; i < n; ++i) {
    auto [it, inserted] = first_seen.emplace(cells[static_cast<std::size_t>(i)], i);
    if (!inserted) report.violations.push_back({Kind::kRepeatedCell, it->second, i});
  }

  for (std::int64_t i = 0; i + 1 < n; ++i) {
    const auto& c = cells[static_cast<std::size_t>(i)];
    const auto& d = cells[static_cast<std::size_t>(i + 1)];
    if (!is_knight_offset(d - c)) report.violations.push_back({Kind::kNotKnightStep, i, i + 1});
  }
  if (tour.closed && n > 0 && !is_knight_offset(cells.front() - cells.back())) {
    report.violations.push_back({Kind::kClosureNotKnightStep, n - 1, 0});
  }

  // Segment i joins cells[i] and cells[(i + 1) % n]. Only segments with
  // in-box endpoints and non-zero length take part; the others are already
  // reported above.
  const auto segs = segments_of(tour);
  const auto m = static_cast<std::int64_t>(segs.size());
  auto usable = [&](std::int64_t i) {
    const auto j = (i + 1) % n;
    return in_box[static_cast<std::size_t>(i)] && in_box[static_cast<std::size_t>(j)] &&
           segs[static_cast<std::size_t>(i)].a != segs[static_cast<std::size_t>(i)].b;
  };
  for (std::int64_t i = 0; i < m; ++i) {
    if (!usable(i)) continue;
    for (std::int64_t j = i + 1; j < m; ++j) {
      if (!usable(j)) continue;
      const auto& si = segs[static_cast<std::size_t>(i)];
      const auto& sj = segs[static_cast<std::size_t>(j)];
      std::optional<Cell> joint_a;
      std::optional<Cell> joint_b;
      if (j == i + 1) joint_a = sj.a;
      if (tour.closed && i == 0 && j == m - 1 && m >= 3) joint_b = si.a;
      if (segments_conflict(si, sj, joint_a, joint_b)) {
        report.violations.push_back({Kind::kCrossing, i, j});
      }
    }
  }

  report.ok = report.violations.empty();
  return report;
}

}  // namespace uknight
