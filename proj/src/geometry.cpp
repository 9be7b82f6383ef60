#include "uknight/geometry.hpp"

#include <cstdlib>
#include <numeric>

namespace uknight {
namespace {

using Vec = std::array<std::int64_t, 3>;

Vec vec(Cell c) { return {c.x, c.y, c.z}; }
Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
std::int64_t dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
bool is_zero(const Vec& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

void check(const Segment& s) {
  for (Cell c : {s.a, s.b}) {
    for (int v : {c.x, c.y, c.z}) {
      if (std::abs(v) > kMaxExtent) {
        throw InvalidSegment("segment coordinate " + std::to_string(v) + " exceeds bound " +
                             std::to_string(kMaxExtent));
      }
    }
  }
  if (s.a == s.b) throw InvalidSegment("zero-length segment at " + to_string(s.a));
}

// a + (num / den) * u, den > 0.
RationalPoint point_along(const Vec& a, const Vec& u, std::int64_t num, std::int64_t den) {
  return {Rational::make(a[0] * den + num * u[0], den), Rational::make(a[1] * den + num * u[1], den),
          Rational::make(a[2] * den + num * u[2], den)};
}

bool allowed_joint(const IntersectionKind& k, const Segment& s, const Segment& t,
                   std::optional<Cell> allowed) {
  if (!allowed) return false;
  const Cell c = *allowed;
  const bool endpoint_of_both = (s.a == c || s.b == c) && (t.a == c || t.b == c);
  return endpoint_of_both && k.is_point_at(c);
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(const RationalPoint& p) {
  return "(" + p[0].to_string() + "," + p[1].to_string() + "," + p[2].to_string() + ")";
}

bool IntersectionKind::is_point_at(Cell c) const {
  return is_point() && point[0] == Rational::integer(c.x) && point[1] == Rational::integer(c.y) &&
         point[2] == Rational::integer(c.z);
}

IntersectionKind classify_intersection(const Segment& s, const Segment& t) {
  check(s);
  check(t);
  const Vec a = vec(s.a);
  const Vec u = sub(vec(s.b), a);
  const Vec v = sub(vec(t.b), vec(t.a));
  const Vec w = sub(vec(t.a), a);

  const Vec n = cross(u, v);
  if (dot(w, n) != 0) return IntersectionKind::disjoint();

  if (!is_zero(n)) {
    // Coplanar, not parallel. Drop the axis where the normal is largest; the
    // projection onto the remaining two axes is injective on the plane.
    std::size_t drop = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(n[i]) > std::abs(n[drop])) drop = i;
    }
    const std::size_t p = (drop + 1) % 3;
    const std::size_t q = (drop + 2) % 3;
    auto cross2 = [&](const Vec& l, const Vec& r) { return l[p] * r[q] - l[q] * r[p]; };
    // a + s·u = c + r·v  with  w = c − a  ⇒  s = (w×v)/(u×v), r = (w×u)/(u×v).
    std::int64_t den = cross2(u, v);
    std::int64_t s_num = cross2(w, v);
    std::int64_t r_num = cross2(w, u);
    if (den < 0) {
      den = -den;
      s_num = -s_num;
      r_num = -r_num;
    }
    if (s_num < 0 || s_num > den || r_num < 0 || r_num > den) return IntersectionKind::disjoint();
    return IntersectionKind::at(point_along(a, u, s_num, den));
  }

  // Parallel directions: distinct lines unless w is parallel to u.
  if (!is_zero(cross(w, u))) return IntersectionKind::disjoint();

  // Collinear. Parametrize by projection onto u, scaled by |u|² so all
  // parameters stay integral: s's interval is [0, uu].
  const std::int64_t uu = dot(u, u);
  const std::int64_t pc = dot(w, u);
  const std::int64_t pd = dot(sub(vec(t.b), a), u);
  const std::int64_t lo = std::max<std::int64_t>(0, std::min(pc, pd));
  const std::int64_t hi = std::min<std::int64_t>(uu, std::max(pc, pd));
  if (lo > hi) return IntersectionKind::disjoint();
  if (lo < hi) return IntersectionKind::overlap();
  return IntersectionKind::at(point_along(a, u, lo, uu));
}

bool segments_conflict(const Segment& s, const Segment& t, std::optional<Cell> allowed_shared) {
  return segments_conflict(s, t, allowed_shared, std::nullopt);
}

bool segments_conflict(const Segment& s, const Segment& t, std::optional<Cell> allowed_a,
                       std::optional<Cell> allowed_b) {
  const IntersectionKind k = classify_intersection(s, t);
  if (k.is_disjoint()) return false;
  if (k.is_overlap()) return true;
  return !allowed_joint(k, s, t, allowed_a) && !allowed_joint(k, s, t, allowed_b);
}

}  // namespace uknight
