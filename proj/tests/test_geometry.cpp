#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "uknight/geometry.hpp"

using namespace uknight;

namespace {

RationalPoint rp(Rational x, Rational y, Rational z) { return {x, y, z}; }
Rational R(std::int64_t n, std::int64_t d = 1) { return Rational::make(n, d); }

}  // namespace

TEST_CASE("rational normalisation") {
  CHECK(Rational::make(2, 4) == Rational{1, 2});
  CHECK(Rational::make(3, -6) == Rational{-1, 2});
  CHECK(Rational::make(0, -5) == Rational{0, 1});
  CHECK_THROWS(Rational::make(1, 0));
  CHECK(Rational::make(-4, 2).to_string() == "-2");
  CHECK(Rational::make(2, 5).to_string() == "2/5");
}

TEST_CASE("classify_intersection examples") {
  SUBCASE("interior crossing in a plane") {
    const auto k = classify_intersection({{0, 0, 0}, {1, 2, 0}}, {{1, 0, 0}, {0, 2, 0}});
    CHECK(k == IntersectionKind::at(rp(R(1, 2), R(1), R(0))));
  }
  SUBCASE("skew knight segments") {
    CHECK(classify_intersection({{0, 0, 0}, {0, 1, 2}}, {{1, 1, 1}, {2, 1, 3}}).is_disjoint());
  }
  SUBCASE("collinear overlap") {
    CHECK(classify_intersection({{0, 0, 0}, {2, 4, 0}}, {{1, 2, 0}, {3, 6, 0}}).is_overlap());
  }
  SUBCASE("collinear touching at an endpoint") {
    const auto k = classify_intersection({{0, 0, 0}, {1, 2, 0}}, {{1, 2, 0}, {2, 4, 0}});
    CHECK(k == IntersectionKind::at(rp(R(1), R(2), R(0))));
  }
  SUBCASE("collinear with a gap") {
    CHECK(classify_intersection({{0, 0, 0}, {1, 2, 0}}, {{2, 4, 0}, {3, 6, 0}}).is_disjoint());
  }
  SUBCASE("parallel distinct lines") {
    CHECK(classify_intersection({{0, 0, 0}, {1, 2, 0}}, {{0, 0, 1}, {1, 2, 1}}).is_disjoint());
  }
  SUBCASE("coplanar lines meeting outside one segment") {
    CHECK(classify_intersection({{0, 0, 0}, {2, 0, 0}}, {{3, -1, 0}, {3, 1, 0}}).is_disjoint());
  }
  SUBCASE("T-junction at an interior point") {
    const auto k = classify_intersection({{0, 0, 0}, {4, 0, 0}}, {{1, 0, 0}, {1, 3, 2}});
    CHECK(k == IntersectionKind::at(rp(R(1), R(0), R(0))));
  }
  SUBCASE("crossing off the coordinate planes") {
    // Lines in the plane x = y crossing at (1, 1, 1).
    const auto k = classify_intersection({{0, 0, 0}, {2, 2, 2}}, {{0, 0, 2}, {2, 2, 0}});
    CHECK(k == IntersectionKind::at(rp(R(1), R(1), R(1))));
  }
}

TEST_CASE("invalid segments are rejected") {
  CHECK_THROWS_AS(classify_intersection({{1, 1, 1}, {1, 1, 1}}, {{0, 0, 0}, {1, 2, 0}}),
                  InvalidSegment);
  CHECK_THROWS_AS(classify_intersection({{0, 0, 0}, {1, 2, 0}}, {{0, 0, kMaxExtent + 1}, {0, 0, 0}}),
                  InvalidSegment);
  CHECK_THROWS_AS(segments_conflict({{0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {1, 2, 0}}),
                  InvalidSegment);
}

TEST_CASE("extreme coordinates stay exact") {
  const int m = kMaxExtent;
  const auto k = classify_intersection({{-m, -m, -m}, {m, m, m}}, {{-m, m, -m}, {m, -m, m}});
  CHECK(k == IntersectionKind::at(rp(R(0), R(0), R(0))));
  const Segment s{{-m, -m, -m}, {m, m - 1, m}};
  const Segment t{{-m, m, -m}, {m, -m, m - 3}};
  CHECK(classify_intersection(s, t) == oracle::rational_intersection(s, t));
}

TEST_CASE("segments_conflict examples") {
  const Segment s{{0, 0, 0}, {1, 2, 0}};
  CHECK_FALSE(segments_conflict(s, {{1, 2, 0}, {2, 0, 0}}, Cell{1, 2, 0}));
  CHECK(segments_conflict(s, {{1, 0, 0}, {0, 2, 0}}));
  CHECK_FALSE(segments_conflict(s, {{0, 0, 1}, {1, 2, 1}}));
  // Touching at an endpoint is a conflict unless that joint is exempt.
  CHECK(segments_conflict(s, {{1, 2, 0}, {2, 0, 0}}));
  // The exemption only covers a point that is an endpoint of both.
  CHECK(segments_conflict(s, {{1, 0, 0}, {0, 2, 0}}, Cell{1, 2, 0}));
  CHECK(segments_conflict({{0, 0, 0}, {4, 0, 0}}, {{2, 0, 0}, {2, 1, 2}}, Cell{2, 0, 0}));
  // Collinear overlap is never exempt.
  CHECK(segments_conflict({{0, 0, 0}, {2, 4, 0}}, {{1, 2, 0}, {0, 0, 0}}, Cell{0, 0, 0}));
}

TEST_CASE("classification is symmetric and invariant under lattice isometries") {
  std::mt19937_64 rng(7);
  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int trial = 0; trial < 2000; ++trial) {
    const auto [s, t] = oracle::random_segment_pair(rng);
    const auto k = classify_intersection(s, t);
    CHECK(classify_intersection(t, s).kind == k.kind);
    CHECK(classify_intersection({s.b, s.a}, t).kind == k.kind);
    CHECK(classify_intersection(s, {t.b, t.a}).kind == k.kind);
    if (k.is_point()) {
      CHECK(classify_intersection(t, s) == k);
      CHECK(classify_intersection({s.b, s.a}, {t.b, t.a}) == k);
    }

    const auto& p = perms[rng() % perms.size()];
    const int sx = rng() % 2 ? 1 : -1;
    const int ox = static_cast<int>(rng() % 21) - 10;
    const int oy = static_cast<int>(rng() % 21) - 10;
    const int oz = static_cast<int>(rng() % 21) - 10;
    auto map = [&](Cell c) {
      const std::array<int, 3> v{c.x, c.y, c.z};
      return Cell{sx * v[static_cast<std::size_t>(p[0])] + ox, v[static_cast<std::size_t>(p[1])] + oy,
                  v[static_cast<std::size_t>(p[2])] + oz};
    };
    CHECK(classify_intersection({map(s.a), map(s.b)}, {map(t.a), map(t.b)}).kind == k.kind);
  }
}

TEST_CASE("agrees with the rational parametric solver") {
  std::mt19937_64 rng(2024);
  int points = 0, overlaps = 0, disjoint = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto [s, t] = oracle::random_segment_pair(rng);
    const auto got = classify_intersection(s, t);
    const auto want = oracle::rational_intersection(s, t);
    REQUIRE_MESSAGE(got == want, to_string(s.a), to_string(s.b), " vs ", to_string(t.a),
                    to_string(t.b));
    points += got.is_point();
    overlaps += got.is_overlap();
    disjoint += got.is_disjoint();
  }
  CHECK(points > 2000);
  CHECK(overlaps > 500);
  CHECK(disjoint > 2000);
}

TEST_CASE("knight segments contain no interior lattice point") {
  for (const auto& d : knight_offsets()) {
    CHECK(std::gcd(std::gcd(std::abs(d.dx), std::abs(d.dy)), std::abs(d.dz)) == 1);
    const Cell a{2, 2, 2};
    const Cell b = a + d;
    const Segment s{a, b};
    for (int x = 0; x <= 4; ++x)
      for (int y = 0; y <= 4; ++y)
        for (int z = 0; z <= 4; ++z) {
          const Cell p{x, y, z};
          if (p == a || p == b) continue;
          // A unit probe starting at p meets s only if p lies on s.
          const Segment probe{p, {x + 3, y + 5, z + 7}};
          const auto k = classify_intersection(s, probe);
          CHECK_FALSE(k.is_point_at(p));
        }
  }
}
