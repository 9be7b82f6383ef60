#include "doctest.h"
#include "uknight/records.hpp"
#include "uknight/search.hpp"

using namespace uknight;

TEST_CASE("registry contents") {
  const auto& recs = builtin_records();
  CHECK(recs.size() == 11);
  for (const auto& r : recs) {
    CHECK(std::is_sorted(r.dims.begin(), r.dims.end()));
    CHECK(r.length >= 0);
  }
  CHECK(find_record(Box(3, 3, 3), false)->length == 15);
  CHECK(find_record(Box(3, 4, 4), false)->length == 27);
  CHECK(find_record(Box(2, 3, 3), true)->length == 8);
  CHECK(find_record(Box(2, 2, 3), true)->length == 4);
  CHECK(find_record(Box(8, 8, 8), false)->length == 395);
  CHECK_FALSE(find_record(Box(2, 2, 3), false).has_value());
  CHECK_FALSE(find_record(Box(3, 3, 3), true).has_value());
}

TEST_CASE("lookup ignores axis order") {
  for (const auto& dims : {std::array<int, 3>{4, 3, 4}, {4, 4, 3}, {3, 4, 4}}) {
    CHECK(find_record(builtin_records(), dims, false)->length == 27);
  }
  CHECK(find_record(Box(4, 2, 4), false)->length == 14);
  CHECK(find_record(Box(3, 2, 3), true)->length == 8);
}

TEST_CASE("compare") {
  CHECK(compare(Box(3, 3, 3), false, 15).kind == CompareStatus::Kind::kMatches);
  const auto below = compare(Box(3, 3, 3), false, 12);
  CHECK(below.kind == CompareStatus::Kind::kBelow);
  CHECK(below.delta == 3);
  CHECK(below.to_string() == "below(3)");
  const auto better = compare(Box(4, 3, 4), false, 30);
  CHECK(better.to_string() == "improves(3)");
  CHECK(compare(Box(9, 9, 9), false, 500).kind == CompareStatus::Kind::kUnlisted);
  CHECK(compare(Box(2, 2, 3), false, 3).to_string() == "unlisted");

  SearchResult r;
  r.best = Tour{Box(2, 3, 3), {}, true};
  r.length = 8;
  CHECK(compare(r).kind == CompareStatus::Kind::kMatches);
}

TEST_CASE("cube records reproduce the published coverage") {
  const std::array<int, 6> percents{59, 73, 71, 74, 76, 77};
  for (int n = 3; n <= 8; ++n) {
    const auto rec = find_record(Box(n, n, n), false);
    REQUIRE(rec);
    CHECK(coverage_for_length(rec->length, Box(n, n, n), false).percent ==
          percents[static_cast<std::size_t>(n - 3)]);
  }
}
