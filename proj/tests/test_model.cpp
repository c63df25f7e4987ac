#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "parkrank/model.hpp"

using parkrank::BigCount;
using parkrank::BlockStructure;
using parkrank::Composition;
using parkrank::ParkOutcome;
using parkrank::parse_tuple;
using parkrank::PrefTuple;
using parkrank::render_tuple;
using parkrank::SeqRecord;

TEST_CASE("PrefTuple validates entries") {
  CHECK_NOTHROW(PrefTuple({1, 5, 2}));
  CHECK_THROWS_AS(PrefTuple({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PrefTuple({-3}), std::invalid_argument);
  CHECK(PrefTuple().empty());
  CHECK(PrefTuple({7}).size() == 1);
  CHECK(PrefTuple({1, 2})[1] == 2);
  CHECK(PrefTuple({1, 2}) == PrefTuple({1, 2}));
  CHECK(PrefTuple({1, 2}) < PrefTuple({1, 3}));
  CHECK(PrefTuple({1, 2}) < PrefTuple({1, 2, 1}));
}

TEST_CASE("parse_tuple accepts commas, spaces, and both") {
  CHECK(parse_tuple("1,1,2") == PrefTuple({1, 1, 2}));
  CHECK(parse_tuple("1 1 2") == PrefTuple({1, 1, 2}));
  CHECK(parse_tuple(" 1, 2 ,3 ") == PrefTuple({1, 2, 3}));
  CHECK(parse_tuple("10,11") == PrefTuple({10, 11}));
  CHECK(parse_tuple("") == PrefTuple());
  CHECK(parse_tuple("   ") == PrefTuple());
}

TEST_CASE("parse_tuple rejects malformed input") {
  CHECK_THROWS_AS(parse_tuple("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple(",1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("1,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("1, ,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("99999999999999999999"), std::invalid_argument);
}

TEST_CASE("render_tuple round-trips through parse_tuple") {
  const PrefTuple t({3, 1, 4, 1, 5});
  CHECK(render_tuple(t) == "3,1,4,1,5");
  CHECK(parse_tuple(render_tuple(t)) == t);
  CHECK(render_tuple(PrefTuple()).empty());
}

TEST_CASE("ParkOutcome derives displacement statistics") {
  const PrefTuple prefs({1, 1, 2});
  const auto out = ParkOutcome::success({1, 2, 3}, prefs);
  REQUIRE(out.ok());
  CHECK(out.spots() == std::vector<int>{1, 2, 3});
  CHECK(out.displacements() == std::vector<int>{0, 1, 1});
  CHECK(out.total_displacement() == 2);
  CHECK(out.lucky_count() == 1);
  CHECK_THROWS_AS(out.failed_car(), std::logic_error);
}

TEST_CASE("ParkOutcome rejects invalid spot assignments") {
  const PrefTuple prefs({1, 1});
  CHECK_THROWS_AS(ParkOutcome::success({1, 1}, prefs), std::logic_error);
  CHECK_THROWS_AS(ParkOutcome::success({1, 3}, prefs), std::logic_error);
  CHECK_THROWS_AS(ParkOutcome::success({1}, prefs), std::logic_error);
  // Car 2 prefers 2 but sits at 1: parked before its preference.
  CHECK_THROWS_AS(ParkOutcome::success({2, 1}, PrefTuple({1, 2})),
                  std::logic_error);
}

TEST_CASE("ParkOutcome failure blocks success accessors") {
  const auto out = ParkOutcome::failure(6);
  CHECK_FALSE(out.ok());
  CHECK(out.failed_car() == 6);
  CHECK_THROWS_AS(out.spots(), std::logic_error);
  CHECK_THROWS_AS(out.displacements(), std::logic_error);
  CHECK_THROWS_AS(out.total_displacement(), std::logic_error);
  CHECK_THROWS_AS(out.lucky_count(), std::logic_error);
}

TEST_CASE("Composition validates parts and totals them") {
  const Composition c({3, 1, 2});
  CHECK(c.size() == 3);
  CHECK(c.total() == 6);
  CHECK(Composition().total() == 0);
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
}

TEST_CASE("BlockStructure exposes blocks, ranges, and index sets") {
  // Sorted form of (8,1,5,5,1,2,4,7): 1,1,2 | 4 | 5,5 | 7 | 8.
  const BlockStructure bs({{1, 1, 2}, {4}, {5, 5}, {7}, {8}},
                          {{1, 4, 5}, {6}, {2, 3}, {7}, {0}});
  CHECK(bs.block_count() == 5);
  CHECK(bs.total_length() == 8);
  CHECK(bs.lengths().parts == std::vector<int>{3, 1, 2, 1, 1});
  CHECK(bs.first_value(0) == 1);
  CHECK(bs.first_value(1) == 4);
  CHECK(bs.first_value(2) == 5);
  CHECK(bs.first_value(3) == 7);
  CHECK(bs.first_value(4) == 8);
  CHECK(bs.block_of_value(1) == 0);
  CHECK(bs.block_of_value(3) == 0);
  CHECK(bs.block_of_value(4) == 1);
  CHECK(bs.block_of_value(6) == 2);
  CHECK(bs.block_of_value(8) == 4);
  CHECK_THROWS_AS(bs.block_of_value(0), std::invalid_argument);
  CHECK_THROWS_AS(bs.block_of_value(9), std::invalid_argument);
}

TEST_CASE("BlockStructure rejects broken invariants") {
  using V = std::vector<std::vector<int>>;
  // Block must start at its range minimum.
  CHECK_THROWS_AS(BlockStructure(V{{2}}, V{{0}}), std::invalid_argument);
  // Value escapes the block's range.
  CHECK_THROWS_AS(BlockStructure(V{{1, 3}}, V{{0, 1}}), std::invalid_argument);
  // Not weakly increasing inside a block.
  CHECK_THROWS_AS(BlockStructure(V{{1, 2, 1}}, V{{0, 1, 2}}),
                  std::invalid_argument);
  // Index sets must partition the positions.
  CHECK_THROWS_AS(BlockStructure(V{{1, 1}}, V{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(BlockStructure(V{{1, 1}}, V{{0, 2}}), std::invalid_argument);
  // Sizes must line up.
  CHECK_THROWS_AS(BlockStructure(V{{1, 1}}, V{{0}}), std::invalid_argument);
  CHECK_THROWS_AS(BlockStructure(V{{1}}, V{}), std::invalid_argument);
  // Empty structure is the n = 0 case.
  CHECK(BlockStructure({}, {}).total_length() == 0);
}

TEST_CASE("SeqRecord term lookup respects the source indexing") {
  SeqRecord rec;
  rec.id = "A000000";
  rec.first_index = 3;
  rec.terms = {BigCount(7), BigCount(8), BigCount(9)};
  CHECK(rec.last_index() == 5);
  REQUIRE(rec.term_at(3) != nullptr);
  CHECK(*rec.term_at(3) == 7);
  CHECK(*rec.term_at(5) == 9);
  CHECK(rec.term_at(2) == nullptr);
  CHECK(rec.term_at(6) == nullptr);
  CHECK(SeqRecord{}.term_at(0) == nullptr);
}
