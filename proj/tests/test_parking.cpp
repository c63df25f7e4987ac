#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "parkrank/parking.hpp"

using parkrank::park_classic;
using parkrank::park_unit;
using parkrank::PrefTuple;

TEST_CASE("classic rule parks simple examples") {
  const auto out = park_classic(PrefTuple({1, 1, 2}));
  REQUIRE(out.ok());
  CHECK(out.spots() == std::vector<int>{1, 2, 3});
  CHECK(out.total_displacement() == 2);
  CHECK(out.lucky_count() == 1);

  const auto fail = park_classic(PrefTuple({2, 2}));
  REQUIRE_FALSE(fail.ok());
  CHECK(fail.failed_car() == 2);

  CHECK(park_classic(PrefTuple()).ok());
  // A preference beyond the street fails that car outright.
  CHECK(park_classic(PrefTuple({3, 1})).failed_car() == 1);
}

TEST_CASE("unit rule allows at most one spot of rolling") {
  // Car 2 prefers 1, rolls one spot to 2.
  const auto out = park_unit(PrefTuple({1, 1, 3}));
  REQUIRE(out.ok());
  CHECK(out.spots() == std::vector<int>{1, 2, 3});

  // Car 3 prefers 1 with spots 1 and 2 both taken: rolling past 2 is not
  // allowed, so it fails even though spots 3 and 4 are free.
  CHECK_FALSE(park_unit(PrefTuple({1, 2, 1, 1})).ok());
  CHECK(park_unit(PrefTuple({1, 2, 1, 1})).failed_car() == 3);

  // Classic would roll (1,1,1) to spots 1,2,3; unit strands car 3.
  CHECK(park_classic(PrefTuple({1, 1, 1})).ok());
  CHECK_FALSE(park_unit(PrefTuple({1, 1, 1})).ok());
}

TEST_CASE("unit rule fails car 6 of 3,2,1,4,4,4") {
  const auto out = park_unit(PrefTuple({3, 2, 1, 4, 4, 4}));
  REQUIRE_FALSE(out.ok());
  CHECK(out.failed_car() == 6);
}

TEST_CASE("both rules agree with the oracle simulations") {
  for (int n = 0; n <= 5; ++n) {
    // Entries up to n + 1 exercise preferences past the street end.
    for (const auto& raw : oracles::all_tuples(n, n + 1)) {
      const PrefTuple t(raw);
      CHECK(park_classic(t).ok() == oracles::is_pf(raw));
      CHECK(park_unit(t).ok() == oracles::is_upf(raw));
    }
  }
}

TEST_CASE("unit and classic rules assign identical spots on unit successes") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& raw : oracles::all_tuples(n, n)) {
      const PrefTuple t(raw);
      const auto unit = park_unit(t);
      if (!unit.ok()) continue;
      const auto classic = park_classic(t);
      REQUIRE(classic.ok());
      CHECK(unit.spots() == classic.spots());
      CHECK(unit.total_displacement() == classic.total_displacement());
    }
  }
}

TEST_CASE("displacement_stats summarizes successes and rejects failures") {
  const auto out = park_classic(PrefTuple({1, 1, 1}));
  const auto stats = parkrank::displacement_stats(out);
  CHECK(stats.total == 3);
  CHECK(stats.lucky == 1);
  CHECK_THROWS_AS(parkrank::displacement_stats(park_unit(PrefTuple({2, 2}))),
                  std::domain_error);
}
