#pragma once

#include "parkrank/model.hpp"

namespace parkrank {

/// Classic rule: cars enter in index order and each takes the first free spot
/// at or after its preference. Fails at the first car that finds no free spot
/// among 1..n (preferences beyond n cannot park at all).
ParkOutcome park_classic(const PrefTuple& prefs);

/// Unit interval rule: a car parks at its preference if that spot is free,
/// otherwise at preference + 1 if that spot exists and is free, otherwise it
/// fails. The street has exactly n spots; there is no rolling past spot n.
ParkOutcome park_unit(const PrefTuple& prefs);

struct DisplacementStats {
  long long total = 0;
  int lucky = 0;

  bool operator==(const DisplacementStats&) const = default;
};

/// Total displacement and the number of lucky (displacement-0) cars.
/// Throws std::domain_error for a failed outcome.
DisplacementStats displacement_stats(const ParkOutcome& outcome);

}  // namespace parkrank
