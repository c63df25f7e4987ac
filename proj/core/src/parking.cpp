#include "parkrank/parking.hpp"

#include <stdexcept>

namespace parkrank {

ParkOutcome park_classic(const PrefTuple& prefs) {
  const int n = prefs.size();
  std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> spots(static_cast<std::size_t>(n), 0);
  for (int car = 0; car < n; ++car) {
    const int p = prefs[car];
    int s = p;
    while (s <= n && taken[static_cast<std::size_t>(s)]) ++s;
    if (s > n) {
      return ParkOutcome::failure(car + 1);
    }
    taken[static_cast<std::size_t>(s)] = 1;
    spots[static_cast<std::size_t>(car)] = s;
  }
  return ParkOutcome::success(std::move(spots), prefs);
}

ParkOutcome park_unit(const PrefTuple& prefs) {
  const int n = prefs.size();
  std::vector<char> taken(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> spots(static_cast<std::size_t>(n), 0);
  for (int car = 0; car < n; ++car) {
    const int p = prefs[car];
    int s = 0;
    if (p <= n && !taken[static_cast<std::size_t>(p)]) {
      s = p;
    } else if (p + 1 <= n && !taken[static_cast<std::size_t>(p) + 1]) {
      s = p + 1;
    } else {
      return ParkOutcome::failure(car + 1);
    }
    taken[static_cast<std::size_t>(s)] = 1;
    spots[static_cast<std::size_t>(car)] = s;
  }
  return ParkOutcome::success(std::move(spots), prefs);
}

DisplacementStats displacement_stats(const ParkOutcome& outcome) {
  if (!outcome.ok()) {
    throw std::domain_error("displacement is undefined for a failed outcome");
  }
  return DisplacementStats{outcome.total_displacement(), outcome.lucky_count()};
}

}  // namespace parkrank
