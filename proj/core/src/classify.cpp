#include "parkrank/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "parkrank/parking.hpp"

namespace parkrank {

namespace {

bool first_r_distinct(const PrefTuple& t, int r) {
  if (r < 1 || r > t.size()) {
    throw std::invalid_argument("r must satisfy 1 <= r <= n, got " +
                                std::to_string(r));
  }
  std::vector<int> head(t.begin(), t.begin() + r);
  std::sort(head.begin(), head.end());
  return std::adjacent_find(head.begin(), head.end()) == head.end();
}

}  // namespace

bool is_parking_function(const PrefTuple& t) {
  const int n = t.size();
  std::vector<int> sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[static_cast<std::size_t>(i)] > i + 1) return false;
  }
  return true;
}

bool is_unit_interval_pf(const PrefTuple& t) { return park_unit(t).ok(); }

bool is_fubini_ranking(const PrefTuple& t) {
  const int n = t.size();
  std::vector<int> sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    const int d = sorted[static_cast<std::size_t>(i)];
    if (d > n) return false;
    if (i == 0) {
      if (d != 1) return false;
    } else if (d != sorted[static_cast<std::size_t>(i) - 1] && d != i + 1) {
      return false;
    }
  }
  return true;
}

bool is_r_fubini_ranking(const PrefTuple& t, int r) {
  return first_r_distinct(t, r) && is_fubini_ranking(t);
}

bool is_r_unit_interval_pf(const PrefTuple& t, int r) {
  return first_r_distinct(t, r) && is_unit_interval_pf(t);
}

}  // namespace parkrank
