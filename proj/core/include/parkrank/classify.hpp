#pragma once

#include "parkrank/model.hpp"

namespace parkrank {

/// True iff all entries are at most n and the weakly increasing rearrangement
/// (a'_1,...,a'_n) satisfies a'_i <= i for every i. The empty tuple counts.
bool is_parking_function(const PrefTuple& t);

/// True iff every car parks under the unit interval rule.
bool is_unit_interval_pf(const PrefTuple& t);

/// True iff the tuple is a valid ranking with ties: sorted entries satisfy
/// d_1 = 1 and d_i ∈ {d_{i-1}, i}, with all entries at most n. A k-way tie at
/// rank x covers ranks x..x+k-1, so the next rank used is x+k and no rank is
/// skipped. The empty tuple counts.
bool is_fubini_ranking(const PrefTuple& t);

/// Fubini ranking whose first r entries are pairwise distinct.
/// Throws std::invalid_argument unless 1 <= r <= t.size().
bool is_r_fubini_ranking(const PrefTuple& t, int r);

/// Unit interval parking function whose first r entries are pairwise
/// distinct. Throws std::invalid_argument unless 1 <= r <= t.size().
bool is_r_unit_interval_pf(const PrefTuple& t, int r);

}  // namespace parkrank
