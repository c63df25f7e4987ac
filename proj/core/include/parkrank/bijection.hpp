#pragma once

#include <optional>
#include <vector>

#include "parkrank/model.hpp"

namespace parkrank {

/// Block decomposition of a parking function: sort the tuple, cut before
/// every position i whose sorted value equals i, and record which original
/// positions feed each block (by value range).
/// Throws std::domain_error unless t is a parking function.
BlockStructure block_structure(const PrefTuple& t);

/// The map phi: Fubini ranking -> unit interval parking function. The k-th
/// occurrence (k >= 2) of a value b, scanning left to right, becomes
/// b + k - 2; first occurrences are kept. Every car parks in the same spot
/// under the unit rule as it did under the classic rule before the map.
/// Throws std::domain_error unless `ranking` is a Fubini ranking.
PrefTuple ranking_to_upf(const PrefTuple& ranking);

/// The map psi, inverse of ranking_to_upf: every entry is replaced by the
/// smallest value of the block owning it.
/// Throws std::domain_error unless `upf` is a unit interval parking function.
PrefTuple upf_to_ranking(const PrefTuple& upf);

/// Number of rearrangements of `upf` that are again unit interval parking
/// functions: the multinomial of its block lengths.
/// Throws std::domain_error unless `upf` is a unit interval parking function.
BigCount count_upf_rearrangements(const PrefTuple& upf);

/// Streams exactly the rearrangements of a unit interval parking function
/// that are again unit interval parking functions: the interleavings of its
/// blocks that keep each block's internal weakly increasing order.
///
/// Tuples come out in lexicographic order with no duplicates; the count
/// equals count_upf_rearrangements. Single consumer per stream.
class RearrangementStream {
 public:
  /// Throws std::domain_error unless `upf` is a unit interval parking
  /// function.
  explicit RearrangementStream(const PrefTuple& upf);

  std::optional<PrefTuple> next();

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> labels_;  // block id per position; starts sorted ascending
  bool first_ = true;
  bool done_ = false;

  PrefTuple build() const;
};

/// Convenience: drains a RearrangementStream into a vector.
std::vector<PrefTuple> upf_rearrangements(const PrefTuple& upf);

}  // namespace parkrank
