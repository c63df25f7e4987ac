#include "parkrank/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "parkrank/classify.hpp"
#include "parkrank/numbers.hpp"

namespace parkrank {

BlockStructure block_structure(const PrefTuple& t) {
  if (!is_parking_function(t)) {
    throw std::domain_error("block structure requires a parking function");
  }
  const int n = t.size();
  std::vector<int> sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    // New block exactly at sorted positions whose value equals the position.
    if (sorted[static_cast<std::size_t>(i)] == i + 1) {
      blocks.emplace_back();
    }
    blocks.back().push_back(sorted[static_cast<std::size_t>(i)]);
  }

  // block_by_value[v] = index of the block whose range contains v.
  std::vector<int> block_by_value(static_cast<std::size_t>(n) + 1, 0);
  int start = 1;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (int v = start; v < start + static_cast<int>(blocks[j].size()); ++v) {
      block_by_value[static_cast<std::size_t>(v)] = static_cast<int>(j);
    }
    start += static_cast<int>(blocks[j].size());
  }

  std::vector<std::vector<int>> index_sets(blocks.size());
  for (int pos = 0; pos < n; ++pos) {
    index_sets[static_cast<std::size_t>(block_by_value[static_cast<std::size_t>(
                    t[pos])])]
        .push_back(pos);
  }
  return BlockStructure(std::move(blocks), std::move(index_sets));
}

PrefTuple ranking_to_upf(const PrefTuple& ranking) {
  if (!is_fubini_ranking(ranking)) {
    throw std::domain_error("map requires a Fubini ranking");
  }
  const int n = ranking.size();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int b = ranking[i];
    const int k = ++seen[static_cast<std::size_t>(b)];
    out.push_back(k == 1 ? b : b + k - 2);
  }
  return PrefTuple(std::move(out));
}

PrefTuple upf_to_ranking(const PrefTuple& upf) {
  if (!is_unit_interval_pf(upf)) {
    throw std::domain_error("map requires a unit interval parking function");
  }
  const BlockStructure bs = block_structure(upf);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(upf.size()));
  for (int v : upf) {
    out.push_back(bs.first_value(bs.block_of_value(v)));
  }
  return PrefTuple(std::move(out));
}

BigCount count_upf_rearrangements(const PrefTuple& upf) {
  if (!is_unit_interval_pf(upf)) {
    throw std::domain_error("rearrangement count requires a unit interval "
                            "parking function");
  }
  const BlockStructure bs = block_structure(upf);
  return multinomial(upf.size(), bs.lengths());
}

RearrangementStream::RearrangementStream(const PrefTuple& upf) {
  if (!is_unit_interval_pf(upf)) {
    throw std::domain_error("rearrangements require a unit interval parking "
                            "function");
  }
  const BlockStructure bs = block_structure(upf);
  blocks_ = bs.blocks();
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    labels_.insert(labels_.end(), blocks_[j].size(), static_cast<int>(j));
  }
}

PrefTuple RearrangementStream::build() const {
  std::vector<std::size_t> cursor(blocks_.size(), 0);
  std::vector<int> out;
  out.reserve(labels_.size());
  for (int label : labels_) {
    out.push_back(blocks_[static_cast<std::size_t>(label)]
                         [cursor[static_cast<std::size_t>(label)]++]);
  }
  return PrefTuple(std::move(out));
}

std::optional<PrefTuple> RearrangementStream::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    return build();
  }
  // Distinct label multisets give distinct tuples, and because block value
  // ranges ascend with the label, label order and tuple order agree: the
  // permutation walk is exactly lexicographic tuple order.
  if (!std::next_permutation(labels_.begin(), labels_.end())) {
    done_ = true;
    return std::nullopt;
  }
  return build();
}

std::vector<PrefTuple> upf_rearrangements(const PrefTuple& upf) {
  RearrangementStream stream(upf);
  std::vector<PrefTuple> out;
  while (auto t = stream.next()) {
    out.push_back(std::move(*t));
  }
  return out;
}

}  // namespace parkrank
