#include "parkrank/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace parkrank {

PrefTuple::PrefTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int v : entries_) {
    if (v < 1) {
      throw std::invalid_argument("tuple entries must be positive, got " +
                                  std::to_string(v));
    }
  }
}

ParkOutcome ParkOutcome::success(std::vector<int> spots, const PrefTuple& prefs) {
  const int n = prefs.size();
  if (static_cast<int>(spots.size()) != n) {
    throw std::logic_error("spot list length does not match preference list");
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int s : spots) {
    if (s < 1 || s > n || seen[static_cast<std::size_t>(s)]) {
      throw std::logic_error("spots are not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(s)] = 1;
  }
  ParkOutcome out;
  out.spots_ = std::move(spots);
  out.displacements_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int d = out.spots_[static_cast<std::size_t>(i)] - prefs[i];
    if (d < 0) {
      throw std::logic_error("car parked before its preference");
    }
    out.displacements_.push_back(d);
    out.total_displacement_ += d;
    if (d == 0) ++out.lucky_count_;
  }
  return out;
}

ParkOutcome ParkOutcome::failure(int car) {
  if (car < 1) {
    throw std::logic_error("failing car index must be positive");
  }
  ParkOutcome out;
  out.failed_car_ = car;
  return out;
}

int ParkOutcome::failed_car() const {
  if (ok()) {
    throw std::logic_error("failed_car() called on a successful outcome");
  }
  return failed_car_;
}

const std::vector<int>& ParkOutcome::spots() const {
  if (!ok()) {
    throw std::logic_error("spots() called on a failed outcome");
  }
  return spots_;
}

const std::vector<int>& ParkOutcome::displacements() const {
  if (!ok()) {
    throw std::logic_error("displacements() called on a failed outcome");
  }
  return displacements_;
}

long long ParkOutcome::total_displacement() const {
  if (!ok()) {
    throw std::logic_error("total_displacement() called on a failed outcome");
  }
  return total_displacement_;
}

int ParkOutcome::lucky_count() const {
  if (!ok()) {
    throw std::logic_error("lucky_count() called on a failed outcome");
  }
  return lucky_count_;
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int part : parts) {
    if (part < 1) {
      throw std::invalid_argument("composition parts must be positive, got " +
                                  std::to_string(part));
    }
  }
}

int Composition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

BlockStructure::BlockStructure(std::vector<std::vector<int>> blocks,
                               std::vector<std::vector<int>> index_sets)
    : blocks_(std::move(blocks)), index_sets_(std::move(index_sets)) {
  if (blocks_.size() != index_sets_.size()) {
    throw std::invalid_argument("block and index set counts differ");
  }
  std::vector<int> lens;
  lens.reserve(blocks_.size());
  int start = 1;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto& b = blocks_[j];
    if (b.empty()) {
      throw std::invalid_argument("empty block");
    }
    const int len = static_cast<int>(b.size());
    if (b.front() != start) {
      throw std::invalid_argument("block must start at its value range minimum");
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0 && b[i] < b[i - 1]) {
        throw std::invalid_argument("block values must be weakly increasing");
      }
      if (b[i] < start || b[i] > start + len - 1) {
        throw std::invalid_argument("block value outside its range");
      }
    }
    if (static_cast<int>(index_sets_[j].size()) != len) {
      throw std::invalid_argument("index set size does not match block length");
    }
    starts_.push_back(start);
    lens.push_back(len);
    start += len;
  }
  total_ = start - 1;

  std::vector<char> used(static_cast<std::size_t>(total_), 0);
  for (const auto& set : index_sets_) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      const int pos = set[i];
      if (pos < 0 || pos >= total_ || used[static_cast<std::size_t>(pos)]) {
        throw std::invalid_argument("index sets must partition the positions");
      }
      if (i > 0 && set[i] <= set[i - 1]) {
        throw std::invalid_argument("index sets must be strictly increasing");
      }
      used[static_cast<std::size_t>(pos)] = 1;
    }
  }
  lengths_ = Composition(std::move(lens));
}

int BlockStructure::block_of_value(int v) const {
  if (v < 1 || v > total_) {
    throw std::invalid_argument("value outside 1..n: " + std::to_string(v));
  }
  // Last block whose start is <= v.
  auto it = std::upper_bound(starts_.begin(), starts_.end(), v);
  return static_cast<int>(it - starts_.begin()) - 1;
}

const BigCount* SeqRecord::term_at(long long index) const {
  if (empty() || index < first_index || index > last_index()) {
    return nullptr;
  }
  return &terms[static_cast<std::size_t>(index - first_index)];
}

namespace {

int parse_entry(std::string_view token) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range ||
      (ec == std::errc() && ptr == last &&
       value > std::numeric_limits<int>::max())) {
    throw std::invalid_argument("tuple entry out of range: '" +
                                std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  }
  if (value < 1) {
    throw std::invalid_argument("tuple entries must be positive, got '" +
                                std::string(token) + "'");
  }
  return static_cast<int>(value);
}

}  // namespace

PrefTuple parse_tuple(std::string_view text) {
  std::vector<int> entries;
  std::size_t token_start = 0;
  bool in_token = false;
  bool field_filled = false;  // a token appeared since the last comma
  bool any_comma = false;

  auto close_token = [&](std::size_t end) {
    if (in_token) {
      entries.push_back(parse_entry(text.substr(token_start, end - token_start)));
      in_token = false;
      field_filled = true;
    }
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ',') {
      close_token(i);
      if (!field_filled) {
        throw std::invalid_argument("empty field before ',' at position " +
                                    std::to_string(i + 1));
      }
      field_filled = false;
      any_comma = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      close_token(i);
    } else {
      if (!in_token) {
        token_start = i;
        in_token = true;
      }
    }
  }
  close_token(text.size());
  if (any_comma && !field_filled) {
    throw std::invalid_argument("empty field after trailing ','");
  }
  return PrefTuple(std::move(entries));
}

std::string render_tuple(const PrefTuple& t) {
  std::string out;
  for (int i = 0; i < t.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(t[i]);
  }
  return out;
}

}  // namespace parkrank
