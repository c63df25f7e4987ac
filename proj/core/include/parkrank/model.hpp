#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkrank {

/// Exact integer type for every count in the library. Fubini numbers outgrow
/// 64 bits around n = 20, so counting code never touches machine integers.
using BigCount = boost::multiprecision::cpp_int;

/// A preference list / ranking: a finite sequence of positive integers.
///
/// Entries may exceed the length; membership in the [n]^n families is decided
/// by the classifiers, not by the type. Positions are 0-based in code; the CLI
/// and all reports render cars and spots 1-based.
class PrefTuple {
 public:
  PrefTuple() = default;
  /// Throws std::invalid_argument if any entry is < 1.
  explicit PrefTuple(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int operator[](int pos) const { return entries_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& entries() const { return entries_; }

  std::vector<int>::const_iterator begin() const { return entries_.begin(); }
  std::vector<int>::const_iterator end() const { return entries_.end(); }

  bool operator==(const PrefTuple&) const = default;
  auto operator<=>(const PrefTuple&) const = default;

 private:
  std::vector<int> entries_;
};

/// Result of driving one preference list through a parking rule: either the
/// spot every car ended up in, or the first car that failed to park.
class ParkOutcome {
 public:
  /// Builds a successful outcome and derives the displacement statistics.
  /// Checks that `spots` is a permutation of [n] and that no car sits before
  /// its preference; violations throw std::logic_error.
  static ParkOutcome success(std::vector<int> spots, const PrefTuple& prefs);
  /// `car` is the 1-based index of the first car that could not park.
  static ParkOutcome failure(int car);

  bool ok() const { return failed_car_ == 0; }
  /// 1-based index of the failing car. Throws std::logic_error on success.
  int failed_car() const;

  /// spots()[i] is the 1-based spot taken by car i+1. Failure outcomes have
  /// no spots; accessors below throw std::logic_error for them.
  const std::vector<int>& spots() const;
  const std::vector<int>& displacements() const;
  long long total_displacement() const;
  int lucky_count() const;

  bool operator==(const ParkOutcome&) const = default;

 private:
  ParkOutcome() = default;
  std::vector<int> spots_;
  std::vector<int> displacements_;
  long long total_displacement_ = 0;
  int lucky_count_ = 0;
  int failed_car_ = 0;  // 0 = success
};

/// An ordered list of positive parts; the block lengths of a tuple form one.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  /// Throws std::invalid_argument if any part is < 1.
  explicit Composition(std::vector<int> p);

  int size() const { return static_cast<int>(parts.size()); }
  int total() const;

  bool operator==(const Composition&) const = default;
};

/// The weakly increasing rearrangement of a parking function split into
/// blocks, each block starting at a sorted position whose value equals the
/// position. Block j owns the consecutive value range
/// [first_value(j), first_value(j) + length_j - 1]; these ranges tile [1, n].
class BlockStructure {
 public:
  /// `index_sets[j]` lists the 0-based positions of the original tuple whose
  /// values fall in block j's range. The constructor checks all structural
  /// invariants and throws std::invalid_argument on violation.
  BlockStructure(std::vector<std::vector<int>> blocks,
                 std::vector<std::vector<int>> index_sets);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  int total_length() const { return total_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<std::vector<int>>& index_sets() const { return index_sets_; }
  const Composition& lengths() const { return lengths_; }

  /// Smallest value of block j; equals 1 + sum of the preceding lengths.
  int first_value(int j) const { return starts_[static_cast<std::size_t>(j)]; }
  /// Index of the block whose value range contains v (1 <= v <= n).
  int block_of_value(int v) const;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<std::vector<int>> index_sets_;
  std::vector<int> starts_;
  Composition lengths_;
  int total_ = 0;
};

/// A fragment of an integer sequence together with its source indexing, as
/// read from a b-file or produced locally for a cross-check.
struct SeqRecord {
  std::string id;
  long long first_index = 0;
  std::vector<BigCount> terms;

  bool empty() const { return terms.empty(); }
  long long last_index() const {
    return first_index + static_cast<long long>(terms.size()) - 1;
  }
  /// nullptr when `index` is outside the fetched range.
  const BigCount* term_at(long long index) const;
};

/// Parses "1,1,2", "1 1 2", or a mix of commas and whitespace. Empty or
/// all-whitespace input is the empty tuple. Throws std::invalid_argument
/// naming the offending token (non-integer, zero, negative, out of range,
/// or an empty field between commas).
PrefTuple parse_tuple(std::string_view text);

/// Canonical text form: comma-separated decimal entries, no brackets.
std::string render_tuple(const PrefTuple& t);

}  // namespace parkrank
