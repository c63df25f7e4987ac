#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parkrank/model.hpp"

namespace parkrank::oeis {

/// True iff `id` is `A` followed by exactly six decimal digits.
bool is_valid_sequence_id(std::string_view id);

/// Parses b-file text: one `<index> <value>` pair per data line, `#` comment
/// lines and blank lines ignored, indices contiguous and ascending. Throws
/// std::invalid_argument citing the 1-based line number of the first offender.
SeqRecord parse_bfile(std::string_view text, std::string id);

/// Cache directory resolution: $PARKRANK_OEIS_CACHE if set, else a per-user
/// cache directory (under $XDG_CACHE_HOME or ~/.cache), else a directory
/// beneath the current path as a last resort.
std::filesystem::path default_cache_dir();

/// One cached b-file: raw bytes as served plus the parse of those bytes.
struct CacheEntry {
  std::string id;
  std::int64_t fetched_at = 0;  // unix seconds
  std::string raw;
  SeqRecord parsed;
};

/// Reads `<id>.bfile` and its `<id>.meta` sidecar from `dir`. Returns
/// std::nullopt when absent; throws std::invalid_argument when present but
/// unparseable.
std::optional<CacheEntry> load_cache_entry(const std::filesystem::path& dir,
                                           const std::string& id);

/// Writes entry atomically (temp file in `dir`, then rename), creating `dir`
/// if needed. Safe against concurrent writers of the same id.
void store_cache_entry(const std::filesystem::path& dir, const CacheEntry& entry);

/// Snapshots compiled into the library so the offline path works with no
/// cache. Returned records carry the full bundled term list.
std::optional<SeqRecord> bundled_snapshot(const std::string& id);
std::vector<std::string> bundled_ids();

struct FetchOptions {
  bool offline = false;
  /// Overrides default_cache_dir() when set.
  std::optional<std::filesystem::path> cache_dir;
  /// Scheme + host, no trailing slash. Tests point this at a local server.
  std::string base_url = "https://oeis.org";
};

/// Returns the first `limit` terms of `id` (fewer if the source is shorter),
/// with first_index taken from the b-file itself. Resolution order: cache,
/// then network (unless offline) with a cache write-through, then bundled
/// snapshot. Throws std::invalid_argument for a malformed id and
/// std::runtime_error when no source can supply the sequence.
SeqRecord fetch_sequence(const std::string& id, std::size_t limit,
                         const FetchOptions& opts = {});

struct CrosscheckRow {
  std::int64_t computed_index = 0;   // index in the computed record
  std::int64_t reference_index = 0;  // computed_index + offset_shift
  BigCount computed;
  BigCount reference;
  bool match = false;
};

struct CrosscheckReport {
  std::string id;
  std::int64_t offset_shift = 0;
  std::vector<CrosscheckRow> rows;  // one per overlapping index, ascending
  bool all_match = false;
};

/// Aligns computed index i with reference index i + offset_shift and compares
/// every overlapping term. The shift is the caller's to supply, read off the
/// records (reference.first_index - computed.first_index aligns the heads).
/// Throws std::invalid_argument if either record is empty or the shifted
/// ranges do not overlap.
CrosscheckReport crosscheck(const SeqRecord& computed, const SeqRecord& reference,
                            std::int64_t offset_shift);

}  // namespace parkrank::oeis
