#include "parkrank/oeis.hpp"

#include <atomic>
#include <cctype>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <httplib.h>

namespace parkrank::oeis {

namespace {

std::string bfile_name(const std::string& id) {
  return "b" + id.substr(1) + ".txt";
}

[[noreturn]] void line_error(const std::string& id, std::size_t line_no,
                             const std::string& reason) {
  throw std::invalid_argument(id + " b-file line " + std::to_string(line_no) +
                              ": " + reason);
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

SeqRecord take_prefix(SeqRecord rec, std::size_t limit) {
  if (rec.terms.size() > limit) rec.terms.resize(limit);
  return rec;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

/// Writes `content` to `path` atomically: temp file in the same directory,
/// then rename, which POSIX guarantees to be atomic within a filesystem.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  static std::atomic<unsigned> serial{0};
  const std::string tmp_name = path.filename().string() + ".tmp." +
                               std::to_string(::getpid()) + "." +
                               std::to_string(serial.fetch_add(1));
  const std::filesystem::path tmp = path.parent_path() / tmp_name;
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write " + tmp.string());
    }
    out << content;
    if (!out.flush()) {
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

bool is_valid_sequence_id(std::string_view id) {
  if (id.size() != 7 || id.front() != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

SeqRecord parse_bfile(std::string_view text, std::string id) {
  SeqRecord rec;
  rec.id = std::move(id);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_first = false;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::string_view trimmed = line;
    while (!trimmed.empty() &&
           std::isspace(static_cast<unsigned char>(trimmed.front()))) {
      trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() &&
           std::isspace(static_cast<unsigned char>(trimmed.back()))) {
      trimmed.remove_suffix(1);
    }
    if (trimmed.empty() || trimmed.front() == '#') continue;

    const std::size_t split = trimmed.find_first_of(" \t");
    if (split == std::string_view::npos) {
      line_error(rec.id, line_no, "expected '<index> <value>'");
    }
    std::string_view index_tok = trimmed.substr(0, split);
    std::string_view value_tok = trimmed.substr(split);
    while (!value_tok.empty() &&
           std::isspace(static_cast<unsigned char>(value_tok.front()))) {
      value_tok.remove_prefix(1);
    }
    if (value_tok.find_first_of(" \t") != std::string_view::npos) {
      line_error(rec.id, line_no, "trailing content after value");
    }

    long long index = 0;
    auto [ptr, ec] = std::from_chars(index_tok.data(),
                                     index_tok.data() + index_tok.size(), index);
    if (ec != std::errc() || ptr != index_tok.data() + index_tok.size()) {
      line_error(rec.id, line_no,
                 "bad index '" + std::string(index_tok) + "'");
    }
    if (!is_decimal(value_tok)) {
      line_error(rec.id, line_no,
                 "bad value '" + std::string(value_tok) + "'");
    }

    if (!have_first) {
      rec.first_index = index;
      have_first = true;
    } else if (index != rec.last_index() + 1) {
      line_error(rec.id, line_no,
                 "index " + std::to_string(index) + " breaks contiguity, expected " +
                     std::to_string(rec.last_index() + 1));
    }
    rec.terms.emplace_back(BigCount(std::string(value_tok)));
  }
  if (rec.terms.empty()) {
    throw std::invalid_argument(rec.id + " b-file has no data lines");
  }
  return rec;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("PARKRANK_OEIS_CACHE"); env && *env) {
    return std::filesystem::path(env);
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "parkrank" / "oeis";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "parkrank" / "oeis";
  }
  return std::filesystem::current_path() / ".parkrank-oeis-cache";
}

std::optional<CacheEntry> load_cache_entry(const std::filesystem::path& dir,
                                           const std::string& id) {
  const std::filesystem::path bfile = dir / (id + ".bfile");
  std::error_code ec;
  if (!std::filesystem::exists(bfile, ec) || ec) {
    return std::nullopt;
  }
  CacheEntry entry;
  entry.id = id;
  entry.raw = read_file(bfile);
  entry.parsed = parse_bfile(entry.raw, id);

  const std::filesystem::path meta = dir / (id + ".meta");
  if (std::filesystem::exists(meta, ec) && !ec) {
    std::istringstream in(read_file(meta));
    std::string key;
    while (in >> key) {
      if (key == "fetched_at") {
        in >> entry.fetched_at;
      } else {
        std::string ignored;
        in >> ignored;
      }
    }
  }
  return entry;
}

void store_cache_entry(const std::filesystem::path& dir,
                       const CacheEntry& entry) {
  std::filesystem::create_directories(dir);
  write_file_atomic(dir / (entry.id + ".bfile"), entry.raw);
  write_file_atomic(dir / (entry.id + ".meta"),
                    "id " + entry.id + "\nfetched_at " +
                        std::to_string(entry.fetched_at) + "\n");
}

SeqRecord fetch_sequence(const std::string& id, std::size_t limit,
                         const FetchOptions& opts) {
  if (!is_valid_sequence_id(id)) {
    throw std::invalid_argument("bad sequence id '" + id +
                                "', expected A followed by six digits");
  }
  if (limit == 0) {
    throw std::invalid_argument("limit must be positive");
  }
  const std::filesystem::path cache_dir =
      opts.cache_dir ? *opts.cache_dir : default_cache_dir();

  if (auto cached = load_cache_entry(cache_dir, id)) {
    return take_prefix(std::move(cached->parsed), limit);
  }

  std::string network_note = "network disabled (offline)";
  if (!opts.offline) {
    httplib::Client client(opts.base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    const std::string path = "/" + id + "/" + bfile_name(id);
    auto res = client.Get(path);
    if (res && res->status == 200) {
      CacheEntry entry;
      entry.id = id;
      entry.fetched_at = static_cast<std::int64_t>(std::time(nullptr));
      entry.raw = res->body;
      entry.parsed = parse_bfile(entry.raw, id);  // malformed body throws here
      try {
        store_cache_entry(cache_dir, entry);
      } catch (const std::exception&) {
        // A read-only cache must not fail the fetch.
      }
      return take_prefix(std::move(entry.parsed), limit);
    }
    network_note = res ? "HTTP status " + std::to_string(res->status)
                       : "connection to " + opts.base_url + " failed";
  }

  if (auto bundled = bundled_snapshot(id)) {
    return take_prefix(std::move(*bundled), limit);
  }
  throw std::runtime_error("cannot fetch " + id + ": cache miss, " +
                           network_note + ", no bundled snapshot");
}

CrosscheckReport crosscheck(const SeqRecord& computed, const SeqRecord& reference,
                            std::int64_t offset_shift) {
  if (computed.empty() || reference.empty()) {
    throw std::invalid_argument("crosscheck needs two nonempty records");
  }
  const std::int64_t lo =
      std::max<std::int64_t>(computed.first_index,
                             reference.first_index - offset_shift);
  const std::int64_t hi =
      std::min<std::int64_t>(computed.last_index(),
                             reference.last_index() - offset_shift);
  if (lo > hi) {
    throw std::invalid_argument("no overlapping indices under shift " +
                                std::to_string(offset_shift));
  }
  CrosscheckReport report;
  report.id = reference.id.empty() ? computed.id : reference.id;
  report.offset_shift = offset_shift;
  report.all_match = true;
  for (std::int64_t i = lo; i <= hi; ++i) {
    CrosscheckRow row;
    row.computed_index = i;
    row.reference_index = i + offset_shift;
    row.computed = *computed.term_at(i);
    row.reference = *reference.term_at(i + offset_shift);
    row.match = row.computed == row.reference;
    report.all_match = report.all_match && row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace parkrank::oeis
