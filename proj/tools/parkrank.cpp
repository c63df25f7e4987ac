// parkrank: classify, map, enumerate, count, and cross-check parking
// functions, unit interval parking functions, and Fubini rankings.

#include <algorithm>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parkrank/bijection.hpp"
#include "parkrank/classify.hpp"
#include "parkrank/enumerate.hpp"
#include "parkrank/model.hpp"
#include "parkrank/numbers.hpp"
#include "parkrank/oeis.hpp"
#include "parkrank/parking.hpp"

namespace {

using json = nlohmann::ordered_json;
using parkrank::BigCount;
using parkrank::PrefTuple;

constexpr int kExitMember = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

PrefTuple tuple_from_args(const std::vector<std::string>& words) {
  std::string joined;
  for (const auto& w : words) {
    if (!joined.empty()) joined += ' ';
    joined += w;
  }
  return parkrank::parse_tuple(joined);
}

json tuple_to_json(const PrefTuple& t) {
  return json(t.entries());
}

std::string block_notation(const parkrank::BlockStructure& bs) {
  bool single_digits = true;
  for (const auto& block : bs.blocks()) {
    for (int v : block) {
      if (v >= 10) single_digits = false;
    }
  }
  std::string out;
  for (int j = 0; j < bs.block_count(); ++j) {
    if (j > 0) out += '|';
    const auto& block = bs.blocks()[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0 && !single_digits) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  std::string kind;
  int r = 0;
  bool explain = false;
  bool as_json = false;
  std::vector<std::string> tuple_words;
};

std::vector<std::string> parking_trace(const PrefTuple& t, bool unit_rule) {
  const auto outcome =
      unit_rule ? parkrank::park_unit(t) : parkrank::park_classic(t);
  std::vector<std::string> lines;
  const int parked = outcome.ok() ? t.size() : outcome.failed_car() - 1;
  // Replay the rule to recover per-car spots for the trace.
  std::vector<char> taken(static_cast<std::size_t>(t.size()) + 2, 0);
  for (int car = 0; car < parked; ++car) {
    int s = t[car];
    if (unit_rule) {
      if (s > t.size() || taken[static_cast<std::size_t>(s)]) s = t[car] + 1;
    } else {
      while (s <= t.size() && taken[static_cast<std::size_t>(s)]) ++s;
    }
    taken[static_cast<std::size_t>(s)] = 1;
    lines.push_back("car " + std::to_string(car + 1) + " prefers " +
                    std::to_string(t[car]) + " -> spot " + std::to_string(s));
  }
  if (outcome.ok()) {
    lines.push_back("total displacement: " +
                    std::to_string(outcome.total_displacement()));
    lines.push_back("lucky cars: " + std::to_string(outcome.lucky_count()));
  } else {
    lines.push_back("car " + std::to_string(outcome.failed_car()) +
                    " prefers " + std::to_string(t[outcome.failed_car() - 1]) +
                    " -> no spot");
  }
  return lines;
}

std::vector<std::string> ranking_trace(const PrefTuple& t) {
  std::vector<int> sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> lines;
  std::string joined;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) joined += ',';
    joined += std::to_string(sorted[i]);
  }
  lines.push_back("sorted: " + joined);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const int v = sorted[i];
    const int pos = static_cast<int>(i) + 1;
    if (v > t.size()) {
      lines.push_back("position " + std::to_string(pos) + ": value " +
                      std::to_string(v) + " exceeds n");
      return lines;
    }
    if (i == 0) {
      if (v != 1) {
        lines.push_back("position 1: value " + std::to_string(v) +
                        " must be 1");
        return lines;
      }
      lines.push_back("position 1: value 1 starts rank 1");
    } else if (v == sorted[i - 1]) {
      lines.push_back("position " + std::to_string(pos) + ": value " +
                      std::to_string(v) + " ties the previous rank");
    } else if (v == pos) {
      lines.push_back("position " + std::to_string(pos) + ": value " +
                      std::to_string(v) + " starts a new rank");
    } else {
      lines.push_back("position " + std::to_string(pos) + ": value " +
                      std::to_string(v) + " must equal previous value " +
                      std::to_string(sorted[i - 1]) + " or position " +
                      std::to_string(pos));
      return lines;
    }
  }
  lines.push_back("ranks tile 1.." + std::to_string(t.size()));
  return lines;
}

std::vector<std::string> head_trace(const PrefTuple& t, int r) {
  std::vector<std::string> lines;
  std::vector<int> head(t.begin(), t.begin() + r);
  std::string joined;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (i > 0) joined += ',';
    joined += std::to_string(head[i]);
  }
  std::sort(head.begin(), head.end());
  const bool distinct =
      std::adjacent_find(head.begin(), head.end()) == head.end();
  lines.push_back("first " + std::to_string(r) + " entries: " + joined +
                  (distinct ? " (distinct)" : " (repeated)"));
  return lines;
}

int run_classify(const ClassifyArgs& args) {
  const PrefTuple t = tuple_from_args(args.tuple_words);
  const bool is_r_kind = args.kind == "rfr" || args.kind == "rupf";
  if (is_r_kind && args.r == 0) {
    std::cerr << "error: --kind " << args.kind << " requires -r\n";
    return kExitError;
  }
  if (!is_r_kind && args.r != 0) {
    std::cerr << "error: -r is only valid with rfr and rupf\n";
    return kExitError;
  }

  bool member = false;
  if (args.kind == "pf") {
    member = parkrank::is_parking_function(t);
  } else if (args.kind == "upf") {
    member = parkrank::is_unit_interval_pf(t);
  } else if (args.kind == "fr") {
    member = parkrank::is_fubini_ranking(t);
  } else if (args.kind == "rfr") {
    member = parkrank::is_r_fubini_ranking(t, args.r);
  } else {
    member = parkrank::is_r_unit_interval_pf(t, args.r);
  }

  std::vector<std::string> trace;
  if (args.explain) {
    if (is_r_kind) {
      const auto head = head_trace(t, args.r);
      trace.insert(trace.end(), head.begin(), head.end());
    }
    std::vector<std::string> base;
    if (args.kind == "pf") {
      base = parking_trace(t, /*unit_rule=*/false);
    } else if (args.kind == "upf" || args.kind == "rupf") {
      base = parking_trace(t, /*unit_rule=*/true);
    } else {
      base = ranking_trace(t);
    }
    trace.insert(trace.end(), base.begin(), base.end());
  }

  if (args.as_json) {
    json out;
    out["kind"] = args.kind;
    if (is_r_kind) out["r"] = args.r;
    out["tuple"] = tuple_to_json(t);
    out["member"] = member;
    if (args.explain) out["trace"] = trace;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << args.kind << (member ? " member: " : " non-member: ")
              << parkrank::render_tuple(t);
    if (is_r_kind) std::cout << " (r=" << args.r << ")";
    std::cout << "\n";
    for (const auto& line : trace) std::cout << line << "\n";
  }
  return member ? kExitMember : kExitNegative;
}

// ---------------------------------------------------------------------------
// map

struct MapArgs {
  std::string direction;
  bool list = false;
  bool as_json = false;
  std::vector<std::string> tuple_words;
};

int run_map(const MapArgs& args) {
  const PrefTuple t = tuple_from_args(args.tuple_words);
  json out;
  out["direction"] = args.direction;
  out["input"] = tuple_to_json(t);

  if (args.direction == "phi") {
    const PrefTuple image = parkrank::ranking_to_upf(t);
    if (args.as_json) {
      out["image"] = tuple_to_json(image);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << parkrank::render_tuple(image) << "\n";
    }
    return kExitMember;
  }
  if (args.direction == "psi") {
    const PrefTuple image = parkrank::upf_to_ranking(t);
    if (args.as_json) {
      out["image"] = tuple_to_json(image);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << parkrank::render_tuple(image) << "\n";
    }
    return kExitMember;
  }
  if (args.direction == "blocks") {
    const auto bs = parkrank::block_structure(t);
    if (args.as_json) {
      out["blocks"] = json(bs.blocks());
      out["lengths"] = json(bs.lengths().parts);
      out["notation"] = block_notation(bs);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << block_notation(bs) << "\n";
    }
    return kExitMember;
  }

  // rearrangements
  const BigCount count = parkrank::count_upf_rearrangements(t);
  std::vector<PrefTuple> list;
  if (args.list) list = parkrank::upf_rearrangements(t);
  if (args.as_json) {
    out["count"] = count.str();
    std::cout << out.dump() << "\n";
    // Enumerations are JSON lines: one tuple array per line after the report.
    for (const auto& item : list) {
      std::cout << tuple_to_json(item).dump() << "\n";
    }
  } else {
    std::cout << count.str() << "\n";
    for (const auto& item : list) {
      std::cout << parkrank::render_tuple(item) << "\n";
    }
  }
  return kExitMember;
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  std::string family;
  int n = 0;
  int r = 0;
  int parallel = 1;
  int max_n = 8;
  bool closed_form = false;
  bool exhaustive = false;
  bool both = false;
  bool as_json = false;
};

std::optional<BigCount> closed_form_count(const parkrank::FamilySpec& spec,
                                          int n) {
  switch (spec.kind) {
    case parkrank::Family::PF: {
      // (n+1)^(n-1); the n = 0 convention is a single empty tuple.
      if (n == 0) return BigCount(1);
      BigCount result = 1;
      for (int i = 0; i < n - 1; ++i) result *= n + 1;
      return result;
    }
    case parkrank::Family::UPF:
    case parkrank::Family::FR:
      return parkrank::fubini_direct(n);
    case parkrank::Family::RFR:
    case parkrank::Family::RUPF:
      return parkrank::r_fubini(n - spec.r, spec.r);
    case parkrank::Family::FRandUPF:
      return std::nullopt;
  }
  return std::nullopt;
}

int run_count(const CountArgs& args) {
  const auto base = parkrank::family_from_name(args.family);
  if (!base) {
    std::cerr << "error: unknown family '" << args.family << "'\n";
    return kExitError;
  }
  parkrank::FamilySpec spec = *base;
  const bool is_r_kind = spec.kind == parkrank::Family::RFR ||
                         spec.kind == parkrank::Family::RUPF;
  if (is_r_kind) {
    if (args.r == 0) {
      std::cerr << "error: " << args.family << " requires -r\n";
      return kExitError;
    }
    spec.r = args.r;
  } else if (args.r != 0) {
    std::cerr << "error: -r is only valid with rfr and rupf\n";
    return kExitError;
  }

  int picked = (args.closed_form ? 1 : 0) + (args.exhaustive ? 1 : 0) +
               (args.both ? 1 : 0);
  if (picked > 1) {
    std::cerr << "error: pick one of --closed-form, --exhaustive, --both\n";
    return kExitError;
  }
  std::string mode = args.closed_form   ? "closed-form"
                     : args.exhaustive  ? "exhaustive"
                     : args.both        ? "both"
                     : spec.kind == parkrank::Family::FRandUPF ? "exhaustive"
                                                               : "closed-form";
  if (spec.kind == parkrank::Family::FRandUPF && mode != "exhaustive") {
    std::cerr << "error: fr-and-upf has no closed form; use --exhaustive\n";
    return kExitError;
  }

  const bool needs_exhaustive = mode != "closed-form";
  if (needs_exhaustive && args.n > args.max_n) {
    std::cerr << "error: exhaustive count for n=" << args.n
              << " exceeds the cap (--max-n " << args.max_n << ")\n";
    return kExitError;
  }

  std::optional<BigCount> exhaustive;
  std::optional<BigCount> closed;
  if (needs_exhaustive) {
    exhaustive = parkrank::count_family(args.n, spec, args.parallel);
  }
  if (mode != "exhaustive") {
    closed = closed_form_count(spec, args.n);
  }
  std::optional<bool> match;
  if (exhaustive && closed) match = *exhaustive == *closed;

  if (args.as_json) {
    json out;
    out["family"] = args.family;
    out["n"] = args.n;
    out["r"] = is_r_kind ? json(spec.r) : json(nullptr);
    out["exhaustive"] = exhaustive ? json(exhaustive->str()) : json(nullptr);
    out["closed_form"] = closed ? json(closed->str()) : json(nullptr);
    out["match"] = match ? json(*match) : json(nullptr);
    std::cout << out.dump() << "\n";
  } else {
    if (exhaustive) std::cout << "exhaustive: " << exhaustive->str() << "\n";
    if (closed) std::cout << "closed-form: " << closed->str() << "\n";
    if (match) std::cout << "match: " << (*match ? "yes" : "no") << "\n";
  }
  return (match && !*match) ? kExitNegative : kExitMember;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  int r_max = 8;
  int m_max = 8;
  bool csv = false;
  bool as_json = false;
};

int run_table(const TableArgs& args) {
  if (args.r_max < 1 || args.m_max < 1) {
    std::cerr << "error: --r-max and --m-max must be positive\n";
    return kExitError;
  }
  std::vector<std::vector<BigCount>> rows;
  for (int m = 1; m <= args.m_max; ++m) {
    std::vector<BigCount> row;
    for (int r = 1; r <= args.r_max; ++r) {
      row.push_back(m >= r ? parkrank::r_fubini(m - r, r) : BigCount(0));
    }
    rows.push_back(std::move(row));
  }

  if (args.as_json) {
    json out;
    out["r_max"] = args.r_max;
    out["m_max"] = args.m_max;
    json jrows = json::array();
    for (int m = 1; m <= args.m_max; ++m) {
      json jrow;
      jrow["m"] = m;
      json values = json::array();
      for (const auto& v : rows[static_cast<std::size_t>(m) - 1]) {
        values.push_back(v.str());
      }
      jrow["values"] = values;
      jrows.push_back(jrow);
    }
    out["rows"] = jrows;
    std::cout << out.dump() << "\n";
    return kExitMember;
  }

  if (args.csv) {
    std::cout << "m";
    for (int r = 1; r <= args.r_max; ++r) std::cout << ",r=" << r;
    std::cout << "\n";
    for (int m = 1; m <= args.m_max; ++m) {
      std::cout << m;
      for (const auto& v : rows[static_cast<std::size_t>(m) - 1]) {
        std::cout << "," << v.str();
      }
      std::cout << "\n";
    }
    return kExitMember;
  }

  // Aligned text: right-justified columns, two-space gutters.
  std::vector<std::string> headers{"m"};
  for (int r = 1; r <= args.r_max; ++r) headers.push_back("r=" + std::to_string(r));
  std::vector<std::size_t> widths;
  for (const auto& h : headers) widths.push_back(h.size());
  for (int m = 1; m <= args.m_max; ++m) {
    widths[0] = std::max(widths[0], std::to_string(m).size());
    for (int r = 1; r <= args.r_max; ++r) {
      widths[static_cast<std::size_t>(r)] =
          std::max(widths[static_cast<std::size_t>(r)],
                   rows[static_cast<std::size_t>(m) - 1]
                       [static_cast<std::size_t>(r) - 1].str().size());
    }
  }
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) std::cout << "  ";
      std::cout << std::string(widths[i] - cells[i].size(), ' ') << cells[i];
    }
    std::cout << "\n";
  };
  emit_row(headers);
  for (int m = 1; m <= args.m_max; ++m) {
    std::vector<std::string> cells{std::to_string(m)};
    for (const auto& v : rows[static_cast<std::size_t>(m) - 1]) {
      cells.push_back(v.str());
    }
    emit_row(cells);
  }
  return kExitMember;
}

// ---------------------------------------------------------------------------
// oeis-check

struct OeisArgs {
  std::string id;
  int limit = 8;
  int max_n = 8;
  int parallel = 1;
  bool offline = false;
  bool as_json = false;
  std::string base_url;
  std::string cache_dir;
};

std::optional<parkrank::SeqRecord> local_sequence(const OeisArgs& args) {
  parkrank::SeqRecord rec;
  rec.id = args.id;
  const std::size_t limit = static_cast<std::size_t>(args.limit);
  if (args.id == "A000670") {
    rec.first_index = 0;
    for (int n = 0; n < args.limit; ++n) {
      rec.terms.push_back(parkrank::fubini_direct(n));
    }
    return rec;
  }
  if (args.id == "A232472") {
    rec.first_index = 0;
    for (int n = 0; n < args.limit; ++n) {
      rec.terms.push_back(parkrank::r_fubini(n, 2));
    }
    return rec;
  }
  if (args.id == "A080599") {
    rec.first_index = 1;
    const int top = std::min(args.limit, args.max_n);
    for (int n = 1; n <= top; ++n) {
      rec.terms.push_back(parkrank::count_family(
          n, parkrank::FamilySpec::fr_and_upf(), args.parallel));
    }
    return rec;
  }
  if (args.id == "A143494") {
    rec.first_index = 1;
    for (int n = 0; rec.terms.size() < limit; ++n) {
      for (int k = 0; k <= n && rec.terms.size() < limit; ++k) {
        rec.terms.push_back(parkrank::r_stirling2(n, k, 2));
      }
    }
    return rec;
  }
  return std::nullopt;
}

int run_oeis_check(const OeisArgs& args) {
  if (args.limit < 1) {
    std::cerr << "error: --limit must be positive\n";
    return kExitError;
  }
  parkrank::oeis::FetchOptions opts;
  opts.offline = args.offline;
  if (!args.base_url.empty()) opts.base_url = args.base_url;
  if (!args.cache_dir.empty()) opts.cache_dir = args.cache_dir;

  const parkrank::SeqRecord reference = parkrank::oeis::fetch_sequence(
      args.id, static_cast<std::size_t>(args.limit), opts);
  const auto computed = local_sequence(args);
  if (!computed) {
    std::cerr << "error: no local sequence generator for " << args.id << "\n";
    return kExitError;
  }
  const std::int64_t shift = reference.first_index - computed->first_index;
  const auto report = parkrank::oeis::crosscheck(*computed, reference, shift);

  if (args.as_json) {
    json out;
    out["id"] = report.id;
    out["shift"] = report.offset_shift;
    json jrows = json::array();
    for (const auto& row : report.rows) {
      json jrow;
      jrow["computed_index"] = row.computed_index;
      jrow["reference_index"] = row.reference_index;
      jrow["computed"] = row.computed.str();
      jrow["reference"] = row.reference.str();
      jrow["match"] = row.match;
      jrows.push_back(jrow);
    }
    out["rows"] = jrows;
    out["all_match"] = report.all_match;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << report.id << ": comparing " << report.rows.size()
              << " terms (shift " << report.offset_shift << ")\n";
    for (const auto& row : report.rows) {
      std::cout << "index " << row.computed_index << ": computed "
                << row.computed.str() << ", reference " << row.reference.str()
                << (row.match ? "" : "  <- MISMATCH") << "\n";
    }
    std::cout << (report.all_match ? "all match" : "mismatch") << "\n";
  }
  return report.all_match ? kExitMember : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parking functions, unit interval parking functions, and "
               "Fubini rankings"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand(
      "classify", "Test membership of a tuple in a family");
  classify->add_option("--kind", classify_args.kind, "Family to test")
      ->required()
      ->check(CLI::IsMember({"pf", "upf", "fr", "rfr", "rupf"}));
  classify->add_option("-r", classify_args.r, "Distinct-head length");
  classify->add_flag("--explain", classify_args.explain,
                     "Print the membership trace");
  classify->add_flag("--json", classify_args.as_json, "JSON output");
  classify->add_option("tuple", classify_args.tuple_words, "Tuple, e.g. 1,1,2")
      ->required()
      ->expected(-1);

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "Apply a structure map to a tuple");
  map_cmd
      ->add_option("direction", map_args.direction,
                   "phi, psi, blocks, or rearrangements")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "blocks", "rearrangements"}));
  map_cmd->add_flag("--list", map_args.list,
                    "List every rearrangement (rearrangements only)");
  map_cmd->add_flag("--json", map_args.as_json, "JSON output");
  map_cmd->add_option("tuple", map_args.tuple_words, "Tuple, e.g. 1,1,2")
      ->required()
      ->expected(-1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count the members of a family");
  count->add_option("family", count_args.family,
                    "pf, upf, fr, rfr, rupf, or fr-and-upf")
      ->required();
  count->add_option("n", count_args.n, "Tuple length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_option("-r", count_args.r, "Distinct-head length");
  count->add_option("--parallel", count_args.parallel, "Worker threads")
      ->check(CLI::PositiveNumber);
  count->add_option("--max-n", count_args.max_n,
                    "Cap for exhaustive enumeration");
  count->add_flag("--closed-form", count_args.closed_form,
                  "Closed form only");
  count->add_flag("--exhaustive", count_args.exhaustive,
                  "Exhaustive enumeration only");
  count->add_flag("--both", count_args.both,
                  "Both, plus a match verdict");
  count->add_flag("--json", count_args.as_json, "JSON output");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print the r-Fubini table");
  table->add_option("--r-max", table_args.r_max, "Largest r column");
  table->add_option("--m-max", table_args.m_max, "Largest m row");
  table->add_flag("--csv", table_args.csv, "CSV output");
  table->add_flag("--json", table_args.as_json, "JSON output");

  OeisArgs oeis_args;
  auto* oeis = app.add_subcommand(
      "oeis-check", "Cross-check a computed sequence against OEIS");
  oeis->add_option("id", oeis_args.id, "Sequence id, e.g. A000670")->required();
  oeis->add_option("--limit", oeis_args.limit, "Terms to compare");
  oeis->add_option("--max-n", oeis_args.max_n,
                   "Cap for exhaustive enumeration");
  oeis->add_option("--parallel", oeis_args.parallel, "Worker threads")
      ->check(CLI::PositiveNumber);
  oeis->add_flag("--offline", oeis_args.offline,
                 "Use only the cache and bundled snapshots");
  oeis->add_option("--base-url", oeis_args.base_url,
                   "Override the OEIS endpoint");
  oeis->add_option("--cache-dir", oeis_args.cache_dir,
                   "Override the cache directory");
  oeis->add_flag("--json", oeis_args.as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (classify->parsed()) return run_classify(classify_args);
    if (map_cmd->parsed()) return run_map(map_args);
    if (count->parsed()) return run_count(count_args);
    if (table->parsed()) return run_table(table_args);
    if (oeis->parsed()) return run_oeis_check(oeis_args);
  } catch (const std::domain_error& e) {
    // A structurally valid input outside a map's domain is a negative
    // result, not a usage error.
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
