#include "parkrank/enumerate.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "parkrank/classify.hpp"
#include "parkrank/numbers.hpp"

namespace parkrank {

namespace detail {

/// Incremental membership filter over growing prefixes. try_push(v) extends
/// the tracked prefix by v when the result is still completable to a family
/// member and reports whether it did; pop(v) undoes the latest push.
class PrefixFilter {
 public:
  virtual ~PrefixFilter() = default;
  virtual bool try_push(int v) = 0;
  virtual void pop(int v) = 0;
};

namespace {

/// A prefix completes to a parking function iff appending all-ones does:
/// for every w, (entries <= w) + (slots left) >= w.
class PfFilter : public PrefixFilter {
 public:
  explicit PfFilter(int n) : n_(n), cnt_(static_cast<std::size_t>(n) + 1, 0) {}

  bool try_push(int v) override {
    if (v > n_) return false;
    ++cnt_[static_cast<std::size_t>(v)];
    ++len_;
    int at_most_w = 0;
    for (int w = 1; w <= n_; ++w) {
      at_most_w += cnt_[static_cast<std::size_t>(w)];
      if (w - at_most_w > n_ - len_) {
        --cnt_[static_cast<std::size_t>(v)];
        --len_;
        return false;
      }
    }
    return true;
  }

  void pop(int v) override {
    --cnt_[static_cast<std::size_t>(v)];
    --len_;
  }

 private:
  int n_;
  int len_ = 0;
  std::vector<int> cnt_;
};

/// Drives the unit parking rule incrementally. Any prefix that parks is
/// completable (point the remaining cars at the free spots), so parking
/// failure is the only cut needed.
class UpfFilter : public PrefixFilter {
 public:
  explicit UpfFilter(int n) : n_(n), taken_(static_cast<std::size_t>(n) + 2, 0) {}

  bool try_push(int v) override {
    int s;
    if (v <= n_ && !taken_[static_cast<std::size_t>(v)]) {
      s = v;
    } else if (v + 1 <= n_ && !taken_[static_cast<std::size_t>(v) + 1]) {
      s = v + 1;
    } else {
      return false;
    }
    taken_[static_cast<std::size_t>(s)] = 1;
    spots_.push_back(s);
    return true;
  }

  void pop(int /*v*/) override {
    taken_[static_cast<std::size_t>(spots_.back())] = 0;
    spots_.pop_back();
  }

 private:
  int n_;
  std::vector<char> taken_;
  std::vector<int> spots_;
};

/// A prefix completes to a Fubini ranking iff the rank runs it commits to,
/// value w covering [w, w + count_w), are pairwise disjoint and end by n + 1;
/// gaps can always be tiled by fresh runs. Depth-n survivors tile [1, n]
/// exactly, so they are precisely the Fubini rankings.
class FrFilter : public PrefixFilter {
 public:
  explicit FrFilter(int n) : n_(n), cnt_(static_cast<std::size_t>(n) + 1, 0) {}

  bool try_push(int v) override {
    if (v > n_) return false;
    ++cnt_[static_cast<std::size_t>(v)];
    int next_free = 1;  // first rank past every run seen so far
    for (int w = 1; w <= n_; ++w) {
      if (cnt_[static_cast<std::size_t>(w)] == 0) continue;
      if (w < next_free) {
        --cnt_[static_cast<std::size_t>(v)];
        return false;
      }
      next_free = w + cnt_[static_cast<std::size_t>(w)];
    }
    if (next_free > n_ + 1) {
      --cnt_[static_cast<std::size_t>(v)];
      return false;
    }
    return true;
  }

  void pop(int v) override { --cnt_[static_cast<std::size_t>(v)]; }

 private:
  int n_;
  std::vector<int> cnt_;
};

/// Requires the first r entries to be pairwise distinct.
class DistinctHeadFilter : public PrefixFilter {
 public:
  DistinctHeadFilter(int n, int r)
      : r_(r), used_(static_cast<std::size_t>(n) + 2, 0) {}

  bool try_push(int v) override {
    if (len_ < r_) {
      if (v >= static_cast<int>(used_.size()) ||
          used_[static_cast<std::size_t>(v)]) {
        return false;
      }
      used_[static_cast<std::size_t>(v)] = 1;
    }
    ++len_;
    return true;
  }

  void pop(int v) override {
    --len_;
    if (len_ < r_) used_[static_cast<std::size_t>(v)] = 0;
  }

 private:
  int r_;
  int len_ = 0;
  std::vector<char> used_;
};

void validate_spec(int n, const FamilySpec& spec) {
  if (n < 0) {
    throw std::invalid_argument("length must be nonnegative, got " +
                                std::to_string(n));
  }
  if (spec.kind == Family::RFR || spec.kind == Family::RUPF) {
    if (spec.r < 1 || spec.r > n) {
      throw std::invalid_argument("r must satisfy 1 <= r <= n, got r=" +
                                  std::to_string(spec.r) +
                                  " n=" + std::to_string(n));
    }
  }
}

std::vector<std::unique_ptr<PrefixFilter>> make_filters(int n,
                                                        const FamilySpec& spec) {
  std::vector<std::unique_ptr<PrefixFilter>> fs;
  switch (spec.kind) {
    case Family::PF:
      fs.push_back(std::make_unique<PfFilter>(n));
      break;
    case Family::UPF:
      fs.push_back(std::make_unique<UpfFilter>(n));
      break;
    case Family::FR:
      fs.push_back(std::make_unique<FrFilter>(n));
      break;
    case Family::RFR:
      fs.push_back(std::make_unique<DistinctHeadFilter>(n, spec.r));
      fs.push_back(std::make_unique<FrFilter>(n));
      break;
    case Family::RUPF:
      fs.push_back(std::make_unique<DistinctHeadFilter>(n, spec.r));
      fs.push_back(std::make_unique<UpfFilter>(n));
      break;
    case Family::FRandUPF:
      fs.push_back(std::make_unique<FrFilter>(n));
      fs.push_back(std::make_unique<UpfFilter>(n));
      break;
  }
  return fs;
}

bool push_all(std::vector<std::unique_ptr<PrefixFilter>>& fs, int v) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i]->try_push(v)) {
      while (i > 0) fs[--i]->pop(v);
      return false;
    }
  }
  return true;
}

void pop_all(std::vector<std::unique_ptr<PrefixFilter>>& fs, int v) {
  for (std::size_t i = fs.size(); i > 0;) fs[--i]->pop(v);
}

void count_rec(int n, int depth, std::vector<std::unique_ptr<PrefixFilter>>& fs,
               unsigned long long& acc) {
  if (depth == n) {
    ++acc;
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (push_all(fs, v)) {
      count_rec(n, depth + 1, fs, acc);
      pop_all(fs, v);
    }
  }
}

bool naive_member(const PrefTuple& t, const FamilySpec& spec) {
  switch (spec.kind) {
    case Family::PF:
      return is_parking_function(t);
    case Family::UPF:
      return is_unit_interval_pf(t);
    case Family::FR:
      return is_fubini_ranking(t);
    case Family::RFR:
      return is_r_fubini_ranking(t, spec.r);
    case Family::RUPF:
      return is_r_unit_interval_pf(t, spec.r);
    case Family::FRandUPF:
      return is_fubini_ranking(t) && is_unit_interval_pf(t);
  }
  throw std::logic_error("unknown family");
}

}  // namespace
}  // namespace detail

std::string family_name(const FamilySpec& spec) {
  switch (spec.kind) {
    case Family::PF:
      return "pf";
    case Family::UPF:
      return "upf";
    case Family::FR:
      return "fr";
    case Family::RFR:
      return "rfr";
    case Family::RUPF:
      return "rupf";
    case Family::FRandUPF:
      return "fr-and-upf";
  }
  throw std::logic_error("unknown family");
}

std::optional<FamilySpec> family_from_name(std::string_view name) {
  if (name == "pf") return FamilySpec::pf();
  if (name == "upf") return FamilySpec::upf();
  if (name == "fr") return FamilySpec::fr();
  if (name == "rfr") return FamilySpec{Family::RFR, 0};
  if (name == "rupf") return FamilySpec{Family::RUPF, 0};
  if (name == "fr-and-upf") return FamilySpec::fr_and_upf();
  return std::nullopt;
}

FamilyStream::FamilyStream(int n, FamilySpec spec) : n_(n) {
  detail::validate_spec(n, spec);
  filters_ = detail::make_filters(n, spec);
}

FamilyStream::FamilyStream(FamilyStream&&) noexcept = default;
FamilyStream& FamilyStream::operator=(FamilyStream&&) noexcept = default;
FamilyStream::~FamilyStream() = default;

bool FamilyStream::try_push(int value) {
  return detail::push_all(filters_, value);
}

void FamilyStream::backtrack() {
  const int v = cur_.back();
  cur_.pop_back();
  detail::pop_all(filters_, v);
  pending_ = v + 1;
}

std::optional<PrefTuple> FamilyStream::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ == 0) {
      exhausted_ = true;
      return PrefTuple();
    }
  } else {
    backtrack();  // resume below the leaf handed out last time
  }
  while (true) {
    if (static_cast<int>(cur_.size()) == n_) {
      return PrefTuple(cur_);
    }
    if (pending_ > n_) {
      if (cur_.empty()) {
        exhausted_ = true;
        return std::nullopt;
      }
      backtrack();
      continue;
    }
    const int v = pending_;
    if (try_push(v)) {
      cur_.push_back(v);
      pending_ = 1;
    } else {
      ++pending_;
    }
  }
}

std::vector<PrefTuple> family_members(int n, FamilySpec spec) {
  FamilyStream stream(n, spec);
  std::vector<PrefTuple> out;
  while (auto t = stream.next()) {
    out.push_back(std::move(*t));
  }
  return out;
}

std::vector<PrefTuple> family_members_naive(int n, FamilySpec spec) {
  detail::validate_spec(n, spec);
  std::vector<PrefTuple> out;
  if (n == 0) {
    PrefTuple empty;
    if (detail::naive_member(empty, spec)) out.push_back(empty);
    return out;
  }
  std::vector<int> odo(static_cast<std::size_t>(n), 1);
  while (true) {
    PrefTuple t(odo);
    if (detail::naive_member(t, spec)) out.push_back(std::move(t));
    int pos = n - 1;
    while (pos >= 0 && odo[static_cast<std::size_t>(pos)] == n) {
      odo[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++odo[static_cast<std::size_t>(pos)];
  }
  return out;
}

BigCount count_family(int n, FamilySpec spec, int parallelism) {
  detail::validate_spec(n, spec);
  if (n == 0) return 1;
  if (parallelism <= 1 || n == 1) {
    auto fs = detail::make_filters(n, spec);
    unsigned long long acc = 0;
    detail::count_rec(n, 0, fs, acc);
    return BigCount(acc);
  }

  // One task per first coordinate; each worker counts its subtrees with its
  // own filter set, so the partition is disjoint and the sum exact.
  std::vector<unsigned long long> subtree(static_cast<std::size_t>(n), 0);
  std::atomic<int> next_task{1};
  auto worker = [&]() {
    auto fs = detail::make_filters(n, spec);
    for (int v = next_task.fetch_add(1); v <= n; v = next_task.fetch_add(1)) {
      unsigned long long acc = 0;
      if (detail::push_all(fs, v)) {
        detail::count_rec(n, 1, fs, acc);
        detail::pop_all(fs, v);
      }
      subtree[static_cast<std::size_t>(v) - 1] = acc;
    }
  };
  const int threads = std::min(parallelism, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  BigCount total = 0;
  for (unsigned long long c : subtree) total += c;
  return total;
}

namespace {

IdentityCheck make_check(std::string label, BigCount exhaustive,
                         BigCount expected) {
  IdentityCheck check;
  check.label = std::move(label);
  check.pass = exhaustive == expected;
  check.exhaustive = std::move(exhaustive);
  check.expected = std::move(expected);
  return check;
}

}  // namespace

IdentityReport verify_identity(Identity id, int n_max, int parallelism) {
  if (n_max < 0) {
    throw std::invalid_argument("n_max must be nonnegative");
  }
  IdentityReport report;
  switch (id) {
    case Identity::UpfCountIsFubini: {
      report.name = "|UPF_n| = Fb_n";
      for (int n = 0; n <= n_max; ++n) {
        report.checks.push_back(
            make_check("n=" + std::to_string(n),
                       count_family(n, FamilySpec::upf(), parallelism),
                       fubini_direct(n)));
      }
      break;
    }
    case Identity::FrCountIsFubini: {
      report.name = "|FR_n| = Fb_n";
      for (int n = 0; n <= n_max; ++n) {
        report.checks.push_back(
            make_check("n=" + std::to_string(n),
                       count_family(n, FamilySpec::fr(), parallelism),
                       fubini_direct(n)));
      }
      break;
    }
    case Identity::RFamiliesMatchRFubini: {
      report.name = "|RFR_m(r)| = |RUPF_m(r)| = Fb^(r)_(m-r)";
      for (int m = 1; m <= n_max; ++m) {
        for (int r = 1; r <= m; ++r) {
          const BigCount expected = r_fubini(m - r, r);
          const std::string suffix =
              " m=" + std::to_string(m) + " r=" + std::to_string(r);
          report.checks.push_back(make_check(
              "rfr" + suffix,
              count_family(m, FamilySpec::rfr(r), parallelism), expected));
          report.checks.push_back(make_check(
              "rupf" + suffix,
              count_family(m, FamilySpec::rupf(r), parallelism), expected));
        }
      }
      break;
    }
    case Identity::IntersectionMatchesSequence: {
      report.name = "|FR_n ∩ UPF_n| matches the reference sequence";
      static const long long reference[] = {1, 3, 12, 66, 450, 3690, 35280};
      const int top = std::min(n_max, 7);
      for (int n = 1; n <= top; ++n) {
        report.checks.push_back(make_check(
            "n=" + std::to_string(n),
            count_family(n, FamilySpec::fr_and_upf(), parallelism),
            BigCount(reference[n - 1])));
      }
      break;
    }
  }
  report.all_pass = true;
  for (const auto& check : report.checks) {
    report.all_pass = report.all_pass && check.pass;
  }
  return report;
}

}  // namespace parkrank
