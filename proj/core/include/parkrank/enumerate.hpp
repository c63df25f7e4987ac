#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parkrank/model.hpp"

namespace parkrank {

enum class Family {
  PF,        // parking functions
  UPF,       // unit interval parking functions
  FR,        // Fubini rankings
  RFR,       // Fubini rankings with the first r entries distinct
  RUPF,      // unit interval parking functions with the first r entries distinct
  FRandUPF,  // tuples that are both Fubini rankings and unit interval PFs
};

/// Family selector. `r` is only meaningful for RFR and RUPF, where it must
/// satisfy 1 <= r <= n at use time.
struct FamilySpec {
  Family kind = Family::PF;
  int r = 0;

  static FamilySpec pf() { return {Family::PF, 0}; }
  static FamilySpec upf() { return {Family::UPF, 0}; }
  static FamilySpec fr() { return {Family::FR, 0}; }
  static FamilySpec rfr(int r) { return {Family::RFR, r}; }
  static FamilySpec rupf(int r) { return {Family::RUPF, r}; }
  static FamilySpec fr_and_upf() { return {Family::FRandUPF, 0}; }

  bool operator==(const FamilySpec&) const = default;
};

/// Stable lowercase name used in CLI arguments and reports ("pf", "rfr",
/// "fr-and-upf", ...).
std::string family_name(const FamilySpec& spec);
/// Inverse of family_name (r is left 0). std::nullopt for unknown names.
std::optional<FamilySpec> family_from_name(std::string_view name);

namespace detail {
class PrefixFilter;
}

/// Streams the members of a family of length n in lexicographic order, each
/// exactly once. Backtracking search over [n]^n with per-family pruning:
/// partial tuples that cannot be completed to a member are cut immediately,
/// so the work tracks the family size rather than n^n. Single consumer.
class FamilyStream {
 public:
  /// Throws std::invalid_argument for n < 0 or an out-of-range r.
  FamilyStream(int n, FamilySpec spec);
  FamilyStream(FamilyStream&&) noexcept;
  FamilyStream& operator=(FamilyStream&&) noexcept;
  ~FamilyStream();

  std::optional<PrefTuple> next();

 private:
  int n_ = 0;
  std::vector<std::unique_ptr<detail::PrefixFilter>> filters_;
  std::vector<int> cur_;
  int pending_ = 1;
  bool started_ = false;
  bool exhausted_ = false;

  bool try_push(int value);
  void backtrack();
};

/// Drains a FamilyStream into a vector.
std::vector<PrefTuple> family_members(int n, FamilySpec spec);

/// Cross-check path: materializes all n^n tuples and keeps the ones the
/// classify predicates accept. Exponential; intended for n <= 6.
std::vector<PrefTuple> family_members_naive(int n, FamilySpec spec);

/// Exact member count. With parallelism > 1 the search space is partitioned
/// by first coordinate into n independent subtrees counted on worker threads;
/// the result does not depend on the degree.
BigCount count_family(int n, FamilySpec spec, int parallelism = 1);

enum class Identity {
  UpfCountIsFubini,           // |UPF_n| = Fb_n
  FrCountIsFubini,            // |FR_n| = Fb_n
  RFamiliesMatchRFubini,      // |RFR(r), m| = |RUPF(r), m| = Fb^(r)_{m-r}
  IntersectionMatchesSequence // |FR_n ∩ UPF_n| = 1, 3, 12, 66, 450, 3690, 35280
};

struct IdentityCheck {
  std::string label;
  BigCount exhaustive;
  BigCount expected;
  bool pass = false;
};

struct IdentityReport {
  std::string name;
  std::vector<IdentityCheck> checks;
  bool all_pass = false;
};

/// Compares exhaustive counts against the closed forms (or the reference
/// sequence) for every parameter point up to n_max. Mismatches become failed
/// checks in the report; nothing throws for them. The intersection identity
/// has seven reference terms, so its checks stop at n = 7.
IdentityReport verify_identity(Identity id, int n_max, int parallelism = 1);

}  // namespace parkrank
