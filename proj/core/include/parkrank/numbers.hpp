#pragma once

#include <optional>
#include <vector>

#include "parkrank/model.hpp"

namespace parkrank {

/// n! with a process-wide memo table; safe to call concurrently.
BigCount factorial(int n);

/// Binomial coefficient; 0 when k < 0 or k > n.
BigCount binomial(int n, int k);

/// Fubini (ordered Bell) number via the double alternating sum
///   Fb_n = sum_{k=0..n} sum_{j=0..k} (-1)^(k-j) C(k,j) j^n,   0^0 = 1.
BigCount fubini_direct(int n);

/// The same number as a sum of multinomials over all compositions of n:
///   Fb_n = sum_{k=1..n} sum_{c |= n, k parts} C(n; c_1,...,c_k).
/// Requires n >= 1.
BigCount fubini_by_compositions(int n);

/// r-Stirling number of the second kind {n+r, k+r}_r: set partitions of
/// [n+r] into k+r nonempty blocks with the elements 1..r in distinct blocks.
/// Arguments are the small indices (so r_stirling2(3, 1, 1) is the ordinary
/// Stirling number {4, 2} = 7). Computed as
///   (1/k!) * sum_{i=0..k} (-1)^(k-i) C(k,i) (i+r)^n;
/// the division must come out exact, anything else is a transcription bug in
/// this formula and throws std::logic_error. Throws std::invalid_argument
/// unless 0 <= k <= n and r >= 1.
BigCount r_stirling2(int n, int k, int r);

/// r-Fubini number: Fb_n^(r) = sum_{k=0..n} (k+r)! * {n+r, k+r}_r.
/// Requires n >= 0 and r >= 1.
BigCount r_fubini(int n, int r);

/// n! / (c_1! * ... * c_k!). Throws std::invalid_argument if the parts do
/// not sum to n.
BigCount multinomial(int n, const Composition& parts);

/// Streams all 2^(n-1) compositions of n >= 1 exactly once, in lexicographic
/// order of their part lists: (1,1,...,1) first, (n) last.
class CompositionStream {
 public:
  explicit CompositionStream(int n);

  std::optional<Composition> next();

 private:
  int total_;
  std::vector<int> parts_;
  bool first_ = true;
  bool done_ = false;
};

std::vector<Composition> all_compositions(int n);

}  // namespace parkrank
