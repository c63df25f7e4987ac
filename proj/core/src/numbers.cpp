#include "parkrank/numbers.hpp"

#include <mutex>
#include <stdexcept>

namespace parkrank {

namespace {

BigCount ipow(int base, int exp) {
  if (exp == 0) return 1;  // covers 0^0 = 1
  BigCount b = base;
  BigCount result = 1;
  int e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace

BigCount factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("factorial of negative " + std::to_string(n));
  }
  static std::mutex mu;
  static std::vector<BigCount> cache{1};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    cache.push_back(cache.back() * static_cast<int>(cache.size()));
  }
  return cache[static_cast<std::size_t>(n)];
}

BigCount binomial(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("binomial with negative n: " + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigCount fubini_direct(int n) {
  if (n < 0) {
    throw std::invalid_argument("fubini of negative " + std::to_string(n));
  }
  BigCount total = 0;
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= k; ++j) {
      const BigCount term = binomial(k, j) * ipow(j, n);
      if ((k - j) % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
  }
  return total;
}

BigCount fubini_by_compositions(int n) {
  if (n < 1) {
    throw std::invalid_argument("composition form needs n >= 1, got " +
                                std::to_string(n));
  }
  BigCount total = 0;
  CompositionStream stream(n);
  while (auto c = stream.next()) {
    total += multinomial(n, *c);
  }
  return total;
}

BigCount r_stirling2(int n, int k, int r) {
  if (r < 1) {
    throw std::invalid_argument("r must be >= 1, got " + std::to_string(r));
  }
  if (k < 0 || k > n) {
    throw std::invalid_argument("need 0 <= k <= n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
  }
  BigCount sum = 0;
  for (int i = 0; i <= k; ++i) {
    const BigCount term = binomial(k, i) * ipow(i + r, n);
    if ((k - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const BigCount kfact = factorial(k);
  const BigCount q = sum / kfact;
  if (q * kfact != sum) {
    throw std::logic_error("r-Stirling sum not divisible by k!");
  }
  return q;
}

BigCount r_fubini(int n, int r) {
  if (n < 0 || r < 1) {
    throw std::invalid_argument("need n >= 0 and r >= 1, got n=" +
                                std::to_string(n) + " r=" + std::to_string(r));
  }
  BigCount total = 0;
  for (int k = 0; k <= n; ++k) {
    total += factorial(k + r) * r_stirling2(n, k, r);
  }
  return total;
}

BigCount multinomial(int n, const Composition& parts) {
  if (n < 0) {
    throw std::invalid_argument("multinomial with negative n");
  }
  if (parts.total() != n) {
    throw std::invalid_argument("parts sum to " + std::to_string(parts.total()) +
                                ", expected " + std::to_string(n));
  }
  BigCount result = factorial(n);
  for (int part : parts.parts) {
    result /= factorial(part);
  }
  return result;
}

CompositionStream::CompositionStream(int n) : total_(n) {
  if (n < 1) {
    throw std::invalid_argument("compositions need n >= 1, got " +
                                std::to_string(n));
  }
  parts_.assign(static_cast<std::size_t>(n), 1);
}

std::optional<Composition> CompositionStream::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    return Composition(parts_);
  }
  // Lexicographic successor: drop the last part, grow the new last by one,
  // pad the slack with ones.
  const int last = parts_.back();
  parts_.pop_back();
  if (parts_.empty()) {
    done_ = true;
    return std::nullopt;
  }
  parts_.back() += 1;
  parts_.insert(parts_.end(), static_cast<std::size_t>(last - 1), 1);
  return Composition(parts_);
}

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  CompositionStream stream(n);
  while (auto c = stream.next()) {
    out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace parkrank
