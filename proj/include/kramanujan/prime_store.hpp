#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kramanujan/errors.hpp"
#include "kramanujan/exact_rational.hpp"

namespace kramanujan {

struct SieveOptions {
  // Largest admissible sieve limit. Primes are stored as 32-bit values,
  // so this can never exceed 2^32 - 1.
  std::uint64_t budget = 4'000'000'000ULL;
  // Odd numbers per segment; 32 KiB of byte flags by default.
  std::size_t segment_size = std::size_t{1} << 15;
};

namespace detail {

inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline void check_budget(std::uint64_t limit, const SieveOptions& opts) {
  constexpr std::uint64_t kHardCap = std::numeric_limits<std::uint32_t>::max();
  if (limit > opts.budget || limit > kHardCap)
    throw resource_error("sieve limit " + std::to_string(limit) +
                         " exceeds budget " + std::to_string(std::min(opts.budget, kHardCap)));
  if (opts.segment_size == 0) throw resource_error("segment size must be positive");
}

}  // namespace detail

/// Calls fn(p) for every prime p <= limit in increasing order.
///
/// Segmented sieve of Eratosthenes over odd numbers only: flag i of a
/// segment starting at odd `low` stands for low + 2i. Sieving primes are
/// admitted once their square enters the current segment and each keeps
/// the next odd multiple it has to strike.
template <class Fn>
void for_each_prime(std::uint64_t limit, const SieveOptions& opts, Fn&& fn) {
  detail::check_budget(limit, opts);
  if (limit < 2) return;
  fn(std::uint64_t{2});
  if (limit < 3) return;

  const std::uint64_t root = detail::isqrt(limit);
  std::vector<std::uint8_t> small(root + 1, 1);
  std::vector<std::uint64_t> base;  // odd primes <= sqrt(limit)
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
  }

  const std::uint64_t seg = opts.segment_size;
  const std::uint64_t top = (limit % 2 == 0) ? limit - 1 : limit;  // largest odd <= limit
  std::vector<std::uint8_t> flags(seg);
  std::vector<std::uint64_t> next;  // next odd multiple to strike, per admitted base prime
  std::size_t admitted = 0;

  for (std::uint64_t low = 3; low <= top; low += 2 * seg) {
    const std::uint64_t high = std::min(low + 2 * (seg - 1), top);
    const std::uint64_t n = (high - low) / 2 + 1;
    std::fill_n(flags.begin(), n, std::uint8_t{1});

    while (admitted < base.size() && base[admitted] * base[admitted] <= high) {
      next.push_back(base[admitted] * base[admitted]);
      ++admitted;
    }
    for (std::size_t b = 0; b < admitted; ++b) {
      const std::uint64_t p = base[b];
      std::uint64_t j = (next[b] - low) / 2;
      for (; j < n; j += p) flags[j] = 0;
      next[b] = low + 2 * j;
    }
    for (std::uint64_t i = 0; i < n; ++i)
      if (flags[i]) fn(low + 2 * i);
  }
}

/// A consecutive prime pair (p_j, p_{j+1}).
struct GapPair {
  std::uint64_t prime;
  std::uint64_t next;
  friend bool operator==(const GapPair&, const GapPair&) = default;
};

/// Immutable table of every prime up to an inclusive limit, indexed from
/// one (p_1 = 2). Safe to share between threads once constructed.
class PrimeStore {
 public:
  PrimeStore() = default;

  explicit PrimeStore(std::uint64_t limit, const SieveOptions& opts = {}) : limit_(limit) {
    detail::check_budget(limit, opts);
    if (limit >= 17) {
      const double x = static_cast<double>(limit);
      primes_.reserve(static_cast<std::size_t>(1.25506 * x / std::log(x)) + 1);
    }
    for_each_prime(limit, opts,
                   [this](std::uint64_t p) { primes_.push_back(static_cast<std::uint32_t>(p)); });
  }

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t count() const noexcept { return primes_.size(); }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  /// p_n for 1 <= n <= count().
  std::uint64_t nth_prime(std::uint64_t n) const {
    if (n < 1 || n > count())
      throw range_error("prime index " + std::to_string(n) + " outside [1, " +
                        std::to_string(count()) + "]");
    return primes_[n - 1];
  }

  /// pi(x) for integer x <= limit().
  std::uint64_t prime_count_at(std::uint64_t x) const {
    if (x > limit_)
      throw domain_error("pi(" + std::to_string(x) + ") requested beyond sieve limit " +
                         std::to_string(limit_));
    return count_not_above(x);
  }

  /// pi(x) for rational x: p <= num/den iff p <= floor(num/den).
  std::uint64_t prime_count_at(const ExactRational& x) const {
    if (x > limit_)
      throw domain_error("pi(" + x.to_string() + ") requested beyond sieve limit " +
                         std::to_string(limit_));
    return count_not_above(x.floor());
  }

  /// Every consecutive pair (p_j, p_{j+1}) with lo <= p_j <= hi, preceded
  /// by the pair straddling lo when lo is composite. Both members of each
  /// pair must lie in the store.
  auto gap_pairs(std::uint64_t lo, std::uint64_t hi) const {
    if (lo < 2 || lo > hi || hi > limit_)
      throw range_error("gap range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "] invalid for store limit " + std::to_string(limit_));
    // 0-based indices of the largest primes <= lo and <= hi.
    const std::size_t first = count_not_above(lo) - 1;
    const std::size_t last = count_not_above(hi) - 1;
    if (last + 1 >= primes_.size())
      throw range_error("successor of " + std::to_string(primes_[last]) +
                        " lies beyond sieve limit " + std::to_string(limit_));
    return std::views::iota(first, last + 1) |
           std::views::transform([data = primes_.data()](std::size_t i) {
             return GapPair{data[i], data[i + 1]};
           });
  }

 private:
  std::uint64_t count_not_above(std::uint64_t x) const {
    if (x > std::numeric_limits<std::uint32_t>::max()) return primes_.size();
    const auto it = std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(x));
    return static_cast<std::uint64_t>(it - primes_.begin());
  }

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
};

inline PrimeStore sieve_upto(std::uint64_t limit, const SieveOptions& opts = {}) {
  return PrimeStore(limit, opts);
}

}  // namespace kramanujan
