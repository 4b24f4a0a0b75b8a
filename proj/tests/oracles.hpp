#pragma once

// Test-only oracles. Nothing here calls into the library: primes come
// from trial division and the Ramanujan oracle evaluates the definition
// directly at every point where the step function can change.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace kramanujan::oracle {

__extension__ using u128 = unsigned __int128;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

inline const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = trial_division_primes(400000);
  return primes;
}

/// #{p prime : p * den <= num}.
inline std::uint64_t count_not_above(u128 num, u128 den) {
  const auto& ps = small_primes();
  const auto it = std::partition_point(ps.begin(), ps.end(), [&](std::uint64_t p) {
    return static_cast<u128>(p) * den <= num;
  });
  return static_cast<std::uint64_t>(it - ps.begin());
}

/// R_n^{(k)} for k = kn/kd straight from its definition, trusting the
/// region up to `limit` only: D(x) = pi(x) - pi(x/k) is a right-continuous
/// step function that can only change at primes q and at points k*p, so
/// its values on [m, limit] are D(m) and D at those points.
inline std::uint64_t definition_R(std::uint64_t kn, std::uint64_t kd, std::uint64_t n,
                                  std::uint64_t limit) {
  struct Point {
    u128 num, den;
  };
  auto deficiency = [&](const Point& x) {
    return static_cast<std::int64_t>(count_not_above(x.num, x.den)) -
           static_cast<std::int64_t>(count_not_above(x.num * kd, x.den * kn));
  };
  std::vector<Point> points{{1, 1}};
  for (auto p : small_primes()) {
    if (p > limit) break;
    points.push_back({p, 1});
    if (static_cast<u128>(p) * kn <= static_cast<u128>(limit) * kd) points.push_back({u128(p) * kn, kd});
  }
  // Last point with D < n; then the first integer m past it with D(m) >= n.
  u128 fail_num = 0, fail_den = 1;
  for (const auto& x : points)
    if (deficiency(x) < static_cast<std::int64_t>(n) && x.num * fail_den > fail_num * x.den) {
      fail_num = x.num;
      fail_den = x.den;
    }
  for (std::uint64_t m = static_cast<std::uint64_t>(fail_num / fail_den) + 1;; ++m)
    if (deficiency({m, 1}) >= static_cast<std::int64_t>(n)) return m;
}

}  // namespace kramanujan::oracle
