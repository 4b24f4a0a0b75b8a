#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "kramanujan/errors.hpp"
#include "kramanujan/exact_rational.hpp"
#include "kramanujan/gap_theorem.hpp"
#include "kramanujan/prime_store.hpp"

namespace kramanujan {

struct Violation {
  std::uint64_t prime = 0;
  std::uint64_t next_prime = 0;
  double x = 0;          // point where the interval is shortest
  double threshold = 0;  // x (1 + c / log^e x) at that point
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  GapTheorem theorem;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t last_checked_start = 0;  // p of the last pair checked
  std::vector<Violation> violations;
  std::chrono::nanoseconds elapsed{0};

  bool holds() const noexcept { return violations.empty(); }
};

struct VerifyOptions {
  unsigned jobs = 1;
  // Allows lo below the theorem's x0, to probe where it starts to hold.
  bool explore = false;
};

namespace detail {

/// Threshold function x (1 + c / log^e x).
struct Threshold {
  double c;
  unsigned e;
  ExactRational c_exact;

  double operator()(double x) const { return x * (1.0 + c / std::pow(std::log(x), e)); }

  Real50 precise(double x) const {
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const Real50 rx(x);
    return rx * (1 + to_real50(c_exact) / pow(log(rx), e));
  }

  /// Stationary point of the threshold, solving log^{e+1} x = c (e - log x).
  /// The threshold decreases below it and increases above it.
  double turning_point() const {
    double lo = 0.0;
    double hi = static_cast<double>(e);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (std::pow(mid, e + 1) < c * (e - mid)) lo = mid; else hi = mid;
    }
    return std::exp(hi);
  }

  /// True iff q <= threshold(x); near-ties are settled in 50 digits.
  bool admits(std::uint64_t q, double x, double t) const {
    const double qd = static_cast<double>(q);
    if (std::abs(t - qd) > 1e-9 * qd) return qd <= t;
    return Real50(q) <= precise(x);
  }
};

/// For a gap (p, q) restricted to real x in [start, q): the point where the
/// threshold is smallest. Above e^e the threshold is increasing so this is
/// the left end; below it the turning point may lie inside the gap.
inline double worst_point(const Threshold& f, double start, double q) {
  if (std::log(start) >= static_cast<double>(f.e)) return start;
  const double turn = f.turning_point();
  if (turn > start && turn < q && f(turn) < f(start)) return turn;
  return start;
}

inline void check_range(std::uint64_t lo, std::uint64_t hi, const PrimeStore& store) {
  if (lo < 2 || hi < lo || hi > store.limit())
    throw range_error("verification range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "] invalid for store limit " + std::to_string(store.limit()));
}

}  // namespace detail

/// Scans every consecutive prime pair (p, q) meeting [lo, hi] and checks
/// that (x, x(1 + c/log^e x)] reaches q for every real x in the gap at or
/// above lo. One check per gap suffices because the threshold has a single
/// minimum over the gap (at max(p, lo) once x > e^e). An empty violation
/// list means the statement holds for every real x in [lo, last_checked_start].
inline VerificationReport verify_theorem(const GapTheorem& thm, std::uint64_t lo, std::uint64_t hi,
                                         const PrimeStore& store, const VerifyOptions& opts = {}) {
  const auto started = std::chrono::steady_clock::now();
  detail::check_range(lo, hi, store);
  if (lo < thm.x0 && !opts.explore)
    throw domain_error("lower end " + std::to_string(lo) + " is below x0 = " +
                       std::to_string(thm.x0) + " of theorem '" + thm.name + "'");

  const detail::Threshold f{thm.c.to_double(), thm.e, thm.c};
  const auto primes = store.primes();
  const auto pairs = store.gap_pairs(lo, hi);
  const std::size_t first = static_cast<std::size_t>(store.prime_count_at(lo)) - 1;
  const std::size_t total = static_cast<std::size_t>(std::ranges::size(pairs));

  auto scan = [&](std::size_t begin, std::size_t end) {
    std::vector<Violation> found;
    for (std::size_t i = first + begin; i < first + end; ++i) {
      const std::uint64_t p = primes[i];
      const std::uint64_t q = primes[i + 1];
      const double start = static_cast<double>(std::max(p, lo));
      const double x = detail::worst_point(f, start, static_cast<double>(q));
      const double t = f(x);
      if (!f.admits(q, x, t)) found.push_back({p, q, x, t});
    }
    return found;
  };

  VerificationReport report{thm, lo, hi, total, primes[first + total - 1], {}, {}};
  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(total, 1));
  if (jobs == 1) {
    report.violations = scan(0, total);
  } else {
    std::vector<std::future<std::vector<Violation>>> parts;
    const std::size_t chunk = (total + jobs - 1) / jobs;
    for (std::size_t b = 0; b < total; b += chunk)
      parts.push_back(std::async(std::launch::async, scan, b, std::min(total, b + chunk)));
    for (auto& part : parts) {
      auto v = part.get();
      report.violations.insert(report.violations.end(), v.begin(), v.end());
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

/// Largest prime p in [lo, hi] whose successor q exceeds p(1 + c/log^e p),
/// i.e. the last place the candidate statement fails at a prime.
inline std::optional<GapPair> largest_violation(const ExactRational& c, unsigned e,
                                                std::uint64_t lo, std::uint64_t hi,
                                                const PrimeStore& store) {
  detail::check_range(lo, hi, store);
  if (c.num() == 0 || e < 1) throw domain_error("need c > 0 and e >= 1");
  const detail::Threshold f{c.to_double(), e, c};
  const auto primes = store.primes();
  const std::uint64_t below_lo = store.prime_count_at(lo - 1);
  const std::uint64_t upto_hi = store.prime_count_at(hi);
  if (upto_hi == below_lo) return std::nullopt;  // no prime in [lo, hi]
  if (upto_hi >= primes.size())
    throw range_error("successor of " + std::to_string(primes[upto_hi - 1]) +
                      " lies beyond sieve limit " + std::to_string(store.limit()));
  for (std::uint64_t i = upto_hi; i > below_lo; --i) {
    const std::uint64_t p = primes[i - 1];
    const std::uint64_t q = primes[i];
    const double x = static_cast<double>(p);
    if (!f.admits(q, x, f(x))) return GapPair{p, q};
  }
  return std::nullopt;
}

}  // namespace kramanujan
