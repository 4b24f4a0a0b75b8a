#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kramanujan/errors.hpp"
#include "kramanujan/exact_rational.hpp"
#include "kramanujan/gap_theorem.hpp"
#include "kramanujan/prime_store.hpp"

namespace kramanujan {

/// For k >= 5/3 the first k-Ramanujan prime is 2.
inline constexpr ExactRational kSmallestPrimeThreshold{5, 3};

/// R_1 at k = 1.0008968291 is 58889 = p_5950, certified by the bound 58890
/// from the x0 = 58837 cubic-log theorem. R_1 is non-increasing in k, so
/// the same horizon serves every larger k.
inline constexpr ExactRational kReferenceK{10'008'968'291ULL, 10'000'000'000ULL};
inline constexpr std::uint64_t kReferenceBound = 58890;
inline constexpr std::uint64_t kReferencePrime = 58889;
inline constexpr std::uint64_t kReferenceIndex = 5950;

enum class Method { large_k, fast_path, theorem_bound, table, oracle };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::large_k: return "large-k";
    case Method::fast_path: return "fast-path";
    case Method::theorem_bound: return "theorem-bound";
    case Method::table: return "table";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

/// Upper bound of k * exp((c / (k - 1))^(1/e)) for 1 < k <= k_max(thm).
///
/// The exponential is evaluated in double precision, inflated by a
/// relative 1e-12 and rounded up, so rounding can only move the result
/// upwards.
inline std::uint64_t cor_bound(const ExactRatio& k, const GapTheorem& thm) {
  if (!thm.covers(k.value()))
    throw domain_error("k = " + k.value().to_string() + " exceeds k_max of theorem '" + thm.name +
                       "'");
  const double radicand = thm.c.to_double() / k.value().minus_one().to_double();
  double root = 0;
  switch (thm.e) {
    case 1: root = radicand; break;
    case 2: root = std::sqrt(radicand); break;
    case 3: root = std::cbrt(radicand); break;
    default: root = std::pow(radicand, 1.0 / thm.e);
  }
  const double value = k.value().to_double() * std::exp(root) * (1.0 + 1e-12);
  if (!std::isfinite(value) || value >= 1.8e19)
    throw resource_error("bound for k = " + k.value().to_string() + " is not representable");
  return static_cast<std::uint64_t>(std::ceil(value));
}

/// A proven upper bound for R_1^{(k)} and where it came from.
struct Certificate {
  std::uint64_t bound = 0;
  Method method = Method::large_k;
  std::string theorem;  // empty unless method == theorem_bound
};

/// Smallest available certified bound for R_1^{(k)}. Throws
/// unsupported_range_error when even the best bound exceeds the sieve
/// budget.
inline Certificate certify(const ExactRatio& k, const SieveOptions& opts = {}) {
  if (k.value() >= kSmallestPrimeThreshold) return {2, Method::large_k, {}};
  if (k.value() >= kReferenceK) return {kReferenceBound, Method::fast_path, {}};

  std::optional<Certificate> best;
  for (const auto& thm : theorems::builtin()) {
    if (!thm.covers(k.value())) continue;
    std::uint64_t b = 0;
    try {
      b = cor_bound(k, thm);
    } catch (const resource_error&) {
      continue;
    }
    if (!best || b < best->bound) best = Certificate{b, Method::theorem_bound, thm.name};
  }
  if (!best)
    throw unsupported_range_error("no built-in theorem yields a finite bound for k = " +
                                  k.value().to_string());
  if (best->bound > opts.budget)
    throw unsupported_range_error("k = " + k.value().to_string() + " needs a sieve up to " +
                                  std::to_string(best->bound) + " (theorem '" + best->theorem +
                                  "'), above the budget " + std::to_string(opts.budget));
  return *best;
}

struct FirstRamanujan {
  std::uint64_t prime = 2;
  std::uint64_t index = 1;
  Certificate certificate;
  // True when some later ratio p_{n+1}/p_n equals k exactly: k is then the
  // closed left end of a table interval and any smaller k changes R_1.
  bool on_breakpoint = false;
};

/// R_1^{(k)} as p_m with m the largest index whose ratio p_m/p_{m-1}
/// exceeds k, searched up to a certified bound (or 2 when none does).
inline FirstRamanujan first_k_ramanujan(const ExactRatio& k, const SieveOptions& opts = {}) {
  FirstRamanujan out;
  out.certificate = certify(k, opts);
  if (out.certificate.method == Method::large_k) return out;

  std::uint64_t prev = 0;
  std::uint64_t index = 0;
  for_each_prime(out.certificate.bound, opts, [&](std::uint64_t p) {
    ++index;
    if (prev != 0) {
      if (k.ratio_exceeds(p, prev)) {
        out.prime = p;
        out.index = index;
        out.on_breakpoint = false;
      } else if (k.ratio_equals(p, prev)) {
        out.on_breakpoint = true;
      }
    }
    prev = p;
  });
  return out;
}

struct BruteForceResult {
  std::uint64_t prime = 2;
  std::uint64_t index = 1;
  std::uint64_t scan_limit = 0;
  // Prime p of the last failing critical point x = k*p, or 0 if only the
  // region below 2k failed.
  std::uint64_t last_failing_prime = 0;
};

/// R_n^{(k)} straight from the definition, on a store reaching scan_limit.
///
/// D(x) = pi(x) - pi(x/k) only drops where pi(x/k) jumps, at the critical
/// points x = k*p. Below the first one D = pi(x). Between consecutive
/// critical points D is non-decreasing, so the last failure is at some
/// critical point c with deficiency D(c) < n, and R_n is the (n - D(c))-th
/// prime above c.
inline BruteForceResult brute_force_R(const ExactRatio& k, std::uint64_t n,
                                      std::uint64_t scan_limit, const PrimeStore& store) {
  if (n < 1) throw domain_error("Ramanujan index n must be at least 1");
  if (scan_limit > store.limit())
    throw range_error("scan limit " + std::to_string(scan_limit) + " beyond store limit " +
                      std::to_string(store.limit()));
  const auto primes = store.primes();
  const ExactRational& kv = k.value();

  // State of the last failure: pi at it, deficiency, defining prime.
  std::uint64_t fail_pi = 0;
  std::uint64_t fail_deficiency = 0;
  std::uint64_t fail_prime = 0;

  std::uint64_t pi_x = 0;  // pi(floor(k * p_j)), advanced monotonically
  for (std::uint64_t j = 1; j <= primes.size(); ++j) {
    const std::uint64_t p = primes[j - 1];
    if (kv.compare_scaled(p, scan_limit) > 0) break;  // k*p > scan_limit
    const std::uint64_t x = kv.floor_times(p);
    while (pi_x < primes.size() && primes[pi_x] <= x) ++pi_x;
    const std::uint64_t deficiency = pi_x - j;  // pi(k p) >= pi(p) = j
    if (deficiency < n) {
      fail_pi = pi_x;
      fail_deficiency = deficiency;
      fail_prime = p;
    }
  }

  // 2 * k * p > scan_limit
  if (fail_prime != 0 && kv.compare_scaled(2 * fail_prime, scan_limit) > 0)
    throw inconclusive_error("last failing critical point k*" + std::to_string(fail_prime) +
                             " lies above scan_limit/2 = " + std::to_string(scan_limit / 2));
  const std::uint64_t index = fail_pi + (n - fail_deficiency);
  if (index > primes.size() || primes[index - 1] > scan_limit)
    throw inconclusive_error("R_" + std::to_string(n) + " lies beyond scan limit " +
                             std::to_string(scan_limit));
  return {primes[index - 1], index, scan_limit, fail_prime};
}

inline BruteForceResult brute_force_R(const ExactRatio& k, std::uint64_t n,
                                      std::uint64_t scan_limit, const SieveOptions& opts = {}) {
  if (n < 1) throw domain_error("Ramanujan index n must be at least 1");
  return brute_force_R(k, n, scan_limit, sieve_upto(scan_limit, opts));
}

/// Characterisation test: p_N is R_1^{(k)} iff p_{m+1}/p_m <= k for all
/// m >= N and p_N/p_{N-1} > k. The first condition is checked across the
/// whole store, which must reach a certified bound for k. For N = 1 the
/// second condition is vacuous.
inline bool is_first_k_ramanujan(std::uint64_t N, const ExactRatio& k, const PrimeStore& store) {
  if (N < 1 || N + 1 > store.count())
    throw range_error("index " + std::to_string(N) + " outside [1, " +
                      std::to_string(store.count()) + " - 1]");
  const Certificate cert = certify(k);
  if (store.limit() < cert.bound)
    throw insufficient_store_error("store limit " + std::to_string(store.limit()) +
                                   " below certified bound " + std::to_string(cert.bound));
  const auto primes = store.primes();
  if (N >= 2 && !k.ratio_exceeds(primes[N - 1], primes[N - 2])) return false;
  for (std::uint64_t m = N; m < primes.size(); ++m)
    if (k.ratio_exceeds(primes[m], primes[m - 1])) return false;
  return true;
}

/// Row of the k-interval table: index a with p_a / p_{a-1}.
struct BreakpointEntry {
  std::uint64_t index = 0;
  std::uint64_t prime = 0;
  std::uint64_t prev_prime = 0;
  ExactRational ratio;
  friend bool operator==(const BreakpointEntry&, const BreakpointEntry&) = default;
};

/// Indices a in [2, index_limit] whose ratio p_a/p_{a-1} is larger than
/// every ratio to its right (up to index_limit) and larger than k_min,
/// in increasing a. Ratios therefore strictly decrease along the list and
/// for k in [ratio(i+1), ratio(i)) the first k-Ramanujan prime is p_{a(i)}.
inline std::vector<BreakpointEntry> breakpoints(const ExactRatio& k_min, std::uint64_t index_limit,
                                                const PrimeStore& store) {
  if (index_limit < 2 || index_limit > store.count())
    throw range_error("index limit " + std::to_string(index_limit) + " outside [2, " +
                      std::to_string(store.count()) + "]");
  const auto primes = store.primes();
  std::vector<BreakpointEntry> rows;
  std::optional<ExactRational> record;
  for (std::uint64_t a = index_limit; a >= 2; --a) {
    const ExactRational ratio(primes[a - 1], primes[a - 2]);
    if (record && ratio <= *record) continue;
    record = ratio;
    if (ratio > k_min.value()) rows.push_back({a, primes[a - 1], primes[a - 2], ratio});
  }
  std::reverse(rows.begin(), rows.end());
  return rows;
}

/// R_1^{(k)} read off the reference table (k >= 1.0008968291 only): the
/// last row of breakpoints(k, 5950) is p_m, or 2 if there is none.
inline FirstRamanujan first_k_from_table(const ExactRatio& k) {
  if (k.value() < kReferenceK)
    throw domain_error("table lookup covers k >= " + kReferenceK.to_string() + " only");
  FirstRamanujan out;
  out.certificate = {kReferenceBound, Method::table, {}};
  const PrimeStore store(kReferenceBound);
  const auto rows = breakpoints(k, kReferenceIndex, store);
  if (!rows.empty()) {
    out.prime = rows.back().prime;
    out.index = rows.back().index;
  }
  const auto primes = store.primes();
  for (std::uint64_t a = out.index + 1; a <= kReferenceIndex; ++a)
    if (k.ratio_equals(primes[a - 1], primes[a - 2])) out.on_breakpoint = true;
  return out;
}

}  // namespace kramanujan
