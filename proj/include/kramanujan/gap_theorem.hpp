#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kramanujan/errors.hpp"
#include "kramanujan/exact_rational.hpp"

namespace kramanujan {

/// 50 significant decimal digits; used to settle comparisons that double
/// precision cannot classify with a safe margin.
using Real50 = boost::multiprecision::cpp_bin_float_50;

inline Real50 to_real50(const ExactRational& r) { return Real50(r.num()) / Real50(r.den()); }

/// Short-interval prime theorem: for every real x >= x0 the interval
/// (x, x(1 + c / log^e x)] contains a prime.
struct GapTheorem {
  std::string name;
  std::uint64_t x0 = 2;
  ExactRational c{1};
  unsigned e = 1;

  static GapTheorem make(std::string name, std::uint64_t x0, ExactRational c, unsigned e) {
    if (x0 < 2) throw domain_error("theorem threshold x0 must be at least 2");
    if (c.num() == 0) throw domain_error("theorem constant c must be positive");
    if (e < 1) throw domain_error("theorem log exponent must be at least 1");
    return GapTheorem{std::move(name), x0, c, e};
  }

  /// Upper end of the k-range covered by the explicit R_1 bound,
  /// 1 + c / log^e(x0). Approximate; exact decisions go through
  /// `covers()`.
  double k_max() const {
    return 1.0 + c.to_double() / std::pow(std::log(static_cast<double>(x0)), e);
  }

  Real50 k_max50() const {
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    return 1 + to_real50(c) / pow(log(Real50(x0)), e);
  }

  /// Exact-as-possible test of 1 < k <= k_max. Inputs whose double
  /// margin is within relative 1e-9 are re-decided in 50-digit arithmetic.
  bool covers(const ExactRational& k) const {
    if (k <= 1) return false;
    const ExactRational km1 = k.minus_one();
    // k <= k_max  <=>  (k - 1) * log^e(x0) <= c
    const double lhs = km1.to_double() * std::pow(std::log(static_cast<double>(x0)), e);
    const double rhs = c.to_double();
    if (std::abs(lhs - rhs) > 1e-9 * rhs) return lhs <= rhs;
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    return to_real50(km1) * pow(log(Real50(x0)), e) <= to_real50(c);
  }

  friend bool operator==(const GapTheorem&, const GapTheorem&) = default;
};

namespace theorems {

/// x0 = 58837, c = 1.188, e = 3.
inline GapTheorem axler() { return GapTheorem::make("axler", 58837, ExactRational(1188, 1000), 3); }
/// x0 = 396738, c = 1/25, e = 2.
inline GapTheorem dusart() { return GapTheorem::make("dusart", 396738, ExactRational(1, 25), 2); }
/// x0 = 2898242, c = 1/111, e = 2. The statement is false on
/// [2898239, 2898241]: no prime lies in (2898239, 2898356.93].
inline GapTheorem trudgian() {
  return GapTheorem::make("trudgian", 2898242, ExactRational(1, 111), 2);
}

inline std::vector<GapTheorem> builtin() { return {axler(), dusart(), trudgian()}; }

/// Looks up a built-in theorem by name; throws parse_error otherwise.
inline GapTheorem by_name(const std::string& name) {
  for (auto& thm : builtin())
    if (thm.name == name) return thm;
  throw parse_error("unknown theorem '" + name + "'");
}

/// Ramaré and Saouter: for x >= 10726905041 the interval
/// (x, x + x/28313999] contains a prime. Its range is far beyond what can
/// be sieved here and its shape is not c/log^e x, so it is kept as
/// reference data only.
struct ConstantIntervalTheorem {
  std::uint64_t x0;
  std::uint64_t divisor;
};
inline constexpr ConstantIntervalTheorem kRamareSaouter{10'726'905'041ULL, 28'313'999ULL};

}  // namespace theorems
}  // namespace kramanujan
