#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "kramanujan/errors.hpp"

namespace kramanujan {

__extension__ using uint128 = unsigned __int128;

/// Non-negative rational number num/den kept in lowest terms.
///
/// The denominator is capped at 10^15 so that every cross-multiplication
/// against another rational or against an integer below 2^64 fits in
/// 128 bits; comparisons are therefore exact and never overflow.
class ExactRational {
 public:
  static constexpr std::uint64_t kMaxDenominator = 1'000'000'000'000'000ULL;
  static constexpr int kMaxFractionDigits = 15;

  constexpr ExactRational() = default;

  constexpr ExactRational(std::uint64_t num, std::uint64_t den = 1)  // NOLINT
      : num_(num), den_(den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    const std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
    if (den_ > kMaxDenominator)
      throw domain_error("denominator " + std::to_string(den_) +
                         " exceeds 10^15 after reduction");
  }

  constexpr std::uint64_t num() const noexcept { return num_; }
  constexpr std::uint64_t den() const noexcept { return den_; }

  constexpr std::uint64_t floor() const noexcept { return num_ / den_; }
  constexpr std::uint64_t ceil() const noexcept {
    return num_ / den_ + (num_ % den_ != 0 ? 1 : 0);
  }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  double to_double() const noexcept {
    // Split off the integer part so large numerators keep full precision.
    const std::uint64_t whole = num_ / den_;
    const std::uint64_t rest = num_ % den_;
    return static_cast<double>(whole) +
           static_cast<double>(rest) / static_cast<double>(den_);
  }

  /// floor(this * m), throwing if the result leaves 64 bits.
  constexpr std::uint64_t floor_times(std::uint64_t m) const {
    const uint128 q = static_cast<uint128>(num_) * m / den_;
    if (q > std::numeric_limits<std::uint64_t>::max())
      throw resource_error("product overflows 64 bits");
    return static_cast<std::uint64_t>(q);
  }

  /// Exact sign of (this * a) - (b) with a, b integers.
  constexpr std::strong_ordering compare_scaled(std::uint64_t a,
                                                std::uint64_t b) const noexcept {
    return static_cast<uint128>(num_) * a <=> static_cast<uint128>(b) * den_;
  }

  /// this - 1; requires this >= 1.
  constexpr ExactRational minus_one() const {
    if (num_ < den_) throw domain_error("rational below one");
    return ExactRational(num_ - den_, den_);
  }

  friend constexpr bool operator==(const ExactRational&,
                                   const ExactRational&) = default;

  friend constexpr std::strong_ordering operator<=>(const ExactRational& a,
                                                    const ExactRational& b) noexcept {
    return static_cast<uint128>(a.num_) * b.den_ <=>
           static_cast<uint128>(b.num_) * a.den_;
  }

  friend constexpr bool operator==(const ExactRational& a,
                                   std::uint64_t n) noexcept {
    return a.den_ == 1 && a.num_ == n;
  }

  friend constexpr std::strong_ordering operator<=>(const ExactRational& a,
                                                    std::uint64_t n) noexcept {
    return static_cast<uint128>(a.num_) <=> static_cast<uint128>(n) * a.den_;
  }

  /// Canonical "num/den" rendering (denominator always present).
  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p/q", an integer, or a finite decimal with at most 15
  /// fractional digits. No sign, exponent or whitespace is accepted.
  static ExactRational parse(std::string_view text);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
  return os << r.num() << '/' << r.den();
}

namespace detail {

inline std::uint64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw parse_error("empty number in '" + std::string(whole) + "'");
  std::uint64_t value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw parse_error("number too large in '" + std::string(whole) + "'");
  if (ec != std::errc() || ptr != last)
    throw parse_error("malformed number '" + std::string(whole) + "'");
  return value;
}

inline bool all_digits(std::string_view s) {
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace detail

inline ExactRational ExactRational::parse(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw parse_error("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q))
      throw parse_error("malformed fraction '" + std::string(whole) + "'");
    const std::uint64_t den = detail::parse_digits(q, whole);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(whole) + "'");
    return ExactRational(detail::parse_digits(p, whole), den);
  }

  const auto dot = text.find('.');
  const auto int_part = text.substr(0, dot);
  const auto frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (!detail::all_digits(int_part) || !detail::all_digits(frac_part) ||
      (int_part.empty() && frac_part.empty()))
    throw parse_error("malformed decimal '" + std::string(whole) + "'");
  if (frac_part.size() > static_cast<std::size_t>(kMaxFractionDigits))
    throw parse_error("more than 15 fractional digits in '" + std::string(whole) + "'");

  const std::uint64_t ip = int_part.empty() ? 0 : detail::parse_digits(int_part, whole);
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const std::uint64_t fp = frac_part.empty() ? 0 : detail::parse_digits(frac_part, whole);

  const uint128 num = static_cast<uint128>(ip) * scale + fp;
  if (num > std::numeric_limits<std::uint64_t>::max())
    throw parse_error("decimal too large in '" + std::string(whole) + "'");
  return ExactRational(static_cast<std::uint64_t>(num), scale);
}

/// The threshold k of a k-Ramanujan prime: an exact rational strictly
/// greater than one.
class ExactRatio {
 public:
  explicit ExactRatio(ExactRational value) : value_(value) {
    if (value_ <= 1)
      throw domain_error("k must be greater than 1, got " + value_.to_string());
  }
  ExactRatio(std::uint64_t num, std::uint64_t den) : ExactRatio(ExactRational(num, den)) {}

  const ExactRational& value() const noexcept { return value_; }
  std::uint64_t num() const noexcept { return value_.num(); }
  std::uint64_t den() const noexcept { return value_.den(); }

  /// Exact test of prime / prev > k.
  bool ratio_exceeds(std::uint64_t prime, std::uint64_t prev) const noexcept {
    return value_.compare_scaled(prev, prime) < 0;
  }
  bool ratio_equals(std::uint64_t prime, std::uint64_t prev) const noexcept {
    return value_.compare_scaled(prev, prime) == 0;
  }

  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  ExactRational value_;
};

inline ExactRatio parse_k(std::string_view text) {
  return ExactRatio(ExactRational::parse(text));
}

}  // namespace kramanujan
