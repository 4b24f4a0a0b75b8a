#include "kramanujan/exact_rational.hpp"

#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

namespace kramanujan {
namespace {

using Dec50 = boost::multiprecision::cpp_dec_float_50;

TEST(ExactRational, ReducesAtConstruction) {
  const ExactRational r(10, 4);
  EXPECT_EQ(r.num(), 5u);
  EXPECT_EQ(r.den(), 2u);
  EXPECT_EQ(ExactRational(0, 7), ExactRational(0));
}

TEST(ExactRational, RejectsZeroAndOversizedDenominators) {
  EXPECT_THROW(ExactRational(1, 0), domain_error);
  EXPECT_THROW(ExactRational(1, ExactRational::kMaxDenominator + 1), domain_error);
  // Reduction happens first, so a large but reducible denominator is fine.
  EXPECT_NO_THROW(ExactRational(2, 2 * ExactRational::kMaxDenominator));
}

TEST(ExactRational, ParsesDecimalsAndFractions) {
  const auto k = ExactRational::parse("1.0008968291");
  EXPECT_EQ(k, ExactRational(10008968291ULL, 10000000000ULL));
  EXPECT_EQ(std::gcd(k.num(), k.den()), 1u);
  EXPECT_EQ(ExactRational::parse("5/3"), ExactRational(5, 3));
  EXPECT_EQ(ExactRational::parse("10/6"), ExactRational(5, 3));
  EXPECT_EQ(ExactRational::parse("2"), ExactRational(2));
  EXPECT_EQ(ExactRational::parse(".5"), ExactRational(1, 2));
  EXPECT_EQ(ExactRational::parse("1.000000000000001"),
            ExactRational(1000000000000001ULL, 1000000000000000ULL));
}

TEST(ExactRational, ParseErrors) {
  for (const char* bad : {"", ".", "1.2.3", "-1", "1e3", " 1", "1/", "/2", "1/0", "abc",
                          "1.0000000000000001", "99999999999999999999"})
    EXPECT_THROW(ExactRational::parse(bad), parse_error) << bad;
}

TEST(ExactRatio, RequiresValueAboveOne) {
  EXPECT_EQ(parse_k("1.0008968291").value(), ExactRational(10008968291ULL, 10000000000ULL));
  EXPECT_EQ(parse_k("5/3").value(), ExactRational(5, 3));
  EXPECT_THROW(parse_k("0.9"), domain_error);
  EXPECT_THROW(parse_k("1"), domain_error);
  EXPECT_THROW(parse_k("3/3"), domain_error);
}

TEST(ExactRational, IntegerComparisonAndFloor) {
  const ExactRational x(58888ULL * 10000000000ULL, 10008968291ULL);
  EXPECT_EQ(x.floor(), 58835u);
  EXPECT_LT(x, std::uint64_t{58836});
  EXPECT_GT(x, std::uint64_t{58835});
  EXPECT_EQ(ExactRational(12, 4), std::uint64_t{3});
  EXPECT_EQ(ExactRational(7, 2).ceil(), 4u);
  EXPECT_EQ(ExactRational(8, 2).ceil(), 4u);
}

TEST(ExactRational, FloorTimesUsesWideIntermediate) {
  const ExactRational k(10008968291ULL, 10000000000ULL);
  // num * m is about 4.3e19 here, past 2^64, but the quotient is small.
  EXPECT_EQ(k.floor_times(4294967291ULL), 4298819142ULL);
  EXPECT_THROW(ExactRational(3).floor_times(std::numeric_limits<std::uint64_t>::max()),
               resource_error);
}

// Order relations agree with a 50-digit decimal recomputation.
TEST(ExactRationalProperty, OrderingMatchesFiftyDigitArithmetic) {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<std::uint64_t> den(1, ExactRational::kMaxDenominator);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t d1 = den(rng);
    std::uint64_t d2 = den(rng);
    const std::uint64_t n1 = std::uniform_int_distribution<std::uint64_t>(0, 3 * d1)(rng);
    std::uint64_t n2 = std::uniform_int_distribution<std::uint64_t>(0, 3 * d2)(rng);
    // Half the time make the second a near-copy of the first.
    if (i % 2 == 1) {
      const uint128 near = (static_cast<uint128>(n1) * d2 + rng() % 3) / d1;
      if (near < (uint128{1} << 63)) n2 = static_cast<std::uint64_t>(near);
      else d2 = d1, n2 = n1;
    }
    const ExactRational a(n1, d1);
    const ExactRational b(n2, d2);
    const Dec50 da = Dec50(n1) / Dec50(d1);
    const Dec50 db = Dec50(n2) / Dec50(d2);
    // 50 digits cannot separate rationals closer than ~1e-49, and distinct
    // rationals with denominators <= 1e15 differ by at least 1e-30.
    EXPECT_EQ(a < b, da < db && (db - da) > Dec50("1e-45")) << a << " vs " << b;
    EXPECT_EQ(a == b, abs(da - db) < Dec50("1e-45")) << a << " vs " << b;
  }
}

TEST(ExactRationalProperty, ParseRoundTripsThroughCanonicalString) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t d = rng() % ExactRational::kMaxDenominator + 1;
    const ExactRational r(rng() % (1ULL << 62), d);
    EXPECT_EQ(ExactRational::parse(r.to_string()), r);
  }
}

}  // namespace
}  // namespace kramanujan
