#include "rao/core/instance.hpp"
#include "rao/rational.hpp"
#include "rao/rng.hpp"

#include <gtest/gtest.h>

using namespace rao;

namespace {

Rational R(const char* s) { return parse_rational(s); }

// per-step reference: sum of full steps plus the fractional part of the next
Rational step_sum(const std::vector<std::int64_t>& c, const Rational& s) {
  const auto whole = to_int64(floor_of(s));
  Rational sum = 0;
  for (std::int64_t j = 0; j < whole; ++j) sum += c[static_cast<std::size_t>(j)];
  if (Rational(whole) != s) sum += c[static_cast<std::size_t>(whole)] * (s - whole);
  return sum;
}

}  // namespace

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(R("7"), Rational(7));
  EXPECT_EQ(R("-3/4"), Rational(-3, 4));
  EXPECT_EQ(R("0.0215"), Rational(43, 2000));
  EXPECT_EQ(R("2.5"), Rational(5, 2));
  EXPECT_EQ(to_string(R("6/4")), "3/2");
  EXPECT_THROW(R("1/0"), std::invalid_argument);
  EXPECT_THROW(R("abc"), std::invalid_argument);
  EXPECT_EQ(floor_of(R("-1/2")), BigInt(-1));
  EXPECT_EQ(ceil_of(R("5/2")), BigInt(3));
}

TEST(Profile, InfoGainExamples) {
  Article a(6, std::vector<std::int64_t>{4, 2, 1, 1});
  EXPECT_EQ(info_gain(a, 0), Rational(0));
  EXPECT_EQ(info_gain(a, R("2.5")), R("6.5"));
  EXPECT_EQ(info_gain(a, 4), Rational(8));
  EXPECT_THROW(info_gain(a, R("4.01")), std::invalid_argument);
  EXPECT_THROW(info_gain(a, -1), std::invalid_argument);
}

TEST(Profile, RunLengthEncodingMergesEqualRates) {
  auto p = InformationProfile::from_steps(std::vector<std::int64_t>{3, 3, 3, 1, 1, 2});
  ASSERT_EQ(p.segments().size(), 3u);
  EXPECT_EQ(p.length(), Rational(6));
  EXPECT_EQ(p.total(), Rational(13));
  EXPECT_EQ(p.rate_at_step(3), 3);
  EXPECT_EQ(p.rate_at_step(4), 1);
  EXPECT_EQ(p.rate_at_step(6), 2);
  EXPECT_FALSE(p.is_non_increasing());
  EXPECT_THROW(p.rate_at_step(7), std::out_of_range);
}

TEST(Profile, ZeroRatesAreRejected) {
  EXPECT_THROW(InformationProfile::from_steps(std::vector<std::int64_t>{2, 0}), std::invalid_argument);
  EXPECT_THROW(InformationProfile({{0, 3}}), std::invalid_argument);
}

TEST(Profile, TruncationAtFractionalPoint) {
  auto p = InformationProfile::from_steps(std::vector<std::int64_t>{5, 4, 3});
  auto cut = p.truncated(R("1.5"));
  EXPECT_EQ(cut.length(), R("1.5"));
  EXPECT_EQ(cut.total(), Rational(7));
  EXPECT_EQ(p.truncated(10), p);
}

// info_gain agrees with the per-step definition, is monotone, and is linear
// between integer points
TEST(Profile, InfoGainMatchesStepDefinitionProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = rng.between(1, 12);
    std::vector<std::int64_t> c(static_cast<std::size_t>(t));
    for (auto& r : c) r = rng.between(1, 9);
    Article a(9, c);
    Rational prev = -1;
    for (std::int64_t k = 0; k <= 4 * t; ++k) {
      Rational s(k, 4);
      Rational g = info_gain(a, s);
      ASSERT_EQ(g, step_sum(c, s));
      ASSERT_GE(g, prev);
      prev = g;
    }
    ASSERT_EQ(info_gain(a, t), a.profile().total());
  }
}
