#include <random>

#include <gtest/gtest.h>

#include "bertsa/error.hpp"
#include "bertsa/polarity.hpp"

namespace bertsa {
namespace {

using V = PolarityVerdict;

PolarityVerdict binary(std::uint64_t pos, std::uint64_t neg) { return overall_polarity_binary({pos, neg, 0}); }
PolarityVerdict ternary(std::uint64_t pos, std::uint64_t neg, std::uint64_t neu) {
  return overall_polarity_ternary({pos, neg, neu});
}

// Literal reading of the binary pseudocode with real-valued thresholds.
PolarityVerdict binary_oracle(double pos, double neg) {
  if (pos > 1.2 * neg) return V::kPositive;
  if (neg > 1.2 * pos) return V::kNegative;
  return V::kNeutral;
}

TEST(CountLabels, Binary) {
  const std::vector<SentimentLabel> p{SentimentLabel::kPositive, SentimentLabel::kPositive, SentimentLabel::kNegative};
  EXPECT_EQ(count_labels(p), (PolarityCounts{2, 1, 0}));
  EXPECT_EQ(count_labels(std::vector<SentimentLabel>{}), (PolarityCounts{0, 0, 0}));
}

TEST(CountLabels, Ternary) {
  const std::vector<TernaryLabel> p{TernaryLabel::kNeutral, TernaryLabel::kNeutral, TernaryLabel::kPositive};
  const auto c = count_labels(p);
  EXPECT_EQ(c, (PolarityCounts{1, 0, 2}));
  EXPECT_EQ(c.total(), 3u);
}

TEST(BinaryPolarity, Examples) {
  EXPECT_EQ(binary(50, 52), V::kNeutral);
  EXPECT_EQ(binary(0, 0), V::kNeutral);
  EXPECT_EQ(binary(299609, 46287), V::kPositive);
  EXPECT_EQ(binary(25000, 25000), V::kNeutral);
  EXPECT_EQ(binary(5331, 5331), V::kNeutral);
  EXPECT_EQ(binary(5186, 5360), V::kNeutral);
  EXPECT_EQ(binary(886, 1116), V::kNegative);
}

TEST(BinaryPolarity, StrictAtThreshold) {
  EXPECT_EQ(binary(6, 5), V::kNeutral);
  EXPECT_EQ(binary(7, 5), V::kPositive);
  EXPECT_EQ(binary(5, 6), V::kNeutral);
  EXPECT_EQ(binary(5, 7), V::kNegative);
  EXPECT_EQ(binary(1, 0), V::kPositive);
}

TEST(BinaryPolarity, RejectsNeutrals) {
  EXPECT_THROW(overall_polarity_binary({1, 1, 1}), DataError);
}

TEST(TernaryPolarity, Examples) {
  EXPECT_EQ(ternary(5, 5, 90), V::kNeutral);
  EXPECT_EQ(ternary(60, 30, 10), V::kPositive);
  EXPECT_EQ(ternary(50, 50, 0), V::kNeutral);
  EXPECT_EQ(ternary(30, 60, 10), V::kNegative);
  EXPECT_EQ(ternary(7, 8, 85), V::kNeutral);   // 85 is not above 85
  EXPECT_EQ(ternary(10, 5, 85), V::kPositive);
  EXPECT_THROW(ternary(0, 0, 0), DataError);
}

TEST(Aggregator, ExhaustiveAgreementWithPseudocode) {
  for (std::uint64_t p = 0; p <= 200; ++p) {
    for (std::uint64_t n = 0; n <= 200; ++n) {
      ASSERT_EQ(binary(p, n), binary_oracle(static_cast<double>(p), static_cast<double>(n))) << p << "," << n;
    }
  }
}

TEST(Aggregator, ScaleInvariance) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint64_t> d(0, 100000);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t p = d(rng), n = d(rng), u = d(rng);
    for (std::uint64_t k : {2u, 3u, 10u}) {
      EXPECT_EQ(binary(p, n), binary(k * p, k * n));
      if (p + n + u > 0) {
        EXPECT_EQ(ternary(p, n, u), ternary(k * p, k * n, k * u));
      }
    }
  }
}

TEST(Aggregator, PositiveNegativeSymmetry) {
  const auto mirror = [](V v) { return v == V::kPositive ? V::kNegative : v == V::kNegative ? V::kPositive : v; };
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint64_t> d(0, 1000);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t p = d(rng), n = d(rng), u = d(rng);
    EXPECT_EQ(binary(n, p), mirror(binary(p, n)));
    if (p + n + u > 0) {
      EXPECT_EQ(ternary(n, p, u), mirror(ternary(p, n, u)));
    }
  }
}

TEST(Aggregator, NoCountsOverflowNearLimit) {
  const std::uint64_t big = std::numeric_limits<std::uint64_t>::max() / 2;
  EXPECT_EQ(binary(big, big), V::kNeutral);
  EXPECT_EQ(binary(big, big / 2), V::kPositive);
}

TEST(Ratio, ParseAndPrint) {
  EXPECT_EQ(Ratio::parse("1.2"), (Ratio{6, 5}));
  EXPECT_EQ(Ratio::parse("0.85"), (Ratio{17, 20}));
  EXPECT_EQ(Ratio::parse("1.50"), (Ratio{3, 2}));
  EXPECT_EQ(Ratio::parse("2"), (Ratio{2, 1}));
  EXPECT_EQ((Ratio{6, 5}).to_string(), "1.2");
  EXPECT_EQ((Ratio{17, 20}).to_string(), "0.85");
  for (const char* bad : {"", ".", "1e3", "-1", "abc", "1.2.3"}) EXPECT_THROW(Ratio::parse(bad), ConfigError) << bad;
}

TEST(AggregatorConfig, DefaultsAndValidation) {
  const AggregatorConfig c;
  EXPECT_EQ(c.binary_coefficient.value(), 1.2);
  EXPECT_EQ(c.ternary_coefficient.value(), 1.5);
  EXPECT_EQ(c.neutral_fraction.value(), 0.85);
  EXPECT_NO_THROW(c.validate());
  AggregatorConfig bad = c;
  bad.binary_coefficient = {1, 1};
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.neutral_fraction = {1, 1};
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(Verdict, Names) {
  EXPECT_EQ(verdict_name(V::kPositive), "positive");
  EXPECT_EQ(verdict_name(V::kNegative), "negative");
  EXPECT_EQ(verdict_name(V::kNeutral), "neutral");
}

}  // namespace
}  // namespace bertsa
