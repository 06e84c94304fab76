#include "bertsa/polarity.hpp"

#include <numeric>

#include "bertsa/error.hpp"

namespace bertsa {

namespace {

using Wide = unsigned __int128;

// lhs > ratio * rhs, exactly.
bool exceeds(std::uint64_t lhs, const Ratio& ratio, std::uint64_t rhs) {
  return Wide{lhs} * ratio.denominator > Wide{rhs} * ratio.numerator;
}

}  // namespace

std::string_view verdict_name(PolarityVerdict verdict) {
  switch (verdict) {
    case PolarityVerdict::kPositive:
      return "positive";
    case PolarityVerdict::kNegative:
      return "negative";
    case PolarityVerdict::kNeutral:
      break;
  }
  return "neutral";
}

std::string Ratio::to_string() const {
  std::uint64_t whole = numerator / denominator;
  std::uint64_t rest = numerator % denominator;
  std::string out = std::to_string(whole);
  if (rest == 0) return out;
  out += '.';
  // Terminates for denominators of the form 2^a 5^b, which is all parse() produces.
  for (int digits = 0; rest != 0 && digits < 19; ++digits) {
    rest *= 10;
    out += static_cast<char>('0' + rest / denominator);
    rest %= denominator;
  }
  return out;
}

Ratio Ratio::parse(std::string_view text) {
  const auto fail = [&] { return ConfigError("not a plain decimal number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || frac.size() > 9) throw fail();
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  for (std::string_view part : {whole, frac}) {
    for (char ch : part) {
      if (ch < '0' || ch > '9' || numerator > 1'000'000'000'000ULL) throw fail();
      numerator = numerator * 10 + static_cast<std::uint64_t>(ch - '0');
    }
  }
  for (std::size_t i = 0; i < frac.size(); ++i) denominator *= 10;
  const std::uint64_t g = std::gcd(numerator, denominator);
  return {numerator / g, denominator / g};
}

void AggregatorConfig::validate() const {
  if (!(binary_coefficient.numerator > binary_coefficient.denominator)) {
    throw ConfigError("binary coefficient must be greater than 1");
  }
  if (!(ternary_coefficient.numerator > ternary_coefficient.denominator)) {
    throw ConfigError("ternary coefficient must be greater than 1");
  }
  if (neutral_fraction.numerator == 0 || neutral_fraction.numerator >= neutral_fraction.denominator) {
    throw ConfigError("neutral fraction must lie strictly between 0 and 1");
  }
}

PolarityCounts count_labels(std::span<const SentimentLabel> predictions) {
  PolarityCounts counts;
  for (auto label : predictions) {
    (label == SentimentLabel::kPositive ? counts.positives : counts.negatives) += 1;
  }
  return counts;
}

PolarityCounts count_labels(std::span<const TernaryLabel> predictions) {
  PolarityCounts counts;
  for (auto label : predictions) {
    switch (label) {
      case TernaryLabel::kPositive:
        ++counts.positives;
        break;
      case TernaryLabel::kNegative:
        ++counts.negatives;
        break;
      case TernaryLabel::kNeutral:
        ++counts.neutrals;
        break;
    }
  }
  return counts;
}

PolarityVerdict overall_polarity_binary(const PolarityCounts& counts, const AggregatorConfig& config) {
  if (counts.neutrals != 0) throw DataError("binary aggregation received neutral predictions");
  if (exceeds(counts.positives, config.binary_coefficient, counts.negatives)) return PolarityVerdict::kPositive;
  if (exceeds(counts.negatives, config.binary_coefficient, counts.positives)) return PolarityVerdict::kNegative;
  return PolarityVerdict::kNeutral;
}

PolarityVerdict overall_polarity_ternary(const PolarityCounts& counts, const AggregatorConfig& config) {
  if (counts.total() == 0) throw DataError("ternary aggregation needs at least one prediction");
  if (exceeds(counts.neutrals, config.neutral_fraction, counts.total())) return PolarityVerdict::kNeutral;
  if (exceeds(counts.positives, config.ternary_coefficient, counts.negatives)) return PolarityVerdict::kPositive;
  if (exceeds(counts.negatives, config.ternary_coefficient, counts.positives)) return PolarityVerdict::kNegative;
  return PolarityVerdict::kNeutral;
}

}  // namespace bertsa
