#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "bertsa/labels.hpp"

namespace bertsa {

enum class PolarityVerdict : std::uint8_t { kNegative, kPositive, kNeutral };

std::string_view verdict_name(PolarityVerdict verdict);

// Per-review label of a three-class classifier.
enum class TernaryLabel : std::uint8_t { kNegative, kPositive, kNeutral };

struct PolarityCounts {
  std::uint64_t positives = 0;
  std::uint64_t negatives = 0;
  std::uint64_t neutrals = 0;

  std::uint64_t total() const { return positives + negatives + neutrals; }
  bool operator==(const PolarityCounts&) const = default;
};

// Exact non-negative rational; thresholds are compared by cross-multiplication.
struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  std::string to_string() const;  // shortest decimal form, e.g. "1.2"
  // Parses a plain decimal such as "1.2" or "0.85"; throws ConfigError otherwise.
  static Ratio parse(std::string_view decimal);
  bool operator==(const Ratio&) const = default;
};

struct AggregatorConfig {
  Ratio binary_coefficient{6, 5};    // 1.2
  Ratio ternary_coefficient{3, 2};   // 1.5
  Ratio neutral_fraction{17, 20};    // 0.85

  void validate() const;
  bool operator==(const AggregatorConfig&) const = default;
};

PolarityCounts count_labels(std::span<const SentimentLabel> predictions);
PolarityCounts count_labels(std::span<const TernaryLabel> predictions);

// POSITIVE if pos > c*neg, else NEGATIVE if neg > c*pos, else NEUTRAL.
// Throws DataError when counts.neutrals != 0.
PolarityVerdict overall_polarity_binary(const PolarityCounts& counts, const AggregatorConfig& config = {});

// NEUTRAL if neu > f*total, else the binary rule with the ternary coefficient.
// Throws DataError on empty counts.
PolarityVerdict overall_polarity_ternary(const PolarityCounts& counts, const AggregatorConfig& config = {});

}  // namespace bertsa
