#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace bertsa {

enum class SentimentLabel : std::uint8_t { kNegative = 0, kPositive = 1 };

inline constexpr int kNumBinaryClasses = 2;

inline int class_index(SentimentLabel label) { return static_cast<int>(label); }

inline std::string_view label_name(SentimentLabel label) {
  return label == SentimentLabel::kPositive ? "positive" : "negative";
}

// Accepts 0/1 or negative/positive.
std::optional<SentimentLabel> parse_label(std::string_view text);

// Aligned 1:1 with the evaluated reviews.
using PredictionVector = std::vector<SentimentLabel>;

}  // namespace bertsa
