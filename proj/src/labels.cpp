#include "bertsa/labels.hpp"

namespace bertsa {

std::optional<SentimentLabel> parse_label(std::string_view text) {
  if (text == "0" || text == "negative") return SentimentLabel::kNegative;
  if (text == "1" || text == "positive") return SentimentLabel::kPositive;
  return std::nullopt;
}

}  // namespace bertsa
