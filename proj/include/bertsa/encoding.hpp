#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bertsa/labels.hpp"
#include "bertsa/tokenizer.hpp"
#include "bertsa/vocab.hpp"

namespace bertsa {

inline constexpr std::size_t kDefaultMaxSequenceLength = 256;

// Fixed-length model input: [CLS] t1..tn [SEP] [PAD]*.
struct EncodedExample {
  std::vector<TokenId> input_ids;
  std::vector<std::uint8_t> attention_mask;
  std::vector<std::uint8_t> segment_ids;
  std::optional<SentimentLabel> label;

  std::size_t length() const { return input_ids.size(); }
  // Number of attended positions; the mask is a prefix of ones.
  std::size_t num_attended() const;

  bool operator==(const EncodedExample&) const = default;
};

// Keeps the first max_len - 2 pieces; [SEP] always follows the kept pieces.
// Throws ConfigError when max_len < 2.
EncodedExample encode(const TokenSequence& tokens, const Vocabulary& vocab, std::size_t max_len,
                      std::optional<SentimentLabel> label = std::nullopt);

struct LabeledText {
  std::string text;
  std::optional<SentimentLabel> label;
};

std::vector<EncodedExample> batch_encode(const std::vector<LabeledText>& reviews, const Vocabulary& vocab,
                                         std::size_t max_len);

// Checks the layout invariants; returns an empty string when the example is well formed.
std::string validate_example(const EncodedExample& example, const Vocabulary& vocab);

}  // namespace bertsa
