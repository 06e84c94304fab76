#include "bertsa/encoding.hpp"

#include <algorithm>

#include "bertsa/error.hpp"

namespace bertsa {

std::size_t EncodedExample::num_attended() const {
  return static_cast<std::size_t>(std::count(attention_mask.begin(), attention_mask.end(), 1));
}

EncodedExample encode(const TokenSequence& tokens, const Vocabulary& vocab, std::size_t max_len,
                      std::optional<SentimentLabel> label) {
  if (max_len < 2) {
    throw ConfigError("max sequence length must be at least 2, got " + std::to_string(max_len));
  }
  const std::size_t kept = std::min(tokens.size(), max_len - 2);

  EncodedExample ex;
  ex.input_ids.assign(max_len, vocab.pad_id());
  ex.attention_mask.assign(max_len, 0);
  ex.segment_ids.assign(max_len, 0);
  ex.label = label;

  ex.input_ids[0] = vocab.cls_id();
  for (std::size_t i = 0; i < kept; ++i) ex.input_ids[i + 1] = vocab.id(tokens[i]);
  ex.input_ids[kept + 1] = vocab.sep_id();
  std::fill_n(ex.attention_mask.begin(), kept + 2, std::uint8_t{1});
  return ex;
}

std::vector<EncodedExample> batch_encode(const std::vector<LabeledText>& reviews, const Vocabulary& vocab,
                                         std::size_t max_len) {
  std::vector<EncodedExample> out;
  out.reserve(reviews.size());
  for (std::size_t i = 0; i < reviews.size(); ++i) {
    try {
      out.push_back(encode(tokenize_review(reviews[i].text, vocab), vocab, max_len, reviews[i].label));
    } catch (const ConfigError& e) {
      throw ConfigError("review " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::string validate_example(const EncodedExample& ex, const Vocabulary& vocab) {
  const std::size_t k = ex.input_ids.size();
  if (k < 2) return "sequence shorter than 2";
  if (ex.attention_mask.size() != k || ex.segment_ids.size() != k) return "vector lengths differ";
  if (ex.input_ids[0] != vocab.cls_id()) return "first id is not [CLS]";
  std::size_t attended = 0;
  while (attended < k && ex.attention_mask[attended] == 1) ++attended;
  std::size_t seps = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto id = ex.input_ids[i];
    if (id < 0 || static_cast<std::size_t>(id) >= vocab.size()) return "id out of range at " + std::to_string(i);
    if (ex.segment_ids[i] > 1) return "segment id not binary at " + std::to_string(i);
    if (i < attended) {
      if (id == vocab.sep_id()) ++seps;
    } else {
      if (ex.attention_mask[i] != 0) return "interior padding at " + std::to_string(i);
      if (id != vocab.pad_id()) return "unmasked content at padded position " + std::to_string(i);
    }
  }
  if (attended < 2) return "fewer than two attended positions";
  if (seps != 1 || ex.input_ids[attended - 1] != vocab.sep_id()) return "attended span does not end in one [SEP]";
  return {};
}

}  // namespace bertsa
