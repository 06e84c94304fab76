#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "bertsa/encoding.hpp"
#include "bertsa/labels.hpp"
#include "bertsa/model.hpp"

namespace bertsa {

// Argmax per example, ties toward NEGATIVE. predictions[i] belongs to examples[i].
template <typename Scalar>
PredictionVector predict(const SentimentModel<Scalar>& model, std::span<const EncodedExample> examples) {
  PredictionVector out;
  out.reserve(examples.size());
  for (const auto& ex : examples) {
    out.push_back(static_cast<SentimentLabel>(argmax_class(forward_logits(model, ex))));
  }
  return out;
}

// 100 * correct / total. Throws DataError on empty input or length mismatch.
double accuracy(std::span<const SentimentLabel> predictions, std::span<const SentimentLabel> gold);

// Gold labels of `examples`; throws DataError if any is unlabeled.
std::vector<SentimentLabel> gold_labels(std::span<const EncodedExample> examples);

template <typename Scalar>
double evaluate_accuracy(const SentimentModel<Scalar>& model, std::span<const EncodedExample> examples) {
  const auto predictions = predict(model, examples);
  return accuracy(predictions, gold_labels(examples));
}

// Two decimals, e.g. "97.67".
std::string format_accuracy(double percent);

// One line per review: index<TAB>negative|positive.
void write_predictions(const std::filesystem::path& path, std::span<const SentimentLabel> predictions);

}  // namespace bertsa
