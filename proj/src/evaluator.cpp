#include "bertsa/evaluator.hpp"

#include <fstream>

#include <fmt/format.h>

#include "bertsa/error.hpp"

namespace bertsa {

double accuracy(std::span<const SentimentLabel> predictions, std::span<const SentimentLabel> gold) {
  if (predictions.size() != gold.size()) {
    throw DataError(fmt::format("accuracy: {} predictions for {} gold labels", predictions.size(), gold.size()));
  }
  if (predictions.empty()) throw DataError("accuracy: no predictions");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) correct += predictions[i] == gold[i] ? 1 : 0;
  return 100.0 * static_cast<double>(correct) / static_cast<double>(gold.size());
}

std::vector<SentimentLabel> gold_labels(std::span<const EncodedExample> examples) {
  std::vector<SentimentLabel> out;
  out.reserve(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    if (!examples[i].label) throw DataError(fmt::format("example {} has no gold label", i));
    out.push_back(*examples[i].label);
  }
  return out;
}

std::string format_accuracy(double percent) { return fmt::format("{:.2f}", percent); }

void write_predictions(const std::filesystem::path& path, std::span<const SentimentLabel> predictions) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write predictions to " + path.string());
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    out << i << '\t' << label_name(predictions[i]) << '\n';
  }
  if (!out) throw DataError("failed writing predictions to " + path.string());
}

}  // namespace bertsa
