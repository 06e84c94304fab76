#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bertsa/adam.hpp"
#include "bertsa/config.hpp"
#include "bertsa/evaluator.hpp"
#include "bertsa/model.hpp"

namespace bertsa {

struct EpochMetrics {
  int epoch = 0;
  double train_loss = 0;      // mean over examples, before each batch's update
  double train_accuracy = 0;  // percent, same convention
  std::optional<double> test_accuracy;
};

enum class TrainStatus { kCompleted, kDiverged };

struct TrainResult {
  std::vector<EpochMetrics> epochs;
  TrainStatus status = TrainStatus::kCompleted;
  std::string message;
  std::int64_t steps = 0;
};

// Shuffle stream for a run; independent of the parameter-initialization stream.
inline std::mt19937_64 shuffle_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
  return std::mt19937_64(seq);
}

// Mini-batch Adam over `epochs` uniformly shuffled passes, one update per
// batch. On a non-finite loss or gradient the run stops and `model` holds the
// parameters from before the last update.
template <typename Scalar>
TrainResult train(SentimentModel<Scalar>& model, std::span<const EncodedExample> train_set,
                  std::span<const EncodedExample> test_set, const TrainConfig& config,
                  const std::function<void(const EpochMetrics&)>& on_epoch = {}) {
  config.validate();
  if (train_set.empty()) throw DataError("training set is empty");

  TrainResult result;
  OptimizerState<Scalar> optimizer = make_optimizer_state(model.params);
  auto rng = shuffle_rng(config.seed);
  std::vector<std::size_t> order(train_set.size());
  std::vector<const EncodedExample*> batch;
  ParameterStore<Scalar> last_good = model.params;
  const auto batch_size = static_cast<std::size_t>(config.batch_size);

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    double loss_sum = 0;
    std::size_t correct = 0;
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      const std::size_t end = std::min(order.size(), start + batch_size);
      batch.clear();
      for (std::size_t i = start; i < end; ++i) batch.push_back(&train_set[order[i]]);
      try {
        auto step = loss_and_gradient<Scalar, const EncodedExample*>(
            model, std::span<const EncodedExample* const>(batch.data(), batch.size()));
        if (!std::isfinite(static_cast<double>(step.loss))) throw DivergenceError("non-finite loss");
        loss_sum += static_cast<double>(step.loss) * static_cast<double>(batch.size());
        correct += step.correct;
        last_good = model.params;
        adam_step(model.params, step.grads, optimizer, config);
        ++result.steps;
      } catch (const DivergenceError& e) {
        model.params = std::move(last_good);
        result.status = TrainStatus::kDiverged;
        result.message = "epoch " + std::to_string(epoch) + ", step " + std::to_string(result.steps + 1) + ": " +
                         e.what();
        return result;
      }
    }
    EpochMetrics metrics;
    metrics.epoch = epoch;
    metrics.train_loss = loss_sum / static_cast<double>(train_set.size());
    metrics.train_accuracy = 100.0 * static_cast<double>(correct) / static_cast<double>(train_set.size());
    if (!test_set.empty()) metrics.test_accuracy = evaluate_accuracy(model, test_set);
    result.epochs.push_back(metrics);
    if (on_epoch) on_epoch(metrics);
  }
  return result;
}

}  // namespace bertsa
