#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bertsa/config.hpp"
#include "bertsa/encoding.hpp"
#include "bertsa/model.hpp"

namespace bertsa {

struct GradientCheckOptions {
  double step = 1e-5;
  double tolerance = 1e-4;
  // Relative error is |a - n| / max(|a|, |n|, denominator_floor).
  double denominator_floor = 1e-6;
  std::uint64_t seed = 7;
  std::size_t batch_size = 4;
  // Overrides ModelConfig::init_stddev for the checked model.
  std::optional<double> init_stddev = 0.5;
};

struct ArrayCheck {
  std::string name;
  std::size_t count = 0;
  double max_relative_error = 0;
  double max_abs_error = 0;
  Eigen::Index worst_row = 0;
  Eigen::Index worst_col = 0;
  bool passed = true;
};

struct GradientCheckReport {
  std::vector<ArrayCheck> arrays;
  std::size_t num_checked = 0;
  double max_relative_error = 0;
  bool all_finite = true;
  bool passed = true;

  std::vector<std::string> failing_arrays() const;
};

// Ids of the synthetic vocabulary used by random_examples.
inline constexpr TokenId kSyntheticPad = 0;
inline constexpr TokenId kSyntheticUnk = 1;
inline constexpr TokenId kSyntheticCls = 2;
inline constexpr TokenId kSyntheticSep = 3;

// Well-formed labeled examples of config.sequence_length with random content
// drawn from ids [4, vocab_size) and random lengths in [0, K - 2].
std::vector<EncodedExample> random_examples(const ModelConfig& config, std::size_t count, std::uint64_t seed);

// Compares `analytic` with central differences of the mean batch loss for
// every trainable scalar of `model`.
GradientCheckReport compare_gradients(const SentimentModel<double>& model, std::span<const EncodedExample> batch,
                                      const ParameterStore<double>& analytic, const GradientCheckOptions& options);

// Builds a seeded double-precision model and random batch, then runs
// compare_gradients against loss_and_gradient.
GradientCheckReport gradient_check(const ModelConfig& config, const GradientCheckOptions& options = {});

}  // namespace bertsa
