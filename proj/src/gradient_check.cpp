#include "bertsa/gradient_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace bertsa {

std::vector<std::string> GradientCheckReport::failing_arrays() const {
  std::vector<std::string> out;
  for (const auto& a : arrays) {
    if (!a.passed) out.push_back(a.name);
  }
  return out;
}

std::vector<EncodedExample> random_examples(const ModelConfig& config, std::size_t count, std::uint64_t seed) {
  const int k = config.sequence_length;
  const int vocab = config.encoder.vocab_size;
  if (vocab <= kSyntheticSep + 1) throw ConfigError("synthetic examples need vocab_size > 4");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(0, k - 2);
  std::uniform_int_distribution<TokenId> token(kSyntheticSep + 1, vocab - 1);
  std::bernoulli_distribution positive(0.5);

  std::vector<EncodedExample> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const auto len = static_cast<std::size_t>(length(rng));
    EncodedExample ex;
    ex.input_ids.assign(static_cast<std::size_t>(k), kSyntheticPad);
    ex.attention_mask.assign(static_cast<std::size_t>(k), 0);
    ex.segment_ids.assign(static_cast<std::size_t>(k), 0);
    ex.input_ids[0] = kSyntheticCls;
    for (std::size_t i = 1; i <= len; ++i) ex.input_ids[i] = token(rng);
    ex.input_ids[len + 1] = kSyntheticSep;
    std::fill_n(ex.attention_mask.begin(), len + 2, std::uint8_t{1});
    ex.label = positive(rng) ? SentimentLabel::kPositive : SentimentLabel::kNegative;
    out.push_back(std::move(ex));
  }
  return out;
}

GradientCheckReport compare_gradients(const SentimentModel<double>& model, std::span<const EncodedExample> batch,
                                      const ParameterStore<double>& analytic, const GradientCheckOptions& options) {
  SentimentModel<double> probe = model;
  GradientCheckReport report;
  for (auto& [name, entry] : probe.params.entries()) {
    if (entry.frozen) continue;
    ArrayCheck check;
    check.name = name;
    const Matrix<double>* grad = analytic.contains(name) ? &analytic[name] : nullptr;
    auto& value = entry.value;
    for (Eigen::Index r = 0; r < value.rows(); ++r) {
      for (Eigen::Index c = 0; c < value.cols(); ++c) {
        const double original = value(r, c);
        value(r, c) = original + options.step;
        const double up = batch_loss(probe, batch);
        value(r, c) = original - options.step;
        const double down = batch_loss(probe, batch);
        value(r, c) = original;

        const double numeric = (up - down) / (2 * options.step);
        const double a = grad != nullptr ? (*grad)(r, c) : 0.0;
        const double abs_error = std::abs(a - numeric);
        const double denom = std::max({std::abs(a), std::abs(numeric), options.denominator_floor});
        double rel = abs_error / denom;
        if (!std::isfinite(a) || !std::isfinite(numeric)) {
          report.all_finite = false;
          rel = std::numeric_limits<double>::infinity();
        }
        ++check.count;
        check.max_abs_error = std::max(check.max_abs_error, abs_error);
        if (rel > check.max_relative_error) {
          check.max_relative_error = rel;
          check.worst_row = r;
          check.worst_col = c;
        }
      }
    }
    check.passed = check.max_relative_error <= options.tolerance;
    report.num_checked += check.count;
    report.max_relative_error = std::max(report.max_relative_error, check.max_relative_error);
    report.passed = report.passed && check.passed;
    report.arrays.push_back(std::move(check));
  }
  return report;
}

GradientCheckReport gradient_check(const ModelConfig& config, const GradientCheckOptions& options) {
  ModelConfig checked = config;
  if (options.init_stddev) checked.init_stddev = *options.init_stddev;
  const auto model = make_model<double>(checked, options.seed);
  const auto batch = random_examples(checked, options.batch_size, options.seed + 1);
  const auto analytic = loss_and_gradient<double>(model, batch);
  return compare_gradients(model, batch, analytic.grads, options);
}

}  // namespace bertsa
