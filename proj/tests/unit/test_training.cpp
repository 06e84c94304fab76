#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "bertsa/adam.hpp"
#include "bertsa/error.hpp"
#include "bertsa/gradient_check.hpp"
#include "bertsa/loss.hpp"
#include "bertsa/model.hpp"
#include "bertsa/trainer.hpp"
#include "support.hpp"

namespace bertsa {
namespace {

RowVector<double> logits(double a, double b) {
  RowVector<double> v(2);
  v << a, b;
  return v;
}

TEST(CrossEntropy, UniformLogits) {
  const auto r = cross_entropy_loss<double>(logits(0, 0), 0);
  EXPECT_NEAR(r.loss, std::log(2.0), 1e-15);
  EXPECT_NEAR(r.grad(0), -0.5, 1e-15);
  EXPECT_NEAR(r.grad(1), 0.5, 1e-15);
}

TEST(CrossEntropy, SaturatedCorrect) {
  const auto r = cross_entropy_loss<double>(logits(30, -30), 0);
  EXPECT_GE(r.loss, 0.0);
  EXPECT_LE(r.loss, 1e-9);
}

TEST(CrossEntropy, HandEvaluated) {
  const auto r = cross_entropy_loss<double>(logits(1, 2), 1);
  EXPECT_NEAR(r.loss, std::log1p(std::exp(-1.0)), 1e-15);
  EXPECT_NEAR(r.loss, 0.3133, 5e-5);
}

TEST(CrossEntropy, StableForLargeLogits) {
  const auto r = cross_entropy_loss<float>(RowVector<float>{{1000.0f, -1000.0f}}, 1);
  EXPECT_TRUE(std::isfinite(r.loss));
  EXPECT_FLOAT_EQ(r.loss, 2000.0f);
}

TEST(CrossEntropy, Errors) {
  EXPECT_THROW(cross_entropy_loss<double>(logits(0, 0), 2), DataError);
  EXPECT_THROW(cross_entropy_loss<double>(logits(0, 0), -1), DataError);
  EXPECT_THROW(cross_entropy_loss<double>(logits(std::nan(""), 0), 0), DivergenceError);
}

TEST(CrossEntropy, NonNegativeAndGradientSumsToZero) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    const auto r = cross_entropy_loss<double>(logits(d(rng), d(rng)), i % 2);
    EXPECT_GE(r.loss, 0.0);
    EXPECT_NEAR(r.grad.sum(), 0.0, 1e-12);
  }
}

ParameterStore<double> scalar_store(double value) {
  ParameterStore<double> p;
  p.add("theta", MatrixD::Constant(1, 1, value));
  return p;
}

TEST(Adam, ZeroGradientLeavesParameters) {
  auto params = init_parameters<double>(test::tiny_config(10), 1);
  const auto before = params;
  auto state = make_optimizer_state(params);
  const auto grads = params.zeros_like_trainable();
  adam_step(params, grads, state, TrainConfig{});
  EXPECT_EQ(params, before);
  EXPECT_EQ(state.step, 1);
}

TEST(Adam, FirstStepHandEvaluated) {
  auto params = scalar_store(1.0);
  auto state = make_optimizer_state(params);
  auto grads = scalar_store(0.1);
  const TrainConfig config;
  adam_step(params, grads, state, config);
  // m_hat = g and v_hat = g^2 after bias correction
  const double expected = 1.0 - 3e-5 * (0.1 / (0.1 + 1e-8));
  EXPECT_NEAR(params["theta"](0, 0), expected, 1e-15);
  EXPECT_NEAR(params["theta"](0, 0), 0.99997, 1e-9);
}

TEST(Adam, SecondStepHandEvaluated) {
  auto params = scalar_store(1.0);
  auto state = make_optimizer_state(params);
  TrainConfig config;
  config.learning_rate = 0.01;
  adam_step(params, scalar_store(0.1), state, config);
  adam_step(params, scalar_store(-0.3), state, config);
  const double m = 0.9 * (0.1 * 0.1) + 0.1 * -0.3;
  const double v = 0.999 * (0.001 * 0.01) + 0.001 * 0.09;
  const double m_hat = m / (1 - 0.81);
  const double v_hat = v / (1 - 0.999 * 0.999);
  const double first = 1.0 - 0.01 * (0.1 / (0.1 + 1e-8));
  EXPECT_NEAR(params["theta"](0, 0), first - 0.01 * m_hat / (std::sqrt(v_hat) + 1e-8), 1e-14);
}

TEST(Adam, FirstStepMovesAgainstGradientSign) {
  auto params = init_parameters<double>(test::tiny_config(10), 1);
  const auto before = params;
  auto state = make_optimizer_state(params);
  auto grads = params.zeros_like_trainable();
  test::randomize(grads, 5);
  adam_step(params, grads, state, TrainConfig{});
  for (const auto& [name, g] : grads.entries()) {
    const MatrixD delta = params[name] - before[name];
    for (Eigen::Index i = 0; i < delta.size(); ++i) {
      const double gi = g.value.data()[i];
      EXPECT_EQ(delta.data()[i] < 0, gi > 0) << name;
    }
  }
}

TEST(Adam, FrozenArraysHaveNoStateAndStayPut) {
  auto config = test::tiny_config(10);
  config.encoder.num_frozen_layers = 1;
  auto params = init_parameters<double>(config, 1);
  const auto before = params;
  auto state = make_optimizer_state(params);
  for (const auto& [name, e] : params.entries()) EXPECT_EQ(state.moments.contains(name), !e.frozen) << name;
  // Gradients for every array, frozen ones included, must not touch frozen arrays.
  ParameterStore<double> grads;
  for (const auto& [name, e] : params.entries()) grads.add(name, MatrixD::Ones(e.value.rows(), e.value.cols()));
  adam_step(params, grads, state, TrainConfig{});
  for (const auto& [name, e] : params.entries()) {
    if (e.frozen) {
      EXPECT_EQ(e.value, before[name]) << name;
    } else {
      EXPECT_NE(e.value, before[name]) << name;
    }
  }
}

TEST(Adam, ShapeMismatch) {
  auto params = scalar_store(1.0);
  auto state = make_optimizer_state(params);
  ParameterStore<double> grads;
  grads.add("theta", MatrixD::Zero(2, 1));
  EXPECT_THROW(adam_step(params, grads, state, TrainConfig{}), ConfigError);
}

TEST(Adam, MomentShapesTrackParameters) {
  auto params = init_parameters<double>(test::tiny_config(10), 1);
  auto state = make_optimizer_state(params);
  auto grads = params.zeros_like_trainable();
  for (int s = 0; s < 3; ++s) {
    test::randomize(grads, static_cast<std::uint64_t>(s));
    adam_step(params, grads, state, TrainConfig{});
    for (const auto& [name, m] : state.moments) {
      EXPECT_EQ(m.first.rows(), params[name].rows());
      EXPECT_EQ(m.second.cols(), params[name].cols());
    }
  }
  EXPECT_EQ(state.step, 3);
}

class Backward : public ::testing::Test {
 protected:
  void SetUp() override {
    config = test::tiny_config(12);
    model = make_model<double>(config, 3);
    test::randomize(model.params, 4);
    batch = random_examples(config, 4, 5);
  }

  ModelConfig config;
  SentimentModel<double> model;
  std::vector<EncodedExample> batch;
};

TEST_F(Backward, DuplicatedBatchKeepsMeanGradient) {
  auto doubled = batch;
  doubled.insert(doubled.end(), batch.begin(), batch.end());
  const auto a = loss_and_gradient(model, batch);
  const auto b = loss_and_gradient(model, doubled);
  EXPECT_NEAR(a.loss, b.loss, 1e-14);
  for (const auto& [name, e] : a.grads.entries()) EXPECT_TRUE(e.value.isApprox(b.grads[name], 1e-12)) << name;
}

TEST_F(Backward, UnusedEmbeddingRowsGetZeroGradient) {
  std::vector<bool> used(12, false);
  for (const auto& ex : batch) {
    for (std::size_t i = 0; i < ex.length(); ++i) {
      if (ex.attention_mask[i]) used[static_cast<std::size_t>(ex.input_ids[i])] = true;
    }
  }
  const auto g = loss_and_gradient(model, batch);
  const auto& table = g.grads[param_names::kTokenEmbedding];
  int unused = 0;
  for (int id = 0; id < 12; ++id) {
    if (used[static_cast<std::size_t>(id)]) continue;
    ++unused;
    EXPECT_TRUE(table.row(id).isZero(0.0)) << id;
  }
  EXPECT_GT(unused, 0);
}

TEST_F(Backward, KeyBiasHasNoInfluence) {
  // Softmax is invariant to a per-query shift, which is all a key bias adds.
  const auto g = loss_and_gradient(model, batch);
  EXPECT_LT(g.grads[param_names::layer(0, "attention.key.bias")].cwiseAbs().maxCoeff(), 1e-12);
}

TEST_F(Backward, FrozenArraysGetNoGradient) {
  auto cfg = test::tiny_config(12);
  cfg.encoder.num_layers = 2;
  cfg.encoder.num_frozen_layers = 1;
  const auto m = make_model<double>(cfg, 3);
  const auto g = loss_and_gradient(m, random_examples(cfg, 3, 6));
  for (const auto& [name, e] : m.params.entries()) EXPECT_EQ(g.grads.contains(name), !e.frozen) << name;
}

TEST_F(Backward, FullyFrozenEncoderStillTrainsHead) {
  set_freeze(model.params, config.encoder, config.encoder.num_layers);
  const auto g = loss_and_gradient(model, batch);
  for (const auto& [name, e] : g.grads.entries()) EXPECT_TRUE(name.starts_with("head.")) << name;
  EXPECT_GT(g.grads[param_names::head("dense.weight")].cwiseAbs().maxCoeff(), 0.0);
}

TEST_F(Backward, RejectsUnlabeledAndEmptyBatches) {
  auto unlabeled = batch;
  unlabeled[1].label.reset();
  EXPECT_THROW(loss_and_gradient(model, unlabeled), DataError);
  EXPECT_THROW(loss_and_gradient(model, std::vector<EncodedExample>{}), DataError);
}

TEST(GradientCheck, SeededTinyModelPasses) {
  const auto report = gradient_check(test::tiny_config(12));
  EXPECT_TRUE(report.passed) << report.max_relative_error;
  EXPECT_LE(report.max_relative_error, 1e-4);
  EXPECT_TRUE(report.all_finite);
  const auto model = make_model<double>(test::tiny_config(12), 0);
  EXPECT_EQ(report.num_checked, model.params.num_scalars(true));
}

TEST(GradientCheck, DefaultInitializationScalePasses) {
  GradientCheckOptions options;
  options.init_stddev.reset();
  const auto report = gradient_check(test::tiny_config(12), options);
  EXPECT_TRUE(report.passed) << report.max_relative_error;
}

TEST(GradientCheck, ZeroInitializedModelIsFinite) {
  GradientCheckOptions options;
  options.init_stddev = 0.0;
  const auto report = gradient_check(test::tiny_config(12), options);
  EXPECT_TRUE(report.all_finite);
  EXPECT_TRUE(std::isfinite(report.max_relative_error));
}

TEST(GradientCheck, FlagsExactlyTheCorruptedArray) {
  const auto config = test::tiny_config(12);
  auto model = make_model<double>(config, 8);
  test::randomize(model.params, 9);
  const auto batch = random_examples(config, 3, 10);
  const GradientCheckOptions options;
  for (const std::string& target : {param_names::head("dense.weight"), param_names::layer(0, "ffn.in.weight"),
                                   std::string(param_names::kTokenEmbedding)}) {
    auto grads = loss_and_gradient(model, batch).grads;
    Eigen::Index row = 0, col = 0;
    grads[target].cwiseAbs().maxCoeff(&row, &col);
    grads[target](row, col) *= 2.0;
    const auto report = compare_gradients(model, batch, grads, options);
    EXPECT_FALSE(report.passed);
    EXPECT_EQ(report.failing_arrays(), std::vector<std::string>{target});
  }
}

class Training : public ::testing::Test {
 protected:
  void SetUp() override {
    config = test::tiny_config(12, 6);
    data = random_examples(config, 40, 11);
    // make the labels learnable: positive iff token 4 appears
    for (auto& ex : data) {
      const bool pos = std::find(ex.input_ids.begin(), ex.input_ids.end(), 4) != ex.input_ids.end();
      ex.label = pos ? SentimentLabel::kPositive : SentimentLabel::kNegative;
    }
    train_config.epochs = 2;
    train_config.batch_size = 8;
    train_config.learning_rate = 1e-3;
  }

  ModelConfig config;
  std::vector<EncodedExample> data;
  TrainConfig train_config;
};

TEST_F(Training, OneBatchEqualsManualStep) {
  auto model = make_model<float>(config, 1);
  auto manual = model;
  TrainConfig tc = train_config;
  tc.epochs = 1;
  tc.batch_size = 64;
  const auto result = train<float>(model, data, {}, tc);
  EXPECT_EQ(result.steps, 1);

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto rng = shuffle_rng(tc.seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<EncodedExample> shuffled;
  for (auto i : order) shuffled.push_back(data[i]);
  const auto step = loss_and_gradient(manual, shuffled);
  auto state = make_optimizer_state(manual.params);
  adam_step(manual.params, step.grads, state, tc);
  EXPECT_EQ(model.params, manual.params);
  ASSERT_EQ(result.epochs.size(), 1u);
  EXPECT_FLOAT_EQ(static_cast<float>(result.epochs[0].train_loss), step.loss);
}

TEST_F(Training, DeterministicUnderSeed) {
  auto a = make_model<float>(config, 1);
  auto b = make_model<float>(config, 1);
  const auto ra = train<float>(a, data, data, train_config);
  const auto rb = train<float>(b, data, data, train_config);
  EXPECT_EQ(a.params, b.params);
  ASSERT_EQ(ra.epochs.size(), 2u);
  EXPECT_EQ(ra.epochs[1].train_loss, rb.epochs[1].train_loss);

  auto c = make_model<float>(config, 1);
  TrainConfig other = train_config;
  other.seed = 43;
  train<float>(c, data, data, other);
  EXPECT_FALSE(a.params == c.params);
}

TEST_F(Training, ReportsEveryEpoch) {
  auto model = make_model<float>(config, 1);
  std::vector<int> seen;
  const auto r = train<float>(model, data, data, train_config, [&](const EpochMetrics& m) {
    seen.push_back(m.epoch);
    EXPECT_TRUE(m.test_accuracy.has_value());
    EXPECT_GE(m.train_accuracy, 0.0);
    EXPECT_LE(m.train_accuracy, 100.0);
  });
  EXPECT_EQ(seen, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.steps, 10);
  EXPECT_EQ(r.status, TrainStatus::kCompleted);
}

TEST_F(Training, FrozenArraysStayBitIdentical) {
  config.encoder.num_layers = 2;
  config.encoder.num_frozen_layers = 1;
  auto model = make_model<float>(config, 1);
  const auto initial = model.params;
  train<float>(model, data, {}, train_config);
  for (const auto& [name, e] : model.params.entries()) {
    if (e.frozen) {
      EXPECT_EQ(e.value, initial[name]) << name;
    } else if (!name.ends_with("key.bias")) {
      EXPECT_NE(e.value, initial[name]) << name;
    }
  }
}

TEST_F(Training, DivergenceKeepsLastGoodParameters) {
  auto model = make_model<float>(config, 1);
  model.params[param_names::head("dense.bias")](0, 0) = std::numeric_limits<float>::infinity();
  const auto initial = model.params;
  const auto r = train<float>(model, data, {}, train_config);
  EXPECT_EQ(r.status, TrainStatus::kDiverged);
  EXPECT_EQ(r.steps, 0);
  EXPECT_FALSE(r.message.empty());
  EXPECT_EQ(model.params, initial);
}

TEST_F(Training, RejectsEmptyDataAndBadConfig) {
  auto model = make_model<float>(config, 1);
  EXPECT_THROW(train<float>(model, {}, {}, train_config), DataError);
  TrainConfig bad = train_config;
  bad.epochs = 0;
  EXPECT_THROW(train<float>(model, data, {}, bad), ConfigError);
  bad = train_config;
  bad.adam_epsilon = 0;
  EXPECT_THROW(train<float>(model, data, {}, bad), ConfigError);
}

TEST(TrainConfigDefaults, PaperHyperparameters) {
  const TrainConfig t = train_preset("paper");
  EXPECT_EQ(t.learning_rate, 3e-5);
  EXPECT_EQ(t.adam_epsilon, 1e-8);
  EXPECT_EQ(t.adam_beta1, 0.9);
  EXPECT_EQ(t.adam_beta2, 0.999);
  EXPECT_EQ(t.epochs, 10);
  EXPECT_EQ(model_preset("paper").sequence_length, 256);
  EXPECT_EQ(model_preset("desk").sequence_length, 32);
  EXPECT_THROW(model_preset("huge"), ConfigError);
}

}  // namespace
}  // namespace bertsa
