#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bertsa/encoder.hpp"
#include "bertsa/error.hpp"
#include "bertsa/gradient_check.hpp"
#include "support.hpp"

namespace bertsa {
namespace {

using Mask8 = std::vector<std::uint8_t>;

ModelConfig small_config(int layers, int hidden, int heads, int vocab, int k) {
  ModelConfig c;
  c.encoder.num_layers = layers;
  c.encoder.hidden_size = hidden;
  c.encoder.num_heads = heads;
  c.encoder.ffn_size = 2 * hidden;
  c.encoder.max_position = k;
  c.encoder.vocab_size = vocab;
  c.encoder.num_frozen_layers = 0;
  c.head.lstm_hidden_size = hidden;
  c.sequence_length = k;
  return c;
}

EncodedExample example(std::vector<TokenId> ids, Mask8 mask) {
  EncodedExample ex;
  ex.segment_ids.assign(ids.size(), 0);
  ex.input_ids = std::move(ids);
  ex.attention_mask = std::move(mask);
  return ex;
}

MatrixD random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  MatrixD m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = dist(rng);
  return m;
}

TEST(Embed, ZeroTables) {
  auto params = init_parameters<double>(small_config(1, 4, 2, 6, 5), 1);
  test::zero_all(params);
  const auto out = embed(example({2, 4, 5, 3, 0}, {1, 1, 1, 1, 0}), params);
  EXPECT_EQ(out.rows(), 5);
  EXPECT_EQ(out.cols(), 4);
  EXPECT_TRUE(out.isZero(0.0));
}

TEST(Embed, OneHotLookup) {
  auto params = init_parameters<double>(small_config(1, 6, 2, 6, 4), 1);
  test::zero_all(params);
  params[param_names::kTokenEmbedding] = MatrixD::Identity(6, 6);
  const std::vector<TokenId> ids{2, 5, 3, 0};
  const auto out = embed(example(ids, {1, 1, 1, 0}), params);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 6; ++j) EXPECT_EQ(out(i, j), j == ids[static_cast<std::size_t>(i)] ? 1.0 : 0.0);
  }
}

TEST(Embed, SumOfThreeRows) {
  auto params = init_parameters<double>(small_config(1, 4, 2, 9, 6), 1);
  test::randomize(params, 11);
  auto ex = example({2, 7, 8, 1, 3, 0}, {1, 1, 1, 1, 1, 0});
  ex.segment_ids = {0, 1, 0, 1, 0, 0};
  const auto out = embed(ex, params);
  const auto& tok = params[param_names::kTokenEmbedding];
  const auto& seg = params[param_names::kSegmentEmbedding];
  const auto& pos = params[param_names::kPositionEmbedding];
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double expected = tok(ex.input_ids[static_cast<std::size_t>(i)], j) +
                              seg(ex.segment_ids[static_cast<std::size_t>(i)], j) + pos(i, j);
      EXPECT_EQ(out(i, j), expected);
    }
  }
}

TEST(Embed, RejectsOutOfRangeIds) {
  const auto params = init_parameters<double>(small_config(1, 4, 2, 6, 4), 1);
  EXPECT_THROW(embed(example({2, 6, 3, 0}, {1, 1, 1, 0}), params), DataError);
  EXPECT_THROW(embed(example({2, -1, 3, 0}, {1, 1, 1, 0}), params), DataError);
  EXPECT_THROW(embed(example({2, 4, 4, 3, 0}, {1, 1, 1, 1, 0}), params), ConfigError);
}

class Attention : public ::testing::Test {
 protected:
  void SetUp() override {
    params = init_parameters<double>(small_config(1, 4, 2, 6, 3), 1);
    test::randomize(params, 21);
    states = random_matrix(3, 4, 22);
  }

  std::string name(std::string_view suffix) const { return param_names::layer(0, suffix); }

  MatrixD values() const {
    MatrixD v = states * params[name("attention.value.weight")];
    v.rowwise() += params[name("attention.value.bias")].row(0);
    return v;
  }

  void identity_output() {
    params[name("attention.output.weight")] = MatrixD::Identity(4, 4);
    params[name("attention.output.bias")].setZero();
  }

  ParameterStore<double> params;
  MatrixD states;
};

TEST_F(Attention, ZeroQueryKeyIsMeanOfUnmaskedValues) {
  for (const char* p : {"attention.query.weight", "attention.query.bias", "attention.key.weight",
                        "attention.key.bias"}) {
    params[name(p)].setZero();
  }
  identity_output();
  const Mask8 mask{1, 1, 0};
  const MatrixD out = multi_head_attention<double>(states, Mask(mask), params, 0, 2);
  const MatrixD v = values();
  const RowVector<double> mean = (v.row(0) + v.row(1)) / 2.0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(out(r, c), mean(c), 1e-14);
  }
}

TEST_F(Attention, SingleSupportCopiesThatRow) {
  identity_output();
  const Mask8 mask{0, 1, 0};
  const MatrixD out = multi_head_attention<double>(states, Mask(mask), params, 0, 2);
  const MatrixD v = values();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(out(r, c), v(1, c), 1e-14);
  }
}

TEST_F(Attention, WeightsSumToOneAndIgnoreMasked) {
  const Mask8 mask{1, 1, 0};
  AttentionCache<double> cache;
  multi_head_attention<double>(states, Mask(mask), params, 0, 2, &cache);
  ASSERT_EQ(cache.probs.size(), 2u);
  for (const auto& p : cache.probs) {
    for (int r = 0; r < 3; ++r) {
      EXPECT_NEAR(p.row(r).sum(), 1.0, 1e-6);
      EXPECT_EQ(p(r, 2), 0.0);
    }
  }
}

// Naive per-head loops with an additive -1e4 mask, then residual and layer norm.
MatrixD brute_force_block(const MatrixD& x, const Mask8& mask, const ParameterStore<double>& p, int heads) {
  const auto w = [&](std::string_view s) -> const MatrixD& { return p[param_names::layer(0, s)]; };
  const int k = static_cast<int>(x.rows());
  const int hidden = static_cast<int>(x.cols());
  const int d = hidden / heads;
  auto project = [&](const char* which) {
    std::vector<std::vector<double>> out(k, std::vector<double>(hidden));
    const MatrixD& weight = w(std::string("attention.") + which + ".weight");
    const MatrixD& bias = w(std::string("attention.") + which + ".bias");
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < hidden; ++c) {
        double s = bias(0, c);
        for (int j = 0; j < hidden; ++j) s += x(i, j) * weight(j, c);
        out[i][c] = s;
      }
    }
    return out;
  };
  const auto q = project("query");
  const auto kk = project("key");
  const auto v = project("value");
  std::vector<std::vector<double>> ctx(k, std::vector<double>(hidden, 0.0));
  for (int h = 0; h < heads; ++h) {
    for (int i = 0; i < k; ++i) {
      std::vector<double> scores(k);
      double max = -1e300;
      for (int j = 0; j < k; ++j) {
        double s = 0;
        for (int c = h * d; c < (h + 1) * d; ++c) s += q[i][c] * kk[j][c];
        scores[j] = s / std::sqrt(static_cast<double>(d)) + (mask[j] ? 0.0 : -1e4);
        max = std::max(max, scores[j]);
      }
      double total = 0;
      for (auto& s : scores) total += (s = std::exp(s - max));
      for (int j = 0; j < k; ++j) {
        for (int c = h * d; c < (h + 1) * d; ++c) ctx[i][c] += scores[j] / total * v[j][c];
      }
    }
  }
  const MatrixD& wo = w("attention.output.weight");
  const MatrixD& bo = w("attention.output.bias");
  const MatrixD& gamma = w("attention_norm.gamma");
  const MatrixD& beta = w("attention_norm.beta");
  MatrixD out(k, hidden);
  for (int i = 0; i < k; ++i) {
    std::vector<double> row(hidden);
    for (int c = 0; c < hidden; ++c) {
      double s = bo(0, c);
      for (int j = 0; j < hidden; ++j) s += ctx[i][j] * wo(j, c);
      row[c] = x(i, c) + s;
    }
    double mean = 0;
    for (double r : row) mean += r;
    mean /= hidden;
    double var = 0;
    for (double r : row) var += (r - mean) * (r - mean);
    var /= hidden;
    for (int c = 0; c < hidden; ++c) out(i, c) = gamma(0, c) * (row[c] - mean) / std::sqrt(var + 1e-12) + beta(0, c);
  }
  return out;
}

TEST_F(Attention, MatchesBruteForceOracle) {
  for (const Mask8& mask : {Mask8{1, 1, 1}, Mask8{1, 1, 0}, Mask8{1, 0, 0}}) {
    const MatrixD expected = brute_force_block(states, mask, params, 2);
    const MatrixD actual = attention_block<double>(states, Mask(mask), params, 0, 2);
    EXPECT_TRUE(actual.isApprox(expected, 1e-12)) << actual << "\nvs\n" << expected;
  }
}

TEST(LayerNorm, ConstantRowYieldsShift) {
  MatrixD x(3, 4);
  x.row(0).setConstant(0.75);
  x.row(1).setConstant(-3.5);
  x.row(2).setConstant(1024.0);
  MatrixD gamma(1, 4);
  gamma << 0.5, -2.0, 1.25, 8.0;
  MatrixD beta(1, 4);
  beta << 0.1, -0.3, 0.7, 2.0;
  const MatrixD out = layer_norm<double>(x, gamma, beta);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) EXPECT_EQ(out(r, c), beta(0, c));
  }
}

TEST(LayerNorm, UnitScaleZeroShiftStandardizes) {
  const MatrixD x = random_matrix(4, 6, 5);
  const MatrixD out = layer_norm<double>(x, MatrixD::Ones(1, 6), MatrixD::Zero(1, 6));
  for (int r = 0; r < 4; ++r) {
    EXPECT_NEAR(out.row(r).mean(), 0.0, 1e-12);
    EXPECT_NEAR(out.row(r).squaredNorm() / 6.0, 1.0, 1e-9);
  }
}

TEST(Gelu, KnownValues) {
  EXPECT_EQ(detail::gelu(0.0), 0.0);
  EXPECT_NEAR(detail::gelu(1.0), 0.8413447460685429, 1e-15);
  EXPECT_NEAR(detail::gelu(-1.0), -0.15865525393145707, 1e-15);
}

TEST(EncoderForward, ZeroLayersIsEmbedding) {
  auto config = small_config(0, 4, 2, 6, 5);
  auto params = init_parameters<double>(config, 3);
  test::randomize(params, 4);
  const auto ex = example({2, 4, 5, 3, 0}, {1, 1, 1, 1, 0});
  EXPECT_EQ(encoder_forward(ex, params, config.encoder), embed(ex, params));
}

TEST(EncoderForward, ShapeIsKByH) {
  for (const auto& [layers, hidden, heads, k] : std::vector<std::tuple<int, int, int, int>>{
           {1, 4, 2, 3}, {2, 8, 4, 7}, {3, 6, 3, 4}, {2, 12, 1, 9}}) {
    auto config = small_config(layers, hidden, heads, 10, k);
    const auto params = init_parameters<float>(config, 5);
    const auto ex = random_examples(config, 1, 9).front();
    const auto out = encoder_forward(ex, params, config.encoder);
    EXPECT_EQ(out.rows(), k);
    EXPECT_EQ(out.cols(), hidden);
    EXPECT_TRUE(out.allFinite());
  }
}

TEST(EncoderForward, PadContentDoesNotReachAttendedRows) {
  auto config = small_config(2, 8, 2, 12, 7);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<TokenId> any(0, 11);
  for (int trial = 0; trial < 20; ++trial) {
    auto params = init_parameters<double>(config, static_cast<std::uint64_t>(trial));
    test::randomize(params, static_cast<std::uint64_t>(100 + trial));
    auto ex = random_examples(config, 1, static_cast<std::uint64_t>(trial)).front();
    auto mutated = ex;
    for (std::size_t i = 0; i < ex.length(); ++i) {
      if (!ex.attention_mask[i]) mutated.input_ids[i] = any(rng);
    }
    const auto a = encoder_forward(ex, params, config.encoder);
    const auto b = encoder_forward(mutated, params, config.encoder);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (ex.attention_mask[static_cast<std::size_t>(r)]) {
        EXPECT_EQ(a.row(r), b.row(r)) << "trial " << trial;
      }
    }
  }
}

TEST(SetFreeze, AllLayersFrozenLeavesOnlyHead) {
  auto config = small_config(2, 4, 2, 6, 4);
  auto params = init_parameters<float>(config, 1);
  set_freeze(params, config.encoder, 2);
  for (const auto& [name, entry] : params.entries()) EXPECT_EQ(entry.frozen, !name.starts_with("head.")) << name;
}

TEST(SetFreeze, NoneFrozen) {
  auto config = small_config(2, 4, 2, 6, 4);
  auto params = init_parameters<float>(config, 1);
  set_freeze(params, config.encoder, 0);
  for (const auto& [name, entry] : params.entries()) EXPECT_FALSE(entry.frozen) << name;
}

TEST(SetFreeze, FirstLayerAndEmbeddings) {
  auto config = small_config(3, 4, 2, 6, 4);
  auto params = init_parameters<float>(config, 1);
  set_freeze(params, config.encoder, 1);
  for (const auto& [name, entry] : params.entries()) {
    const bool expected = name.starts_with("embeddings.") || name.starts_with("encoder.layer0.");
    EXPECT_EQ(entry.frozen, expected) << name;
  }
  EXPECT_EQ(lowest_trainable_layer(params, config.encoder), 1);
}

TEST(SetFreeze, RejectsOutOfRange) {
  auto config = small_config(2, 4, 2, 6, 4);
  auto params = init_parameters<float>(config, 1);
  EXPECT_THROW(set_freeze(params, config.encoder, 3), ConfigError);
  EXPECT_THROW(set_freeze(params, config.encoder, -1), ConfigError);
}

TEST(Parameters, LayoutShapes) {
  auto config = small_config(2, 8, 2, 11, 6);
  config.encoder.ffn_size = 20;
  config.head.lstm_hidden_size = 5;
  const auto params = init_parameters<float>(config, 1);
  EXPECT_NO_THROW(check_shapes(params, config));
  EXPECT_EQ(params[param_names::kTokenEmbedding].rows(), 11);
  EXPECT_EQ(params[param_names::kSegmentEmbedding].rows(), 2);
  EXPECT_EQ(params[param_names::kPositionEmbedding].rows(), 6);
  EXPECT_EQ(params[param_names::layer(1, "ffn.in.weight")].cols(), 20);
  EXPECT_EQ(params[param_names::layer(1, "ffn.out.weight")].rows(), 20);
  EXPECT_EQ(params[param_names::head("lstm_fw.input_weight")].cols(), 20);
  EXPECT_EQ(params[param_names::head("lstm_bw.recurrent_weight")].rows(), 5);
  EXPECT_EQ(params[param_names::head("dense.weight")].rows(), 10);
  EXPECT_EQ(params[param_names::head("dense.weight")].cols(), 2);
}

TEST(Parameters, InitializationConvention) {
  auto config = small_config(1, 16, 2, 40, 8);
  const auto params = init_parameters<double>(config, 3);
  for (const auto& [name, entry] : params.entries()) {
    const auto& v = entry.value;
    if (name.ends_with(".gamma")) {
      EXPECT_TRUE(v.isOnes(0.0)) << name;
    } else if (name.ends_with(".bias") || name.ends_with(".beta")) {
      EXPECT_TRUE(v.isZero(0.0)) << name;
    } else {
      EXPECT_LE(v.cwiseAbs().maxCoeff(), 2 * config.init_stddev) << name;
      EXPECT_GT(v.cwiseAbs().maxCoeff(), 0.0) << name;
    }
  }
  const auto& table = params[param_names::kTokenEmbedding];
  const double sd = std::sqrt(table.array().square().mean());
  EXPECT_NEAR(sd, 0.02 * 0.88, 0.003);  // truncation at two sigma shrinks the spread
}

TEST(Parameters, SeededAndPrecisionConsistent) {
  auto config = small_config(1, 8, 2, 10, 5);
  const auto a = init_parameters<float>(config, 9);
  const auto b = init_parameters<float>(config, 9);
  const auto c = init_parameters<float>(config, 10);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
  EXPECT_EQ(init_parameters<double>(config, 9).cast<float>(), a);
}

TEST(Parameters, NamesIterateSorted) {
  const auto params = init_parameters<float>(small_config(2, 4, 2, 6, 4), 1);
  std::vector<std::string> names;
  for (const auto& [name, entry] : params.entries()) names.push_back(name);
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}

}  // namespace
}  // namespace bertsa
