#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bertsa/bilstm.hpp"
#include "bertsa/error.hpp"
#include "support.hpp"

namespace bertsa {
namespace {

using Mask8 = std::vector<std::uint8_t>;

ModelConfig head_config(int hidden, int lstm) {
  ModelConfig c = test::tiny_config(8);
  c.encoder.hidden_size = hidden;
  c.encoder.num_heads = 1;
  c.head.lstm_hidden_size = lstm;
  return c;
}

MatrixD random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  MatrixD m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = dist(rng);
  return m;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Scalar-loop LSTM step, gate blocks i|f|g|o.
void oracle_cell(const std::vector<double>& x, std::vector<double>& h, std::vector<double>& c, const MatrixD& wx,
                 const MatrixD& wh, const MatrixD& b) {
  const std::size_t l = h.size();
  std::vector<double> z(4 * l);
  for (std::size_t col = 0; col < 4 * l; ++col) {
    double s = b(0, static_cast<Eigen::Index>(col));
    for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * wx(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(col));
    for (std::size_t j = 0; j < l; ++j) s += h[j] * wh(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(col));
    z[col] = s;
  }
  for (std::size_t j = 0; j < l; ++j) {
    const double i = sigmoid(z[j]);
    const double f = sigmoid(z[l + j]);
    const double g = std::tanh(z[2 * l + j]);
    const double o = sigmoid(z[3 * l + j]);
    c[j] = f * c[j] + i * g;
    h[j] = o * std::tanh(c[j]);
  }
}

std::vector<double> row_vec(const MatrixD& m, Eigen::Index r) {
  return std::vector<double>(m.row(r).data(), m.row(r).data() + m.cols());
}

TEST(LstmCell, ZeroWeightsZeroState) {
  const MatrixD wx = MatrixD::Zero(3, 8), wh = MatrixD::Zero(2, 8), b = MatrixD::Zero(1, 8);
  const LstmCellParams<double> cell{wx, wh, b};
  LstmStep<double> step;
  const auto next = lstm_cell<double>(RowVector<double>::Ones(3), RowVector<double>::Zero(2),
                                      RowVector<double>::Zero(2), cell, &step);
  EXPECT_TRUE(next.c.isZero(0.0));
  EXPECT_TRUE(next.h.isZero(0.0));
  EXPECT_EQ(step.input_gate, RowVector<double>::Constant(2, 0.5));
  EXPECT_EQ(step.forget_gate, RowVector<double>::Constant(2, 0.5));
  EXPECT_EQ(step.output_gate, RowVector<double>::Constant(2, 0.5));
  EXPECT_TRUE(step.cell_gate.isZero(0.0));
}

TEST(LstmCell, ZeroWeightsCarryHalfTheCell) {
  const MatrixD wx = MatrixD::Zero(3, 8), wh = MatrixD::Zero(2, 8), b = MatrixD::Zero(1, 8);
  const LstmCellParams<double> cell{wx, wh, b};
  RowVector<double> v(2);
  v << 1.5, -4.0;
  const auto next = lstm_cell<double>(RowVector<double>::Ones(3), RowVector<double>::Zero(2), v, cell);
  for (int j = 0; j < 2; ++j) {
    EXPECT_DOUBLE_EQ(next.c(j), 0.5 * v(j));
    EXPECT_DOUBLE_EQ(next.h(j), 0.5 * std::tanh(0.5 * v(j)));
  }
}

TEST(LstmCell, MatchesScalarOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MatrixD wx = random_matrix(2, 8, seed), wh = random_matrix(2, 8, seed + 100), b = random_matrix(1, 8, seed + 200);
    const MatrixD x = random_matrix(1, 2, seed + 300), h0 = random_matrix(1, 2, seed + 400), c0 = random_matrix(1, 2, seed + 500);
    const auto next = lstm_cell<double>(x, h0.row(0), c0.row(0), LstmCellParams<double>{wx, wh, b});
    auto h = row_vec(h0, 0), c = row_vec(c0, 0);
    oracle_cell(row_vec(x, 0), h, c, wx, wh, b);
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(next.h(j), h[static_cast<std::size_t>(j)], 1e-6);
      EXPECT_NEAR(next.c(j), c[static_cast<std::size_t>(j)], 1e-6);
    }
  }
}

TEST(LstmCell, NonFiniteInputSignalsDivergence) {
  const MatrixD wx = MatrixD::Ones(1, 4), wh = MatrixD::Zero(1, 4), b = MatrixD::Zero(1, 4);
  RowVector<double> x(1);
  x << std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(lstm_cell<double>(x, RowVector<double>::Zero(1), RowVector<double>::Zero(1),
                                 LstmCellParams<double>{wx, wh, b}),
               DivergenceError);
}

class Head : public ::testing::Test {
 protected:
  void SetUp() override {
    params = init_parameters<double>(config, 1);
    test::randomize(params, 31);
  }

  ModelConfig config = head_config(4, 3);
  ParameterStore<double> params;
};

TEST_F(Head, ZeroParametersGiveZeroOutput) {
  test::zero_all(params);
  const MatrixD states = random_matrix(5, 4, 1);
  const Mask8 mask{1, 1, 1, 0, 0};
  EXPECT_TRUE(bilstm_forward<double>(states, Mask(mask), params).isZero(0.0));
  const auto logits = head_forward<double>(states, Mask(mask), params);
  EXPECT_EQ(logits.size(), 2);
  EXPECT_TRUE(logits.isZero(0.0));
}

TEST_F(Head, MatchesScalarOracleInBothDirections) {
  const MatrixD states = random_matrix(5, 4, 2);
  const Mask8 mask{1, 1, 1, 1, 0};
  const auto pooled = bilstm_forward<double>(states, Mask(mask), params);
  ASSERT_EQ(pooled.size(), 6);
  for (bool forward : {true, false}) {
    const std::string d = forward ? "lstm_fw" : "lstm_bw";
    std::vector<double> h(3, 0.0), c(3, 0.0);
    for (int t = 0; t < 4; ++t) {
      const int row = forward ? t : 3 - t;
      oracle_cell(row_vec(states, row), h, c, params[param_names::head(d + ".input_weight")],
                  params[param_names::head(d + ".recurrent_weight")], params[param_names::head(d + ".bias")]);
    }
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(pooled((forward ? 0 : 3) + j), h[static_cast<std::size_t>(j)], 1e-12);
  }
  // dense layer on top of the pooled vector
  const auto logits = head_forward<double>(states, Mask(mask), params);
  const auto& w = params[param_names::head("dense.weight")];
  const auto& b = params[param_names::head("dense.bias")];
  for (int c = 0; c < 2; ++c) {
    double s = b(0, c);
    for (int j = 0; j < 6; ++j) s += pooled(j) * w(j, c);
    EXPECT_NEAR(logits(c), s, 1e-12);
  }
}

TEST_F(Head, SingleRowHalvesAgreeWithSharedCell) {
  // Identical cells in both directions: one step from zero state gives equal halves.
  for (const char* s : {".input_weight", ".recurrent_weight", ".bias"}) {
    params[param_names::head(std::string("lstm_bw") + s)] = params[param_names::head(std::string("lstm_fw") + s)];
  }
  const MatrixD states = random_matrix(4, 4, 3);
  const Mask8 mask{1, 0, 0, 0};
  const auto pooled = bilstm_forward<double>(states, Mask(mask), params);
  EXPECT_EQ(pooled.head(3), pooled.tail(3));
}

TEST_F(Head, ReversingRowsSwapsHalves) {
  for (const char* s : {".input_weight", ".recurrent_weight", ".bias"}) {
    params[param_names::head(std::string("lstm_bw") + s)] = params[param_names::head(std::string("lstm_fw") + s)];
  }
  const MatrixD states = random_matrix(6, 4, 4);
  const Mask8 mask{1, 1, 1, 1, 0, 0};
  MatrixD reversed = states;
  for (int r = 0; r < 4; ++r) reversed.row(r) = states.row(3 - r);
  const auto a = bilstm_forward<double>(states, Mask(mask), params);
  const auto b = bilstm_forward<double>(reversed, Mask(mask), params);
  EXPECT_EQ(a.head(3), b.tail(3));
  EXPECT_EQ(a.tail(3), b.head(3));
}

TEST_F(Head, BiasOnlyDense) {
  params[param_names::head("dense.weight")].setZero();
  params[param_names::head("dense.bias")] << 1.0, -1.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MatrixD states = random_matrix(5, 4, seed);
    const Mask8 mask{1, 1, 0, 0, 0};
    const auto logits = head_forward<double>(states, Mask(mask), params);
    EXPECT_EQ(logits(0), 1.0);
    EXPECT_EQ(logits(1), -1.0);
  }
}

TEST_F(Head, PaddedRowsNeverRead) {
  const MatrixD states = random_matrix(6, 4, 5);
  const Mask8 mask{1, 1, 1, 0, 0, 0};
  MatrixD noisy = states;
  noisy.bottomRows(3) = random_matrix(3, 4, 6) * 1e6;
  EXPECT_EQ(head_forward<double>(states, Mask(mask), params), head_forward<double>(noisy, Mask(mask), params));
}

TEST_F(Head, OutputDimensionsForAnyMask) {
  for (int k = 1; k <= 6; ++k) {
    for (int attended = 1; attended <= k; ++attended) {
      Mask8 mask(static_cast<std::size_t>(k), 0);
      std::fill_n(mask.begin(), attended, 1);
      const MatrixD states = random_matrix(k, 4, static_cast<std::uint64_t>(k * 10 + attended));
      EXPECT_EQ(bilstm_forward<double>(states, Mask(mask), params).size(), 6);
      EXPECT_EQ(head_forward<double>(states, Mask(mask), params).size(), 2);
    }
  }
}

TEST_F(Head, AllMaskedIsRejected) {
  const MatrixD states = random_matrix(3, 4, 7);
  const Mask8 mask{0, 0, 0};
  EXPECT_THROW(bilstm_forward<double>(states, Mask(mask), params), DataError);
}

}  // namespace
}  // namespace bertsa
