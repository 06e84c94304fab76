#pragma once

// Classification head: one bidirectional LSTM layer over the attended rows of
// the encoder output, final forward/backward states concatenated and fed to a
// dense layer that emits class logits.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bertsa/encoder.hpp"
#include "bertsa/parameters.hpp"
#include "bertsa/tensor.hpp"

namespace bertsa {

// Gate blocks within the 4L-wide weight columns.
enum LstmGate : int { kInputGate = 0, kForgetGate = 1, kCellGate = 2, kOutputGate = 3 };

template <typename Scalar>
struct LstmCellParams {
  const Matrix<Scalar>& input_weight;      // H x 4L
  const Matrix<Scalar>& recurrent_weight;  // L x 4L
  const Matrix<Scalar>& bias;              // 1 x 4L
};

template <typename Scalar>
struct LstmState {
  RowVector<Scalar> h;
  RowVector<Scalar> c;
};

// Everything one step needs for backpropagation through time.
template <typename Scalar>
struct LstmStep {
  Eigen::Index row = 0;
  RowVector<Scalar> h_prev;
  RowVector<Scalar> c_prev;
  RowVector<Scalar> input_gate;
  RowVector<Scalar> forget_gate;
  RowVector<Scalar> cell_gate;
  RowVector<Scalar> output_gate;
  RowVector<Scalar> tanh_c;
};

template <typename Scalar>
struct HeadCache {
  std::vector<LstmStep<Scalar>> forward;
  std::vector<LstmStep<Scalar>> backward;
  RowVector<Scalar> pooled;
};

inline std::string lstm_direction(bool forward) { return forward ? "lstm_fw" : "lstm_bw"; }

template <typename Scalar>
LstmCellParams<Scalar> lstm_cell_params(const ParameterStore<Scalar>& params, bool forward) {
  const std::string dir = lstm_direction(forward);
  return {params[param_names::head(dir + ".input_weight")], params[param_names::head(dir + ".recurrent_weight")],
          params[param_names::head(dir + ".bias")]};
}

namespace detail {

template <typename Scalar>
Scalar sigmoid(Scalar x) {
  return Scalar(1) / (Scalar(1) + std::exp(-x));
}

}  // namespace detail

// i, f, o = sigmoid(.), g = tanh(.); c = f*c_prev + i*g; h = o*tanh(c).
template <typename Scalar, typename Input>
LstmState<Scalar> lstm_cell(const Eigen::MatrixBase<Input>& x, const RowVector<Scalar>& h_prev,
                            const RowVector<Scalar>& c_prev, const LstmCellParams<Scalar>& cell,
                            LstmStep<Scalar>* record = nullptr) {
  const Eigen::Index l = h_prev.size();
  RowVector<Scalar> z = x * cell.input_weight + h_prev * cell.recurrent_weight + cell.bias.row(0);
  RowVector<Scalar> i = z.segment(kInputGate * l, l).unaryExpr([](Scalar v) { return detail::sigmoid(v); });
  RowVector<Scalar> f = z.segment(kForgetGate * l, l).unaryExpr([](Scalar v) { return detail::sigmoid(v); });
  RowVector<Scalar> g = z.segment(kCellGate * l, l).array().tanh();
  RowVector<Scalar> o = z.segment(kOutputGate * l, l).unaryExpr([](Scalar v) { return detail::sigmoid(v); });
  LstmState<Scalar> next;
  next.c = f.cwiseProduct(c_prev) + i.cwiseProduct(g);
  RowVector<Scalar> tanh_c = next.c.array().tanh();
  next.h = o.cwiseProduct(tanh_c);
  if (!next.h.allFinite() || !next.c.allFinite()) throw DivergenceError("non-finite values in LSTM cell");
  if (record != nullptr) {
    record->h_prev = h_prev;
    record->c_prev = c_prev;
    record->input_gate = std::move(i);
    record->forget_gate = std::move(f);
    record->cell_gate = std::move(g);
    record->output_gate = std::move(o);
    record->tanh_c = std::move(tanh_c);
  }
  return next;
}

// Runs one direction over `rows` (already in scan order) from zero state.
template <typename Scalar>
RowVector<Scalar> lstm_scan(const Matrix<Scalar>& states, const std::vector<Eigen::Index>& rows,
                            const LstmCellParams<Scalar>& cell, std::vector<LstmStep<Scalar>>* record = nullptr) {
  const Eigen::Index l = cell.recurrent_weight.rows();
  LstmState<Scalar> state{RowVector<Scalar>::Zero(l), RowVector<Scalar>::Zero(l)};
  if (record != nullptr) record->assign(rows.size(), {});
  for (std::size_t t = 0; t < rows.size(); ++t) {
    LstmStep<Scalar>* step = record ? &(*record)[t] : nullptr;
    if (step != nullptr) step->row = rows[t];
    state = lstm_cell<Scalar>(states.row(rows[t]), state.h, state.c, cell, step);
  }
  return state.h;
}

inline std::vector<Eigen::Index> attended_rows(Mask mask) {
  std::vector<Eigen::Index> rows;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) rows.push_back(static_cast<Eigen::Index>(i));
  }
  return rows;
}

// concat(final forward h, final backward h), 1 x 2L. Padded rows are skipped.
template <typename Scalar>
RowVector<Scalar> bilstm_forward(const HiddenStates<Scalar>& states, Mask mask, const ParameterStore<Scalar>& params,
                                 HeadCache<Scalar>* cache = nullptr) {
  std::vector<Eigen::Index> rows = attended_rows(mask);
  if (rows.empty()) throw DataError("BiLSTM input has no attended positions");
  const RowVector<Scalar> fw =
      lstm_scan<Scalar>(states, rows, lstm_cell_params(params, true), cache ? &cache->forward : nullptr);
  std::reverse(rows.begin(), rows.end());
  const RowVector<Scalar> bw =
      lstm_scan<Scalar>(states, rows, lstm_cell_params(params, false), cache ? &cache->backward : nullptr);
  RowVector<Scalar> pooled(fw.size() + bw.size());
  pooled << fw, bw;
  if (cache != nullptr) cache->pooled = pooled;
  return pooled;
}

// Dense logits W v + b (no activation).
template <typename Scalar>
RowVector<Scalar> head_forward(const HiddenStates<Scalar>& states, Mask mask, const ParameterStore<Scalar>& params,
                               HeadCache<Scalar>* cache = nullptr) {
  const RowVector<Scalar> pooled = bilstm_forward<Scalar>(states, mask, params, cache);
  return pooled * params[param_names::head("dense.weight")] + params[param_names::head("dense.bias")].row(0);
}

namespace detail {

template <typename Scalar>
void lstm_scan_backward(RowVector<Scalar> d_h, const std::vector<LstmStep<Scalar>>& steps,
                        const Matrix<Scalar>& states, const LstmCellParams<Scalar>& cell, Matrix<Scalar>* d_input_weight,
                        Matrix<Scalar>* d_recurrent_weight, Matrix<Scalar>* d_bias, Matrix<Scalar>* d_states) {
  const Eigen::Index l = d_h.size();
  RowVector<Scalar> d_c = RowVector<Scalar>::Zero(l);
  RowVector<Scalar> d_z(4 * l);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const auto& s = *it;
    const auto one = [](const RowVector<Scalar>& v) { return (Scalar(1) - v.array()); };
    d_c.array() += d_h.array() * s.output_gate.array() * (Scalar(1) - s.tanh_c.array().square());
    d_z.segment(kOutputGate * l, l) = (d_h.array() * s.tanh_c.array() * s.output_gate.array() * one(s.output_gate)).matrix();
    d_z.segment(kInputGate * l, l) = (d_c.array() * s.cell_gate.array() * s.input_gate.array() * one(s.input_gate)).matrix();
    d_z.segment(kForgetGate * l, l) =
        (d_c.array() * s.c_prev.array() * s.forget_gate.array() * one(s.forget_gate)).matrix();
    d_z.segment(kCellGate * l, l) =
        (d_c.array() * s.input_gate.array() * (Scalar(1) - s.cell_gate.array().square())).matrix();

    if (d_input_weight != nullptr) d_input_weight->noalias() += states.row(s.row).transpose() * d_z;
    if (d_recurrent_weight != nullptr) d_recurrent_weight->noalias() += s.h_prev.transpose() * d_z;
    if (d_bias != nullptr) d_bias->row(0) += d_z;
    if (d_states != nullptr) d_states->row(s.row).noalias() += d_z * cell.input_weight.transpose();
    d_h = d_z * cell.recurrent_weight.transpose();
    d_c = d_c.cwiseProduct(s.forget_gate);
  }
}

}  // namespace detail

// Accumulates head gradients into `grads`; returns d states (K x H, zero on
// padded rows) when `need_states_grad`, otherwise an empty matrix.
template <typename Scalar>
Matrix<Scalar> head_backward(const RowVector<Scalar>& d_logits, const HiddenStates<Scalar>& states,
                             const HeadCache<Scalar>& cache, const ParameterStore<Scalar>& params,
                             ParameterStore<Scalar>& grads, bool need_states_grad = true) {
  using detail::grad_slot;
  const auto& dense = params[param_names::head("dense.weight")];
  if (auto* g = grad_slot(&grads, param_names::head("dense.weight"))) g->noalias() += cache.pooled.transpose() * d_logits;
  if (auto* g = grad_slot(&grads, param_names::head("dense.bias"))) g->row(0) += d_logits;
  const RowVector<Scalar> d_pooled = d_logits * dense.transpose();
  const Eigen::Index l = d_pooled.size() / 2;

  Matrix<Scalar> d_states;
  if (need_states_grad) d_states = Matrix<Scalar>::Zero(states.rows(), states.cols());
  for (bool forward : {true, false}) {
    const std::string dir = lstm_direction(forward);
    detail::lstm_scan_backward<Scalar>(
        forward ? d_pooled.head(l) : d_pooled.tail(l), forward ? cache.forward : cache.backward, states,
        lstm_cell_params(params, forward), grad_slot(&grads, param_names::head(dir + ".input_weight")),
        grad_slot(&grads, param_names::head(dir + ".recurrent_weight")),
        grad_slot(&grads, param_names::head(dir + ".bias")), need_states_grad ? &d_states : nullptr);
  }
  return d_states;
}

}  // namespace bertsa
