#pragma once

#include <cmath>
#include <string>

#include "bertsa/error.hpp"
#include "bertsa/tensor.hpp"

namespace bertsa {

template <typename Scalar>
struct LossResult {
  Scalar loss;
  RowVector<Scalar> grad;  // d loss / d logits
};

// Sparse categorical cross-entropy of one example: -log softmax(logits)[label],
// with gradient softmax(logits) - onehot(label).
template <typename Scalar>
LossResult<Scalar> cross_entropy_loss(const RowVector<Scalar>& logits, int label) {
  if (label < 0 || label >= logits.size()) {
    throw DataError("label " + std::to_string(label) + " out of range for " + std::to_string(logits.size()) +
                    " classes");
  }
  if (!logits.allFinite()) throw DivergenceError("non-finite logits");
  const Scalar max = logits.maxCoeff();
  const RowVector<Scalar> shifted = logits.array() - max;
  const Scalar log_sum = std::log(shifted.array().exp().sum());
  LossResult<Scalar> out;
  out.loss = log_sum - shifted(label);
  out.grad = (shifted.array() - log_sum).exp();
  out.grad(label) -= Scalar(1);
  return out;
}

}  // namespace bertsa
