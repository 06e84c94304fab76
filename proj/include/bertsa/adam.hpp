#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "bertsa/config.hpp"
#include "bertsa/error.hpp"
#include "bertsa/parameters.hpp"

namespace bertsa {

// First and second moments for every trainable array; frozen arrays have none.
template <typename Scalar>
struct OptimizerState {
  struct Moments {
    Matrix<Scalar> first;
    Matrix<Scalar> second;
  };
  std::map<std::string, Moments, std::less<>> moments;
  std::int64_t step = 0;
};

template <typename Scalar>
OptimizerState<Scalar> make_optimizer_state(const ParameterStore<Scalar>& params) {
  OptimizerState<Scalar> state;
  for (const auto& [name, entry] : params.entries()) {
    if (entry.frozen) continue;
    const auto rows = entry.value.rows();
    const auto cols = entry.value.cols();
    state.moments.emplace(name, typename OptimizerState<Scalar>::Moments{Matrix<Scalar>::Zero(rows, cols),
                                                                         Matrix<Scalar>::Zero(rows, cols)});
  }
  return state;
}

// One Adam update with bias correction:
//   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2,
//   theta <- theta - lr * m_hat / (sqrt(v_hat) + eps).
// Frozen arrays are never touched, whatever `grads` holds for them.
template <typename Scalar>
void adam_step(ParameterStore<Scalar>& params, const ParameterStore<Scalar>& grads, OptimizerState<Scalar>& state,
               const TrainConfig& config) {
  ++state.step;
  const double t = static_cast<double>(state.step);
  const auto b1 = static_cast<Scalar>(config.adam_beta1);
  const auto b2 = static_cast<Scalar>(config.adam_beta2);
  const auto lr = static_cast<Scalar>(config.learning_rate);
  const auto eps = static_cast<Scalar>(config.adam_epsilon);
  const auto correction1 = static_cast<Scalar>(1.0 - std::pow(config.adam_beta1, t));
  const auto correction2 = static_cast<Scalar>(1.0 - std::pow(config.adam_beta2, t));

  for (auto& [name, entry] : params.entries()) {
    if (entry.frozen) continue;
    auto moments = state.moments.find(name);
    if (moments == state.moments.end()) throw ConfigError("no optimizer state for " + name);
    if (!grads.contains(name)) continue;
    const auto& g = grads[name];
    auto& m = moments->second.first;
    auto& v = moments->second.second;
    if (g.rows() != entry.value.rows() || g.cols() != entry.value.cols() || m.rows() != g.rows() ||
        m.cols() != g.cols()) {
      throw ConfigError("shape mismatch in adam_step for " + name);
    }
    m = b1 * m + (Scalar(1) - b1) * g;
    v = b2 * v + (Scalar(1) - b2) * g.cwiseProduct(g);
    entry.value.array() -= lr * (m.array() / correction1) / ((v.array() / correction2).sqrt() + eps);
  }
}

}  // namespace bertsa
