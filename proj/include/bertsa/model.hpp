#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bertsa/bilstm.hpp"
#include "bertsa/config.hpp"
#include "bertsa/encoder.hpp"
#include "bertsa/encoding.hpp"
#include "bertsa/loss.hpp"
#include "bertsa/parameters.hpp"

namespace bertsa {

// Encoder + BiLSTM head. The scalar type is float for training and double
// for gradient verification; both run the same code.
template <typename Scalar>
struct SentimentModel {
  ModelConfig config;
  ParameterStore<Scalar> params;
};

template <typename Scalar>
SentimentModel<Scalar> make_model(const ModelConfig& config, std::uint64_t seed) {
  return {config, init_parameters<Scalar>(config, seed)};
}

template <typename Scalar>
RowVector<Scalar> forward_logits(const SentimentModel<Scalar>& model, const EncodedExample& example) {
  const HiddenStates<Scalar> states = encoder_forward<Scalar>(example, model.params, model.config.encoder);
  return head_forward<Scalar>(states, Mask(example.attention_mask), model.params);
}

// Index of the largest logit; ties resolve to the lower index.
template <typename Scalar>
int argmax_class(const RowVector<Scalar>& logits) {
  int best = 0;
  for (int c = 1; c < logits.size(); ++c) {
    if (logits(c) > logits(best)) best = c;
  }
  return best;
}

template <typename Scalar>
struct BatchGradient {
  Scalar loss = 0;       // mean over the batch
  std::size_t correct = 0;  // argmax hits, measured before any update
  ParameterStore<Scalar> grads;  // mean gradients of the trainable arrays
};

namespace detail {

inline const EncodedExample& deref(const EncodedExample& e) { return e; }
inline const EncodedExample& deref(const EncodedExample* e) { return *e; }

inline int gold_class(const EncodedExample& example) {
  if (!example.label) throw DataError("training example has no label");
  return class_index(*example.label);
}

}  // namespace detail

// Mean cross-entropy over the batch and its gradient with respect to every
// trainable array. Contributions are summed in batch order.
template <typename Scalar, typename Example>
BatchGradient<Scalar> loss_and_gradient(const SentimentModel<Scalar>& model, std::span<const Example> batch) {
  if (batch.empty()) throw DataError("empty batch");
  const auto& params = model.params;
  const auto& enc = model.config.encoder;
  const bool encoder_trainable = lowest_trainable_layer(params, enc) < enc.num_layers ||
                                 !params.frozen(param_names::kTokenEmbedding) ||
                                 !params.frozen(param_names::kSegmentEmbedding) ||
                                 !params.frozen(param_names::kPositionEmbedding);

  BatchGradient<Scalar> out;
  out.grads = params.zeros_like_trainable();
  const Scalar inv_batch = Scalar(1) / static_cast<Scalar>(batch.size());
  EncoderCache<Scalar> enc_cache;
  HeadCache<Scalar> head_cache;
  for (const auto& item : batch) {
    const EncodedExample& example = detail::deref(item);
    const int gold = detail::gold_class(example);
    const Mask mask(example.attention_mask);
    const HiddenStates<Scalar> states =
        encoder_forward<Scalar>(example, params, enc, encoder_trainable ? &enc_cache : nullptr);
    const RowVector<Scalar> logits = head_forward<Scalar>(states, mask, params, &head_cache);
    const LossResult<Scalar> loss = cross_entropy_loss<Scalar>(logits, gold);
    out.loss += loss.loss * inv_batch;
    if (argmax_class(logits) == gold) ++out.correct;

    const RowVector<Scalar> d_logits = loss.grad * inv_batch;
    const Matrix<Scalar> d_states =
        head_backward<Scalar>(d_logits, states, head_cache, params, out.grads, encoder_trainable);
    if (encoder_trainable) encoder_backward<Scalar>(d_states, example, enc_cache, params, enc, out.grads);
  }
  if (!out.grads.all_finite()) throw DivergenceError("non-finite gradient");
  return out;
}

template <typename Scalar>
BatchGradient<Scalar> loss_and_gradient(const SentimentModel<Scalar>& model, const std::vector<EncodedExample>& batch) {
  return loss_and_gradient<Scalar, EncodedExample>(model, std::span<const EncodedExample>(batch));
}

// Forward-only mean loss, used by the finite-difference checker.
template <typename Scalar>
Scalar batch_loss(const SentimentModel<Scalar>& model, std::span<const EncodedExample> batch) {
  Scalar total = 0;
  for (const auto& example : batch) {
    total += cross_entropy_loss<Scalar>(forward_logits(model, example), detail::gold_class(example)).loss;
  }
  return total / static_cast<Scalar>(batch.size());
}

}  // namespace bertsa
