#pragma once

// Context encoder: summed token/segment/position embeddings followed by a
// stack of post-norm transformer blocks (multi-head self-attention, GELU
// feed-forward). Forward passes optionally record what the backward pass needs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "bertsa/config.hpp"
#include "bertsa/encoding.hpp"
#include "bertsa/error.hpp"
#include "bertsa/parameters.hpp"
#include "bertsa/tensor.hpp"

namespace bertsa {

// K x H; row i is the final hidden state of position i, row 0 belongs to [CLS].
template <typename Scalar>
using HiddenStates = Matrix<Scalar>;

using Mask = std::span<const std::uint8_t>;

inline constexpr double kLayerNormEpsilon = 1e-12;

template <typename Scalar>
struct LayerNormCache {
  Matrix<Scalar> normalized;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> inv_std;
};

template <typename Scalar>
struct AttentionCache {
  Matrix<Scalar> input;
  Matrix<Scalar> query;
  Matrix<Scalar> key;
  Matrix<Scalar> value;
  std::vector<Matrix<Scalar>> probs;  // per head, K x K, zero on masked columns
  Matrix<Scalar> context;
  LayerNormCache<Scalar> norm;
};

template <typename Scalar>
struct FeedForwardCache {
  Matrix<Scalar> input;
  Matrix<Scalar> pre_activation;
  Matrix<Scalar> activation;
  LayerNormCache<Scalar> norm;
};

template <typename Scalar>
struct EncoderCache {
  std::vector<AttentionCache<Scalar>> attention;
  std::vector<FeedForwardCache<Scalar>> feed_forward;
};

namespace detail {

template <typename Scalar>
Matrix<Scalar>* grad_slot(ParameterStore<Scalar>* grads, std::string_view name) {
  if (grads == nullptr || !grads->contains(name)) return nullptr;
  return &(*grads)[name];
}

template <typename Scalar>
void require_finite(const Matrix<Scalar>& m, const char* where) {
  if (!m.allFinite()) throw DivergenceError(std::string("non-finite values in ") + where);
}

template <typename Scalar>
Matrix<Scalar> affine(const Matrix<Scalar>& x, const Matrix<Scalar>& weight, const Matrix<Scalar>& bias) {
  Matrix<Scalar> out = x * weight;
  out.rowwise() += bias.row(0);
  return out;
}

// Accumulates weight/bias gradients of out = x * W + b and returns d x.
template <typename Scalar>
Matrix<Scalar> affine_backward(const Matrix<Scalar>& d_out, const Matrix<Scalar>& x, const Matrix<Scalar>& weight,
                               Matrix<Scalar>* d_weight, Matrix<Scalar>* d_bias, bool need_input_grad = true) {
  if (d_weight != nullptr) d_weight->noalias() += x.transpose() * d_out;
  if (d_bias != nullptr) *d_bias += d_out.colwise().sum();
  if (!need_input_grad) return {};
  return d_out * weight.transpose();
}

template <typename Scalar>
Scalar gelu(Scalar x) {
  return Scalar(0.5) * x * (Scalar(1) + std::erf(x / std::sqrt(Scalar(2))));
}

template <typename Scalar>
Scalar gelu_derivative(Scalar x) {
  const Scalar cdf = Scalar(0.5) * (Scalar(1) + std::erf(x / std::sqrt(Scalar(2))));
  const Scalar pdf = std::exp(Scalar(-0.5) * x * x) / std::sqrt(Scalar(2) * std::numbers::pi_v<Scalar>);
  return cdf + x * pdf;
}

}  // namespace detail

// Row-wise layer normalization: gamma * (x - mean) / sqrt(var + eps) + beta.
template <typename Scalar>
Matrix<Scalar> layer_norm(const Matrix<Scalar>& x, const Matrix<Scalar>& gamma, const Matrix<Scalar>& beta,
                          LayerNormCache<Scalar>* cache = nullptr) {
  const auto cols = static_cast<Scalar>(x.cols());
  Matrix<Scalar> normalized(x.rows(), x.cols());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> inv_std(x.rows());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const Scalar mean = x.row(r).sum() / cols;
    const RowVector<Scalar> centered = x.row(r).array() - mean;
    const Scalar var = centered.squaredNorm() / cols;
    inv_std(r) = Scalar(1) / std::sqrt(var + Scalar(kLayerNormEpsilon));
    normalized.row(r) = centered * inv_std(r);
  }
  Matrix<Scalar> out = normalized.array().rowwise() * gamma.row(0).array();
  out.rowwise() += beta.row(0);
  if (cache != nullptr) {
    cache->normalized = std::move(normalized);
    cache->inv_std = std::move(inv_std);
  }
  return out;
}

template <typename Scalar>
Matrix<Scalar> layer_norm_backward(const Matrix<Scalar>& d_out, const LayerNormCache<Scalar>& cache,
                                   const Matrix<Scalar>& gamma, Matrix<Scalar>* d_gamma, Matrix<Scalar>* d_beta) {
  const auto& xhat = cache.normalized;
  if (d_gamma != nullptr) *d_gamma += (d_out.array() * xhat.array()).colwise().sum().matrix();
  if (d_beta != nullptr) *d_beta += d_out.colwise().sum();
  const Matrix<Scalar> d_xhat = d_out.array().rowwise() * gamma.row(0).array();
  const auto cols = static_cast<Scalar>(d_out.cols());
  Matrix<Scalar> d_x(d_out.rows(), d_out.cols());
  for (Eigen::Index r = 0; r < d_out.rows(); ++r) {
    const Scalar mean_d = d_xhat.row(r).sum() / cols;
    const Scalar mean_dx = d_xhat.row(r).dot(xhat.row(r)) / cols;
    d_x.row(r) = cache.inv_std(r) * (d_xhat.row(r).array() - mean_d - xhat.row(r).array() * mean_dx).matrix();
  }
  return d_x;
}

// Row i = token[input_ids[i]] + segment[segment_ids[i]] + position[i].
template <typename Scalar>
Matrix<Scalar> embed(const EncodedExample& example, const ParameterStore<Scalar>& params) {
  const auto& token = params[param_names::kTokenEmbedding];
  const auto& segment = params[param_names::kSegmentEmbedding];
  const auto& position = params[param_names::kPositionEmbedding];
  const auto k = static_cast<Eigen::Index>(example.length());
  if (k > position.rows()) {
    throw ConfigError("sequence length " + std::to_string(k) + " exceeds max_position " +
                      std::to_string(position.rows()));
  }
  Matrix<Scalar> out(k, token.cols());
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto id = example.input_ids[static_cast<std::size_t>(i)];
    const auto seg = example.segment_ids[static_cast<std::size_t>(i)];
    if (id < 0 || id >= token.rows()) {
      throw DataError("token id " + std::to_string(id) + " out of range for vocabulary of size " +
                      std::to_string(token.rows()));
    }
    if (seg >= segment.rows()) throw DataError("segment id " + std::to_string(seg) + " out of range");
    out.row(i) = token.row(id) + segment.row(seg) + position.row(i);
  }
  return out;
}

template <typename Scalar>
void embed_backward(const Matrix<Scalar>& d_out, const EncodedExample& example, ParameterStore<Scalar>& grads) {
  auto* d_token = detail::grad_slot(&grads, param_names::kTokenEmbedding);
  auto* d_segment = detail::grad_slot(&grads, param_names::kSegmentEmbedding);
  auto* d_position = detail::grad_slot(&grads, param_names::kPositionEmbedding);
  for (Eigen::Index i = 0; i < d_out.rows(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (d_token != nullptr) d_token->row(example.input_ids[idx]) += d_out.row(i);
    if (d_segment != nullptr) d_segment->row(example.segment_ids[idx]) += d_out.row(i);
    if (d_position != nullptr) d_position->row(i) += d_out.row(i);
  }
}

// Scaled dot-product multi-head self-attention including the output
// projection, without residual or norm. Masked key positions get weight
// exactly zero from every query.
template <typename Scalar>
Matrix<Scalar> multi_head_attention(const Matrix<Scalar>& states, Mask mask, const ParameterStore<Scalar>& params,
                                    int layer, int num_heads, AttentionCache<Scalar>* cache = nullptr) {
  using detail::affine;
  const auto name = [layer](std::string_view s) { return param_names::layer(layer, s); };
  const Eigen::Index k = states.rows();
  const Eigen::Index hidden = states.cols();
  const Eigen::Index head_size = hidden / num_heads;
  if (static_cast<Eigen::Index>(mask.size()) != k) throw ConfigError("mask length differs from sequence length");

  Matrix<Scalar> query = affine(states, params[name("attention.query.weight")], params[name("attention.query.bias")]);
  Matrix<Scalar> key = affine(states, params[name("attention.key.weight")], params[name("attention.key.bias")]);
  Matrix<Scalar> value = affine(states, params[name("attention.value.weight")], params[name("attention.value.bias")]);

  const Scalar scale = Scalar(1) / std::sqrt(static_cast<Scalar>(head_size));
  Matrix<Scalar> context(k, hidden);
  std::vector<Matrix<Scalar>> all_probs;
  for (int h = 0; h < num_heads; ++h) {
    const auto q = query.middleCols(h * head_size, head_size);
    const auto kk = key.middleCols(h * head_size, head_size);
    const auto v = value.middleCols(h * head_size, head_size);
    Matrix<Scalar> probs = (q * kk.transpose()) * scale;
    for (Eigen::Index r = 0; r < k; ++r) {
      Scalar max = -std::numeric_limits<Scalar>::infinity();
      for (Eigen::Index c = 0; c < k; ++c) {
        if (mask[static_cast<std::size_t>(c)]) max = std::max(max, probs(r, c));
      }
      Scalar total = 0;
      for (Eigen::Index c = 0; c < k; ++c) {
        const Scalar e = mask[static_cast<std::size_t>(c)] ? std::exp(probs(r, c) - max) : Scalar(0);
        probs(r, c) = e;
        total += e;
      }
      probs.row(r) /= total;
    }
    context.middleCols(h * head_size, head_size).noalias() = probs * v;
    if (cache != nullptr) all_probs.push_back(std::move(probs));
  }

  Matrix<Scalar> projected =
      affine(context, params[name("attention.output.weight")], params[name("attention.output.bias")]);
  if (cache != nullptr) {
    cache->input = states;
    cache->query = std::move(query);
    cache->key = std::move(key);
    cache->value = std::move(value);
    cache->probs = std::move(all_probs);
    cache->context = std::move(context);
  }
  return projected;
}

// Self-attention followed by residual connection and layer norm.
template <typename Scalar>
Matrix<Scalar> attention_block(const Matrix<Scalar>& states, Mask mask, const ParameterStore<Scalar>& params,
                               int layer, int num_heads, AttentionCache<Scalar>* cache = nullptr) {
  const auto name = [layer](std::string_view s) { return param_names::layer(layer, s); };
  const Matrix<Scalar> attended = multi_head_attention<Scalar>(states, mask, params, layer, num_heads, cache);
  Matrix<Scalar> out = layer_norm<Scalar>(states + attended, params[name("attention_norm.gamma")],
                                          params[name("attention_norm.beta")], cache ? &cache->norm : nullptr);
  detail::require_finite(out, "attention block");
  return out;
}

template <typename Scalar>
Matrix<Scalar> attention_block_backward(const Matrix<Scalar>& d_out, const AttentionCache<Scalar>& cache,
                                        const ParameterStore<Scalar>& params, int layer, int num_heads,
                                        ParameterStore<Scalar>& grads) {
  using detail::affine_backward;
  using detail::grad_slot;
  const auto name = [layer](std::string_view s) { return param_names::layer(layer, s); };
  const Eigen::Index hidden = d_out.cols();
  const Eigen::Index head_size = hidden / num_heads;

  const Matrix<Scalar> d_sum = layer_norm_backward<Scalar>(d_out, cache.norm, params[name("attention_norm.gamma")],
                                                           grad_slot(&grads, name("attention_norm.gamma")),
                                                           grad_slot(&grads, name("attention_norm.beta")));
  const Matrix<Scalar> d_context = affine_backward<Scalar>(
      d_sum, cache.context, params[name("attention.output.weight")], grad_slot(&grads, name("attention.output.weight")),
      grad_slot(&grads, name("attention.output.bias")));

  const Scalar scale = Scalar(1) / std::sqrt(static_cast<Scalar>(head_size));
  Matrix<Scalar> d_query(d_out.rows(), hidden);
  Matrix<Scalar> d_key(d_out.rows(), hidden);
  Matrix<Scalar> d_value(d_out.rows(), hidden);
  for (int h = 0; h < num_heads; ++h) {
    const auto& probs = cache.probs[static_cast<std::size_t>(h)];
    const auto q = cache.query.middleCols(h * head_size, head_size);
    const auto kk = cache.key.middleCols(h * head_size, head_size);
    const auto v = cache.value.middleCols(h * head_size, head_size);
    const auto d_ctx = d_context.middleCols(h * head_size, head_size);

    const Matrix<Scalar> d_probs = d_ctx * v.transpose();
    d_value.middleCols(h * head_size, head_size).noalias() = probs.transpose() * d_ctx;
    // softmax Jacobian, row-wise: dS = P * (dP - <P, dP>)
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> inner = (probs.array() * d_probs.array()).rowwise().sum();
    Matrix<Scalar> d_scores = probs.array() * (d_probs.colwise() - inner).array();
    d_scores *= scale;
    d_query.middleCols(h * head_size, head_size).noalias() = d_scores * kk;
    d_key.middleCols(h * head_size, head_size).noalias() = d_scores.transpose() * q;
  }

  Matrix<Scalar> d_states = d_sum;
  d_states += affine_backward<Scalar>(d_query, cache.input, params[name("attention.query.weight")],
                                      grad_slot(&grads, name("attention.query.weight")),
                                      grad_slot(&grads, name("attention.query.bias")));
  d_states += affine_backward<Scalar>(d_key, cache.input, params[name("attention.key.weight")],
                                      grad_slot(&grads, name("attention.key.weight")),
                                      grad_slot(&grads, name("attention.key.bias")));
  d_states += affine_backward<Scalar>(d_value, cache.input, params[name("attention.value.weight")],
                                      grad_slot(&grads, name("attention.value.weight")),
                                      grad_slot(&grads, name("attention.value.bias")));
  return d_states;
}

// GELU feed-forward with residual connection and layer norm.
template <typename Scalar>
Matrix<Scalar> feed_forward_block(const Matrix<Scalar>& states, const ParameterStore<Scalar>& params, int layer,
                                  FeedForwardCache<Scalar>* cache = nullptr) {
  const auto name = [layer](std::string_view s) { return param_names::layer(layer, s); };
  Matrix<Scalar> pre = detail::affine(states, params[name("ffn.in.weight")], params[name("ffn.in.bias")]);
  Matrix<Scalar> act = pre.unaryExpr([](Scalar x) { return detail::gelu(x); });
  const Matrix<Scalar> projected = detail::affine(act, params[name("ffn.out.weight")], params[name("ffn.out.bias")]);
  Matrix<Scalar> out = layer_norm<Scalar>(states + projected, params[name("ffn_norm.gamma")],
                                          params[name("ffn_norm.beta")], cache ? &cache->norm : nullptr);
  detail::require_finite(out, "feed-forward block");
  if (cache != nullptr) {
    cache->input = states;
    cache->pre_activation = std::move(pre);
    cache->activation = std::move(act);
  }
  return out;
}

template <typename Scalar>
Matrix<Scalar> feed_forward_block_backward(const Matrix<Scalar>& d_out, const FeedForwardCache<Scalar>& cache,
                                           const ParameterStore<Scalar>& params, int layer,
                                           ParameterStore<Scalar>& grads) {
  using detail::grad_slot;
  const auto name = [layer](std::string_view s) { return param_names::layer(layer, s); };
  const Matrix<Scalar> d_sum =
      layer_norm_backward<Scalar>(d_out, cache.norm, params[name("ffn_norm.gamma")],
                                  grad_slot(&grads, name("ffn_norm.gamma")), grad_slot(&grads, name("ffn_norm.beta")));
  const Matrix<Scalar> d_act = detail::affine_backward<Scalar>(d_sum, cache.activation, params[name("ffn.out.weight")],
                                                               grad_slot(&grads, name("ffn.out.weight")),
                                                               grad_slot(&grads, name("ffn.out.bias")));
  const Matrix<Scalar> d_pre =
      d_act.array() * cache.pre_activation.unaryExpr([](Scalar x) { return detail::gelu_derivative(x); }).array();
  Matrix<Scalar> d_states = d_sum;
  d_states += detail::affine_backward<Scalar>(d_pre, cache.input, params[name("ffn.in.weight")],
                                              grad_slot(&grads, name("ffn.in.weight")),
                                              grad_slot(&grads, name("ffn.in.bias")));
  return d_states;
}

template <typename Scalar>
HiddenStates<Scalar> encoder_forward(const EncodedExample& example, const ParameterStore<Scalar>& params,
                                     const EncoderConfig& config, EncoderCache<Scalar>* cache = nullptr) {
  Matrix<Scalar> states = embed(example, params);
  const Mask mask(example.attention_mask);
  if (cache != nullptr) {
    cache->attention.assign(static_cast<std::size_t>(config.num_layers), {});
    cache->feed_forward.assign(static_cast<std::size_t>(config.num_layers), {});
  }
  for (int l = 0; l < config.num_layers; ++l) {
    const auto idx = static_cast<std::size_t>(l);
    states = attention_block<Scalar>(states, mask, params, l, config.num_heads,
                                     cache ? &cache->attention[idx] : nullptr);
    states = feed_forward_block<Scalar>(states, params, l, cache ? &cache->feed_forward[idx] : nullptr);
  }
  return states;
}

// Lowest layer whose inputs need a gradient; num_layers when the whole
// encoder is frozen, 0 with trainable embeddings.
template <typename Scalar>
int lowest_trainable_layer(const ParameterStore<Scalar>& params, const EncoderConfig& config) {
  for (auto name : {param_names::kTokenEmbedding, param_names::kSegmentEmbedding, param_names::kPositionEmbedding}) {
    if (!params.frozen(name)) return 0;
  }
  const std::string prefix = "encoder.layer";
  int lowest = config.num_layers;
  for (const auto& [name, entry] : params.entries()) {
    if (!entry.frozen && name.starts_with(prefix)) lowest = std::min(lowest, std::stoi(name.substr(prefix.size())));
  }
  return lowest;
}

// Accumulates gradients of every trainable encoder array into `grads`.
template <typename Scalar>
void encoder_backward(const Matrix<Scalar>& d_states, const EncodedExample& example,
                      const EncoderCache<Scalar>& cache, const ParameterStore<Scalar>& params,
                      const EncoderConfig& config, ParameterStore<Scalar>& grads) {
  const int lowest = lowest_trainable_layer(params, config);
  if (lowest >= config.num_layers && params.frozen(param_names::kTokenEmbedding) &&
      params.frozen(param_names::kSegmentEmbedding) && params.frozen(param_names::kPositionEmbedding)) {
    return;
  }
  Matrix<Scalar> d = d_states;
  for (int l = config.num_layers - 1; l >= lowest; --l) {
    const auto idx = static_cast<std::size_t>(l);
    d = feed_forward_block_backward<Scalar>(d, cache.feed_forward[idx], params, l, grads);
    d = attention_block_backward<Scalar>(d, cache.attention[idx], params, l, config.num_heads, grads);
  }
  if (lowest == 0) embed_backward<Scalar>(d, example, grads);
}

}  // namespace bertsa
