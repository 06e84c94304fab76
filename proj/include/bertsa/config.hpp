#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace bertsa {

// Transformer context encoder dimensions.
struct EncoderConfig {
  int num_layers = 2;
  int hidden_size = 32;
  int num_heads = 2;
  int ffn_size = 64;
  int max_position = 32;
  int vocab_size = 0;
  int num_frozen_layers = 1;

  int head_size() const { return hidden_size / num_heads; }
  void validate() const;
  bool operator==(const EncoderConfig&) const = default;
};

// Single bidirectional LSTM layer followed by a dense layer.
struct HeadConfig {
  int lstm_hidden_size = 32;
  int num_classes = 2;

  void validate() const;
  bool operator==(const HeadConfig&) const = default;
};

struct ModelConfig {
  EncoderConfig encoder;
  HeadConfig head;
  // K: every encoded example has exactly this many positions.
  int sequence_length = 32;
  double init_stddev = 0.02;

  void validate() const;
  bool operator==(const ModelConfig&) const = default;
};

struct TrainConfig {
  double learning_rate = 3e-5;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  int epochs = 10;
  int batch_size = 8;
  std::uint64_t seed = 42;

  void validate() const;
  bool operator==(const TrainConfig&) const = default;
};

// "paper": K=256 and the optimizer settings of the original experiments on a
// small encoder; "desk": 2 layers, H=32, K=32; "tiny": 1 layer, H=L=8, K=5.
// vocab_size is left at 0 for the caller to fill in.
ModelConfig model_preset(std::string_view name);
TrainConfig train_preset(std::string_view name);

}  // namespace bertsa
