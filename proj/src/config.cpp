#include "bertsa/config.hpp"

#include "bertsa/error.hpp"

namespace bertsa {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw ConfigError(what);
}

}  // namespace

void EncoderConfig::validate() const {
  require(num_layers >= 0, "num_layers must be non-negative");
  require(hidden_size > 0, "hidden_size must be positive");
  require(num_heads > 0, "num_heads must be positive");
  require(hidden_size % num_heads == 0, "hidden_size must be divisible by num_heads");
  require(ffn_size > 0, "ffn_size must be positive");
  require(max_position > 0, "max_position must be positive");
  require(vocab_size > 0, "vocab_size must be positive");
  require(num_frozen_layers >= 0 && num_frozen_layers <= num_layers,
          "num_frozen_layers must lie in [0, num_layers]");
}

void HeadConfig::validate() const {
  require(lstm_hidden_size > 0, "lstm_hidden_size must be positive");
  require(num_classes == 2, "num_classes must be 2 for binary sentiment classification");
}

void ModelConfig::validate() const {
  encoder.validate();
  head.validate();
  require(sequence_length >= 2, "sequence_length must be at least 2");
  require(sequence_length <= encoder.max_position, "sequence_length exceeds max_position");
  require(init_stddev >= 0, "init_stddev must be non-negative");
}

void TrainConfig::validate() const {
  require(learning_rate > 0, "learning_rate must be positive");
  require(adam_beta1 >= 0 && adam_beta1 < 1, "adam_beta1 must lie in [0, 1)");
  require(adam_beta2 >= 0 && adam_beta2 < 1, "adam_beta2 must lie in [0, 1)");
  require(adam_epsilon > 0, "adam_epsilon must be positive");
  require(epochs >= 1, "epochs must be at least 1");
  require(batch_size >= 1, "batch_size must be at least 1");
}

ModelConfig model_preset(std::string_view name) {
  ModelConfig c;
  if (name == "paper") {
    c.sequence_length = 256;
    c.encoder.max_position = 256;
  } else if (name == "desk") {
    // defaults
  } else if (name == "tiny") {
    c.encoder.num_layers = 1;
    c.encoder.hidden_size = 8;
    c.encoder.num_heads = 2;
    c.encoder.ffn_size = 16;
    c.encoder.max_position = 5;
    c.encoder.num_frozen_layers = 0;
    c.head.lstm_hidden_size = 8;
    c.sequence_length = 5;
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected paper, desk or tiny)");
  }
  return c;
}

TrainConfig train_preset(std::string_view name) {
  TrainConfig t;
  if (name == "tiny") {
    t.learning_rate = 3e-4;
  } else if (name != "paper" && name != "desk") {
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected paper, desk or tiny)");
  }
  return t;
}

}  // namespace bertsa
