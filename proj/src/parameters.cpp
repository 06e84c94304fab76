#include "bertsa/parameters.hpp"

#include <cmath>

namespace bertsa {

namespace param_names {

std::string layer(int index, std::string_view suffix) {
  return "encoder.layer" + std::to_string(index) + "." + std::string(suffix);
}

std::string head(std::string_view suffix) { return "head." + std::string(suffix); }

}  // namespace param_names

std::vector<ArraySpec> parameter_layout(const ModelConfig& config) {
  const auto& enc = config.encoder;
  const int h = enc.hidden_size;
  const int f = enc.ffn_size;
  const int l = config.head.lstm_hidden_size;
  std::vector<ArraySpec> out = {
      {std::string(param_names::kTokenEmbedding), enc.vocab_size, h, InitKind::kNormal},
      {std::string(param_names::kSegmentEmbedding), kNumSegments, h, InitKind::kNormal},
      {std::string(param_names::kPositionEmbedding), enc.max_position, h, InitKind::kNormal},
  };
  for (int i = 0; i < enc.num_layers; ++i) {
    for (const char* proj : {"query", "key", "value", "output"}) {
      const std::string base = std::string("attention.") + proj;
      out.push_back({param_names::layer(i, base + ".weight"), h, h, InitKind::kNormal});
      out.push_back({param_names::layer(i, base + ".bias"), 1, h, InitKind::kZero});
    }
    out.push_back({param_names::layer(i, "attention_norm.gamma"), 1, h, InitKind::kOne});
    out.push_back({param_names::layer(i, "attention_norm.beta"), 1, h, InitKind::kZero});
    out.push_back({param_names::layer(i, "ffn.in.weight"), h, f, InitKind::kNormal});
    out.push_back({param_names::layer(i, "ffn.in.bias"), 1, f, InitKind::kZero});
    out.push_back({param_names::layer(i, "ffn.out.weight"), f, h, InitKind::kNormal});
    out.push_back({param_names::layer(i, "ffn.out.bias"), 1, h, InitKind::kZero});
    out.push_back({param_names::layer(i, "ffn_norm.gamma"), 1, h, InitKind::kOne});
    out.push_back({param_names::layer(i, "ffn_norm.beta"), 1, h, InitKind::kZero});
  }
  for (const char* dir : {"lstm_fw", "lstm_bw"}) {
    const std::string base = dir;
    out.push_back({param_names::head(base + ".input_weight"), h, 4 * l, InitKind::kNormal});
    out.push_back({param_names::head(base + ".recurrent_weight"), l, 4 * l, InitKind::kNormal});
    out.push_back({param_names::head(base + ".bias"), 1, 4 * l, InitKind::kZero});
  }
  out.push_back({param_names::head("dense.weight"), 2 * l, config.head.num_classes, InitKind::kNormal});
  out.push_back({param_names::head("dense.bias"), 1, config.head.num_classes, InitKind::kZero});
  return out;
}

template <typename Scalar>
ParameterStore<Scalar> init_parameters(const ModelConfig& config, std::uint64_t seed) {
  config.validate();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto truncated = [&] {
    double z = normal(rng);
    while (std::abs(z) > 2.0) z = normal(rng);
    return z * config.init_stddev;
  };

  ParameterStore<Scalar> params;
  for (const auto& spec : parameter_layout(config)) {
    MatrixD value(spec.rows, spec.cols);
    switch (spec.init) {
      case InitKind::kZero:
        value.setZero();
        break;
      case InitKind::kOne:
        value.setOnes();
        break;
      case InitKind::kNormal:
        for (Eigen::Index r = 0; r < value.rows(); ++r) {
          for (Eigen::Index c = 0; c < value.cols(); ++c) value(r, c) = truncated();
        }
        break;
    }
    params.add(spec.name, value.cast<Scalar>());
  }
  set_freeze(params, config.encoder, config.encoder.num_frozen_layers);
  return params;
}

template <typename Scalar>
void set_freeze(ParameterStore<Scalar>& params, const EncoderConfig& config, int num_frozen_layers) {
  if (num_frozen_layers < 0 || num_frozen_layers > config.num_layers) {
    throw ConfigError("num_frozen_layers " + std::to_string(num_frozen_layers) + " outside [0, " +
                      std::to_string(config.num_layers) + "]");
  }
  const std::string layer_prefix = "encoder.layer";
  for (auto& [name, entry] : params.entries()) {
    bool frozen = false;
    if (name.starts_with("embeddings.")) {
      frozen = num_frozen_layers > 0;
    } else if (name.starts_with(layer_prefix)) {
      const int index = std::stoi(name.substr(layer_prefix.size()));
      frozen = index < num_frozen_layers;
    }
    entry.frozen = frozen;
  }
}

template <typename Scalar>
void check_shapes(const ParameterStore<Scalar>& params, const ModelConfig& config) {
  const auto layout = parameter_layout(config);
  if (layout.size() != params.num_arrays()) {
    throw ConfigError("parameter store holds " + std::to_string(params.num_arrays()) + " arrays, config implies " +
                      std::to_string(layout.size()));
  }
  for (const auto& spec : layout) {
    if (!params.contains(spec.name)) throw ConfigError("missing parameter array " + spec.name);
    const auto& m = params[spec.name];
    if (m.rows() != spec.rows || m.cols() != spec.cols) {
      throw ConfigError("shape mismatch for " + spec.name + ": have " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", config implies " + std::to_string(spec.rows) + "x" +
                        std::to_string(spec.cols));
    }
  }
}

template ParameterStore<float> init_parameters<float>(const ModelConfig&, std::uint64_t);
template ParameterStore<double> init_parameters<double>(const ModelConfig&, std::uint64_t);
template void set_freeze<float>(ParameterStore<float>&, const EncoderConfig&, int);
template void set_freeze<double>(ParameterStore<double>&, const EncoderConfig&, int);
template void check_shapes<float>(const ParameterStore<float>&, const ModelConfig&);
template void check_shapes<double>(const ParameterStore<double>&, const ModelConfig&);

}  // namespace bertsa
