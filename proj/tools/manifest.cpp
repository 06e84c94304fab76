#include "manifest.hpp"

#include <fstream>

#include "bertsa/error.hpp"

namespace bertsa::cli {

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  const auto& e = m.model.encoder;
  j["model"] = {
      {"num_layers", e.num_layers},
      {"hidden_size", e.hidden_size},
      {"num_heads", e.num_heads},
      {"ffn_size", e.ffn_size},
      {"max_position", e.max_position},
      {"vocab_size", e.vocab_size},
      {"num_frozen_layers", e.num_frozen_layers},
      {"lstm_hidden_size", m.model.head.lstm_hidden_size},
      {"num_classes", m.model.head.num_classes},
      {"sequence_length", m.model.sequence_length},
      {"init_stddev", m.model.init_stddev},
  };
  j["train"] = {
      {"learning_rate", m.train.learning_rate}, {"adam_beta1", m.train.adam_beta1},
      {"adam_beta2", m.train.adam_beta2},       {"adam_epsilon", m.train.adam_epsilon},
      {"epochs", m.train.epochs},               {"batch_size", m.train.batch_size},
      {"seed", m.train.seed},
  };
  j["aggregator"] = {
      {"binary_coefficient", m.aggregator.binary_coefficient.to_string()},
      {"ternary_coefficient", m.aggregator.ternary_coefficient.to_string()},
      {"neutral_fraction", m.aggregator.neutral_fraction.to_string()},
  };
  j["inputs"] = m.inputs;
  j["artifacts"] = m.artifacts;
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    const auto& model = j.at("model");
    auto& e = m.model.encoder;
    e.num_layers = model.at("num_layers");
    e.hidden_size = model.at("hidden_size");
    e.num_heads = model.at("num_heads");
    e.ffn_size = model.at("ffn_size");
    e.max_position = model.at("max_position");
    e.vocab_size = model.at("vocab_size");
    e.num_frozen_layers = model.at("num_frozen_layers");
    m.model.head.lstm_hidden_size = model.at("lstm_hidden_size");
    m.model.head.num_classes = model.at("num_classes");
    m.model.sequence_length = model.at("sequence_length");
    m.model.init_stddev = model.at("init_stddev");
    const auto& t = j.at("train");
    m.train.learning_rate = t.at("learning_rate");
    m.train.adam_beta1 = t.at("adam_beta1");
    m.train.adam_beta2 = t.at("adam_beta2");
    m.train.adam_epsilon = t.at("adam_epsilon");
    m.train.epochs = t.at("epochs");
    m.train.batch_size = t.at("batch_size");
    m.train.seed = t.at("seed");
    const auto& a = j.at("aggregator");
    m.aggregator.binary_coefficient = Ratio::parse(a.at("binary_coefficient").get<std::string>());
    m.aggregator.ternary_coefficient = Ratio::parse(a.at("ternary_coefficient").get<std::string>());
    m.aggregator.neutral_fraction = Ratio::parse(a.at("neutral_fraction").get<std::string>());
    m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    m.artifacts = j.at("artifacts").get<std::map<std::string, std::string>>();
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("malformed manifest: ") + ex.what());
  }
  return m;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write manifest " + path.string());
  out << to_json(manifest).dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("missing file: cannot open manifest " + path.string());
  try {
    return manifest_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& ex) {
    throw ConfigError("malformed manifest " + path.string() + ": " + ex.what());
  }
}

}  // namespace bertsa::cli
