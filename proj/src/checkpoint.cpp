#include "bertsa/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "bertsa/error.hpp"

namespace bertsa {

namespace {

constexpr std::string_view kMagic = "bertsa-checkpoint 1";

struct ConfigField {
  std::function<std::string(const ModelConfig&)> get;
  std::function<void(ModelConfig&, const std::string&)> set;
};

template <typename T>
ConfigField int_field(T ModelConfig::*member) {
  return {[member](const ModelConfig& c) { return std::to_string(c.*member); },
          [member](ModelConfig& c, const std::string& v) { c.*member = static_cast<T>(std::stoll(v)); }};
}

template <typename Sub>
ConfigField nested_int(Sub ModelConfig::*sub, int Sub::*member) {
  return {[sub, member](const ModelConfig& c) { return std::to_string((c.*sub).*member); },
          [sub, member](ModelConfig& c, const std::string& v) { (c.*sub).*member = std::stoi(v); }};
}

const std::vector<std::pair<std::string, ConfigField>>& config_fields() {
  static const std::vector<std::pair<std::string, ConfigField>> fields = {
      {"num_layers", nested_int(&ModelConfig::encoder, &EncoderConfig::num_layers)},
      {"hidden_size", nested_int(&ModelConfig::encoder, &EncoderConfig::hidden_size)},
      {"num_heads", nested_int(&ModelConfig::encoder, &EncoderConfig::num_heads)},
      {"ffn_size", nested_int(&ModelConfig::encoder, &EncoderConfig::ffn_size)},
      {"max_position", nested_int(&ModelConfig::encoder, &EncoderConfig::max_position)},
      {"vocab_size", nested_int(&ModelConfig::encoder, &EncoderConfig::vocab_size)},
      {"num_frozen_layers", nested_int(&ModelConfig::encoder, &EncoderConfig::num_frozen_layers)},
      {"lstm_hidden_size", nested_int(&ModelConfig::head, &HeadConfig::lstm_hidden_size)},
      {"num_classes", nested_int(&ModelConfig::head, &HeadConfig::num_classes)},
      {"sequence_length", int_field(&ModelConfig::sequence_length)},
      {"init_stddev",
       {[](const ModelConfig& c) { return fmt::format("{}", c.init_stddev); },
        [](ModelConfig& c, const std::string& v) { c.init_stddev = std::stod(v); }}},
  };
  return fields;
}

void put_le32(std::string& out, float value) {
  const auto bits = std::bit_cast<std::uint32_t>(value);
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<char>((bits >> shift) & 0xFF));
}

float get_le32(const char* p) {
  std::uint32_t bits = 0;
  for (int i = 0; i < 4; ++i) bits |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return std::bit_cast<float>(bits);
}

}  // namespace

std::string serialize_checkpoint(const ModelConfig& config, const ParameterStore<float>& params) {
  check_shapes(params, config);
  std::string out;
  out += kMagic;
  out += '\n';
  for (const auto& [name, field] : config_fields()) out += "config " + name + " " + field.get(config) + "\n";
  out += fmt::format("arrays {}\n", params.num_arrays());
  for (const auto& [name, e] : params.entries()) {
    out += fmt::format("array {} {} {} {}\n", name, e.value.rows(), e.value.cols(), e.frozen ? "frozen" : "trainable");
  }
  out += "data\n";
  for (const auto& [name, e] : params.entries()) {
    const float* data = e.value.data();
    for (Eigen::Index i = 0; i < e.value.size(); ++i) put_le32(out, data[i]);
  }
  return out;
}

Checkpoint deserialize_checkpoint(const std::string& bytes, const std::string& origin) {
  std::size_t pos = 0;
  std::size_t line_number = 0;
  auto next_line = [&]() -> std::string {
    const auto nl = bytes.find('\n', pos);
    if (nl == std::string::npos) throw DataError(origin + ": truncated checkpoint header");
    std::string line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_number;
    return line;
  };
  auto bad = [&](const std::string& what) {
    return DataError(fmt::format("{}: header line {}: {}", origin, line_number, what));
  };

  if (next_line() != kMagic) throw bad("not a bertsa checkpoint");

  Checkpoint ckpt;
  std::map<std::string, bool> seen;
  struct ArrayHeader {
    std::string name;
    Eigen::Index rows;
    Eigen::Index cols;
    bool frozen;
  };
  std::vector<ArrayHeader> arrays;
  std::size_t expected_arrays = 0;
  bool have_count = false;
  while (true) {
    const std::string line = next_line();
    if (line == "data") break;
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    if (kind == "config") {
      std::string name, value;
      if (!(in >> name >> value)) throw bad("malformed config line");
      bool known = false;
      for (const auto& [field_name, field] : config_fields()) {
        if (field_name == name) {
          try {
            field.set(ckpt.config, value);
          } catch (const std::exception&) {
            throw bad("bad value for " + name);
          }
          known = true;
        }
      }
      if (!known) throw bad("unknown config field " + name);
      seen[name] = true;
    } else if (kind == "arrays") {
      if (!(in >> expected_arrays)) throw bad("malformed array count");
      have_count = true;
    } else if (kind == "array") {
      ArrayHeader h;
      std::string flag;
      if (!(in >> h.name >> h.rows >> h.cols >> flag) || (flag != "frozen" && flag != "trainable") || h.rows < 0 ||
          h.cols < 0) {
        throw bad("malformed array line");
      }
      h.frozen = flag == "frozen";
      arrays.push_back(std::move(h));
    } else {
      throw bad("unexpected line '" + line + "'");
    }
  }
  for (const auto& [name, field] : config_fields()) {
    if (!seen.contains(name)) throw DataError(origin + ": checkpoint header lacks config field " + name);
  }
  if (!have_count || expected_arrays != arrays.size()) {
    throw DataError(origin + ": array count does not match array lines");
  }

  std::size_t needed = 0;
  for (const auto& h : arrays) needed += static_cast<std::size_t>(h.rows * h.cols) * 4;
  if (bytes.size() - pos != needed) {
    throw DataError(fmt::format("{}: expected {} data bytes, found {}", origin, needed, bytes.size() - pos));
  }
  for (const auto& h : arrays) {
    MatrixF value(h.rows, h.cols);
    float* data = value.data();
    for (Eigen::Index i = 0; i < value.size(); ++i, pos += 4) data[i] = get_le32(bytes.data() + pos);
    ckpt.params.add(h.name, std::move(value), h.frozen);
  }
  try {
    ckpt.config.validate();
    check_shapes(ckpt.params, ckpt.config);
  } catch (const ConfigError& e) {
    throw DataError(origin + ": inconsistent checkpoint: " + e.what());
  }
  return ckpt;
}

void save_checkpoint(const std::filesystem::path& path, const ModelConfig& config, const ParameterStore<float>& params) {
  const std::string bytes = serialize_checkpoint(config, params);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write checkpoint " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("failed writing checkpoint " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("missing file: cannot open checkpoint " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_checkpoint(buf.str(), path.string());
}

}  // namespace bertsa
