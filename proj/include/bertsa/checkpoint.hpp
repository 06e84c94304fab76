#pragma once

#include <filesystem>
#include <string>

#include "bertsa/config.hpp"
#include "bertsa/parameters.hpp"

namespace bertsa {

// Checkpoint layout:
//   UTF-8 header lines
//     bertsa-checkpoint 1
//     config <field> <value>        (one per ModelConfig field)
//     arrays <count>
//     array <name> <rows> <cols> <frozen|trainable>   (name order)
//     data
//   then every array's values, row-major, as little-endian IEEE-754 binary32,
//   in header order.
struct Checkpoint {
  ModelConfig config;
  ParameterStore<float> params;
};

std::string serialize_checkpoint(const ModelConfig& config, const ParameterStore<float>& params);
Checkpoint deserialize_checkpoint(const std::string& bytes, const std::string& origin = "checkpoint");

void save_checkpoint(const std::filesystem::path& path, const ModelConfig& config, const ParameterStore<float>& params);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace bertsa
