#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "bertsa/config.hpp"
#include "bertsa/polarity.hpp"

namespace bertsa::cli {

// Fully resolved settings of one run, written next to its outputs.
struct RunManifest {
  std::string command;
  ModelConfig model;
  TrainConfig train;
  AggregatorConfig aggregator;
  std::map<std::string, std::string> inputs;
  std::map<std::string, std::string> artifacts;
};

nlohmann::ordered_json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace bertsa::cli
