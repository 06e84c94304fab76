#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bertsa/config.hpp"
#include "bertsa/error.hpp"
#include "bertsa/tensor.hpp"

namespace bertsa {

// Array names. Iteration order everywhere is the lexicographic order of these.
namespace param_names {

inline constexpr std::string_view kTokenEmbedding = "embeddings.token";
inline constexpr std::string_view kSegmentEmbedding = "embeddings.segment";
inline constexpr std::string_view kPositionEmbedding = "embeddings.position";

std::string layer(int index, std::string_view suffix);
std::string head(std::string_view suffix);

}  // namespace param_names

inline constexpr int kNumSegments = 2;

// Named dense arrays with per-array frozen flags. Vectors are stored as 1 x n.
template <typename Scalar>
class ParameterStore {
 public:
  struct Entry {
    Matrix<Scalar> value;
    bool frozen = false;
  };
  using Map = std::map<std::string, Entry, std::less<>>;

  void add(std::string name, Matrix<Scalar> value, bool frozen = false) {
    auto [it, inserted] = entries_.emplace(std::move(name), Entry{std::move(value), frozen});
    if (!inserted) throw ConfigError("duplicate parameter array " + it->first);
  }

  bool contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

  Matrix<Scalar>& operator[](std::string_view name) { return entry(name).value; }
  const Matrix<Scalar>& operator[](std::string_view name) const { return entry(name).value; }

  bool frozen(std::string_view name) const { return entry(name).frozen; }
  void set_frozen(std::string_view name, bool frozen) { entry(name).frozen = frozen; }

  const Map& entries() const { return entries_; }
  Map& entries() { return entries_; }
  std::size_t num_arrays() const { return entries_.size(); }

  std::size_t num_scalars(bool trainable_only = false) const {
    std::size_t n = 0;
    for (const auto& [name, e] : entries_) {
      if (!trainable_only || !e.frozen) n += static_cast<std::size_t>(e.value.size());
    }
    return n;
  }

  // Zero arrays shaped like every trainable array (frozen arrays are omitted).
  ParameterStore zeros_like_trainable() const {
    ParameterStore out;
    for (const auto& [name, e] : entries_) {
      if (!e.frozen) out.add(name, Matrix<Scalar>::Zero(e.value.rows(), e.value.cols()));
    }
    return out;
  }

  template <typename To>
  ParameterStore<To> cast() const {
    ParameterStore<To> out;
    for (const auto& [name, e] : entries_) out.add(name, e.value.template cast<To>(), e.frozen);
    return out;
  }

  bool all_finite() const {
    for (const auto& [name, e] : entries_) {
      if (!e.value.allFinite()) return false;
    }
    return true;
  }

  bool operator==(const ParameterStore& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    auto it = other.entries_.begin();
    for (const auto& [name, e] : entries_) {
      if (name != it->first || e.frozen != it->second.frozen ||
          e.value.rows() != it->second.value.rows() || e.value.cols() != it->second.value.cols() ||
          e.value != it->second.value) {
        return false;
      }
      ++it;
    }
    return true;
  }

 private:
  Entry& entry(std::string_view name) {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw ConfigError("unknown parameter array " + std::string(name));
    return it->second;
  }
  const Entry& entry(std::string_view name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw ConfigError("unknown parameter array " + std::string(name));
    return it->second;
  }

  Map entries_;
};

enum class InitKind { kNormal, kZero, kOne };

struct ArraySpec {
  std::string name;
  int rows;
  int cols;
  InitKind init;
};

// Every array the model holds, in creation order.
std::vector<ArraySpec> parameter_layout(const ModelConfig& config);

// Truncated normal (|z| <= 2) weights with the configured stddev, zero biases
// and layer-norm shifts, unit layer-norm scales. Drawn in double so that the
// float and double stores built from one seed agree after rounding.
template <typename Scalar>
ParameterStore<Scalar> init_parameters(const ModelConfig& config, std::uint64_t seed);

// Freezes the embedding tables and layers [0, num_frozen_layers); everything
// else, including the head, becomes trainable.
template <typename Scalar>
void set_freeze(ParameterStore<Scalar>& params, const EncoderConfig& config, int num_frozen_layers);

// Throws ConfigError if the store does not hold exactly the arrays `config` implies.
template <typename Scalar>
void check_shapes(const ParameterStore<Scalar>& params, const ModelConfig& config);

}  // namespace bertsa
