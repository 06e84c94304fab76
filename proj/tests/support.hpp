#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bertsa/config.hpp"
#include "bertsa/parameters.hpp"
#include "bertsa/vocab.hpp"

namespace bertsa::test {

inline std::filesystem::path data_dir() { return BERTSA_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return BERTSA_FIXTURE_DIR; }

inline Vocabulary toy_vocab() { return load_vocab(data_dir() / "toy_vocab.txt"); }

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    std::string name = "bertsa_";
    if (info != nullptr) name += std::string(info->test_suite_name()) + "_" + info->name();
    for (auto& c : name) {
      if (c == '/') c = '_';
    }
    path_ = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Tiny encoder/head shape with the given vocabulary size.
inline ModelConfig tiny_config(int vocab_size, int sequence_length = 5) {
  ModelConfig c = model_preset("tiny");
  c.encoder.vocab_size = vocab_size;
  c.sequence_length = sequence_length;
  c.encoder.max_position = std::max(c.encoder.max_position, sequence_length);
  return c;
}

// Overwrites every array with uniform values in [-scale, scale].
template <typename Scalar>
void randomize(ParameterStore<Scalar>& params, std::uint64_t seed, double scale = 0.5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  for (auto& [name, entry] : params.entries()) {
    for (Eigen::Index i = 0; i < entry.value.size(); ++i) entry.value.data()[i] = static_cast<Scalar>(dist(rng));
  }
}

template <typename Scalar>
void zero_all(ParameterStore<Scalar>& params) {
  for (auto& [name, entry] : params.entries()) entry.value.setZero();
}

}  // namespace bertsa::test
