#include <cstring>

#include <gtest/gtest.h>

#include "bertsa/checkpoint.hpp"
#include "bertsa/error.hpp"
#include "support.hpp"

namespace bertsa {
namespace {

ModelConfig desk(int vocab) {
  ModelConfig c = model_preset("desk");
  c.encoder.vocab_size = vocab;
  return c;
}

TEST(Checkpoint, BitExactRoundTrip) {
  const auto config = desk(40);
  auto params = init_parameters<float>(config, 5);
  // include awkward values: subnormal, negative zero, extremes
  auto& dense = params[param_names::head("dense.bias")];
  dense(0, 0) = -0.0f;
  dense(0, 1) = std::numeric_limits<float>::denorm_min();
  params[param_names::head("dense.weight")](0, 0) = std::numeric_limits<float>::max();
  const std::string bytes = serialize_checkpoint(config, params);
  const Checkpoint back = deserialize_checkpoint(bytes);
  EXPECT_EQ(back.config, config);
  ASSERT_EQ(back.params.num_arrays(), params.num_arrays());
  for (const auto& [name, e] : params.entries()) {
    const auto& other = back.params[name];
    EXPECT_EQ(back.params.frozen(name), e.frozen) << name;
    ASSERT_EQ(other.size(), e.value.size());
    EXPECT_EQ(std::memcmp(other.data(), e.value.data(), sizeof(float) * static_cast<std::size_t>(e.value.size())), 0)
        << name;
  }
  EXPECT_EQ(serialize_checkpoint(back.config, back.params), bytes);
}

TEST(Checkpoint, FileRoundTrip) {
  test::TempDir dir;
  const auto config = desk(30);
  const auto params = init_parameters<float>(config, 6);
  save_checkpoint(dir / "c.bin", config, params);
  const auto back = load_checkpoint(dir / "c.bin");
  EXPECT_EQ(back.params, params);
  EXPECT_EQ(test::read_file(dir / "c.bin"), serialize_checkpoint(config, params));
}

TEST(Checkpoint, HeaderIsReadableText) {
  const auto config = desk(30);
  const std::string bytes = serialize_checkpoint(config, init_parameters<float>(config, 6));
  const auto data = bytes.find("\ndata\n");
  ASSERT_NE(data, std::string::npos);
  const std::string header = bytes.substr(0, data);
  EXPECT_EQ(header.rfind("bertsa-checkpoint 1\n", 0), 0u);
  EXPECT_NE(header.find("config hidden_size 32"), std::string::npos);
  EXPECT_NE(header.find("array embeddings.token 30 32 frozen"), std::string::npos);
  EXPECT_NE(header.find("array head.dense.weight 64 2 trainable"), std::string::npos);
}

TEST(Checkpoint, LittleEndianPayload) {
  ModelConfig config = test::tiny_config(5);
  auto params = init_parameters<float>(config, 1);
  test::zero_all(params);
  const std::string bytes = serialize_checkpoint(config, params);
  // first array in name order is embeddings.position; its first value follows the header
  params[param_names::kPositionEmbedding](0, 0) = 1.0f;
  const std::string one = serialize_checkpoint(config, params);
  const auto start = one.find("\ndata\n") + 6;
  EXPECT_EQ(one.substr(start, 4), std::string("\x00\x00\x80\x3f", 4));
  EXPECT_EQ(bytes.size(), one.size());
}

TEST(Checkpoint, RejectsCorruption) {
  const auto config = desk(30);
  const std::string bytes = serialize_checkpoint(config, init_parameters<float>(config, 6));
  EXPECT_THROW(deserialize_checkpoint(bytes.substr(0, bytes.size() - 1)), DataError);
  EXPECT_THROW(deserialize_checkpoint(bytes + "x"), DataError);
  EXPECT_THROW(deserialize_checkpoint("garbage"), DataError);
  std::string wrong_shape = bytes;
  const auto pos = wrong_shape.find("array embeddings.token 30 32");
  wrong_shape.replace(pos, 28, "array embeddings.token 31 32");
  EXPECT_THROW(deserialize_checkpoint(wrong_shape), DataError);
  std::string bad_config = bytes;
  bad_config.replace(bad_config.find("config num_heads 2"), 18, "config num_heads 3");
  EXPECT_THROW(deserialize_checkpoint(bad_config), DataError);
}

TEST(Checkpoint, MissingFile) {
  test::TempDir dir;
  EXPECT_THROW(load_checkpoint(dir / "none.bin"), DataError);
}

}  // namespace
}  // namespace bertsa
