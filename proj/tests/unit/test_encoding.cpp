#include <random>

#include <gtest/gtest.h>

#include "bertsa/encoding.hpp"
#include "bertsa/error.hpp"
#include "bertsa/tokenizer.hpp"
#include "support.hpp"

namespace bertsa {
namespace {

using Mask8 = std::vector<std::uint8_t>;

TokenSequence words(std::size_t n) {
  static const std::vector<std::string> pool = {"this", "is", "a", "very", "fantastic", "movie", "good", "bad",
                                                "film", "plot"};
  TokenSequence out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(pool[i % pool.size()]);
  return out;
}

TEST(Encode, FourTokensInEight) {
  const Vocabulary v = test::toy_vocab();
  const auto ex = encode(words(4), v, 8);
  EXPECT_EQ(ex.attention_mask, (Mask8{1, 1, 1, 1, 1, 1, 0, 0}));
  EXPECT_EQ(ex.input_ids[0], v.cls_id());
  EXPECT_EQ(ex.input_ids[5], v.sep_id());
  EXPECT_EQ(ex.input_ids[6], v.pad_id());
  EXPECT_EQ(ex.segment_ids, Mask8(8, 0));
}

TEST(Encode, EmptyReview) {
  const Vocabulary v = test::toy_vocab();
  const auto ex = encode({}, v, 4);
  EXPECT_EQ(ex.input_ids, (std::vector<TokenId>{v.cls_id(), v.sep_id(), v.pad_id(), v.pad_id()}));
  EXPECT_EQ(ex.attention_mask, (Mask8{1, 1, 0, 0}));
}

TEST(Encode, HeadTruncationKeepsSeparator) {
  const Vocabulary v = test::toy_vocab();
  const auto tokens = words(10);
  const auto ex = encode(tokens, v, 8);
  std::vector<TokenId> expected{v.cls_id()};
  for (int i = 0; i < 6; ++i) expected.push_back(v.id(tokens[static_cast<std::size_t>(i)]));
  expected.push_back(v.sep_id());
  EXPECT_EQ(ex.input_ids, expected);
  EXPECT_EQ(ex.attention_mask, Mask8(8, 1));
}

TEST(Encode, MinimumLength) {
  const Vocabulary v = test::toy_vocab();
  const auto ex = encode(words(5), v, 2);
  EXPECT_EQ(ex.input_ids, (std::vector<TokenId>{v.cls_id(), v.sep_id()}));
  EXPECT_THROW(encode(words(1), v, 1), ConfigError);
  EXPECT_THROW(encode(words(1), v, 0), ConfigError);
}

TEST(Encode, CarriesLabel) {
  const auto ex = encode(words(2), test::toy_vocab(), 6, SentimentLabel::kPositive);
  ASSERT_TRUE(ex.label);
  EXPECT_EQ(*ex.label, SentimentLabel::kPositive);
}

TEST(Encode, LayoutPropertiesOverLengths) {
  const Vocabulary v = test::toy_vocab();
  for (std::size_t k : {2u, 3u, 5u, 8u, 16u}) {
    for (std::size_t n = 0; n <= 3 * k; ++n) {
      const auto ex = encode(words(n), v, k);
      ASSERT_EQ(ex.length(), k);
      ASSERT_EQ(ex.attention_mask.size(), k);
      ASSERT_EQ(ex.segment_ids.size(), k);
      EXPECT_EQ(ex.num_attended(), std::min(n, k - 2) + 2);
      EXPECT_TRUE(validate_example(ex, v).empty()) << validate_example(ex, v);
      // prefix of ones, then zeros holding pad
      bool seen_zero = false;
      int seps = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (ex.attention_mask[i] == 0) {
          seen_zero = true;
          EXPECT_EQ(ex.input_ids[i], v.pad_id());
        } else {
          EXPECT_FALSE(seen_zero);
          if (ex.input_ids[i] == v.sep_id()) ++seps;
        }
      }
      EXPECT_EQ(seps, 1);
    }
  }
}

TEST(Encode, DecodingRecoversTruncatedWords) {
  const Vocabulary v = test::toy_vocab();
  const std::string text = "This is an interesting, VERY fantastic movie!";
  const auto tokens = tokenize_review(text, v);
  for (std::size_t k = 2; k < tokens.size() + 4; ++k) {
    const auto ex = encode(tokens, v, k);
    std::vector<std::string> decoded;
    for (std::size_t i = 0; i < k; ++i) {
      if (!ex.attention_mask[i] || v.is_special(ex.input_ids[i])) continue;
      const std::string& t = v.token(ex.input_ids[i]);
      if (t.rfind("##", 0) == 0) {
        decoded.back() += t.substr(2);
      } else {
        decoded.push_back(t);
      }
    }
    const std::size_t kept = std::min(tokens.size(), k - 2);
    std::vector<std::string> expected;
    for (std::size_t i = 0; i < kept; ++i) {
      if (tokens[i].rfind("##", 0) == 0) {
        expected.back() += tokens[i].substr(2);
      } else {
        expected.push_back(tokens[i]);
      }
    }
    EXPECT_EQ(decoded, expected) << "K=" << k;
  }
}

TEST(ValidateExample, RejectsBrokenLayouts) {
  const Vocabulary v = test::toy_vocab();
  auto ex = encode(words(3), v, 8);
  ASSERT_TRUE(validate_example(ex, v).empty());
  auto interior = ex;
  interior.attention_mask[2] = 0;
  EXPECT_FALSE(validate_example(interior, v).empty());
  auto no_cls = ex;
  no_cls.input_ids[0] = v.id("movie");
  EXPECT_FALSE(validate_example(no_cls, v).empty());
  auto short_mask = ex;
  short_mask.attention_mask.pop_back();
  EXPECT_FALSE(validate_example(short_mask, v).empty());
}

TEST(BatchEncode, PreservesOrder) {
  const Vocabulary v = test::toy_vocab();
  const auto out = batch_encode({{"good film", SentimentLabel::kPositive}, {"bad plot", SentimentLabel::kNegative}}, v, 6);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].input_ids[1], v.id("good"));
  EXPECT_EQ(out[1].input_ids[1], v.id("bad"));
  EXPECT_EQ(*out[0].label, SentimentLabel::kPositive);
  EXPECT_EQ(*out[1].label, SentimentLabel::kNegative);
}

TEST(BatchEncode, Empty) { EXPECT_TRUE(batch_encode({}, test::toy_vocab(), 8).empty()); }

TEST(BatchEncode, AllUnknownIsValid) {
  const Vocabulary v = test::toy_vocab();
  const auto out = batch_encode({{"qzxv wqpt", std::nullopt}}, v, 6);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].input_ids[1], v.unk_id());
  EXPECT_EQ(out[0].input_ids[2], v.unk_id());
  EXPECT_TRUE(validate_example(out[0], v).empty());
}

TEST(BatchEncode, ErrorNamesReview) {
  try {
    batch_encode({{"good", std::nullopt}}, test::toy_vocab(), 1);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("review 0"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace bertsa
