#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "bertsa/error.hpp"
#include "bertsa/evaluator.hpp"
#include "bertsa/gradient_check.hpp"
#include "support.hpp"

namespace bertsa {
namespace {

constexpr auto kPos = SentimentLabel::kPositive;
constexpr auto kNeg = SentimentLabel::kNegative;

TEST(Argmax, LargerLogitWins) {
  EXPECT_EQ(argmax_class<double>(RowVector<double>{{0.2, 0.9}}), class_index(kPos));
  EXPECT_EQ(argmax_class<double>(RowVector<double>{{1.5, -0.9}}), class_index(kNeg));
}

TEST(Argmax, TieGoesToNegative) {
  EXPECT_EQ(argmax_class<double>(RowVector<double>{{0.0, 0.0}}), class_index(kNeg));
}

TEST(Predict, AlignedWithInputAndPure) {
  const auto config = test::tiny_config(12);
  auto model = make_model<double>(config, 2);
  test::randomize(model.params, 3, 1.0);
  const auto examples = random_examples(config, 30, 4);
  const auto predictions = predict(model, examples);
  ASSERT_EQ(predictions.size(), examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const int expected = argmax_class(forward_logits(model, examples[i]));
    EXPECT_EQ(class_index(predictions[i]), expected) << i;
  }
  EXPECT_EQ(predict(model, examples), predictions);
  const std::vector<EncodedExample> reversed(examples.rbegin(), examples.rend());
  const auto backwards = predict(model, reversed);
  EXPECT_TRUE(std::equal(predictions.begin(), predictions.end(), backwards.rbegin()));
}

TEST(Accuracy, Bounds) {
  const std::vector<SentimentLabel> gold{kPos, kNeg, kPos, kPos};
  EXPECT_EQ(accuracy(gold, gold), 100.0);
  std::vector<SentimentLabel> complement;
  for (auto g : gold) complement.push_back(g == kPos ? kNeg : kPos);
  EXPECT_EQ(accuracy(complement, gold), 0.0);
}

TEST(Accuracy, HalfCorrect) {
  std::vector<SentimentLabel> gold(100, kPos), pred(100, kPos);
  std::fill(pred.begin(), pred.begin() + 50, kNeg);
  EXPECT_EQ(accuracy(pred, gold), 50.0);
  EXPECT_EQ(format_accuracy(accuracy(pred, gold)), "50.00");
  EXPECT_EQ(format_accuracy(2.0 / 3.0 * 100.0), "66.67");
}

TEST(Accuracy, Errors) {
  const std::vector<SentimentLabel> a{kPos}, b{kPos, kNeg}, empty;
  EXPECT_THROW(accuracy(a, b), DataError);
  EXPECT_THROW(accuracy(empty, empty), DataError);
}

TEST(Accuracy, JointPermutationInvariant) {
  std::mt19937_64 rng(1);
  std::bernoulli_distribution coin(0.5);
  std::vector<SentimentLabel> pred, gold;
  for (int i = 0; i < 57; ++i) {
    pred.push_back(coin(rng) ? kPos : kNeg);
    gold.push_back(coin(rng) ? kPos : kNeg);
  }
  const double base = accuracy(pred, gold);
  EXPECT_GE(base, 0.0);
  EXPECT_LE(base, 100.0);
  std::vector<std::size_t> idx(pred.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (int t = 0; t < 10; ++t) {
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<SentimentLabel> p2, g2;
    for (auto i : idx) {
      p2.push_back(pred[i]);
      g2.push_back(gold[i]);
    }
    EXPECT_EQ(accuracy(p2, g2), base);
  }
}

TEST(PredictionFile, OneLinePerReview) {
  test::TempDir dir;
  const std::vector<SentimentLabel> p{kNeg, kPos, kPos};
  write_predictions(dir / "p.tsv", p);
  EXPECT_EQ(test::read_file(dir / "p.tsv"), "0\tnegative\n1\tpositive\n2\tpositive\n");
}

TEST(GoldLabels, RequiresLabels) {
  EncodedExample ex;
  EXPECT_THROW(gold_labels(std::vector<EncodedExample>{ex}), DataError);
}

}  // namespace
}  // namespace bertsa
