#include <cstdlib>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "bertsa/corpus.hpp"
#include "bertsa/toy_corpus.hpp"
#include "cli.hpp"
#include "manifest.hpp"
#include "support.hpp"

namespace bertsa::cli {
namespace {

using test::TempDir;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

// Writes the toy corpus files into `dir`.
void write_toy(const TempDir& dir) {
  const auto r = run_cli({"make-toy", "--out-dir", dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
}

std::vector<std::string> tiny_train_args(const TempDir& dir, const std::string& out_dir) {
  return {"train",    "--train",   (dir / "train.tsv").string(), "--test",  (dir / "test.tsv").string(),
          "--vocab",  (dir / "vocab.txt").string(), "--preset", "tiny", "--max-len", "16", "--epochs", "3",
          "--out-dir", (dir / out_dir).string()};
}

TEST(CliAggregate, PaperExamples) {
  EXPECT_EQ(run_cli({"aggregate", "--pos", "50", "--neg", "52", "--mode", "binary"}).out, "neutral\n");
  EXPECT_EQ(run_cli({"aggregate", "--pos", "0", "--neg", "0", "--mode", "binary"}).out, "neutral\n");
  EXPECT_EQ(run_cli({"aggregate", "--pos", "60", "--neg", "30", "--neu", "10", "--mode", "ternary"}).out,
            "positive\n");
  EXPECT_EQ(run_cli({"aggregate", "--pos", "299609", "--neg", "46287"}).out, "positive\n");
  EXPECT_EQ(run_cli({"aggregate", "--pos", "10", "--neg", "30"}).out, "negative\n");
}

TEST(CliAggregate, NeutralCountsInBinaryMode) {
  const auto r = run_cli({"aggregate", "--pos", "5", "--neg", "3", "--neu", "1", "--mode", "binary"});
  EXPECT_EQ(r.code, kData);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("neutral"), std::string::npos);
}

TEST(CliAggregate, PredictionFile) {
  TempDir dir;
  test::write_file(dir / "p.tsv", "0\tpositive\n1\tpositive\n2\tnegative\n3\tneutral\n");
  EXPECT_EQ(run_cli({"aggregate", "--predictions", (dir / "p.tsv").string(), "--mode", "ternary"}).out,
            "positive\n");
  EXPECT_EQ(run_cli({"aggregate", "--predictions", (dir / "p.tsv").string()}).code, kData);
  test::write_file(dir / "q.tsv", "0\tmaybe\n");
  EXPECT_EQ(run_cli({"aggregate", "--predictions", (dir / "q.tsv").string()}).code, kData);
  EXPECT_EQ(read_prediction_counts((dir / "p.tsv").string()), (PolarityCounts{2, 1, 1}));
}

TEST(CliAggregate, CoefficientOverrides) {
  EXPECT_EQ(run_cli({"aggregate", "--pos", "13", "--neg", "10"}).out, "positive\n");
  EXPECT_EQ(run_cli({"aggregate", "--pos", "13", "--neg", "10", "--binary-coefficient", "1.3"}).out, "neutral\n");
  EXPECT_EQ(run_cli({"aggregate", "--pos", "13", "--neg", "10", "--binary-coefficient", "0.9"}).code, kUsage);
}

TEST(CliUsage, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
  EXPECT_EQ(run_cli({"aggregate", "--pos", "x"}).code, kUsage);
  EXPECT_EQ(run_cli({"aggregate", "--pos", "1", "--neg", "1", "--mode", "quaternary"}).code, kUsage);
}

TEST(CliTokenize, ReportsCountAndTruncation) {
  TempDir dir;
  write_toy(dir);
  const auto r = run_cli({"tokenize", "--vocab", (dir / "vocab.txt").string(), "--input",
                          (dir / "test.tsv").string(), "--max-len", "16", "--output", (dir / "enc.tsv").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("encoded 100 examples"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("truncated 0 (0.00%)"), std::string::npos) << r.out;
  EXPECT_EQ(read_encoded(dir / "enc.tsv").size(), 100u);
}

TEST(CliTokenize, MissingVocabulary) {
  TempDir dir;
  write_toy(dir);
  const auto r = run_cli({"tokenize", "--vocab", (dir / "absent.txt").string(), "--input",
                          (dir / "test.tsv").string()});
  EXPECT_NE(r.code, kOk);
  EXPECT_NE(r.err.find("missing file"), std::string::npos) << r.err;
}

TEST(CliTokenize, MinimumLengthTruncatesEverything) {
  TempDir dir;
  write_toy(dir);
  const auto r = run_cli({"tokenize", "--vocab", (dir / "vocab.txt").string(), "--input",
                          (dir / "test.tsv").string(), "--max-len", "2", "--output", (dir / "enc.tsv").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("truncated 100 (100.00%)"), std::string::npos) << r.out;
  const Vocabulary v = load_vocab(dir / "vocab.txt");
  for (const auto& ex : read_encoded(dir / "enc.tsv")) {
    EXPECT_EQ(ex.input_ids, (std::vector<TokenId>{v.cls_id(), v.sep_id()}));
  }
}

TEST(CliTokenize, VocabularyFromEnvironment) {
  TempDir dir;
  write_toy(dir);
  ::setenv(kVocabEnv, (dir / "vocab.txt").c_str(), 1);
  const auto r = run_cli({"tokenize", "--input", (dir / "test.tsv").string(), "--max-len", "8"});
  ::unsetenv(kVocabEnv);
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(run_cli({"tokenize", "--input", (dir / "test.tsv").string()}).code, kUsage);
}

TEST(CliTokenize, AmazonScores) {
  TempDir dir;
  test::write_file(dir / "a.tsv", "5\tgood film\n3\tthe film\n1\tbad film\n");
  const auto r = run_cli({"tokenize", "--vocab", (test::data_dir() / "toy_vocab.txt").string(), "--input",
                          (dir / "a.tsv").string(), "--format", "amazon", "--max-len", "6", "--output",
                          (dir / "e.tsv").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto ex = read_encoded(dir / "e.tsv");
  ASSERT_EQ(ex.size(), 2u);
  EXPECT_EQ(*ex[0].label, SentimentLabel::kPositive);
  EXPECT_EQ(*ex[1].label, SentimentLabel::kNegative);
}

TEST(CliTrain, PaperDefaultsInManifest) {
  TempDir dir;
  test::write_file(dir / "train.tsv", "1\tgood film\n0\tbad film\n");
  const auto r = run_cli({"train", "--train", (dir / "train.tsv").string(), "--vocab",
                          (test::data_dir() / "toy_vocab.txt").string(), "--out-dir", (dir / "run").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto m = read_manifest(dir / "run" / "manifest.json");
  EXPECT_EQ(m.train.learning_rate, 3e-5);
  EXPECT_EQ(m.train.adam_epsilon, 1e-8);
  EXPECT_EQ(m.train.epochs, 10);
  EXPECT_EQ(m.model.sequence_length, 256);
  EXPECT_EQ(m.aggregator, AggregatorConfig{});
  EXPECT_EQ(count_lines(r.out), 11u);
  EXPECT_EQ(count_lines(test::read_file(dir / "run" / "metrics.tsv")), 10u);
  const std::string text = test::read_file(dir / "run" / "manifest.json");
  EXPECT_NE(text.find("\"learning_rate\": 3e-05"), std::string::npos) << text;
  EXPECT_NE(text.find("\"adam_epsilon\": 1e-08"), std::string::npos) << text;
}

TEST(CliTrain, SameSeedSameCheckpoint) {
  TempDir dir;
  write_toy(dir);
  ASSERT_EQ(run_cli(tiny_train_args(dir, "a")).code, kOk);
  ASSERT_EQ(run_cli(tiny_train_args(dir, "b")).code, kOk);
  const auto a = test::read_file(dir / "a" / "checkpoint.bin");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, test::read_file(dir / "b" / "checkpoint.bin"));
  EXPECT_EQ(test::read_file(dir / "a" / "metrics.tsv"), test::read_file(dir / "b" / "metrics.tsv"));

  auto other = tiny_train_args(dir, "c");
  other.insert(other.end(), {"--seed", "7"});
  ASSERT_EQ(run_cli(other).code, kOk);
  EXPECT_NE(a, test::read_file(dir / "c" / "checkpoint.bin"));
}

TEST(CliTrain, ManifestReproducesRun) {
  TempDir dir;
  write_toy(dir);
  auto args = tiny_train_args(dir, "a");
  args.insert(args.end(), {"--seed", "99", "--lr", "0.001"});
  ASSERT_EQ(run_cli(args).code, kOk);
  const auto r = run_cli({"train", "--manifest", (dir / "a" / "manifest.json").string(), "--out-dir",
                          (dir / "b").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(test::read_file(dir / "a" / "checkpoint.bin"), test::read_file(dir / "b" / "checkpoint.bin"));
  const auto m = read_manifest(dir / "b" / "manifest.json");
  EXPECT_EQ(m.train.seed, 99u);
  EXPECT_EQ(m.train.learning_rate, 0.001);
}

TEST(CliTrain, EncodedInput) {
  TempDir dir;
  write_toy(dir);
  for (const char* split : {"train", "test"}) {
    ASSERT_EQ(run_cli({"tokenize", "--vocab", (dir / "vocab.txt").string(), "--input",
                       (dir / (std::string(split) + ".tsv")).string(), "--max-len", "16", "--output",
                       (dir / (std::string(split) + ".enc")).string()})
                  .code,
              kOk);
  }
  auto raw = tiny_train_args(dir, "raw");
  ASSERT_EQ(run_cli(raw).code, kOk);
  auto enc = tiny_train_args(dir, "enc");
  enc[2] = (dir / "train.enc").string();
  enc[4] = (dir / "test.enc").string();
  ASSERT_EQ(run_cli(enc).code, kOk);
  EXPECT_EQ(test::read_file(dir / "raw" / "checkpoint.bin"), test::read_file(dir / "enc" / "checkpoint.bin"));
}

TEST(CliTrain, RejectsBadConfiguration) {
  TempDir dir;
  write_toy(dir);
  auto args = tiny_train_args(dir, "a");
  args.insert(args.end(), {"--epochs", "0"});
  EXPECT_EQ(run_cli(args).code, kUsage);
  args = tiny_train_args(dir, "b");
  args.insert(args.end(), {"--heads", "3"});
  EXPECT_EQ(run_cli(args).code, kUsage);
  EXPECT_EQ(run_cli({"train", "--out-dir", (dir / "c").string(), "--vocab", (dir / "vocab.txt").string()}).code,
            kUsage);
  args = tiny_train_args(dir, "d");
  args[2] = (dir / "missing.tsv").string();
  EXPECT_EQ(run_cli(args).code, kData);
}

TEST(CliTrain, DivergenceExitCode) {
  TempDir dir;
  write_toy(dir);
  auto args = tiny_train_args(dir, "a");
  args.insert(args.end(), {"--lr", "1e300"});
  const auto r = run_cli(args);
  EXPECT_EQ(r.code, kDivergence) << r.out << r.err;
  EXPECT_NE(r.err.find("diverged"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "a" / "checkpoint.bin"));
}

class CliEvaluate : public ::testing::Test {
 protected:
  void SetUp() override {
    write_toy(dir);
    ASSERT_EQ(run_cli(tiny_train_args(dir, "run")).code, kOk);
    checkpoint = (dir / "run" / "checkpoint.bin").string();
  }

  TempDir dir;
  std::string checkpoint;
};

TEST_F(CliEvaluate, AccuracyWithTwoDecimals) {
  const auto r = run_cli({"eval", "--checkpoint", checkpoint, "--input", (dir / "test.tsv").string(), "--vocab",
                          (dir / "vocab.txt").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(std::regex_match(r.out, std::regex("accuracy: \\d{1,3}\\.\\d\\d\n"))) << r.out;
}

TEST_F(CliEvaluate, PredictionsAlignWithInput) {
  const auto r = run_cli({"predict", "--checkpoint", checkpoint, "--input", (dir / "test.tsv").string(), "--vocab",
                          (dir / "vocab.txt").string(), "--output", (dir / "pred.tsv").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string text = test::read_file(dir / "pred.tsv");
  EXPECT_EQ(count_lines(text), 100u);
  EXPECT_EQ(text.rfind("0\t", 0), 0u);
  const auto agg = run_cli({"aggregate", "--predictions", (dir / "pred.tsv").string()});
  EXPECT_EQ(agg.code, kOk);
  EXPECT_TRUE(agg.out == "positive\n" || agg.out == "negative\n" || agg.out == "neutral\n");
}

TEST_F(CliEvaluate, SequenceLengthMismatch) {
  ASSERT_EQ(run_cli({"tokenize", "--vocab", (dir / "vocab.txt").string(), "--input", (dir / "test.tsv").string(),
                     "--max-len", "8", "--output", (dir / "k8.enc").string()})
                .code,
            kOk);
  const auto r = run_cli({"eval", "--checkpoint", checkpoint, "--input", (dir / "k8.enc").string()});
  EXPECT_EQ(r.code, kData);
  EXPECT_NE(r.err.find("mismatch"), std::string::npos) << r.err;
}

TEST_F(CliEvaluate, VocabularyMismatch) {
  const auto r = run_cli({"eval", "--checkpoint", checkpoint, "--input", (dir / "test.tsv").string(), "--vocab",
                          (test::data_dir() / "toy_vocab.txt").string()});
  EXPECT_EQ(r.code, kData);
  EXPECT_NE(r.err.find("mismatch"), std::string::npos) << r.err;
}

TEST(Manifest, JsonRoundTrip) {
  RunManifest m;
  m.command = "train";
  m.model = model_preset("desk");
  m.model.encoder.vocab_size = 77;
  m.train.seed = 123456789012345ULL;
  m.aggregator.neutral_fraction = {9, 10};
  m.inputs = {{"train", "a.tsv"}};
  m.artifacts = {{"checkpoint", "c.bin"}};
  const auto back = manifest_from_json(nlohmann::json::parse(to_json(m).dump()));
  EXPECT_EQ(back.model, m.model);
  EXPECT_EQ(back.train, m.train);
  EXPECT_EQ(back.aggregator, m.aggregator);
  EXPECT_EQ(back.inputs, m.inputs);
  EXPECT_EQ(back.artifacts, m.artifacts);
  EXPECT_THROW(manifest_from_json(nlohmann::json::parse(R"({"model": 3})")), ConfigError);
}

}  // namespace
}  // namespace bertsa::cli
