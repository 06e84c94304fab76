#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "bertsa/checkpoint.hpp"
#include "bertsa/corpus.hpp"
#include "bertsa/error.hpp"
#include "bertsa/evaluator.hpp"
#include "bertsa/gradient_check.hpp"
#include "bertsa/polarity.hpp"
#include "bertsa/toy_corpus.hpp"
#include "bertsa/trainer.hpp"
#include "manifest.hpp"

namespace bertsa::cli {

namespace fs = std::filesystem;

namespace {

// Raw review input layouts.
enum class InputFormat { kCanonical, kAmazon };

struct DataOptions {
  std::string vocab;
  std::string format = "canonical";

  InputFormat input_format() const {
    if (format == "canonical") return InputFormat::kCanonical;
    if (format == "amazon") return InputFormat::kAmazon;
    throw ConfigError("unknown --format '" + format + "' (expected canonical or amazon)");
  }

  std::string resolved_vocab() const {
    if (!vocab.empty()) return vocab;
    if (const char* env = std::getenv(kVocabEnv)) return env;
    throw ConfigError(std::string("no vocabulary given: pass --vocab or set ") + kVocabEnv);
  }
};

void add_data_options(CLI::App* cmd, DataOptions& data) {
  cmd->add_option("--vocab", data.vocab, std::string("Vocabulary file (default: $") + kVocabEnv + ")");
  cmd->add_option("--format", data.format, "Raw input layout: canonical (label<TAB>text) or amazon (score<TAB>text)")
      ->capture_default_str();
}

std::vector<ReviewRecord> load_reviews(const std::string& path, InputFormat format) {
  if (format == InputFormat::kAmazon) return remap_amazon_scores(load_scored_tsv(path));
  return load_tsv(path);
}

// Encoded files are used as-is; raw review files are tokenized with `vocab`.
std::vector<EncodedExample> load_examples(const std::string& path, const DataOptions& data, const Vocabulary* vocab,
                                          int sequence_length) {
  if (!fs::exists(path)) throw DataError("missing file: " + path);
  if (is_encoded_file(path)) {
    auto examples = read_encoded(path);
    for (const auto& ex : examples) {
      if (static_cast<int>(ex.length()) != sequence_length) {
        throw DataError(fmt::format("sequence length mismatch: model expects K={}, {} was encoded with K={}",
                                    sequence_length, path, ex.length()));
      }
    }
    return examples;
  }
  if (vocab == nullptr) throw ConfigError("raw input " + path + " needs a vocabulary");
  const auto records = load_reviews(path, data.input_format());
  return batch_encode(to_labeled_text(records), *vocab, static_cast<std::size_t>(sequence_length));
}

void check_compatible(const std::vector<EncodedExample>& examples, const ModelConfig& config, const std::string& what) {
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const auto& ex = examples[i];
    if (static_cast<int>(ex.length()) != config.sequence_length) {
      throw DataError(fmt::format("{}: example {} has K={}, checkpoint expects K={}", what, i, ex.length(),
                                  config.sequence_length));
    }
    for (auto id : ex.input_ids) {
      if (id < 0 || id >= config.encoder.vocab_size) {
        throw DataError(fmt::format("{}: example {} uses token id {} outside the checkpoint vocabulary of size {}",
                                    what, i, id, config.encoder.vocab_size));
      }
    }
  }
}

std::string metrics_line(const EpochMetrics& m) {
  return fmt::format("{}\t{:.6f}\t{:.2f}\t{}", m.epoch, m.train_loss, m.train_accuracy,
                     m.test_accuracy ? format_accuracy(*m.test_accuracy) : std::string("nan"));
}

// ---------------------------------------------------------------------------

struct TokenizeArgs {
  DataOptions data;
  std::string input;
  std::string output;
  int max_len = static_cast<int>(kDefaultMaxSequenceLength);
};

int cmd_tokenize(const TokenizeArgs& args, std::ostream& out) {
  const Vocabulary vocab = load_vocab(args.data.resolved_vocab());
  if (args.max_len < 2) throw ConfigError("--max-len must be at least 2");
  const auto records = load_reviews(args.input, args.data.input_format());
  std::vector<EncodedExample> encoded;
  encoded.reserve(records.size());
  std::size_t truncated = 0;
  for (const auto& r : records) {
    const auto tokens = tokenize_review(r.text, vocab);
    if (tokens.size() > static_cast<std::size_t>(args.max_len - 2)) ++truncated;
    encoded.push_back(encode(tokens, vocab, static_cast<std::size_t>(args.max_len), r.label));
  }
  if (!args.output.empty()) write_encoded(args.output, encoded);
  const double pct = encoded.empty() ? 0.0 : 100.0 * static_cast<double>(truncated) / static_cast<double>(encoded.size());
  fmt::print(out, "encoded {} examples (K={}); truncated {} ({:.2f}%)\n", encoded.size(), args.max_len, truncated, pct);
  return kOk;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
  DataOptions data;
  std::string train;
  std::string test;
};

int cmd_stats(const StatsArgs& args, std::ostream& out) {
  DatasetSplit split;
  const auto format = args.data.input_format();
  if (!args.train.empty()) split.train = load_reviews(args.train, format);
  if (!args.test.empty()) split.test = load_reviews(args.test, format);
  const auto stats = split_stats(split);
  fmt::print(out, "split\tpositive\tnegative\n");
  fmt::print(out, "train\t{}\t{}\n", stats.train.positive, stats.train.negative);
  fmt::print(out, "test\t{}\t{}\n", stats.test.positive, stats.test.negative);
  return kOk;
}

// ---------------------------------------------------------------------------

struct TrainArgs {
  DataOptions data;
  std::string train;
  std::string test;
  std::string out_dir;
  std::string preset = "paper";
  std::string manifest;
  std::optional<int> max_len, max_position, layers, hidden, heads, ffn, lstm_hidden, frozen_layers;
  std::optional<int> epochs, batch_size;
  std::optional<double> lr, epsilon, beta1, beta2, init_stddev;
  std::optional<std::uint64_t> seed;
};

template <typename T>
void apply(const std::optional<T>& value, T& target) {
  if (value) target = *value;
}

RunManifest resolve_train(const TrainArgs& args) {
  RunManifest m;
  if (!args.manifest.empty()) {
    m = read_manifest(args.manifest);
  } else {
    m.model = model_preset(args.preset);
    m.train = train_preset(args.preset);
  }
  m.command = "train";
  apply(args.max_len, m.model.sequence_length);
  apply(args.max_position, m.model.encoder.max_position);
  if (!args.max_position) m.model.encoder.max_position = std::max(m.model.encoder.max_position, m.model.sequence_length);
  apply(args.layers, m.model.encoder.num_layers);
  apply(args.hidden, m.model.encoder.hidden_size);
  apply(args.heads, m.model.encoder.num_heads);
  apply(args.ffn, m.model.encoder.ffn_size);
  apply(args.lstm_hidden, m.model.head.lstm_hidden_size);
  apply(args.frozen_layers, m.model.encoder.num_frozen_layers);
  if (!args.frozen_layers) {
    m.model.encoder.num_frozen_layers = std::min(m.model.encoder.num_frozen_layers, m.model.encoder.num_layers);
  }
  apply(args.init_stddev, m.model.init_stddev);
  apply(args.epochs, m.train.epochs);
  apply(args.batch_size, m.train.batch_size);
  apply(args.lr, m.train.learning_rate);
  apply(args.epsilon, m.train.adam_epsilon);
  apply(args.beta1, m.train.adam_beta1);
  apply(args.beta2, m.train.adam_beta2);
  apply(args.seed, m.train.seed);

  auto input = [&](const char* key, const std::string& flag) {
    if (!flag.empty()) {
      m.inputs[key] = flag;
    }
  };
  input("train", args.train);
  input("test", args.test);
  if (!args.data.vocab.empty() || !m.inputs.contains("vocab")) m.inputs["vocab"] = args.data.resolved_vocab();
  input("format", args.data.format);
  if (!m.inputs.contains("train")) throw ConfigError("--train is required");
  return m;
}

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err) {
  RunManifest m = resolve_train(args);
  DataOptions data;
  data.vocab = m.inputs.at("vocab");
  data.format = m.inputs.contains("format") ? m.inputs.at("format") : "canonical";
  const Vocabulary vocab = load_vocab(data.vocab);
  m.model.encoder.vocab_size = static_cast<int>(vocab.size());
  m.model.validate();
  m.train.validate();

  const auto train_set = load_examples(m.inputs.at("train"), data, &vocab, m.model.sequence_length);
  std::vector<EncodedExample> test_set;
  if (m.inputs.contains("test")) test_set = load_examples(m.inputs.at("test"), data, &vocab, m.model.sequence_length);
  check_compatible(train_set, m.model, m.inputs.at("train"));
  if (!test_set.empty()) check_compatible(test_set, m.model, m.inputs.at("test"));

  const fs::path dir = args.out_dir;
  fs::create_directories(dir);
  const fs::path checkpoint_path = dir / "checkpoint.bin";
  const fs::path metrics_path = dir / "metrics.tsv";
  const fs::path manifest_path = dir / "manifest.json";
  m.artifacts = {{"checkpoint", checkpoint_path.string()},
                 {"metrics", metrics_path.string()},
                 {"manifest", manifest_path.string()}};
  write_manifest(manifest_path, m);

  std::ofstream metrics(metrics_path, std::ios::binary);
  if (!metrics) throw DataError("cannot write " + metrics_path.string());
  auto model = make_model<float>(m.model, m.train.seed);
  const auto result = train<float>(model, train_set, test_set, m.train, [&](const EpochMetrics& em) {
    const std::string line = metrics_line(em);
    out << line << '\n';
    metrics << line << '\n';
  });
  save_checkpoint(checkpoint_path, m.model, model.params);
  if (result.status == TrainStatus::kDiverged) {
    fmt::print(err, "error: training diverged ({}); wrote last good checkpoint to {}\n", result.message,
               checkpoint_path.string());
    return kDivergence;
  }
  fmt::print(out, "checkpoint: {}\n", checkpoint_path.string());
  return kOk;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  DataOptions data;
  std::string checkpoint;
  std::string input;
  std::string output;
};

std::vector<EncodedExample> eval_examples(const EvalArgs& args, const Checkpoint& ckpt) {
  std::optional<Vocabulary> vocab;
  if (!is_encoded_file(args.input)) {
    vocab.emplace(load_vocab(args.data.resolved_vocab()));
    if (static_cast<int>(vocab->size()) != ckpt.config.encoder.vocab_size) {
      throw DataError(fmt::format("vocabulary mismatch: {} entries, checkpoint was trained with {}", vocab->size(),
                                  ckpt.config.encoder.vocab_size));
    }
  }
  auto examples = load_examples(args.input, args.data, vocab ? &*vocab : nullptr, ckpt.config.sequence_length);
  check_compatible(examples, ckpt.config, args.input);
  return examples;
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  const Checkpoint ckpt = load_checkpoint(args.checkpoint);
  const auto examples = eval_examples(args, ckpt);
  const SentimentModel<float> model{ckpt.config, ckpt.params};
  fmt::print(out, "accuracy: {}\n", format_accuracy(evaluate_accuracy(model, examples)));
  return kOk;
}

int cmd_predict(const EvalArgs& args, std::ostream& out) {
  const Checkpoint ckpt = load_checkpoint(args.checkpoint);
  const auto examples = eval_examples(args, ckpt);
  const SentimentModel<float> model{ckpt.config, ckpt.params};
  const auto predictions = predict(model, examples);
  write_predictions(args.output, predictions);
  fmt::print(out, "wrote {} predictions to {}\n", predictions.size(), args.output);
  return kOk;
}

// ---------------------------------------------------------------------------

struct AggregateArgs {
  std::string predictions;
  std::optional<std::uint64_t> pos, neg, neu;
  std::string mode = "binary";
  std::string binary_coefficient = "1.2";
  std::string ternary_coefficient = "1.5";
  std::string neutral_fraction = "0.85";
};

int cmd_aggregate(const AggregateArgs& args, std::ostream& out) {
  if (args.mode != "binary" && args.mode != "ternary") {
    throw ConfigError("--mode must be binary or ternary");
  }
  AggregatorConfig config;
  config.binary_coefficient = Ratio::parse(args.binary_coefficient);
  config.ternary_coefficient = Ratio::parse(args.ternary_coefficient);
  config.neutral_fraction = Ratio::parse(args.neutral_fraction);
  config.validate();

  PolarityCounts counts;
  if (!args.predictions.empty()) {
    if (args.pos || args.neg || args.neu) throw ConfigError("use either --predictions or explicit counts");
    counts = read_prediction_counts(args.predictions);
  } else {
    if (!args.pos || !args.neg) throw ConfigError("give --predictions or both --pos and --neg");
    counts = {*args.pos, *args.neg, args.neu.value_or(0)};
  }
  const auto verdict =
      args.mode == "binary" ? overall_polarity_binary(counts, config) : overall_polarity_ternary(counts, config);
  out << verdict_name(verdict) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

struct GradcheckArgs {
  std::string preset = "tiny";
  int vocab_size = 12;
  double tolerance = 1e-4;
  std::uint64_t seed = 7;
};

int cmd_gradcheck(const GradcheckArgs& args, std::ostream& out) {
  ModelConfig config = model_preset(args.preset);
  config.encoder.vocab_size = args.vocab_size;
  GradientCheckOptions options;
  options.tolerance = args.tolerance;
  options.seed = args.seed;
  const auto report = gradient_check(config, options);
  for (const auto& a : report.arrays) {
    fmt::print(out, "{}\t{}\t{:.3e}\t{}\n", a.name, a.count, a.max_relative_error, a.passed ? "ok" : "FAIL");
  }
  fmt::print(out, "max relative error {:.3e} over {} scalars: {}\n", report.max_relative_error, report.num_checked,
             report.passed ? "PASS" : "FAIL");
  return report.passed ? kOk : kDivergence;
}

// ---------------------------------------------------------------------------

struct ToyArgs {
  std::string out_dir;
  std::uint64_t seed = 2024;
};

int cmd_make_toy(const ToyArgs& args, std::ostream& out) {
  ToyCorpusOptions options;
  options.seed = args.seed;
  const auto toy = make_toy_corpus(options);
  const fs::path dir = args.out_dir;
  fs::create_directories(dir);
  {
    std::ofstream vocab(dir / "vocab.txt", std::ios::binary);
    for (const auto& t : toy.vocabulary) vocab << t << '\n';
    if (!vocab) throw DataError("cannot write " + (dir / "vocab.txt").string());
  }
  write_tsv(dir / "train.tsv", toy.split.train);
  write_tsv(dir / "test.tsv", toy.split.test);
  fmt::print(out, "wrote {} ({} tokens), {} ({} reviews), {} ({} reviews)\n", (dir / "vocab.txt").string(),
             toy.vocabulary.size(), (dir / "train.tsv").string(), toy.split.train.size(), (dir / "test.tsv").string(),
             toy.split.test.size());
  return kOk;
}

}  // namespace

PolarityCounts read_prediction_counts(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("missing file: cannot open predictions " + path);
  PolarityCounts counts;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const std::string label = tab == std::string::npos ? line : line.substr(tab + 1);
    if (label == "positive") {
      ++counts.positives;
    } else if (label == "negative") {
      ++counts.negatives;
    } else if (label == "neutral") {
      ++counts.neutrals;
    } else {
      throw DataError(fmt::format("{}:{}: unknown prediction label '{}'", path, line_number, label));
    }
  }
  return counts;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sentiment classification with a transformer encoder and BiLSTM head", "bertsa"};
  app.require_subcommand(1);

  TokenizeArgs tok;
  auto* tokenize = app.add_subcommand("tokenize", "Encode a review file into fixed-length model inputs");
  add_data_options(tokenize, tok.data);
  tokenize->add_option("--input", tok.input, "Review file")->required();
  tokenize->add_option("--output", tok.output, "Encoded dataset to write");
  tokenize->add_option("--max-len", tok.max_len, "Sequence length K")->capture_default_str();

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Per-class counts of a train/test split");
  stats->add_option("--format", st.data.format, "canonical or amazon")->capture_default_str();
  stats->add_option("--train", st.train, "Training review file");
  stats->add_option("--test", st.test, "Test review file");

  TrainArgs tr;
  auto* train_cmd = app.add_subcommand("train", "Train a model and write checkpoint, manifest and metrics");
  add_data_options(train_cmd, tr.data);
  tr.data.format.clear();
  train_cmd->add_option("--train", tr.train, "Training data (raw or encoded)");
  train_cmd->add_option("--test", tr.test, "Test data evaluated after every epoch");
  train_cmd->add_option("--out-dir", tr.out_dir, "Directory for checkpoint.bin, manifest.json, metrics.tsv")
      ->required();
  train_cmd->add_option("--preset", tr.preset, "paper, desk or tiny")->capture_default_str();
  train_cmd->add_option("--manifest", tr.manifest, "Re-run the configuration recorded in a manifest");
  train_cmd->add_option("--max-len", tr.max_len, "Sequence length K");
  train_cmd->add_option("--max-position", tr.max_position, "Rows of the position embedding");
  train_cmd->add_option("--layers", tr.layers, "Encoder layers");
  train_cmd->add_option("--hidden", tr.hidden, "Encoder hidden size H");
  train_cmd->add_option("--heads", tr.heads, "Attention heads");
  train_cmd->add_option("--ffn", tr.ffn, "Feed-forward size");
  train_cmd->add_option("--lstm-hidden", tr.lstm_hidden, "BiLSTM hidden size L");
  train_cmd->add_option("--frozen-layers", tr.frozen_layers, "Number of frozen encoder layers");
  train_cmd->add_option("--init-stddev", tr.init_stddev, "Weight initialization stddev");
  train_cmd->add_option("--epochs", tr.epochs, "Training epochs");
  train_cmd->add_option("--batch-size", tr.batch_size, "Mini-batch size");
  train_cmd->add_option("--lr", tr.lr, "Adam learning rate");
  train_cmd->add_option("--epsilon", tr.epsilon, "Adam epsilon");
  train_cmd->add_option("--beta1", tr.beta1, "Adam beta1");
  train_cmd->add_option("--beta2", tr.beta2, "Adam beta2");
  train_cmd->add_option("--seed", tr.seed, "Seed for initialization and shuffling");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Accuracy of a checkpoint on labeled data");
  add_data_options(eval, ev.data);
  eval->add_option("--checkpoint", ev.checkpoint, "Checkpoint file")->required();
  eval->add_option("--input", ev.input, "Labeled data (raw or encoded)")->required();

  EvalArgs pr;
  auto* predict_cmd = app.add_subcommand("predict", "Write one predicted label per review");
  add_data_options(predict_cmd, pr.data);
  predict_cmd->add_option("--checkpoint", pr.checkpoint, "Checkpoint file")->required();
  predict_cmd->add_option("--input", pr.input, "Reviews (raw or encoded)")->required();
  predict_cmd->add_option("--output", pr.output, "Prediction file to write")->required();

  AggregateArgs ag;
  auto* aggregate = app.add_subcommand("aggregate", "Overall polarity of a set of predictions");
  aggregate->add_option("--predictions", ag.predictions, "Prediction file (index<TAB>label)");
  aggregate->add_option("--pos", ag.pos, "Positive count");
  aggregate->add_option("--neg", ag.neg, "Negative count");
  aggregate->add_option("--neu", ag.neu, "Neutral count (ternary mode)");
  aggregate->add_option("--mode", ag.mode, "binary or ternary")->capture_default_str();
  aggregate->add_option("--binary-coefficient", ag.binary_coefficient)->capture_default_str();
  aggregate->add_option("--ternary-coefficient", ag.ternary_coefficient)->capture_default_str();
  aggregate->add_option("--neutral-fraction", ag.neutral_fraction)->capture_default_str();

  GradcheckArgs gc;
  auto* gradcheck = app.add_subcommand("gradcheck", "Compare analytic gradients with central differences");
  gradcheck->add_option("--preset", gc.preset)->capture_default_str();
  gradcheck->add_option("--vocab-size", gc.vocab_size)->capture_default_str();
  gradcheck->add_option("--tolerance", gc.tolerance)->capture_default_str();
  gradcheck->add_option("--seed", gc.seed)->capture_default_str();

  ToyArgs toy;
  auto* make_toy = app.add_subcommand("make-toy", "Write the synthetic keyword corpus and its vocabulary");
  make_toy->add_option("--out-dir", toy.out_dir)->required();
  make_toy->add_option("--seed", toy.seed)->capture_default_str();

  std::vector<const char*> argv{"bertsa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tokenize) return cmd_tokenize(tok, out);
    if (*stats) return cmd_stats(st, out);
    if (*train_cmd) return cmd_train(tr, out, err);
    if (*eval) return cmd_eval(ev, out);
    if (*predict_cmd) return cmd_predict(pr, out);
    if (*aggregate) return cmd_aggregate(ag, out);
    if (*gradcheck) return cmd_gradcheck(gc, out);
    if (*make_toy) return cmd_make_toy(toy, out);
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const DataError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kData;
  } catch (const DivergenceError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kDivergence;
  } catch (const fs::filesystem_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kData;
  }
  return kUsage;
}

}  // namespace bertsa::cli
