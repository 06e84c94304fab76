#include "bertsa/toy_corpus.hpp"

#include <algorithm>
#include <random>

#include "bertsa/error.hpp"
#include "bertsa/vocab.hpp"

namespace bertsa {

namespace {

std::string word(char prefix, std::size_t i) {
  // letters only, so basic tokenization keeps each word whole
  std::string w(1, prefix);
  w += static_cast<char>('a' + i / 26);
  w += static_cast<char>('a' + i % 26);
  return w;
}

}  // namespace

ToyCorpus make_toy_corpus(const ToyCorpusOptions& o) {
  if (o.min_words < 1 || o.max_words < o.min_words || o.max_keywords < 1 || o.max_keywords > o.min_words) {
    throw ConfigError("toy corpus: need 1 <= max_keywords <= min_words <= max_words");
  }
  ToyCorpus toy;
  toy.vocabulary = {std::string(kPadToken), std::string(kUnkToken), std::string(kClsToken), std::string(kSepToken)};
  std::vector<std::string> filler;
  for (std::size_t i = 0; i < o.keywords_per_class; ++i) toy.positive_words.push_back(word('p', i));
  for (std::size_t i = 0; i < o.keywords_per_class; ++i) toy.negative_words.push_back(word('n', i));
  for (std::size_t i = 0; i < o.filler_words; ++i) filler.push_back(word('f', i));
  for (const auto* group : {&toy.positive_words, &toy.negative_words, &filler}) {
    toy.vocabulary.insert(toy.vocabulary.end(), group->begin(), group->end());
  }

  std::mt19937_64 rng(o.seed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> length(o.min_words, o.max_words);
  std::uniform_int_distribution<std::size_t> keyword_count(1, o.max_keywords);
  std::uniform_int_distribution<std::size_t> pick_keyword(0, o.keywords_per_class - 1);
  std::uniform_int_distribution<std::size_t> pick_filler(0, o.filler_words - 1);

  auto make = [&](std::size_t n, std::vector<ReviewRecord>& out) {
    for (std::size_t r = 0; r < n; ++r) {
      const bool positive = coin(rng);
      const auto& keywords = positive ? toy.positive_words : toy.negative_words;
      const std::size_t len = length(rng);
      std::vector<std::string> words;
      const std::size_t num_keywords = keyword_count(rng);
      for (std::size_t i = 0; i < num_keywords; ++i) words.push_back(keywords[pick_keyword(rng)]);
      while (words.size() < len) words.push_back(filler[pick_filler(rng)]);
      std::shuffle(words.begin(), words.end(), rng);
      std::string text;
      for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
      out.push_back({std::move(text), positive ? SentimentLabel::kPositive : SentimentLabel::kNegative, "toy"});
    }
  };
  make(o.train_size, toy.split.train);
  make(o.test_size, toy.split.test);
  return toy;
}

}  // namespace bertsa
