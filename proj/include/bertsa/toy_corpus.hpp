#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bertsa/corpus.hpp"

namespace bertsa {

// Synthetic keyword corpus: sentiment is decided by which of two disjoint
// keyword sets a review draws from; everything else is shared filler.
struct ToyCorpus {
  std::vector<std::string> vocabulary;  // specials first, 60 entries by default
  std::vector<std::string> positive_words;
  std::vector<std::string> negative_words;
  DatasetSplit split;
};

struct ToyCorpusOptions {
  std::size_t train_size = 500;
  std::size_t test_size = 100;
  std::size_t keywords_per_class = 8;
  std::size_t filler_words = 40;
  std::size_t min_words = 4;
  std::size_t max_words = 10;
  std::size_t max_keywords = 3;
  std::uint64_t seed = 2024;
};

ToyCorpus make_toy_corpus(const ToyCorpusOptions& options = {});

}  // namespace bertsa
