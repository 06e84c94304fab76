#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bertsa/vocab.hpp"

namespace bertsa {

// Vocabulary pieces; continuation pieces carry the "##" prefix.
using TokenSequence = std::vector<std::string>;

inline constexpr std::size_t kMaxCharsPerWord = 100;

// Uncased basic tokenization: drops control characters, lowercases, strips
// accents, splits on whitespace and makes every punctuation character its
// own token. Invalid UTF-8 bytes are dropped.
std::vector<std::string> basic_tokenize(std::string_view text);

// Greedy longest-match-first segmentation of one basic token. Words longer
// than kMaxCharsPerWord codepoints, or with no full segmentation, become [UNK].
TokenSequence wordpiece_tokenize(std::string_view word, const Vocabulary& vocab);

TokenSequence tokenize_review(std::string_view text, const Vocabulary& vocab);

}  // namespace bertsa
