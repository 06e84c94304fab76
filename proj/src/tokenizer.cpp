#include "bertsa/tokenizer.hpp"

#include <algorithm>
#include <span>

#include "unicode_tables.hpp"
#include "utf8.hpp"

namespace bertsa {

namespace {

template <std::size_t N>
bool in_ranges(const std::array<unicode::CodepointRange, N>& table, char32_t cp) {
  auto it = std::upper_bound(table.begin(), table.end(), cp,
                             [](char32_t c, const unicode::CodepointRange& r) { return c < r.first; });
  return it != table.begin() && cp <= std::prev(it)->last;
}

bool is_punctuation(char32_t cp) { return in_ranges(unicode::kPunctuation, cp); }
bool is_whitespace(char32_t cp) { return in_ranges(unicode::kWhitespace, cp); }
bool is_control(char32_t cp) { return in_ranges(unicode::kControl, cp); }
bool is_nonspacing_mark(char32_t cp) { return in_ranges(unicode::kNonspacingMark, cp); }

void fold_into(std::u32string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(cp >= U'A' && cp <= U'Z' ? cp + 32 : cp);
    return;
  }
  if (is_nonspacing_mark(cp)) return;
  const auto& fold = unicode::kFold;
  auto it = std::lower_bound(fold.begin(), fold.end(), cp,
                             [](const unicode::FoldEntry& e, char32_t c) { return e.codepoint < c; });
  if (it != fold.end() && it->codepoint == cp) {
    for (std::uint8_t k = 0; k < it->length; ++k) out.push_back(it->replacement[k]);
  } else {
    out.push_back(cp);
  }
}

}  // namespace

std::vector<std::string> basic_tokenize(std::string_view text) {
  std::vector<std::string> words;
  std::u32string current;
  auto flush = [&] {
    if (!current.empty()) {
      words.push_back(utf8::encode(current));
      current.clear();
    }
  };
  std::u32string folded;
  for (char32_t cp : utf8::decode(text)) {
    if (cp == 0 || cp == utf8::kReplacement || is_control(cp)) continue;
    if (is_whitespace(cp)) {
      flush();
      continue;
    }
    folded.clear();
    fold_into(folded, cp);
    for (char32_t f : folded) {
      if (is_punctuation(f)) {
        flush();
        current.push_back(f);
        flush();
      } else {
        current.push_back(f);
      }
    }
  }
  flush();
  return words;
}

TokenSequence wordpiece_tokenize(std::string_view word, const Vocabulary& vocab) {
  const std::u32string chars = utf8::decode(word);
  if (chars.empty()) return {};
  if (chars.size() > kMaxCharsPerWord) return {std::string(kUnkToken)};

  TokenSequence pieces;
  std::size_t start = 0;
  std::string candidate;
  while (start < chars.size()) {
    std::size_t end = chars.size();
    bool found = false;
    while (start < end) {
      candidate = start > 0 ? "##" : "";
      candidate += utf8::encode(std::u32string_view(chars).substr(start, end - start));
      if (vocab.contains(candidate)) {
        found = true;
        break;
      }
      --end;
    }
    if (!found) return {std::string(kUnkToken)};
    pieces.push_back(candidate);
    start = end;
  }
  return pieces;
}

TokenSequence tokenize_review(std::string_view text, const Vocabulary& vocab) {
  TokenSequence out;
  for (const auto& word : basic_tokenize(text)) {
    auto pieces = wordpiece_tokenize(word, vocab);
    out.insert(out.end(), std::make_move_iterator(pieces.begin()), std::make_move_iterator(pieces.end()));
  }
  return out;
}

}  // namespace bertsa
