#pragma once

#include <array>
#include <cstdint>

namespace bertsa::unicode {

struct CodepointRange {
  char32_t first;
  char32_t last;
};

// Lowercased, decomposed, mark-stripped replacement for one codepoint.
struct FoldEntry {
  char32_t codepoint;
  std::uint8_t length;
  char32_t replacement[3];
};

extern const std::array<CodepointRange, 180> kPunctuation;
extern const std::array<CodepointRange, 9> kWhitespace;
extern const std::array<CodepointRange, 22> kControl;
extern const std::array<CodepointRange, 326> kNonspacingMark;
extern const std::array<FoldEntry, 3056> kFold;

}  // namespace bertsa::unicode
