#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bertsa::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Malformed sequences decode to kReplacement, one per offending byte.
std::u32string decode(std::string_view bytes);
void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

}  // namespace bertsa::utf8
