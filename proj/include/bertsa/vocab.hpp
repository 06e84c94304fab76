#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bertsa {

using TokenId = std::int32_t;

inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";
inline constexpr std::string_view kPadToken = "[PAD]";
inline constexpr std::string_view kUnkToken = "[UNK]";

// Token string <-> id bijection. Ids are line indices of the vocabulary file.
class Vocabulary {
 public:
  // Throws DataError on duplicates or missing special tokens.
  explicit Vocabulary(std::vector<std::string> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::string>& entries() const { return entries_; }

  bool contains(std::string_view token) const;
  // Id of `token`, or unk_id() when absent.
  TokenId id(std::string_view token) const;
  const std::string& token(TokenId id) const;

  TokenId cls_id() const { return cls_id_; }
  TokenId sep_id() const { return sep_id_; }
  TokenId pad_id() const { return pad_id_; }
  TokenId unk_id() const { return unk_id_; }

  bool is_special(TokenId id) const {
    return id == cls_id_ || id == sep_id_ || id == pad_id_ || id == unk_id_;
  }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> entries_;
  std::unordered_map<std::string, TokenId, Hash, std::equal_to<>> index_;
  TokenId cls_id_ = -1;
  TokenId sep_id_ = -1;
  TokenId pad_id_ = -1;
  TokenId unk_id_ = -1;
};

// One token per line, UTF-8. A trailing '\r' is ignored. Errors carry the
// 1-based line number of the offending entry.
Vocabulary load_vocab(const std::filesystem::path& path);

}  // namespace bertsa
