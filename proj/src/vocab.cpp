#include "bertsa/vocab.hpp"

#include <fstream>

#include "bertsa/error.hpp"

namespace bertsa {

namespace {

Vocabulary build(std::vector<std::string> entries, const std::string& origin) {
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto [it, inserted] = seen.emplace(entries[i], i);
    if (!inserted) {
      throw DataError(origin + ": duplicate token '" + entries[i] + "' at line " +
                      std::to_string(i + 1) + " (first seen at line " +
                      std::to_string(it->second + 1) + ")");
    }
  }
  for (auto special : {kPadToken, kUnkToken, kClsToken, kSepToken}) {
    if (!seen.contains(special)) {
      throw DataError(origin + ": missing special token " + std::string(special));
    }
  }
  return Vocabulary(std::move(entries));
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> entries) : entries_(std::move(entries)) {
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!index_.emplace(entries_[i], static_cast<TokenId>(i)).second) {
      throw DataError("duplicate token '" + entries_[i] + "' at line " + std::to_string(i + 1));
    }
  }
  auto special = [this](std::string_view name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw DataError("missing special token " + std::string(name));
    }
    return it->second;
  };
  cls_id_ = special(kClsToken);
  sep_id_ = special(kSepToken);
  pad_id_ = special(kPadToken);
  unk_id_ = special(kUnkToken);
}

bool Vocabulary::contains(std::string_view token) const { return index_.find(token) != index_.end(); }

TokenId Vocabulary::id(std::string_view token) const {
  auto it = index_.find(token);
  return it == index_.end() ? unk_id_ : it->second;
}

const std::string& Vocabulary::token(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= entries_.size()) {
    throw DataError("token id " + std::to_string(id) + " out of range for vocabulary of size " +
                    std::to_string(entries_.size()));
  }
  return entries_[static_cast<std::size_t>(id)];
}

Vocabulary load_vocab(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("missing file: cannot open vocabulary " + path.string());
  }
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    entries.push_back(std::move(line));
  }
  return build(std::move(entries), path.string());
}

}  // namespace bertsa
