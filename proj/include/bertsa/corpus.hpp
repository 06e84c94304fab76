#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bertsa/encoding.hpp"
#include "bertsa/labels.hpp"

namespace bertsa {

struct ReviewRecord {
  std::string text;
  SentimentLabel label = SentimentLabel::kNegative;
  std::string source;

  bool operator==(const ReviewRecord&) const = default;
};

// Amazon-style record with a 1..5 star score.
struct ScoredReview {
  std::string text;
  int score = 0;
  std::string source;
};

// Column mapping for tab-separated review files. The canonical layout is
// label<TAB>text with no header.
struct TsvSchema {
  std::size_t label_column = 0;
  std::size_t text_column = 1;
  bool has_header = false;
  std::string source;
};

// Text fields escape tab, newline, carriage return and backslash as \t \n \r \\.
std::string escape_field(std::string_view text);
std::string unescape_field(std::string_view field);

// Labels are 0/1 or negative/positive. Malformed rows, empty text and unknown
// labels raise DataError with the 1-based line number.
std::vector<ReviewRecord> parse_tsv(std::istream& in, const TsvSchema& schema, const std::string& origin);
std::vector<ReviewRecord> load_tsv(const std::filesystem::path& path, const TsvSchema& schema = {});

// score<TAB>text by default; scores must be integers.
std::vector<ScoredReview> parse_scored_tsv(std::istream& in, const TsvSchema& schema, const std::string& origin);
std::vector<ScoredReview> load_scored_tsv(const std::filesystem::path& path, const TsvSchema& schema = {});

// 1,2 -> NEGATIVE; 4,5 -> POSITIVE; 3 dropped. Order preserved.
std::vector<ReviewRecord> remap_amazon_scores(std::span<const ScoredReview> scored);

void write_tsv(std::ostream& out, std::span<const ReviewRecord> records);
void write_tsv(const std::filesystem::path& path, std::span<const ReviewRecord> records);

struct DatasetSplit {
  std::vector<ReviewRecord> train;
  std::vector<ReviewRecord> test;
};

struct ClassCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;

  std::size_t total() const { return positive + negative; }
  bool operator==(const ClassCounts&) const = default;
};

struct SplitStats {
  ClassCounts train;
  ClassCounts test;

  bool operator==(const SplitStats&) const = default;
};

ClassCounts class_counts(std::span<const ReviewRecord> records);
SplitStats split_stats(const DatasetSplit& split);

std::vector<LabeledText> to_labeled_text(std::span<const ReviewRecord> records);

// Encoded dataset file: a "#bertsa-encoded<TAB>K=<K>" header line, then per
// example label<TAB>input ids<TAB>attention mask<TAB>segment ids, with ids
// space-separated and the label "-" when absent.
void write_encoded(const std::filesystem::path& path, std::span<const EncodedExample> examples);
std::vector<EncodedExample> read_encoded(const std::filesystem::path& path);
bool is_encoded_file(const std::filesystem::path& path);

}  // namespace bertsa
