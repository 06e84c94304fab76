#include "bertsa/corpus.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "bertsa/error.hpp"

namespace bertsa {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos; }

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("missing file: cannot open " + path.string());
  return in;
}

// Calls `row(line_number, fields)` for every non-header, non-empty line.
template <typename Row>
void for_each_row(std::istream& in, const TsvSchema& schema, const std::string& origin, Row&& row) {
  std::string line;
  std::size_t line_number = 0;
  const std::size_t needed = std::max(schema.label_column, schema.text_column) + 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (schema.has_header && line_number == 1) continue;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() < needed) {
      throw DataError(fmt::format("{}:{}: malformed row, expected at least {} tab-separated columns, found {}", origin,
                                  line_number, needed, fields.size()));
    }
    std::string text = unescape_field(fields[schema.text_column]);
    if (blank(text)) throw DataError(fmt::format("{}:{}: malformed row, empty review text", origin, line_number));
    row(line_number, fields[schema.label_column], std::move(text));
  }
}

}  // namespace

std::string escape_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string unescape_field(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\' || i + 1 == field.size()) {
      out += field[i];
      continue;
    }
    switch (field[i + 1]) {
      case 't':
        out += '\t';
        break;
      case 'n':
        out += '\n';
        break;
      case 'r':
        out += '\r';
        break;
      case '\\':
        out += '\\';
        break;
      default:
        // unknown escape: keep both characters
        out += field[i];
        out += field[i + 1];
    }
    ++i;
  }
  return out;
}

std::vector<ReviewRecord> parse_tsv(std::istream& in, const TsvSchema& schema, const std::string& origin) {
  std::vector<ReviewRecord> out;
  for_each_row(in, schema, origin, [&](std::size_t line, std::string_view label_field, std::string text) {
    const auto label = parse_label(label_field);
    if (!label) throw DataError(fmt::format("{}:{}: unknown label value '{}'", origin, line, label_field));
    out.push_back({std::move(text), *label, schema.source});
  });
  return out;
}

std::vector<ReviewRecord> load_tsv(const std::filesystem::path& path, const TsvSchema& schema) {
  auto in = open_input(path);
  return parse_tsv(in, schema, path.string());
}

std::vector<ScoredReview> parse_scored_tsv(std::istream& in, const TsvSchema& schema, const std::string& origin) {
  std::vector<ScoredReview> out;
  for_each_row(in, schema, origin, [&](std::size_t line, std::string_view score_field, std::string text) {
    int score = 0;
    const auto* end = score_field.data() + score_field.size();
    const auto [ptr, ec] = std::from_chars(score_field.data(), end, score);
    if (ec != std::errc{} || ptr != end) {
      throw DataError(fmt::format("{}:{}: score '{}' is not an integer", origin, line, score_field));
    }
    out.push_back({std::move(text), score, schema.source});
  });
  return out;
}

std::vector<ScoredReview> load_scored_tsv(const std::filesystem::path& path, const TsvSchema& schema) {
  auto in = open_input(path);
  return parse_scored_tsv(in, schema, path.string());
}

std::vector<ReviewRecord> remap_amazon_scores(std::span<const ScoredReview> scored) {
  std::vector<ReviewRecord> out;
  out.reserve(scored.size());
  for (std::size_t i = 0; i < scored.size(); ++i) {
    const auto& r = scored[i];
    switch (r.score) {
      case 1:
      case 2:
        out.push_back({r.text, SentimentLabel::kNegative, r.source});
        break;
      case 3:
        break;
      case 4:
      case 5:
        out.push_back({r.text, SentimentLabel::kPositive, r.source});
        break;
      default:
        throw DataError(fmt::format("record {}: score {} outside 1..5", i, r.score));
    }
  }
  return out;
}

void write_tsv(std::ostream& out, std::span<const ReviewRecord> records) {
  for (const auto& r : records) out << class_index(r.label) << '\t' << escape_field(r.text) << '\n';
}

void write_tsv(const std::filesystem::path& path, std::span<const ReviewRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  write_tsv(out, records);
  if (!out) throw DataError("failed writing " + path.string());
}

ClassCounts class_counts(std::span<const ReviewRecord> records) {
  ClassCounts c;
  for (const auto& r : records) (r.label == SentimentLabel::kPositive ? c.positive : c.negative) += 1;
  return c;
}

SplitStats split_stats(const DatasetSplit& split) { return {class_counts(split.train), class_counts(split.test)}; }

std::vector<LabeledText> to_labeled_text(std::span<const ReviewRecord> records) {
  std::vector<LabeledText> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back({r.text, r.label});
  return out;
}

namespace {

constexpr std::string_view kEncodedMagic = "#bertsa-encoded";

template <typename T>
void write_joined(std::ostream& out, const std::vector<T>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << static_cast<long long>(values[i]);
  }
}

template <typename T>
std::vector<T> parse_ints(std::string_view field, const std::string& where) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos < field.size()) {
    const auto space = field.find(' ', pos);
    const auto token = field.substr(pos, space == std::string_view::npos ? std::string_view::npos : space - pos);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw DataError(where + ": bad integer '" + std::string(token) + "'");
    }
    out.push_back(static_cast<T>(v));
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return out;
}

}  // namespace

void write_encoded(const std::filesystem::path& path, std::span<const EncodedExample> examples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  const std::size_t k = examples.empty() ? 0 : examples.front().length();
  out << kEncodedMagic << "\tK=" << k << '\n';
  for (const auto& ex : examples) {
    if (ex.label) {
      out << class_index(*ex.label);
    } else {
      out << '-';
    }
    out << '\t';
    write_joined(out, ex.input_ids);
    out << '\t';
    write_joined(out, ex.attention_mask);
    out << '\t';
    write_joined(out, ex.segment_ids);
    out << '\n';
  }
  if (!out) throw DataError("failed writing " + path.string());
}

bool is_encoded_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string line;
  return in && std::getline(in, line) && std::string_view(line).starts_with(kEncodedMagic);
}

std::vector<EncodedExample> read_encoded(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line) || !std::string_view(line).starts_with(kEncodedMagic)) {
    throw DataError(path.string() + ": not an encoded dataset (missing header)");
  }
  std::vector<EncodedExample> out;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::string where = fmt::format("{}:{}", path.string(), line_number);
    const auto fields = split_tabs(line);
    if (fields.size() != 4) throw DataError(where + ": malformed row, expected 4 columns");
    EncodedExample ex;
    if (fields[0] != "-") {
      ex.label = parse_label(fields[0]);
      if (!ex.label) throw DataError(where + ": unknown label value '" + std::string(fields[0]) + "'");
    }
    ex.input_ids = parse_ints<TokenId>(fields[1], where);
    ex.attention_mask = parse_ints<std::uint8_t>(fields[2], where);
    ex.segment_ids = parse_ints<std::uint8_t>(fields[3], where);
    if (ex.attention_mask.size() != ex.input_ids.size() || ex.segment_ids.size() != ex.input_ids.size()) {
      throw DataError(where + ": column lengths differ");
    }
    if (!out.empty() && out.front().length() != ex.length()) throw DataError(where + ": inconsistent sequence length");
    out.push_back(std::move(ex));
  }
  return out;
}

}  // namespace bertsa
