#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "bertsa/corpus.hpp"
#include "bertsa/error.hpp"
#include "bertsa/tokenizer.hpp"
#include "bertsa/vocab.hpp"
#include "support.hpp"

namespace bertsa {
namespace {

using test::TempDir;
using test::write_file;
using Tokens = std::vector<std::string>;

TEST(LoadVocab, LineIndexIsId) {
  TempDir dir;
  write_file(dir / "v.txt", "[PAD]\n[UNK]\n[CLS]\n[SEP]\nmovie\n");
  const Vocabulary v = load_vocab(dir / "v.txt");
  EXPECT_EQ(v.size(), 5u);
  EXPECT_EQ(v.id("movie"), 4);
  EXPECT_EQ(v.pad_id(), 0);
  EXPECT_EQ(v.unk_id(), 1);
  EXPECT_EQ(v.cls_id(), 2);
  EXPECT_EQ(v.sep_id(), 3);
  EXPECT_EQ(v.id("absent"), v.unk_id());
}

TEST(LoadVocab, RoundTripsEveryEntry) {
  const Vocabulary v = test::toy_vocab();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto id = static_cast<TokenId>(i);
    EXPECT_EQ(v.id(v.token(id)), id);
  }
}

TEST(LoadVocab, IdempotentAcrossCalls) {
  const Vocabulary a = test::toy_vocab();
  const Vocabulary b = test::toy_vocab();
  EXPECT_EQ(a.entries(), b.entries());
}

TEST(LoadVocab, CrlfLineEndings) {
  TempDir dir;
  write_file(dir / "v.txt", "[PAD]\r\n[UNK]\r\n[CLS]\r\n[SEP]\r\nmovie\r\n");
  EXPECT_EQ(load_vocab(dir / "v.txt").id("movie"), 4);
}

TEST(LoadVocab, MissingSeparator) {
  TempDir dir;
  write_file(dir / "v.txt", "[PAD]\n[UNK]\n[CLS]\nmovie\n");
  try {
    load_vocab(dir / "v.txt");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("missing special token"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("[SEP]"), std::string::npos) << e.what();
  }
}

TEST(LoadVocab, DuplicateReportsLine) {
  TempDir dir;
  write_file(dir / "v.txt", "[PAD]\n[UNK]\n[CLS]\n[SEP]\nmovie\nfilm\nmovie\n");
  try {
    load_vocab(dir / "v.txt");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("duplicate token"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 7"), std::string::npos) << msg;
  }
}

TEST(LoadVocab, MissingFile) {
  TempDir dir;
  try {
    load_vocab(dir / "nope.txt");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("missing file"), std::string::npos);
  }
}

TEST(BasicTokenize, PaperSentence) {
  EXPECT_EQ(basic_tokenize("this is a very fantastic movie"),
            (Tokens{"this", "is", "a", "very", "fantastic", "movie"}));
}

TEST(BasicTokenize, PunctuationSplitsAndLowercases) {
  EXPECT_EQ(basic_tokenize("Great!"), (Tokens{"great", "!"}));
  EXPECT_EQ(basic_tokenize("a$b"), (Tokens{"a", "$", "b"}));
  EXPECT_EQ(basic_tokenize("wait—what"), (Tokens{"wait", "—", "what"}));
}

TEST(BasicTokenize, Empty) {
  EXPECT_TRUE(basic_tokenize("").empty());
  EXPECT_TRUE(basic_tokenize(" \t\n ").empty());
}

TEST(BasicTokenize, StripsAccents) {
  EXPECT_EQ(basic_tokenize("Café NAÏVE"), (Tokens{"cafe", "naive"}));
}

TEST(WordPiece, PaperSplit) {
  const Vocabulary v = test::toy_vocab();
  ASSERT_FALSE(v.contains("interesting"));
  EXPECT_EQ(wordpiece_tokenize("interesting", v), (Tokens{"interest", "##ing"}));
}

TEST(WordPiece, WholeWord) {
  EXPECT_EQ(wordpiece_tokenize("movie", test::toy_vocab()), (Tokens{"movie"}));
}

TEST(WordPiece, UnknownFallback) {
  EXPECT_EQ(wordpiece_tokenize("qzxv", test::toy_vocab()), (Tokens{"[UNK]"}));
}

TEST(WordPiece, PartialMatchIsUnknown) {
  // "un" + "##believ" match but the remainder "ably" has no segmentation.
  EXPECT_EQ(wordpiece_tokenize("unbelievably", test::toy_vocab()), (Tokens{"[UNK]"}));
}

TEST(WordPiece, CharacterBudget) {
  const Vocabulary v = test::toy_vocab();
  const auto at_limit = wordpiece_tokenize(std::string(kMaxCharsPerWord, 'a'), v);
  EXPECT_EQ(at_limit.size(), kMaxCharsPerWord);
  EXPECT_EQ(wordpiece_tokenize(std::string(kMaxCharsPerWord + 1, 'a'), v), (Tokens{"[UNK]"}));
}

TEST(TokenizeReview, PaperSentenceIsWholeWords) {
  const auto tokens = tokenize_review("this is a very fantastic movie", test::toy_vocab());
  EXPECT_EQ(tokens, (Tokens{"this", "is", "a", "very", "fantastic", "movie"}));
}

TEST(TokenizeReview, ComposesBothStages) {
  EXPECT_EQ(tokenize_review("An interesting movie", test::toy_vocab()),
            (Tokens{"an", "interest", "##ing", "movie"}));
  EXPECT_TRUE(tokenize_review("", test::toy_vocab()).empty());
}

// Every line of the shipped fixture: text<TAB>expected pieces.
TEST(TokenizeReview, FixtureFile) {
  const Vocabulary v = test::toy_vocab();
  std::ifstream in(test::fixture_dir() / "tokenizer_cases.tsv");
  ASSERT_TRUE(in);
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos) << line;
    const std::string text = unescape_field(line.substr(0, tab));
    Tokens expected;
    std::istringstream pieces(line.substr(tab + 1));
    for (std::string p; pieces >> p;) expected.push_back(p);
    EXPECT_EQ(tokenize_review(text, v), expected) << "text: " << text;
    ++cases;
  }
  EXPECT_EQ(cases, 20);
}

class TokenizerProperty : public ::testing::Test {
 protected:
  // Random strings over vocabulary fragments, punctuation, case and accents.
  std::vector<std::string> samples(int n, std::uint64_t seed) {
    static const std::vector<std::string> atoms = {
        "this", "IS", "a", "Very", "fantastic", "MOVIE", "interest", "ing", "un", "believ", "able", "ly",
        "act", "or", "s", "qz", "!", ",", ".", "'", "?", "-", "(", ")", " ", " ", "  ", "\t", "é", "Ï",
        "Café", "naïve", "x", "Ω"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    std::uniform_int_distribution<int> len(0, 12);
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
      std::string s;
      for (int k = len(rng); k > 0; --k) s += atoms[pick(rng)];
      out.push_back(s);
    }
    return out;
  }

  static std::string ascii_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  }

  Vocabulary vocab = test::toy_vocab();
};

TEST_F(TokenizerProperty, LowercaseIdempotent) {
  for (const auto& s : samples(500, 1)) {
    EXPECT_EQ(tokenize_review(s, vocab), tokenize_review(ascii_lower(s), vocab)) << s;
  }
}

TEST_F(TokenizerProperty, PiecesNeverMerge) {
  for (const auto& s : samples(500, 2)) {
    EXPECT_GE(tokenize_review(s, vocab).size(), basic_tokenize(s).size()) << s;
  }
}

TEST_F(TokenizerProperty, PiecesReconstructWord) {
  for (const auto& s : samples(500, 3)) {
    for (const auto& word : basic_tokenize(s)) {
      const auto pieces = wordpiece_tokenize(word, vocab);
      ASSERT_FALSE(pieces.empty());
      if (pieces.front() == "[UNK]") continue;
      EXPECT_NE(pieces.front().rfind("##", 0), 0u) << word;
      std::string joined = pieces.front();
      for (std::size_t i = 1; i < pieces.size(); ++i) {
        ASSERT_EQ(pieces[i].rfind("##", 0), 0u) << word;
        joined += pieces[i].substr(2);
      }
      EXPECT_EQ(joined, word);
    }
  }
}

TEST_F(TokenizerProperty, OutputTokensAreVocabularyEntries) {
  for (const auto& s : samples(300, 4)) {
    for (const auto& t : tokenize_review(s, vocab)) EXPECT_TRUE(vocab.contains(t)) << t;
  }
}

TEST_F(TokenizerProperty, Deterministic) {
  for (const auto& s : samples(200, 5)) EXPECT_EQ(tokenize_review(s, vocab), tokenize_review(s, vocab));
}

}  // namespace
}  // namespace bertsa
