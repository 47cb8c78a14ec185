// Copyright 2026 The lexmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexmine/mining.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lexmine/error.h"
#include "testing/oracles.h"
#include "testing/synthetic.h"

namespace lexmine {
namespace {

namespace fs = std::filesystem;

TEST(TranslateTokensTest, KeepsUntranslatedWords) {
  auto lexicon = Lexicon::FromPairs({{"der", "the"}, {"hund", "dog"}},
                                    LexiconProvenance::kSeed);
  auto set = TranslateTokens(Tokenize("Der Hund bellt der"), lexicon);
  EXPECT_EQ(set.items(), (std::vector<std::string>{"bellt", "dog", "the"}));
}

TEST(JaccardTest, MatchesSetDefinitionOnRandomSets) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> size(0, 12), word(0, 15);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::string> a(size(rng)), b(size(rng));
    for (auto &w : a) w = "w" + std::to_string(word(rng));
    for (auto &w : b) w = "w" + std::to_string(word(rng));
    double got = Jaccard(TokenSet(a), TokenSet(b));
    EXPECT_EQ(got, testing::SetJaccard({a.begin(), a.end()}, {b.begin(), b.end()}));
    EXPECT_EQ(got, Jaccard(TokenSet(b), TokenSet(a)));
    EXPECT_GE(got, 0.0);
    EXPECT_LE(got, 1.0);
  }
}

TEST(MineDocumentsTest, PicksBestTargetPerSource) {
  auto lexicon = Lexicon::FromPairs(
      {{"katze", "cat"}, {"schlaeft", "sleeps"}, {"die", "the"}},
      LexiconProvenance::kSeed);
  LinkedDocumentPair doc{"d1",
                         {Tokenize("Die Katze schlaeft"), Tokenize("Xyz")},
                         {Tokenize("The dog barks"), Tokenize("The cat sleeps")}};
  auto mined = MineDocuments(std::span(&doc, 1), lexicon);
  ASSERT_EQ(mined.size(), 1u);
  EXPECT_EQ(mined[0].tgt_index, 1u);
  EXPECT_EQ(mined[0].score, 1.0);
  EXPECT_EQ(mined[0].src.raw, "Die Katze schlaeft");
  EXPECT_EQ(mined[0].tgt.raw, "The cat sleeps");
}

TEST(MineDocumentsTest, TiesGoToFirstTargetAndZeroScoresNeverMine) {
  LinkedDocumentPair doc{"d", {Tokenize("a b"), Tokenize("q")},
                         {Tokenize("a c"), Tokenize("b d")}};
  auto mined = MineDocuments(std::span(&doc, 1), Lexicon(), {0.0, 1});
  ASSERT_EQ(mined.size(), 1u);
  EXPECT_EQ(mined[0].src_index, 0u);
  EXPECT_EQ(mined[0].tgt_index, 0u);
}

TEST(MineDocumentsTest, EmptySidesAndBadThreshold) {
  LinkedDocumentPair doc{"d", {Tokenize("a")}, {}};
  EXPECT_TRUE(MineDocuments(std::span(&doc, 1), Lexicon()).empty());
  EXPECT_THROW(MineDocuments(std::span(&doc, 1), Lexicon(), {1.5, 1}),
               InvalidArgumentError);
  EXPECT_THROW(MineDocuments(std::span(&doc, 1), Lexicon(), {-0.1, 1}),
               InvalidArgumentError);
}

// Property: for random documents and thresholds the result equals the
// all-pairs oracle, independent of thread count.
TEST(MineDocumentsTest, MatchesOracleAcrossThreadCounts) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> threshold(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto oracle_docs = testing::RandomOracleDocs(15, 12, 20, rng);
    auto docs = testing::ToLinkedDocuments(oracle_docs);
    std::map<std::string, std::string> map;
    for (size_t i = 0; i < 20; i += 2) {
      map[testing::SyntheticWord("s", i)] = testing::SyntheticWord("t", i);
    }
    Lexicon lexicon;
    for (const auto &[s, t] : map) lexicon.Insert(s, t);
    double th = threshold(rng);
    auto expected = testing::BruteForceMine(oracle_docs, map, th);
    for (int threads : {1, 4}) {
      auto mined = MineDocuments(docs, lexicon, {th, threads});
      ASSERT_EQ(mined.size(), expected.size());
      for (size_t i = 0; i < mined.size(); ++i) {
        EXPECT_EQ(mined[i].doc_id, expected[i].doc_id);
        EXPECT_EQ(mined[i].src_index, expected[i].src_index);
        EXPECT_EQ(mined[i].tgt_index, expected[i].tgt_index);
        EXPECT_EQ(mined[i].score, expected[i].score);
      }
    }
  }
}

TEST(LinkedDocumentsTest, ReadsJsonl) {
  std::istringstream in(
      R"({"doc_id": "a", "src": ["Eins zwei"], "tgt": ["One two", "Three"]})"
      "\n\n"
      R"({"doc_id": 7, "src": [], "tgt": []})"
      "\n");
  auto docs = ReadLinkedDocumentsJsonl(in);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].doc_id, "a");
  EXPECT_EQ(docs[0].tgt_sentences.size(), 2u);
  EXPECT_EQ(docs[0].src_sentences[0].tokens,
            (std::vector<std::string>{"eins", "zwei"}));
  EXPECT_EQ(docs[1].doc_id, "7");
}

TEST(LinkedDocumentsTest, JsonlErrorsCarryLine) {
  std::istringstream in(R"({"doc_id": "a", "src": [], "tgt": []})"
                        "\n{not json}\n");
  try {
    ReadLinkedDocumentsJsonl(in);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream missing(R"({"doc_id": "a", "src": []})");
  EXPECT_THROW(ReadLinkedDocumentsJsonl(missing), ParseError);
}

TEST(LinkedDocumentsTest, ReadsDirectoryPairs) {
  fs::path dir = fs::temp_directory_path() / "lexmine_mining_dir_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "b.src") << "zwei\n";
  std::ofstream(dir / "b.tgt") << "two\n";
  std::ofstream(dir / "a.src") << "eins\nnoch eins\n";
  std::ofstream(dir / "a.tgt") << "one\n";
  auto docs = LoadLinkedDocuments(dir);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].doc_id, "a");
  EXPECT_EQ(docs[0].src_sentences.size(), 2u);
  std::ofstream(dir / "c.src") << "drei\n";
  EXPECT_THROW(LoadLinkedDocuments(dir), IoError);
  fs::remove_all(dir);
  EXPECT_THROW(LoadLinkedDocuments(dir / "gone.jsonl"), IoError);
}

TEST(WriteMinedTest, TsvAndParallelFiles) {
  MinedPair pair{Tokenize("a\tb"), Tokenize("c"), 1.0 / 3.0, "doc", 0, 0};
  std::ostringstream tsv, src, tgt;
  WriteMinedTsv(tsv, std::span(&pair, 1));
  WriteMinedParallel(src, tgt, std::span(&pair, 1));
  EXPECT_EQ(tsv.str(), "doc\t0.333333\ta b\tc\n");
  EXPECT_EQ(src.str(), "a b\n");
  EXPECT_EQ(tgt.str(), "c\n");
}

}  // namespace
}  // namespace lexmine
