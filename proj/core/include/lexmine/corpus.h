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

#ifndef LEXMINE_CORPUS_H_
#define LEXMINE_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lexmine {

// A set of distinct tokens, kept as a sorted vector so that intersections
// are a linear merge.
class TokenSet {
 public:
  TokenSet() = default;
  explicit TokenSet(std::vector<std::string> tokens);

  bool contains(std::string_view token) const;
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<std::string> &items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const TokenSet &other) const = default;

 private:
  std::vector<std::string> items_;
};

struct NormalizerConfig {
  bool nfc = true;
  bool lowercase = true;
  bool strip_punctuation = true;
};

struct TokenizedSentence {
  std::string raw;
  std::vector<std::string> tokens;
  TokenSet token_set;
};

// NFC-normalizes and lowercases `raw`, splits on Unicode whitespace and
// strips leading/trailing punctuation from each token. Empty tokens are
// dropped. Throws DecodeError on invalid UTF-8.
TokenizedSentence Tokenize(std::string_view raw,
                           const NormalizerConfig &config = {});

// Builds a sentence from tokens that are already normalized.
TokenizedSentence FromTokens(std::vector<std::string> tokens);

// Joins tokens with single spaces.
std::string JoinTokens(std::span<const std::string> tokens);

// One sentence per line; a trailing '\r' is dropped.
std::vector<std::string> ReadLines(std::istream &in);
std::vector<std::string> ReadLines(const std::filesystem::path &path);

// Tokenizes every line. Decode errors are rethrown as ParseError with the
// offending line number.
std::vector<TokenizedSentence> TokenizeLines(
    std::span<const std::string> lines, const NormalizerConfig &config = {});

class FrequencyTable {
 public:
  void Add(std::string_view token, int64_t count = 1);
  void Add(const TokenizedSentence &sentence);
  // Associative and commutative, so shards can be counted independently.
  void Merge(const FrequencyTable &other);

  int64_t count(std::string_view token) const;
  int64_t total() const { return total_; }
  size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  const std::unordered_map<std::string, int64_t> &counts() const {
    return counts_;
  }

  // The n most frequent tokens; equal counts are ordered lexicographically.
  std::vector<std::pair<std::string, int64_t>> TopK(size_t n) const;

 private:
  std::unordered_map<std::string, int64_t> counts_;
  int64_t total_ = 0;
};

FrequencyTable CountFrequencies(std::span<const TokenizedSentence> corpus);

}  // namespace lexmine

#endif  // LEXMINE_CORPUS_H_
