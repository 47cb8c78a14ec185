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

#ifndef LEXMINE_BPE_H_
#define LEXMINE_BPE_H_

#include <compare>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexmine/corpus.h"

namespace lexmine {

// Suffix attached to the final symbol of every word.
inline constexpr std::string_view kEndOfWord = "</w>";

struct BpeMerge {
  std::string left;
  std::string right;

  std::string product() const { return left + right; }
  auto operator<=>(const BpeMerge &) const = default;
};

class BpeVocabulary {
 public:
  BpeVocabulary() = default;
  BpeVocabulary(std::vector<BpeMerge> merges, std::set<std::string> vocab);

  const std::vector<BpeMerge> &merges() const { return merges_; }
  const std::set<std::string> &vocab() const { return vocab_; }
  size_t num_merges() const { return merges_.size(); }

  // Rank of a merge in learned order, or -1.
  int Rank(std::string_view left, std::string_view right) const;

 private:
  std::vector<BpeMerge> merges_;
  std::set<std::string> vocab_;
  std::unordered_map<std::string, int> ranks_;
};

// Splits a word into code points and marks the last one with kEndOfWord.
std::vector<std::string> InitialSymbols(std::string_view word);

// Learns up to num_merges merges, stopping early once no adjacent pair occurs
// at least twice. At every step the most frequent pair is merged; equal counts
// go to the lexicographically smallest (left, right) pair. The returned
// vocabulary holds every initial symbol plus every merge product.
// Throws InvalidArgumentError when the corpus has no tokens or num_merges < 0.
BpeVocabulary LearnBpe(std::span<const TokenizedSentence> corpus,
                       int num_merges);
BpeVocabulary LearnBpe(const FrequencyTable &word_counts, int num_merges);

// Applies merges in learned order. Characters never seen in training pass
// through as singleton symbols.
std::vector<std::string> ApplyBpe(std::string_view word,
                                  const BpeVocabulary &vocabulary);

// "left right" per line, in learned order.
void WriteBpeCodes(std::ostream &out, const BpeVocabulary &vocabulary);
// The vocabulary of a read-back file only holds symbols mentioned by merges.
BpeVocabulary ReadBpeCodes(std::istream &in);

}  // namespace lexmine

#endif  // LEXMINE_BPE_H_
