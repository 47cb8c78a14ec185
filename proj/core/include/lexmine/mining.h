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

#ifndef LEXMINE_MINING_H_
#define LEXMINE_MINING_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lexmine/corpus.h"
#include "lexmine/lexicon.h"

namespace lexmine {

inline constexpr double kDefaultMiningThreshold = 0.1;

// A source document and the target document it links to.
struct LinkedDocumentPair {
  std::string doc_id;
  std::vector<TokenizedSentence> src_sentences;
  std::vector<TokenizedSentence> tgt_sentences;
};

struct MinedPair {
  TokenizedSentence src;
  TokenizedSentence tgt;
  double score = 0.0;
  std::string doc_id;
  size_t src_index = 0;
  size_t tgt_index = 0;
};

// Maps every token through the lexicon; out-of-vocabulary tokens are kept
// unchanged.
TokenSet TranslateTokens(const TokenizedSentence &sentence,
                         const Lexicon &lexicon);

// |s n t| / |s u t|, with the empty/empty case defined as 0.
double Jaccard(const TokenSet &s, const TokenSet &t);

struct MiningOptions {
  double threshold = kDefaultMiningThreshold;
  int threads = 1;
};

// For every source sentence, scores each target sentence of the same document
// and keeps the best one (the first on ties) when its score is positive and at
// least the threshold. Targets may be picked by several sources. Output is
// ordered by (doc_id, source index).
// Throws InvalidArgumentError when the threshold lies outside [0, 1].
std::vector<MinedPair> MineDocuments(std::span<const LinkedDocumentPair> docs,
                                     const Lexicon &lexicon,
                                     const MiningOptions &options = {});

// One JSON object per line: {"doc_id": ..., "src": [...], "tgt": [...]}.
std::vector<LinkedDocumentPair> ReadLinkedDocumentsJsonl(
    std::istream &in, const NormalizerConfig &config = {});

// Pairs <id>.src with <id>.tgt in `dir`, sorted by id. A .src file without a
// matching .tgt is an error.
std::vector<LinkedDocumentPair> ReadLinkedDocumentsDir(
    const std::filesystem::path &dir, const NormalizerConfig &config = {});

// Dispatches on whether `path` is a directory.
std::vector<LinkedDocumentPair> LoadLinkedDocuments(
    const std::filesystem::path &path, const NormalizerConfig &config = {});

// "doc_id<TAB>score<TAB>src<TAB>tgt" with the score printed to 6 decimals.
void WriteMinedTsv(std::ostream &out, std::span<const MinedPair> pairs);
// Raw source and target sentences, line-aligned.
void WriteMinedParallel(std::ostream &src_out, std::ostream &tgt_out,
                        std::span<const MinedPair> pairs);

}  // namespace lexmine

#endif  // LEXMINE_MINING_H_
