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

#ifndef LEXMINE_RETRIEVAL_H_
#define LEXMINE_RETRIEVAL_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexmine/corpus.h"
#include "lexmine/embedding_table.h"
#include "lexmine/lexicon.h"

namespace lexmine {

inline constexpr int kDefaultRmssK = 4;

enum class Side { kSource, kTarget };

// Sentence vectors with unique ids. Rows are stored unit-normalized; every
// score computed from them is cosine-based.
class SentenceEmbeddingSet {
 public:
  // Throws InvalidArgumentError on duplicate ids or zero vectors.
  static SentenceEmbeddingSet FromRows(std::vector<std::string> ids,
                                       Matrix rows, Side side);
  static SentenceEmbeddingSet FromTable(const EmbeddingTable &table,
                                        Side side);

  size_t size() const { return ids_.size(); }
  int dim() const { return static_cast<int>(vectors_->cols()); }
  Side side() const { return side_; }
  const std::vector<std::string> &ids() const { return ids_; }
  const Matrix &vectors() const { return *vectors_; }

 private:
  std::vector<std::string> ids_;
  std::shared_ptr<const Matrix> vectors_;
  Side side_ = Side::kSource;
};

// Ratio margin score of every (source, target) pair:
//
//   cos(x, y) / ( sum_{z in NN_k(x) among targets} cos(x, z) / 2k
//               + sum_{z in NN_k(y) among sources} cos(y, z) / 2k )
//
// Neighbour sets may contain the candidate itself. Throws InvalidArgumentError
// when k < 1, k exceeds either population or the dimensions differ.
Matrix RmssScores(const SentenceEmbeddingSet &source,
                  const SentenceEmbeddingSet &target, int k = kDefaultRmssK,
                  int threads = 1);

struct Retrieval {
  size_t target = 0;
  double score = 0.0;
};

// Row-wise argmax of a score matrix; ties go to the lowest column.
std::vector<Retrieval> ArgmaxRows(const Matrix &scores);

std::vector<Retrieval> RmssRetrieve(const SentenceEmbeddingSet &source,
                                    const SentenceEmbeddingSet &target,
                                    int k = kDefaultRmssK, int threads = 1);

// Best target per source by Jaccard of the translated source against the
// target token set; ties go to the lowest index. Empty when there are no
// targets.
std::vector<Retrieval> JaccardRetrieve(
    std::span<const TokenizedSentence> source,
    std::span<const TokenizedSentence> target, const Lexicon &lexicon);

// Gold source-id -> target-id alignment; a bijection.
class GoldBitext {
 public:
  // Throws InvalidArgumentError when a source repeats or two sources share a
  // target.
  static GoldBitext FromPairs(
      const std::vector<std::pair<std::string, std::string>> &pairs);

  size_t size() const { return gold_.size(); }
  const std::map<std::string, std::string> &pairs() const { return gold_; }
  const std::string *Find(const std::string &source_id) const;

 private:
  std::map<std::string, std::string> gold_;
};

// "source-id<TAB>target-id" per line.
GoldBitext ReadGoldTsv(std::istream &in);
GoldBitext ReadGoldTsv(const std::filesystem::path &path);

struct Prediction {
  std::string target_id;
  double score = 0.0;
};
using Predictions = std::map<std::string, Prediction>;

// "source-id<TAB>target-id<TAB>score" per line.
Predictions ReadPredictionsTsv(std::istream &in);

struct RetrievalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t predicted = 0;
  size_t correct = 0;
  size_t gold = 0;
  double threshold = 0.0;
};

// A prediction is asserted when its score is at least `threshold`.
// precision = correct / asserted (0 when nothing is asserted),
// recall = correct / |gold|, f1 = 2PR / (P + R) (0 when P + R = 0).
// Throws InvalidArgumentError when a prediction's source is not in the gold
// set.
RetrievalReport EvaluatePrf(const Predictions &predictions,
                            const GoldBitext &gold, double threshold);

// One report per threshold, in the given order.
std::vector<RetrievalReport> SweepPrf(const Predictions &predictions,
                                      const GoldBitext &gold,
                                      std::span<const double> thresholds);
// Sweeps over every distinct prediction score, ascending.
std::vector<RetrievalReport> SweepPrf(const Predictions &predictions,
                                      const GoldBitext &gold);

}  // namespace lexmine

#endif  // LEXMINE_RETRIEVAL_H_
