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

#ifndef LEXMINE_LINGMETRICS_H_
#define LEXMINE_LINGMETRICS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexmine/corpus.h"

namespace lexmine {

inline constexpr int kDefaultOverlapMerges = 8000;

// Typological feature values of one language; nullopt marks a missing value.
struct FeatureVector {
  std::string language;
  std::vector<std::optional<double>> features;
};

// Categorical WALS-style features of one language.
struct TypologyTable {
  std::string language;
  std::map<std::string, std::string> features;
};

struct SubsetLoss {
  int64_t size = 0;
  // Summed log-loss in bits of the model trained on the previous subset,
  // evaluated on the new examples of this subset.
  double loss_bits = 0.0;
};

struct LossLog {
  int64_t num_classes = 0;
  // Prediction targets (tokens) in the first subset.
  int64_t first_subset_tokens = 0;
  std::vector<SubsetLoss> subsets;
};

// Cosine distance over the coordinates present in both vectors. Throws
// InvalidArgumentError on a length mismatch, when no coordinate is shared or
// when a masked vector is all zeros.
double SyntacticDistance(const FeatureVector &a, const FeatureVector &b);

// Jaccard of the distinct non-whitespace code points of two corpora.
double CharOverlap(std::span<const std::string> corpus_a,
                   std::span<const std::string> corpus_b);

// Jaccard of two BPE symbol sets, each learned separately with num_merges.
double TokenOverlap(std::span<const TokenizedSentence> corpus_a,
                    std::span<const TokenizedSentence> corpus_b,
                    int num_merges = kDefaultOverlapMerges);

// Features present in both tables with equal values.
int SharedWals(const TypologyTable &a, const TypologyTable &b);

// first_subset_tokens * log2(num_classes) plus the loss of every later subset.
// The loss recorded for the first subset is not used. Throws
// InvalidArgumentError unless subset sizes strictly increase, losses are
// non-negative and num_classes >= 2.
double OnlineCodelength(const LossLog &log);

// {"language": ..., "features": [number or null, ...]}
FeatureVector ReadFeatureVector(std::istream &in);
// "language,feature_id,value" rows; a header row starting with "language" is
// skipped. Double-quoted fields may contain commas.
std::map<std::string, TypologyTable> ReadWalsCsv(std::istream &in);
// {"num_classes": ..., "first_subset_tokens": ...,
//  "subsets": [{"size": ..., "loss_bits": ...}, ...]}
LossLog ReadLossLog(std::istream &in);

}  // namespace lexmine

#endif  // LEXMINE_LINGMETRICS_H_
