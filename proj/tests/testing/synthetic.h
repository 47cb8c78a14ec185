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

#ifndef LEXMINE_TESTS_TESTING_SYNTHETIC_H_
#define LEXMINE_TESTS_TESTING_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Core>

#include "lexmine/corpus.h"
#include "lexmine/embedding_table.h"
#include "lexmine/lexicon.h"
#include "lexmine/mining.h"
#include "testing/oracles.h"

namespace lexmine::testing {

// Pronounceable word for an index; distinct indices give distinct words.
std::string SyntheticWord(const std::string &prefix, size_t index);

Eigen::MatrixXd RandomOrthogonal(int dim, std::mt19937_64 &rng);

Matrix GaussianRows(size_t rows, int dim, std::mt19937_64 &rng);

Grid ToGrid(const Matrix &rows);

// Target rows are Q x + noise for source rows x; word i of the source
// translates to word i of the target.
struct PlantedRotation {
  EmbeddingTable source;
  EmbeddingTable target;
  Eigen::MatrixXd rotation;
  std::vector<SeedPair> seed;
  // Every planted pair, seed or not.
  std::vector<SeedPair> gold;
};

PlantedRotation MakePlantedRotation(size_t words, int dim, size_t seed_pairs,
                                    double noise, uint64_t rng_seed);

struct WorldOptions {
  size_t vocab = 3000;
  int dim = 50;
  size_t seed_pairs = 1000;
  double noise = 0.01;
  size_t docs = 100;
  size_t planted_per_doc = 10;
  size_t src_distractors = 5;
  size_t tgt_distractors = 10;
  size_t min_len = 8;
  size_t max_len = 14;
  size_t monolingual_lines = 2000;
  uint64_t rng_seed = 1;
};

struct SyntheticWorld {
  PlantedRotation embeddings;
  std::vector<LinkedDocumentPair> docs;
  // (doc_id, src_index, tgt_index) of every planted translation.
  std::set<std::tuple<std::string, size_t, size_t>> planted;
  std::vector<std::string> monolingual_source;
};

SyntheticWorld MakeSyntheticWorld(const WorldOptions &options);

// Random documents over a small vocabulary, so that sentence overlaps
// spread over the whole [0, 1] range.
std::vector<OracleDoc> RandomOracleDocs(size_t count, size_t max_sentences,
                                        size_t vocab, std::mt19937_64 &rng);

std::vector<LinkedDocumentPair> ToLinkedDocuments(
    const std::vector<OracleDoc> &docs);

}  // namespace lexmine::testing

#endif  // LEXMINE_TESTS_TESTING_SYNTHETIC_H_
