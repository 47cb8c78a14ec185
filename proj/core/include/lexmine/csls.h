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

#ifndef LEXMINE_CSLS_H_
#define LEXMINE_CSLS_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "lexmine/embedding_table.h"

namespace lexmine {

inline constexpr int kDefaultCslsK = 10;

// Cross-domain similarity local scaling between a pool of queries and a pool
// of candidates, both given as unit-norm rows:
//
//   csls(x, y) = 2 cos(x, y) - r_c(x) - r_q(y)
//
// r_c(x) is the mean cosine of query x to its k nearest candidates and r_q(y)
// the mean cosine of candidate y to its k nearest queries. When the query pool
// is smaller than k, r_q averages over the whole pool. Both density vectors
// are computed once at construction and are read-only afterwards.
class CslsScorer {
 public:
  // Throws InvalidArgumentError when k < 1, k exceeds the candidate count,
  // dimensions differ, or a row is zero or not unit-norm.
  CslsScorer(std::shared_ptr<const Matrix> queries,
             std::shared_ptr<const Matrix> candidates, int k, int threads = 1);

  size_t num_queries() const { return queries_->rows(); }
  size_t num_candidates() const { return candidates_->rows(); }
  int k() const { return k_; }

  // r_c, one entry per query.
  const Eigen::VectorXd &query_density() const { return query_density_; }
  // r_q, one entry per candidate.
  const Eigen::VectorXd &candidate_density() const {
    return candidate_density_;
  }

  // CSLS of query rows [begin, end) against every candidate.
  Matrix ScoreBlock(size_t begin, size_t end) const;
  Eigen::RowVectorXd Scores(size_t query) const;

  // Best candidate per query. Exact ties go to the candidate for which
  // `prefer(a, b)` holds; by default the lowest index.
  std::vector<size_t> Argmax(
      const std::function<bool(size_t, size_t)> &prefer = {}) const;

 private:
  std::shared_ptr<const Matrix> queries_;
  std::shared_ptr<const Matrix> candidates_;
  int k_;
  int threads_;
  Eigen::VectorXd query_density_;
  Eigen::VectorXd candidate_density_;
};

// CSLS scores of one query against every candidate of `candidates`, with the
// query itself as the whole query pool. The query is normalized first.
// Throws InvalidArgumentError on a zero query.
Eigen::VectorXd CslsScores(const Eigen::VectorXd &query,
                           const EmbeddingTable &candidates, int k);

// Mean of the k largest values in `values` (k clamped to the size).
double TopKMean(std::span<const double> values, int k);

}  // namespace lexmine

#endif  // LEXMINE_CSLS_H_
