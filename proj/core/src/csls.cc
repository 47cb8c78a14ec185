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

#include "lexmine/csls.h"

#include <algorithm>
#include <cmath>

#include "lexmine/error.h"
#include "lexmine/parallel.h"

namespace lexmine {
namespace {

constexpr Eigen::Index kBlockRows = 256;

void CheckUnitRows(const Matrix &rows, const char *what) {
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    double norm = rows.row(i).norm();
    if (norm == 0.0) {
      throw InvalidArgumentError(std::string(what) + " row " +
                                 std::to_string(i) + " is a zero vector");
    }
    if (std::abs(norm - 1.0) > 1e-6) {
      throw InvalidArgumentError(std::string(what) + " row " +
                                 std::to_string(i) + " is not unit-norm");
    }
  }
}

// out[i] = mean of the k largest cosines between row i of `rows` and `pool`.
void NeighbourhoodDensity(const Matrix &rows, const Matrix &pool, int k,
                          int threads, Eigen::VectorXd &out) {
  out.resize(rows.rows());
  const Eigen::Index blocks = (rows.rows() + kBlockRows - 1) / kBlockRows;
  ParallelFor(blocks, threads, [&](size_t begin, size_t end) {
    for (size_t b = begin; b < end; ++b) {
      Eigen::Index start = static_cast<Eigen::Index>(b) * kBlockRows;
      Eigen::Index n = std::min(kBlockRows, rows.rows() - start);
      Matrix sims = rows.middleRows(start, n) * pool.transpose();
      for (Eigen::Index i = 0; i < n; ++i) {
        out(start + i) = TopKMean(
            std::span<const double>(sims.row(i).data(), sims.cols()), k);
      }
    }
  });
}

}  // namespace

double TopKMean(std::span<const double> values, int k) {
  size_t n = std::min(values.size(), static_cast<size_t>(std::max(k, 0)));
  if (n == 0) return 0.0;
  std::vector<double> copy(values.begin(), values.end());
  std::nth_element(copy.begin(), copy.begin() + (n - 1), copy.end(),
                   std::greater<double>());
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) sum += copy[i];
  return sum / static_cast<double>(n);
}

CslsScorer::CslsScorer(std::shared_ptr<const Matrix> queries,
                       std::shared_ptr<const Matrix> candidates, int k,
                       int threads)
    : queries_(std::move(queries)),
      candidates_(std::move(candidates)),
      k_(k),
      threads_(threads) {
  if (k < 1) throw InvalidArgumentError("CSLS k must be >= 1");
  if (static_cast<Eigen::Index>(k) > candidates_->rows()) {
    throw InvalidArgumentError("CSLS k exceeds the candidate count");
  }
  if (queries_->cols() != candidates_->cols()) {
    throw InvalidArgumentError("query and candidate dimensions differ");
  }
  CheckUnitRows(*queries_, "query");
  CheckUnitRows(*candidates_, "candidate");
  NeighbourhoodDensity(*queries_, *candidates_, k_, threads_, query_density_);
  int pool_k = static_cast<int>(
      std::min<Eigen::Index>(k_, queries_->rows()));
  NeighbourhoodDensity(*candidates_, *queries_, pool_k, threads_,
                       candidate_density_);
}

Matrix CslsScorer::ScoreBlock(size_t begin, size_t end) const {
  const Eigen::Index n = static_cast<Eigen::Index>(end - begin);
  Matrix scores = 2.0 * (queries_->middleRows(begin, n) * candidates_->transpose());
  scores.rowwise() -= candidate_density_.transpose();
  scores.colwise() -= query_density_.segment(begin, n);
  return scores;
}

Eigen::RowVectorXd CslsScorer::Scores(size_t query) const {
  return ScoreBlock(query, query + 1).row(0);
}

std::vector<size_t> CslsScorer::Argmax(
    const std::function<bool(size_t, size_t)> &prefer) const {
  std::vector<size_t> best(num_queries(), 0);
  const size_t blocks = (num_queries() + kBlockRows - 1) / kBlockRows;
  ParallelFor(blocks, threads_, [&](size_t begin, size_t end) {
    for (size_t b = begin; b < end; ++b) {
      size_t start = b * kBlockRows;
      size_t stop = std::min(num_queries(), start + kBlockRows);
      Matrix scores = ScoreBlock(start, stop);
      for (Eigen::Index i = 0; i < scores.rows(); ++i) {
        Eigen::Index arg = 0;
        double top = scores(i, 0);
        for (Eigen::Index j = 1; j < scores.cols(); ++j) {
          double s = scores(i, j);
          if (s > top || (s == top && prefer && prefer(j, arg))) {
            top = s;
            arg = j;
          }
        }
        best[start + i] = static_cast<size_t>(arg);
      }
    }
  });
  return best;
}

Eigen::VectorXd CslsScores(const Eigen::VectorXd &query,
                           const EmbeddingTable &candidates, int k) {
  double norm = query.norm();
  if (norm == 0.0) {
    throw InvalidArgumentError("zero query vector: cosine is undefined");
  }
  if (query.size() != candidates.dim()) {
    throw InvalidArgumentError("query and candidate dimensions differ");
  }
  auto queries = std::make_shared<Matrix>(1, query.size());
  queries->row(0) = query.transpose() / norm;
  CslsScorer scorer(std::move(queries), candidates.shared_vectors(), k);
  return scorer.Scores(0).transpose();
}

}  // namespace lexmine
