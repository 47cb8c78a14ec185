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

#include "lexmine/procrustes.h"

#include <Eigen/SVD>

#include "lexmine/error.h"

namespace lexmine {

LinearMap LinearMap::Identity(int dim) {
  return LinearMap{Eigen::MatrixXd::Identity(dim, dim), true};
}

Matrix LinearMap::Apply(const Matrix &rows) const {
  if (rows.cols() != matrix.cols()) {
    throw InvalidArgumentError("map expects dimension " +
                               std::to_string(matrix.cols()) + ", got " +
                               std::to_string(rows.cols()));
  }
  return rows * matrix.transpose();
}

ProcrustesFit FitProcrustes(const EmbeddingTable &source,
                            const EmbeddingTable &target,
                            std::span<const SeedPair> seed) {
  const int d = source.dim();
  if (d != target.dim()) {
    throw InvalidArgumentError("source and target dimensions differ");
  }
  std::vector<std::pair<size_t, size_t>> usable;
  usable.reserve(seed.size());
  ProcrustesFit fit;
  for (const auto &pair : seed) {
    auto s = source.Find(pair.source);
    auto t = target.Find(pair.target);
    if (s && t) {
      usable.emplace_back(*s, *t);
    } else {
      ++fit.skipped_pairs;
    }
  }
  fit.used_pairs = usable.size();
  if (usable.size() < static_cast<size_t>(d)) {
    throw InvalidArgumentError("need at least " + std::to_string(d) +
                               " usable seed pairs, have " +
                               std::to_string(usable.size()));
  }

  const Eigen::Index n = static_cast<Eigen::Index>(usable.size());
  Matrix x(n, d), y(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    x.row(i) = source.vectors().row(usable[i].first);
    y.row(i) = target.vectors().row(usable[i].second);
  }
  // With pairs stacked as columns, Y X^T; here they are rows.
  Eigen::MatrixXd cross = y.transpose() * x;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("SVD of the seed cross-covariance failed");
  }
  Eigen::MatrixXd m = svd.matrixU() * svd.matrixV().transpose();
  if (!m.allFinite()) throw NumericalError("Procrustes solution is not finite");
  fit.map = LinearMap{std::move(m), true};
  return fit;
}

ProcrustesFit FitProcrustes(const EmbeddingTable &source,
                            const EmbeddingTable &target, const Lexicon &seed) {
  std::vector<SeedPair> pairs;
  pairs.reserve(seed.size());
  for (const auto &[s, t] : seed.entries()) pairs.push_back({s, t});
  return FitProcrustes(source, target, pairs);
}

}  // namespace lexmine
