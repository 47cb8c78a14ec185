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

#ifndef LEXMINE_PROCRUSTES_H_
#define LEXMINE_PROCRUSTES_H_

#include <cstddef>
#include <span>

#include <Eigen/Core>

#include "lexmine/embedding_table.h"
#include "lexmine/lexicon.h"

namespace lexmine {

// A d x d map applied to column vectors: y = matrix * x.
struct LinearMap {
  Eigen::MatrixXd matrix;
  bool orthogonal = false;

  static LinearMap Identity(int dim);

  // Maps every row of `rows`; returns the mapped rows.
  Matrix Apply(const Matrix &rows) const;
};

struct ProcrustesFit {
  LinearMap map;
  size_t used_pairs = 0;
  // Pairs with a word missing from its table.
  size_t skipped_pairs = 0;
};

// Orthogonal M minimizing ||M X - Y||_F over the usable seed pairs, where the
// columns of X and Y are the source and target vectors of each pair. Solved
// in closed form as M = U V^T with U S V^T = svd(Y X^T).
//
// Throws InvalidArgumentError when the dimensions differ or fewer than d
// pairs are usable, NumericalError when the decomposition fails.
ProcrustesFit FitProcrustes(const EmbeddingTable &source,
                            const EmbeddingTable &target,
                            std::span<const SeedPair> seed);
ProcrustesFit FitProcrustes(const EmbeddingTable &source,
                            const EmbeddingTable &target, const Lexicon &seed);

}  // namespace lexmine

#endif  // LEXMINE_PROCRUSTES_H_
