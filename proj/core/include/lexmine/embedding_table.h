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

#ifndef LEXMINE_EMBEDDING_TABLE_H_
#define LEXMINE_EMBEDDING_TABLE_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace lexmine {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Scales every row to unit L2 norm. Throws InvalidArgumentError on a zero row.
void NormalizeRows(Matrix &rows);

// Word vectors with a vocabulary index. Rows are unit-normalized. The table
// is immutable once built; copies share the same underlying matrix.
class EmbeddingTable {
 public:
  EmbeddingTable();

  // Normalizes rows. Throws InvalidArgumentError on duplicate words, a
  // row/vocabulary size mismatch or a zero row.
  static EmbeddingTable FromRows(std::vector<std::string> vocab, Matrix rows);

  size_t size() const { return vocab_.size(); }
  int dim() const { return static_cast<int>(vectors_->cols()); }
  const std::vector<std::string> &vocab() const { return vocab_; }
  const Matrix &vectors() const { return *vectors_; }
  std::shared_ptr<const Matrix> shared_vectors() const { return vectors_; }

  std::optional<size_t> Find(std::string_view word) const;

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, size_t> index_;
  std::shared_ptr<const Matrix> vectors_;
};

struct LoadStats {
  size_t rows_read = 0;
  // Later occurrences of a word are dropped; the first one wins.
  size_t duplicates = 0;
};

// Text word-vector format: a "count dim" header, then "word v1 ... vd" per
// line. Reads at most `limit` rows. Throws ParseError with the line number on
// a malformed header, a wrong component count or a non-numeric component.
EmbeddingTable ReadVectors(std::istream &in,
                           std::optional<size_t> limit = std::nullopt,
                           LoadStats *stats = nullptr);
EmbeddingTable LoadVectors(const std::filesystem::path &path,
                           std::optional<size_t> limit = std::nullopt,
                           LoadStats *stats = nullptr);

void WriteVectors(std::ostream &out, const EmbeddingTable &table);

}  // namespace lexmine

#endif  // LEXMINE_EMBEDDING_TABLE_H_
