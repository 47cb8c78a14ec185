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

#include "lexmine/embedding_table.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "lexmine/error.h"

namespace lexmine {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view field, T &value) {
  const char *end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

void NormalizeRows(Matrix &rows) {
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    double norm = rows.row(i).norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw InvalidArgumentError("row " + std::to_string(i) +
                                 " has zero or non-finite norm");
    }
    rows.row(i) /= norm;
  }
}

EmbeddingTable::EmbeddingTable() : vectors_(std::make_shared<Matrix>()) {}

EmbeddingTable EmbeddingTable::FromRows(std::vector<std::string> vocab,
                                        Matrix rows) {
  if (static_cast<Eigen::Index>(vocab.size()) != rows.rows()) {
    throw InvalidArgumentError("vocabulary and matrix sizes differ");
  }
  NormalizeRows(rows);
  EmbeddingTable table;
  table.index_.reserve(vocab.size());
  for (size_t i = 0; i < vocab.size(); ++i) {
    if (!table.index_.emplace(vocab[i], i).second) {
      throw InvalidArgumentError("duplicate word: " + vocab[i]);
    }
  }
  table.vocab_ = std::move(vocab);
  table.vectors_ = std::make_shared<const Matrix>(std::move(rows));
  return table;
}

std::optional<size_t> EmbeddingTable::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EmbeddingTable ReadVectors(std::istream &in, std::optional<size_t> limit,
                           LoadStats *stats) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  auto header = SplitFields(line);
  size_t count = 0;
  int dim = 0;
  if (header.size() != 2 || !ParseNumber(header[0], count) ||
      !ParseNumber(header[1], dim) || dim <= 0) {
    throw ParseError("malformed header, expected \"count dim\"", 1);
  }
  size_t wanted = limit ? std::min(*limit, count) : count;

  std::vector<std::string> vocab;
  std::vector<double> values;
  std::unordered_map<std::string, size_t> seen;
  LoadStats local;
  size_t line_no = 1;
  while (local.rows_read < wanted && std::getline(in, line)) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (static_cast<int>(fields.size()) != dim + 1) {
      throw ParseError("expected " + std::to_string(dim) +
                           " components, found " +
                           std::to_string(fields.size() - 1),
                       line_no);
    }
    ++local.rows_read;
    std::string word(fields[0]);
    size_t offset = values.size();
    for (int j = 0; j < dim; ++j) {
      double v;
      if (!ParseNumber(fields[j + 1], v) || !std::isfinite(v)) {
        throw ParseError("non-numeric component \"" +
                             std::string(fields[j + 1]) + "\"",
                         line_no);
      }
      values.push_back(v);
    }
    if (!seen.emplace(word, vocab.size()).second) {
      ++local.duplicates;
      values.resize(offset);
      continue;
    }
    double norm = 0.0;
    for (int j = 0; j < dim; ++j) norm += values[offset + j] * values[offset + j];
    if (norm == 0.0) throw ParseError("zero vector for \"" + word + "\"", line_no);
    vocab.push_back(std::move(word));
  }
  if (local.rows_read < wanted) {
    throw ParseError("expected " + std::to_string(wanted) + " rows, found " +
                         std::to_string(local.rows_read),
                     line_no);
  }
  Matrix rows = Eigen::Map<Matrix>(values.data(),
                                   static_cast<Eigen::Index>(vocab.size()), dim);
  if (stats) *stats = local;
  return EmbeddingTable::FromRows(std::move(vocab), std::move(rows));
}

EmbeddingTable LoadVectors(const std::filesystem::path &path,
                           std::optional<size_t> limit, LoadStats *stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadVectors(in, limit, stats);
}

void WriteVectors(std::ostream &out, const EmbeddingTable &table) {
  const Matrix &m = table.vectors();
  out << table.size() << ' ' << table.dim() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (size_t i = 0; i < table.size(); ++i) {
    out << table.vocab()[i];
    for (int j = 0; j < table.dim(); ++j) out << ' ' << m(i, j);
    out << '\n';
  }
}

}  // namespace lexmine
