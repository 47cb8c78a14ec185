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

#include "lexmine/lingmetrics.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "json.hpp"
#include "lexmine/bpe.h"
#include "lexmine/error.h"

namespace lexmine {
namespace {

template <typename T>
double SetJaccard(const std::set<T> &a, const std::set<T> &b) {
  if (a.empty() && b.empty()) return 0.0;
  size_t common = 0;
  for (const auto &item : a) common += b.count(item);
  return static_cast<double>(common) /
         static_cast<double>(a.size() + b.size() - common);
}

std::set<UChar32> CodePoints(std::span<const std::string> corpus) {
  std::set<UChar32> chars;
  for (const auto &line : corpus) {
    const auto *bytes = reinterpret_cast<const uint8_t *>(line.data());
    int32_t length = static_cast<int32_t>(line.size());
    for (int32_t i = 0; i < length;) {
      int32_t start = i;
      UChar32 c;
      U8_NEXT(bytes, i, length, c);
      if (c < 0) throw DecodeError(start);
      if (!u_isUWhiteSpace(c)) chars.insert(c);
    }
  }
  return chars;
}

std::vector<std::string> SplitCsvRow(const std::string &line, size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  return fields;
}

}  // namespace

double SyntacticDistance(const FeatureVector &a, const FeatureVector &b) {
  if (a.features.size() != b.features.size()) {
    throw InvalidArgumentError("feature vectors differ in length");
  }
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  size_t shared = 0;
  for (size_t i = 0; i < a.features.size(); ++i) {
    if (!a.features[i] || !b.features[i]) continue;
    double x = *a.features[i], y = *b.features[i];
    dot += x * y;
    norm_a += x * x;
    norm_b += y * y;
    ++shared;
  }
  if (shared == 0) {
    throw InvalidArgumentError("no feature is present in both " + a.language +
                               " and " + b.language);
  }
  if (norm_a == 0.0 || norm_b == 0.0) {
    throw InvalidArgumentError("masked feature vector is all zeros");
  }
  return 1.0 - dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

double CharOverlap(std::span<const std::string> corpus_a,
                   std::span<const std::string> corpus_b) {
  return SetJaccard(CodePoints(corpus_a), CodePoints(corpus_b));
}

double TokenOverlap(std::span<const TokenizedSentence> corpus_a,
                    std::span<const TokenizedSentence> corpus_b,
                    int num_merges) {
  BpeVocabulary a = LearnBpe(corpus_a, num_merges);
  BpeVocabulary b = LearnBpe(corpus_b, num_merges);
  return SetJaccard(a.vocab(), b.vocab());
}

int SharedWals(const TypologyTable &a, const TypologyTable &b) {
  int shared = 0;
  for (const auto &[feature, value] : a.features) {
    auto it = b.features.find(feature);
    if (it != b.features.end() && it->second == value) ++shared;
  }
  return shared;
}

double OnlineCodelength(const LossLog &log) {
  if (log.num_classes < 2) {
    throw InvalidArgumentError("num_classes must be >= 2");
  }
  if (log.first_subset_tokens < 0) {
    throw InvalidArgumentError("first_subset_tokens must be >= 0");
  }
  double bits = static_cast<double>(log.first_subset_tokens) *
                std::log2(static_cast<double>(log.num_classes));
  for (size_t i = 0; i < log.subsets.size(); ++i) {
    const SubsetLoss &subset = log.subsets[i];
    if (i > 0 && subset.size <= log.subsets[i - 1].size) {
      throw InvalidArgumentError("subset sizes must strictly increase");
    }
    if (!(subset.loss_bits >= 0.0)) {
      throw InvalidArgumentError("subset losses must be non-negative");
    }
    if (i > 0) bits += subset.loss_bits;
  }
  return bits;
}

FeatureVector ReadFeatureVector(std::istream &in) {
  try {
    auto doc = nlohmann::json::parse(in);
    FeatureVector vector;
    vector.language = doc.at("language").get<std::string>();
    for (const auto &value : doc.at("features")) {
      if (value.is_null()) {
        vector.features.emplace_back(std::nullopt);
      } else {
        vector.features.emplace_back(value.get<double>());
      }
    }
    return vector;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(e.what(), 0);
  }
}

std::map<std::string, TypologyTable> ReadWalsCsv(std::istream &in) {
  std::map<std::string, TypologyTable> tables;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = SplitCsvRow(line, line_no);
    if (line_no == 1 && fields[0] == "language") continue;
    if (fields.size() != 3) {
      throw ParseError("expected \"language,feature_id,value\"", line_no);
    }
    auto &table = tables[fields[0]];
    table.language = fields[0];
    table.features[fields[1]] = fields[2];
  }
  return tables;
}

LossLog ReadLossLog(std::istream &in) {
  try {
    auto doc = nlohmann::json::parse(in);
    LossLog log;
    log.num_classes = doc.at("num_classes").get<int64_t>();
    log.first_subset_tokens = doc.at("first_subset_tokens").get<int64_t>();
    for (const auto &subset : doc.at("subsets")) {
      log.subsets.push_back(SubsetLoss{subset.at("size").get<int64_t>(),
                                       subset.value("loss_bits", 0.0)});
    }
    return log;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace lexmine
