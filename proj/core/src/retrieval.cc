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

#include "lexmine/retrieval.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <unordered_set>

#include "lexmine/csls.h"
#include "lexmine/error.h"
#include "lexmine/mining.h"
#include "lexmine/parallel.h"

namespace lexmine {
namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Mean of the k largest entries of every row.
Eigen::VectorXd RowTopKMeans(const Matrix &m, int k, int threads) {
  Eigen::VectorXd out(m.rows());
  ParallelFor(m.rows(), threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      out(i) = TopKMean(std::span<const double>(m.row(i).data(), m.cols()), k);
    }
  });
  return out;
}

}  // namespace

SentenceEmbeddingSet SentenceEmbeddingSet::FromRows(std::vector<std::string> ids,
                                                    Matrix rows, Side side) {
  if (static_cast<Eigen::Index>(ids.size()) != rows.rows()) {
    throw InvalidArgumentError("id and vector counts differ");
  }
  std::unordered_set<std::string> seen;
  for (const auto &id : ids) {
    if (!seen.insert(id).second) {
      throw InvalidArgumentError("duplicate sentence id: " + id);
    }
  }
  NormalizeRows(rows);
  SentenceEmbeddingSet set;
  set.ids_ = std::move(ids);
  set.vectors_ = std::make_shared<const Matrix>(std::move(rows));
  set.side_ = side;
  return set;
}

SentenceEmbeddingSet SentenceEmbeddingSet::FromTable(const EmbeddingTable &table,
                                                     Side side) {
  return FromRows(table.vocab(), table.vectors(), side);
}

Matrix RmssScores(const SentenceEmbeddingSet &source,
                  const SentenceEmbeddingSet &target, int k, int threads) {
  if (k < 1) throw InvalidArgumentError("RMSS k must be >= 1");
  if (static_cast<size_t>(k) > source.size() ||
      static_cast<size_t>(k) > target.size()) {
    throw InvalidArgumentError("RMSS k exceeds a side's population");
  }
  if (source.dim() != target.dim()) {
    throw InvalidArgumentError("source and target dimensions differ");
  }
  Matrix cosines = source.vectors() * target.vectors().transpose();
  Matrix transposed = cosines.transpose();
  // Mean cosine of each source to its k nearest targets, and of each target
  // to its k nearest sources.
  Eigen::VectorXd source_margin = RowTopKMeans(cosines, k, threads);
  Eigen::VectorXd target_margin = RowTopKMeans(transposed, k, threads);

  Matrix scores(cosines.rows(), cosines.cols());
  for (Eigen::Index i = 0; i < cosines.rows(); ++i) {
    for (Eigen::Index j = 0; j < cosines.cols(); ++j) {
      double denominator = source_margin(i) / 2.0 + target_margin(j) / 2.0;
      if (denominator == 0.0) {
        throw NumericalError("RMSS denominator is zero for pair (" +
                             source.ids()[i] + ", " + target.ids()[j] + ")");
      }
      scores(i, j) = cosines(i, j) / denominator;
    }
  }
  return scores;
}

std::vector<Retrieval> ArgmaxRows(const Matrix &scores) {
  std::vector<Retrieval> out;
  if (scores.cols() == 0) return out;
  out.reserve(scores.rows());
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    Retrieval best{0, scores(i, 0)};
    for (Eigen::Index j = 1; j < scores.cols(); ++j) {
      if (scores(i, j) > best.score) best = {static_cast<size_t>(j), scores(i, j)};
    }
    out.push_back(best);
  }
  return out;
}

std::vector<Retrieval> RmssRetrieve(const SentenceEmbeddingSet &source,
                                    const SentenceEmbeddingSet &target, int k,
                                    int threads) {
  return ArgmaxRows(RmssScores(source, target, k, threads));
}

std::vector<Retrieval> JaccardRetrieve(
    std::span<const TokenizedSentence> source,
    std::span<const TokenizedSentence> target, const Lexicon &lexicon) {
  std::vector<Retrieval> out;
  if (target.empty()) return out;
  out.reserve(source.size());
  for (const auto &sentence : source) {
    TokenSet translated = TranslateTokens(sentence, lexicon);
    Retrieval best{0, Jaccard(translated, target[0].token_set)};
    for (size_t j = 1; j < target.size(); ++j) {
      double score = Jaccard(translated, target[j].token_set);
      if (score > best.score) best = {j, score};
    }
    out.push_back(best);
  }
  return out;
}

GoldBitext GoldBitext::FromPairs(
    const std::vector<std::pair<std::string, std::string>> &pairs) {
  GoldBitext gold;
  std::set<std::string> targets;
  for (const auto &[source, target] : pairs) {
    if (!gold.gold_.emplace(source, target).second) {
      throw InvalidArgumentError("gold source repeated: " + source);
    }
    if (!targets.insert(target).second) {
      throw InvalidArgumentError("gold target shared by two sources: " +
                                 target);
    }
  }
  return gold;
}

const std::string *GoldBitext::Find(const std::string &source_id) const {
  auto it = gold_.find(source_id);
  return it == gold_.end() ? nullptr : &it->second;
}

GoldBitext ReadGoldTsv(std::istream &in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw ParseError("expected \"source-id<TAB>target-id\"", line_no);
    }
    pairs.emplace_back(fields[0], fields[1]);
  }
  try {
    return GoldBitext::FromPairs(pairs);
  } catch (const InvalidArgumentError &e) {
    throw ParseError(e.what(), 0);
  }
}

GoldBitext ReadGoldTsv(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadGoldTsv(in);
}

Predictions ReadPredictionsTsv(std::istream &in) {
  Predictions predictions;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    double score = 0.0;
    if (fields.size() != 3) {
      throw ParseError("expected \"source-id<TAB>target-id<TAB>score\"",
                       line_no);
    }
    const auto &s = fields[2];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), score);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("non-numeric score \"" + s + "\"", line_no);
    }
    if (!predictions.emplace(fields[0], Prediction{fields[1], score}).second) {
      throw ParseError("duplicate prediction for " + fields[0], line_no);
    }
  }
  return predictions;
}

RetrievalReport EvaluatePrf(const Predictions &predictions,
                            const GoldBitext &gold, double threshold) {
  RetrievalReport report;
  report.gold = gold.size();
  report.threshold = threshold;
  for (const auto &[source, prediction] : predictions) {
    const std::string *expected = gold.Find(source);
    if (expected == nullptr) {
      throw InvalidArgumentError("prediction for unknown source id: " + source);
    }
    if (prediction.score < threshold) continue;
    ++report.predicted;
    if (*expected == prediction.target_id) ++report.correct;
  }
  if (report.predicted > 0) {
    report.precision = static_cast<double>(report.correct) /
                       static_cast<double>(report.predicted);
  }
  if (report.gold > 0) {
    report.recall =
        static_cast<double>(report.correct) / static_cast<double>(report.gold);
  }
  double sum = report.precision + report.recall;
  report.f1 = sum > 0.0 ? 2.0 * report.precision * report.recall / sum : 0.0;
  return report;
}

std::vector<RetrievalReport> SweepPrf(const Predictions &predictions,
                                      const GoldBitext &gold,
                                      std::span<const double> thresholds) {
  std::vector<RetrievalReport> out;
  out.reserve(thresholds.size());
  for (double t : thresholds) out.push_back(EvaluatePrf(predictions, gold, t));
  return out;
}

std::vector<RetrievalReport> SweepPrf(const Predictions &predictions,
                                      const GoldBitext &gold) {
  std::set<double> scores;
  for (const auto &[source, prediction] : predictions) {
    scores.insert(prediction.score);
  }
  std::vector<double> thresholds(scores.begin(), scores.end());
  return SweepPrf(predictions, gold, thresholds);
}

}  // namespace lexmine
