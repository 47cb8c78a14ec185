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

#include "lexmine/induce.h"

#include <unordered_set>

#include "lexmine/error.h"

namespace lexmine {

Lexicon InduceLexicon(const EmbeddingTable &source,
                      const EmbeddingTable &target, const LinearMap &map,
                      std::span<const std::string> ranked_words,
                      const InduceOptions &options) {
  if (options.cap < 1) throw InvalidArgumentError("cap must be >= 1");
  if (map.matrix.rows() != target.dim() || map.matrix.cols() != source.dim()) {
    throw InvalidArgumentError("map shape does not match the tables");
  }

  std::vector<std::string> words;
  std::vector<size_t> rows;
  std::unordered_set<std::string_view> seen;
  for (size_t i = 0; i < ranked_words.size() && i < options.cap; ++i) {
    const std::string &word = ranked_words[i];
    if (!seen.insert(word).second) continue;
    if (auto row = source.Find(word)) {
      words.push_back(word);
      rows.push_back(*row);
    }
  }
  Lexicon lexicon(LexiconProvenance::kProjected);
  if (words.empty()) return lexicon;

  Matrix queries(static_cast<Eigen::Index>(rows.size()), source.dim());
  for (size_t i = 0; i < rows.size(); ++i) {
    queries.row(i) = source.vectors().row(rows[i]);
  }
  auto mapped = std::make_shared<Matrix>(map.Apply(queries));
  NormalizeRows(*mapped);

  CslsScorer scorer(std::move(mapped), target.shared_vectors(),
                    options.csls_k, options.threads);
  const auto &vocab = target.vocab();
  auto best = scorer.Argmax(
      [&vocab](size_t a, size_t b) { return vocab[a] < vocab[b]; });
  for (size_t i = 0; i < words.size(); ++i) {
    lexicon.Insert(words[i], vocab[best[i]]);
  }
  return lexicon;
}

Lexicon InduceLexicon(const EmbeddingTable &source,
                      const EmbeddingTable &target, const LinearMap &map,
                      const FrequencyTable &source_frequencies,
                      const InduceOptions &options) {
  std::vector<std::string> ranked;
  for (auto &[word, count] : source_frequencies.TopK(options.cap)) {
    ranked.push_back(std::move(word));
  }
  return InduceLexicon(source, target, map, ranked, options);
}

}  // namespace lexmine
