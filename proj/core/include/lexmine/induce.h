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

#ifndef LEXMINE_INDUCE_H_
#define LEXMINE_INDUCE_H_

#include <cstddef>
#include <span>
#include <string>

#include "lexmine/corpus.h"
#include "lexmine/csls.h"
#include "lexmine/embedding_table.h"
#include "lexmine/lexicon.h"
#include "lexmine/procrustes.h"

namespace lexmine {

inline constexpr size_t kDefaultFrequentWordCap = 200000;

struct InduceOptions {
  size_t cap = kDefaultFrequentWordCap;
  int csls_k = kDefaultCslsK;
  int threads = 1;
};

// Projects the `cap` most frequent source words through `map` and translates
// each into its CSLS-best target word. Words missing from the source table are
// skipped. Equal scores go to the lexicographically smallest target word.
// The projected words form the query pool of the CSLS density estimate.
Lexicon InduceLexicon(const EmbeddingTable &source,
                      const EmbeddingTable &target, const LinearMap &map,
                      const FrequencyTable &source_frequencies,
                      const InduceOptions &options = {});

// Same, with words already ranked by frequency (most frequent first).
Lexicon InduceLexicon(const EmbeddingTable &source,
                      const EmbeddingTable &target, const LinearMap &map,
                      std::span<const std::string> ranked_words,
                      const InduceOptions &options = {});

}  // namespace lexmine

#endif  // LEXMINE_INDUCE_H_
