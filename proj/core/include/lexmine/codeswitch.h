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

#ifndef LEXMINE_CODESWITCH_H_
#define LEXMINE_CODESWITCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "lexmine/corpus.h"
#include "lexmine/lexicon.h"

namespace lexmine {

enum class SwitchDirection { kSourceToTarget, kTargetToSource };

struct CodeSwitchConfig {
  double min_ratio = 0.20;
  double max_ratio = 0.50;
  uint64_t rng_seed = 0;
  SwitchDirection direction = SwitchDirection::kSourceToTarget;
  // When false, a sentence whose dictionary coverage is below min_ratio is
  // emitted with every covered token replaced instead of being skipped.
  bool skip_below_floor = true;

  // Throws InvalidArgumentError unless 0 < min_ratio <= max_ratio <= 1.
  void Validate() const;
};

struct SwitchedSentence {
  TokenizedSentence sentence;
  // Replaced token positions, ascending.
  std::vector<size_t> replaced;

  double ratio() const;
};

// Replaces a random subset of dictionary-covered tokens with their
// translations. A target ratio r is drawn uniformly from the configured band
// and round(r * length) tokens are replaced, clamped so that the achieved
// ratio stays inside the band. Returns nullopt when the sentence cannot be
// switched inside the band (too short, or too little dictionary coverage).
// The lexicon must already point in the configured direction.
std::optional<SwitchedSentence> CodeSwitchSentence(
    const TokenizedSentence &sentence, const Lexicon &lexicon,
    const CodeSwitchConfig &config, std::mt19937_64 &rng);

struct CodeSwitchStats {
  size_t emitted = 0;
  size_t skipped = 0;
  double mean_ratio = 0.0;
};

struct CodeSwitchResult {
  // Indexed like the input; nullopt for skipped lines.
  std::vector<std::optional<SwitchedSentence>> lines;
  CodeSwitchStats stats;
};

// Per-line generator seeded from (rng_seed, line index), so the output does
// not depend on the thread count.
std::mt19937_64 LineRng(uint64_t seed, uint64_t line);

CodeSwitchResult CodeSwitchCorpus(std::span<const TokenizedSentence> corpus,
                                  const Lexicon &lexicon,
                                  const CodeSwitchConfig &config,
                                  int threads = 1);

}  // namespace lexmine

#endif  // LEXMINE_CODESWITCH_H_
