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

#include "lexmine/codeswitch.h"

#include <algorithm>
#include <cmath>

#include "lexmine/error.h"
#include "lexmine/parallel.h"

namespace lexmine {
namespace {

// Absorbs representation error in products such as 0.2 * 10.
constexpr double kRatioSlack = 1e-9;

}  // namespace

void CodeSwitchConfig::Validate() const {
  if (!(min_ratio > 0.0 && min_ratio <= max_ratio && max_ratio <= 1.0)) {
    throw InvalidArgumentError(
        "code-switch ratios must satisfy 0 < min <= max <= 1");
  }
}

double SwitchedSentence::ratio() const {
  if (sentence.tokens.empty()) return 0.0;
  return static_cast<double>(replaced.size()) /
         static_cast<double>(sentence.tokens.size());
}

std::optional<SwitchedSentence> CodeSwitchSentence(
    const TokenizedSentence &sentence, const Lexicon &lexicon,
    const CodeSwitchConfig &config, std::mt19937_64 &rng) {
  config.Validate();
  const size_t length = sentence.tokens.size();
  if (length == 0) return std::nullopt;

  std::vector<size_t> covered;
  for (size_t i = 0; i < length; ++i) {
    if (lexicon.contains(sentence.tokens[i])) covered.push_back(i);
  }

  std::uniform_real_distribution<double> ratio(config.min_ratio,
                                               config.max_ratio);
  const double r = ratio(rng);
  const auto wanted = static_cast<size_t>(std::llround(r * length));
  if (wanted == 0) return std::nullopt;

  const double len = static_cast<double>(length);
  size_t lowest = static_cast<size_t>(
      std::max(1.0, std::ceil(config.min_ratio * len - kRatioSlack)));
  size_t highest =
      static_cast<size_t>(std::floor(config.max_ratio * len + kRatioSlack));
  if (lowest > highest) return std::nullopt;

  size_t count = std::clamp(wanted, lowest, highest);
  if (covered.size() < lowest) {
    if (config.skip_below_floor || covered.empty()) return std::nullopt;
    count = covered.size();
  }
  count = std::min(count, covered.size());

  // Partial Fisher-Yates: the first `count` slots become a uniform sample.
  for (size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<size_t> pick(i, covered.size() - 1);
    std::swap(covered[i], covered[pick(rng)]);
  }
  covered.resize(count);
  std::sort(covered.begin(), covered.end());

  std::vector<std::string> tokens = sentence.tokens;
  for (size_t pos : covered) tokens[pos] = *lexicon.Find(tokens[pos]);

  SwitchedSentence out;
  out.sentence.raw = JoinTokens(tokens);
  out.sentence.token_set = TokenSet(tokens);
  out.sentence.tokens = std::move(tokens);
  out.replaced = std::move(covered);
  return out;
}

std::mt19937_64 LineRng(uint64_t seed, uint64_t line) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(line), static_cast<uint32_t>(line >> 32)};
  return std::mt19937_64(seq);
}

CodeSwitchResult CodeSwitchCorpus(std::span<const TokenizedSentence> corpus,
                                  const Lexicon &lexicon,
                                  const CodeSwitchConfig &config,
                                  int threads) {
  config.Validate();
  CodeSwitchResult result;
  result.lines.resize(corpus.size());
  ParallelFor(corpus.size(), threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      auto rng = LineRng(config.rng_seed, i);
      result.lines[i] = CodeSwitchSentence(corpus[i], lexicon, config, rng);
    }
  });
  double ratio_sum = 0.0;
  for (const auto &line : result.lines) {
    if (line) {
      ++result.stats.emitted;
      ratio_sum += line->ratio();
    } else {
      ++result.stats.skipped;
    }
  }
  if (result.stats.emitted > 0) {
    result.stats.mean_ratio = ratio_sum / result.stats.emitted;
  }
  return result;
}

}  // namespace lexmine
