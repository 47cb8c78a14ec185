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

#include <memory>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "lexmine/bpe.h"
#include "lexmine/codeswitch.h"
#include "lexmine/corpus.h"
#include "lexmine/csls.h"
#include "lexmine/embedding_table.h"
#include "lexmine/mining.h"
#include "lexmine/procrustes.h"
#include "lexmine/retrieval.h"

namespace lexmine {
namespace {

Matrix RandomRows(size_t rows, int dim, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix out(rows, dim);
  for (size_t i = 0; i < rows; ++i) {
    for (int j = 0; j < dim; ++j) out(i, j) = normal(rng);
  }
  NormalizeRows(out);
  return out;
}

std::vector<std::string> Words(const std::string &prefix, size_t n) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<TokenizedSentence> RandomSentences(size_t count, size_t vocab,
                                               uint64_t seed,
                                               const std::string &prefix) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> len(6, 20), word(0, vocab - 1);
  std::vector<TokenizedSentence> out;
  for (size_t i = 0; i < count; ++i) {
    std::vector<std::string> tokens(len(rng));
    for (auto &t : tokens) t = prefix + std::to_string(word(rng));
    out.push_back(FromTokens(std::move(tokens)));
  }
  return out;
}

void BM_Procrustes(benchmark::State &state) {
  const int dim = static_cast<int>(state.range(0));
  auto source = EmbeddingTable::FromRows(Words("s", 5000), RandomRows(5000, dim, 1));
  auto target = EmbeddingTable::FromRows(Words("t", 5000), RandomRows(5000, dim, 2));
  std::vector<SeedPair> seed;
  for (size_t i = 0; i < 5000; ++i) seed.push_back({source.vocab()[i], target.vocab()[i]});
  for (auto _ : state) {
    benchmark::DoNotOptimize(FitProcrustes(source, target, seed));
  }
}
BENCHMARK(BM_Procrustes)->Arg(50)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_CslsArgmax(benchmark::State &state) {
  const size_t n = static_cast<size_t>(state.range(0));
  auto queries = std::make_shared<const Matrix>(RandomRows(n, 300, 3));
  auto candidates = std::make_shared<const Matrix>(RandomRows(n, 300, 4));
  for (auto _ : state) {
    CslsScorer scorer(queries, candidates, 10, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(scorer.Argmax());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_CslsArgmax)
    ->Args({2000, 1})
    ->Args({2000, 4})
    ->Args({5000, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_MineDocuments(benchmark::State &state) {
  std::vector<LinkedDocumentPair> docs;
  for (int d = 0; d < 200; ++d) {
    docs.push_back({"doc" + std::to_string(d),
                    RandomSentences(50, 3000, 10 + d, "s"),
                    RandomSentences(60, 3000, 1000 + d, "t")});
  }
  Lexicon lexicon;
  for (size_t i = 0; i < 3000; ++i) {
    lexicon.Insert("s" + std::to_string(i), "t" + std::to_string(i));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MineDocuments(docs, lexicon, {0.1, static_cast<int>(state.range(0))}));
  }
  state.SetItemsProcessed(state.iterations() * 200 * 50);
}
BENCHMARK(BM_MineDocuments)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_LearnBpe(benchmark::State &state) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(2, 10), letter(0, 25);
  FrequencyTable counts;
  for (int i = 0; i < 20000; ++i) {
    std::string w;
    for (int n = len(rng); n > 0; --n) w += static_cast<char>('a' + letter(rng));
    counts.Add(w, 1 + i % 7);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(LearnBpe(counts, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_LearnBpe)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_Rmss(benchmark::State &state) {
  const size_t n = static_cast<size_t>(state.range(0));
  auto source = SentenceEmbeddingSet::FromRows(Words("s", n),
                                               RandomRows(n, 768, 6), Side::kSource);
  auto target = SentenceEmbeddingSet::FromRows(Words("t", n),
                                               RandomRows(n, 768, 7), Side::kTarget);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RmssRetrieve(source, target, 4, 4));
  }
}
BENCHMARK(BM_Rmss)->Arg(1000)->Arg(4000)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_CodeSwitch(benchmark::State &state) {
  auto corpus = RandomSentences(20000, 5000, 8, "s");
  Lexicon lexicon;
  for (size_t i = 0; i < 5000; ++i) {
    lexicon.Insert("s" + std::to_string(i), "t" + std::to_string(i));
  }
  CodeSwitchConfig config;
  config.rng_seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CodeSwitchCorpus(corpus, lexicon, config, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * corpus.size());
}
BENCHMARK(BM_CodeSwitch)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lexmine

BENCHMARK_MAIN();
