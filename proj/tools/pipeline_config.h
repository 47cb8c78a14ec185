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

#ifndef LEXMINE_TOOLS_PIPELINE_CONFIG_H_
#define LEXMINE_TOOLS_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace lexmine {

// Environment variable naming the default output directory.
inline constexpr char kOutputDirEnv[] = "LEXMINE_OUTPUT_DIR";
inline constexpr char kDefaultOutputDir[] = "lexmine_out";

// Every knob of every subcommand. Defaults follow the library defaults.
struct PipelineConfig {
  std::string output_dir = kDefaultOutputDir;
  // 0 means one worker per hardware thread.
  int threads = 0;

  // induce
  std::string src_vectors;
  std::string tgt_vectors;
  std::string seed_lexicon;
  std::string src_corpus;
  uint64_t vector_limit = 0;  // 0: read every row
  uint64_t cap = 200000;
  int csls_k = 10;

  // mine, codeswitch, eval-retrieval
  std::string docs;
  std::string lexicon;
  double threshold = 0.1;

  // codeswitch
  std::string input;
  double min_ratio = 0.20;
  double max_ratio = 0.50;
  uint64_t seed = 0;
  std::string direction = "src2tgt";

  // eval-retrieval
  std::string gold;
  std::string predictions;
  std::string src_text;
  std::string tgt_text;
  bool sweep = false;

  // rmss
  int rmss_k = 4;
  bool full_matrix = false;

  // metrics
  std::string features_a;
  std::string features_b;
  std::string corpus_a;
  std::string corpus_b;
  std::string wals;
  std::string lang_a;
  std::string lang_b;
  int overlap_merges = 8000;

  // codelength
  std::string loss_log;

  // bpe-learn
  std::vector<std::string> corpora;
  int bpe_merges = 60000;

  // Throws InvalidArgumentError when a numeric parameter is out of range.
  void Validate() const;
  int EffectiveThreads() const;

  bool operator==(const PipelineConfig &) const = default;
};

// Defaults, with output_dir taken from LEXMINE_OUTPUT_DIR when set.
PipelineConfig DefaultConfig();

nlohmann::json ToJson(const PipelineConfig &config);
// Keys missing from `json` keep their value in `base`. Unknown keys are an
// error.
PipelineConfig FromJson(const nlohmann::json &json,
                        PipelineConfig base = PipelineConfig());

// Reads a config file. A manifest written by a previous run is accepted too;
// its "config" object is used.
PipelineConfig LoadConfigFile(const std::filesystem::path &path,
                              PipelineConfig base = PipelineConfig());

// SHA-256 of the canonical (sorted-key) JSON form.
std::string ConfigHash(const PipelineConfig &config);

}  // namespace lexmine

#endif  // LEXMINE_TOOLS_PIPELINE_CONFIG_H_
