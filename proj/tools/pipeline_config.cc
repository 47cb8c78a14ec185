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

#include "pipeline_config.h"

#include <cstdlib>
#include <fstream>
#include <set>

#include "lexmine/error.h"
#include "lexmine/parallel.h"
#include "manifest.h"

namespace lexmine {
namespace {

template <typename Config, typename Visitor>
void VisitFields(Config &c, Visitor &&visit) {
  visit("output_dir", c.output_dir);
  visit("threads", c.threads);
  visit("src_vectors", c.src_vectors);
  visit("tgt_vectors", c.tgt_vectors);
  visit("seed_lexicon", c.seed_lexicon);
  visit("src_corpus", c.src_corpus);
  visit("vector_limit", c.vector_limit);
  visit("cap", c.cap);
  visit("csls_k", c.csls_k);
  visit("docs", c.docs);
  visit("lexicon", c.lexicon);
  visit("threshold", c.threshold);
  visit("input", c.input);
  visit("min_ratio", c.min_ratio);
  visit("max_ratio", c.max_ratio);
  visit("seed", c.seed);
  visit("direction", c.direction);
  visit("gold", c.gold);
  visit("predictions", c.predictions);
  visit("src_text", c.src_text);
  visit("tgt_text", c.tgt_text);
  visit("sweep", c.sweep);
  visit("rmss_k", c.rmss_k);
  visit("full_matrix", c.full_matrix);
  visit("features_a", c.features_a);
  visit("features_b", c.features_b);
  visit("corpus_a", c.corpus_a);
  visit("corpus_b", c.corpus_b);
  visit("wals", c.wals);
  visit("lang_a", c.lang_a);
  visit("lang_b", c.lang_b);
  visit("overlap_merges", c.overlap_merges);
  visit("loss_log", c.loss_log);
  visit("corpora", c.corpora);
  visit("bpe_merges", c.bpe_merges);
}

void Require(bool ok, const std::string &message) {
  if (!ok) throw InvalidArgumentError(message);
}

}  // namespace

void PipelineConfig::Validate() const {
  Require(threads >= 0, "threads must be >= 0");
  Require(threshold >= 0.0 && threshold <= 1.0, "threshold must lie in [0, 1]");
  Require(cap >= 1, "cap must be >= 1");
  Require(csls_k >= 1, "csls-k must be >= 1");
  Require(rmss_k >= 1, "rmss-k must be >= 1");
  Require(min_ratio > 0.0 && min_ratio <= max_ratio && max_ratio <= 1.0,
          "ratios must satisfy 0 < min-ratio <= max-ratio <= 1");
  Require(direction == "src2tgt" || direction == "tgt2src",
          "direction must be src2tgt or tgt2src");
  Require(overlap_merges >= 0, "overlap-merges must be >= 0");
  Require(bpe_merges >= 0, "merges must be >= 0");
  Require(!output_dir.empty(), "output directory must not be empty");
}

int PipelineConfig::EffectiveThreads() const {
  return threads > 0 ? threads : DefaultThreads();
}

PipelineConfig DefaultConfig() {
  PipelineConfig config;
  if (const char *dir = std::getenv(kOutputDirEnv); dir && *dir) {
    config.output_dir = dir;
  }
  return config;
}

nlohmann::json ToJson(const PipelineConfig &config) {
  nlohmann::json json = nlohmann::json::object();
  VisitFields(config, [&](const char *key, const auto &value) {
    json[key] = value;
  });
  return json;
}

PipelineConfig FromJson(const nlohmann::json &json, PipelineConfig base) {
  if (!json.is_object()) throw InvalidArgumentError("config must be a JSON object");
  std::set<std::string> known;
  VisitFields(base, [&](const char *key, auto &value) {
    known.insert(key);
    auto it = json.find(key);
    if (it == json.end()) return;
    try {
      value = it->template get<std::decay_t<decltype(value)>>();
    } catch (const nlohmann::json::exception &) {
      throw InvalidArgumentError(std::string("config key \"") + key +
                                 "\" has the wrong type");
    }
  });
  for (const auto &item : json.items()) {
    if (!known.count(item.key())) {
      throw InvalidArgumentError("unknown config key \"" + item.key() + "\"");
    }
  }
  return base;
}

PipelineConfig LoadConfigFile(const std::filesystem::path &path,
                              PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
  if (json.is_object() && json.contains("tool") && json.contains("config")) {
    return FromJson(json.at("config"), std::move(base));
  }
  return FromJson(json, std::move(base));
}

std::string ConfigHash(const PipelineConfig &config) {
  return Sha256Hex(ToJson(config).dump());
}

}  // namespace lexmine
