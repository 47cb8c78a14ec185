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

#include "commands.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>

#include "CLI11.hpp"
#include "lexmine/bpe.h"
#include "lexmine/codeswitch.h"
#include "lexmine/corpus.h"
#include "lexmine/embedding_table.h"
#include "lexmine/error.h"
#include "lexmine/induce.h"
#include "lexmine/lexicon.h"
#include "lexmine/lingmetrics.h"
#include "lexmine/mining.h"
#include "lexmine/procrustes.h"
#include "lexmine/retrieval.h"
#include "manifest.h"

namespace lexmine {
namespace {

namespace fs = std::filesystem;

struct SubcommandInfo {
  Subcommand command;
  const char *name;
  const char *description;
};

constexpr SubcommandInfo kSubcommands[] = {
    {Subcommand::kInduce, "induce",
     "Fit an orthogonal map from a seed lexicon and induce a projected "
     "lexicon with CSLS"},
    {Subcommand::kMine, "mine",
     "Mine comparable sentence pairs from linked documents"},
    {Subcommand::kCodeswitch, "codeswitch",
     "Code-switch a monolingual corpus through a lexicon"},
    {Subcommand::kEvalRetrieval, "eval-retrieval",
     "Precision/recall/F1 of retrieval predictions against a gold bitext"},
    {Subcommand::kRmss, "rmss",
     "Ratio-margin retrieval over sentence embeddings"},
    {Subcommand::kMetrics, "metrics", "Language-pair similarity metrics"},
    {Subcommand::kCodelength, "codelength",
     "Online codelength of a training loss log"},
    {Subcommand::kBpeLearn, "bpe-learn", "Learn BPE merges from corpora"},
};

void RequireInput(const std::string &value, const char *flag) {
  if (value.empty()) {
    throw InvalidArgumentError(std::string("missing required --") + flag);
  }
}

std::ofstream OpenOutput(const fs::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

fs::path OutputDir(const PipelineConfig &config) {
  fs::path dir(config.output_dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<TokenizedSentence> LoadCorpus(const fs::path &path) {
  return TokenizeLines(ReadLines(path));
}

std::string FormatScore(double score) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", score);
  return buffer;
}

void WriteJsonFile(const fs::path &path, const nlohmann::json &json) {
  auto out = OpenOutput(path);
  out << json.dump(2) << '\n';
}

nlohmann::json ReportJson(const RetrievalReport &report) {
  return {{"precision", report.precision}, {"recall", report.recall},
          {"f1", report.f1},               {"predicted", report.predicted},
          {"correct", report.correct},     {"gold", report.gold},
          {"threshold", report.threshold}};
}

CommandResult RunInduce(const PipelineConfig &config) {
  RequireInput(config.src_vectors, "src-vectors");
  RequireInput(config.tgt_vectors, "tgt-vectors");
  RequireInput(config.seed_lexicon, "seed-lexicon");
  CommandResult result;
  result.inputs = {config.src_vectors, config.tgt_vectors, config.seed_lexicon};

  std::optional<size_t> limit;
  if (config.vector_limit > 0) limit = config.vector_limit;
  LoadStats src_stats, tgt_stats;
  EmbeddingTable source = LoadVectors(config.src_vectors, limit, &src_stats);
  EmbeddingTable target = LoadVectors(config.tgt_vectors, limit, &tgt_stats);
  std::vector<SeedPair> seed = ReadSeedPairs(fs::path(config.seed_lexicon));
  ProcrustesFit fit = FitProcrustes(source, target, seed);

  InduceOptions options;
  options.cap = config.cap;
  options.csls_k = config.csls_k;
  options.threads = config.EffectiveThreads();
  Lexicon lexicon;
  if (config.src_corpus.empty()) {
    // Vector files list words by descending frequency.
    lexicon = InduceLexicon(source, target, fit.map, source.vocab(), options);
  } else {
    result.inputs.push_back(config.src_corpus);
    FrequencyTable frequencies = CountFrequencies(LoadCorpus(config.src_corpus));
    lexicon = InduceLexicon(source, target, fit.map, frequencies, options);
  }

  fs::path out_path = OutputDir(config) / "lexicon.tsv";
  auto out = OpenOutput(out_path);
  WriteLexicon(out, lexicon);
  out.close();
  result.outputs = {out_path};
  result.stats = {{"seed_pairs_used", fit.used_pairs},
                  {"seed_pairs_skipped", fit.skipped_pairs},
                  {"source_duplicates", src_stats.duplicates},
                  {"target_duplicates", tgt_stats.duplicates},
                  {"lexicon_entries", lexicon.size()}};
  return result;
}

CommandResult RunMine(const PipelineConfig &config) {
  RequireInput(config.docs, "docs");
  RequireInput(config.lexicon, "lexicon");
  CommandResult result;
  result.inputs = {config.docs, config.lexicon};

  auto docs = LoadLinkedDocuments(config.docs);
  Lexicon lexicon = ReadLexicon(fs::path(config.lexicon));
  MiningOptions options;
  options.threshold = config.threshold;
  options.threads = config.EffectiveThreads();
  auto pairs = MineDocuments(docs, lexicon, options);

  fs::path dir = OutputDir(config);
  fs::path tsv = dir / "mined.tsv", src = dir / "mined.src",
           tgt = dir / "mined.tgt";
  {
    auto out = OpenOutput(tsv);
    WriteMinedTsv(out, pairs);
    auto src_out = OpenOutput(src);
    auto tgt_out = OpenOutput(tgt);
    WriteMinedParallel(src_out, tgt_out, pairs);
  }
  size_t sentences = 0;
  for (const auto &doc : docs) sentences += doc.src_sentences.size();
  result.outputs = {tsv, src, tgt};
  result.stats = {{"documents", docs.size()},
                  {"source_sentences", sentences},
                  {"mined_pairs", pairs.size()}};
  return result;
}

CommandResult RunCodeswitch(const PipelineConfig &config) {
  RequireInput(config.input, "input");
  RequireInput(config.lexicon, "lexicon");
  CommandResult result;
  result.inputs = {config.input, config.lexicon};

  auto corpus = LoadCorpus(config.input);
  Lexicon lexicon = ReadLexicon(fs::path(config.lexicon));
  CodeSwitchConfig switch_config;
  switch_config.min_ratio = config.min_ratio;
  switch_config.max_ratio = config.max_ratio;
  switch_config.rng_seed = config.seed;
  if (config.direction == "tgt2src") {
    switch_config.direction = SwitchDirection::kTargetToSource;
    lexicon = lexicon.Inverted();
  }
  auto switched = CodeSwitchCorpus(corpus, lexicon, switch_config,
                                   config.EffectiveThreads());

  fs::path out_path = OutputDir(config) / "codeswitched.txt";
  {
    auto out = OpenOutput(out_path);
    for (const auto &line : switched.lines) {
      if (line) out << line->sentence.raw << '\n';
    }
  }
  result.outputs = {out_path};
  result.stats = {{"emitted", switched.stats.emitted},
                  {"skipped", switched.stats.skipped},
                  {"mean_ratio", switched.stats.mean_ratio}};
  return result;
}

CommandResult RunEvalRetrieval(const PipelineConfig &config) {
  RequireInput(config.gold, "gold");
  CommandResult result;
  result.inputs = {config.gold};
  GoldBitext gold = ReadGoldTsv(fs::path(config.gold));
  fs::path dir = OutputDir(config);

  Predictions predictions;
  if (!config.predictions.empty()) {
    result.inputs.push_back(config.predictions);
    std::ifstream in(config.predictions);
    if (!in) throw IoError("cannot open " + config.predictions);
    predictions = ReadPredictionsTsv(in);
  } else {
    // Jaccard retrieval over word-translated sentences; ids are 1-based
    // line numbers.
    RequireInput(config.src_text, "src-text");
    RequireInput(config.tgt_text, "tgt-text");
    RequireInput(config.lexicon, "lexicon");
    result.inputs.insert(result.inputs.end(),
                         {config.src_text, config.tgt_text, config.lexicon});
    auto source = LoadCorpus(config.src_text);
    auto target = LoadCorpus(config.tgt_text);
    Lexicon lexicon = ReadLexicon(fs::path(config.lexicon));
    auto retrieved = JaccardRetrieve(source, target, lexicon);
    fs::path pred_path = dir / "predictions.tsv";
    auto out = OpenOutput(pred_path);
    for (size_t i = 0; i < retrieved.size(); ++i) {
      std::string src_id = std::to_string(i + 1);
      std::string tgt_id = std::to_string(retrieved[i].target + 1);
      predictions[src_id] = Prediction{tgt_id, retrieved[i].score};
      out << src_id << '\t' << tgt_id << '\t' << FormatScore(retrieved[i].score)
          << '\n';
    }
    result.outputs.push_back(pred_path);
  }

  RetrievalReport report = EvaluatePrf(predictions, gold, config.threshold);
  fs::path report_path = dir / "report.json";
  WriteJsonFile(report_path, ReportJson(report));
  result.outputs.push_back(report_path);
  if (config.sweep) {
    fs::path sweep_path = dir / "sweep.tsv";
    auto out = OpenOutput(sweep_path);
    out << "threshold\tprecision\trecall\tf1\tpredicted\tcorrect\n";
    for (const auto &r : SweepPrf(predictions, gold)) {
      out << FormatScore(r.threshold) << '\t' << FormatScore(r.precision)
          << '\t' << FormatScore(r.recall) << '\t' << FormatScore(r.f1) << '\t'
          << r.predicted << '\t' << r.correct << '\n';
    }
    result.outputs.push_back(sweep_path);
  }
  result.stats = ReportJson(report);
  return result;
}

CommandResult RunRmss(const PipelineConfig &config) {
  RequireInput(config.src_vectors, "src-vectors");
  RequireInput(config.tgt_vectors, "tgt-vectors");
  CommandResult result;
  result.inputs = {config.src_vectors, config.tgt_vectors};
  auto source = SentenceEmbeddingSet::FromTable(
      LoadVectors(config.src_vectors), Side::kSource);
  auto target = SentenceEmbeddingSet::FromTable(
      LoadVectors(config.tgt_vectors), Side::kTarget);
  Matrix scores =
      RmssScores(source, target, config.rmss_k, config.EffectiveThreads());
  auto best = ArgmaxRows(scores);

  fs::path dir = OutputDir(config);
  fs::path top1 = dir / "rmss_top1.tsv";
  {
    auto out = OpenOutput(top1);
    for (size_t i = 0; i < best.size(); ++i) {
      out << source.ids()[i] << '\t' << target.ids()[best[i].target] << '\t'
          << FormatScore(best[i].score) << '\n';
    }
  }
  result.outputs = {top1};
  if (config.full_matrix) {
    fs::path full = dir / "rmss_scores.tsv";
    auto out = OpenOutput(full);
    out << "source_id";
    for (const auto &id : target.ids()) out << '\t' << id;
    out << '\n';
    for (Eigen::Index i = 0; i < scores.rows(); ++i) {
      out << source.ids()[i];
      for (Eigen::Index j = 0; j < scores.cols(); ++j) {
        out << '\t' << FormatScore(scores(i, j));
      }
      out << '\n';
    }
    result.outputs.push_back(full);
  }
  result.stats = {{"sources", source.size()},
                  {"targets", target.size()},
                  {"k", config.rmss_k}};
  return result;
}

CommandResult RunMetrics(const PipelineConfig &config) {
  CommandResult result;
  nlohmann::json metrics = nlohmann::json::object();
  if (!config.features_a.empty() || !config.features_b.empty()) {
    RequireInput(config.features_a, "features-a");
    RequireInput(config.features_b, "features-b");
    result.inputs.insert(result.inputs.end(),
                         {config.features_a, config.features_b});
    std::ifstream a(config.features_a), b(config.features_b);
    if (!a || !b) throw IoError("cannot open feature-vector files");
    metrics["syntactic_distance"] =
        SyntacticDistance(ReadFeatureVector(a), ReadFeatureVector(b));
  }
  if (!config.corpus_a.empty() || !config.corpus_b.empty()) {
    RequireInput(config.corpus_a, "corpus-a");
    RequireInput(config.corpus_b, "corpus-b");
    result.inputs.insert(result.inputs.end(), {config.corpus_a, config.corpus_b});
    auto lines_a = ReadLines(fs::path(config.corpus_a));
    auto lines_b = ReadLines(fs::path(config.corpus_b));
    metrics["char_overlap"] = CharOverlap(lines_a, lines_b);
    metrics["token_overlap"] = TokenOverlap(
        TokenizeLines(lines_a), TokenizeLines(lines_b), config.overlap_merges);
    metrics["overlap_merges"] = config.overlap_merges;
  }
  if (!config.wals.empty()) {
    RequireInput(config.lang_a, "lang-a");
    RequireInput(config.lang_b, "lang-b");
    result.inputs.push_back(config.wals);
    std::ifstream in(config.wals);
    if (!in) throw IoError("cannot open " + config.wals);
    auto tables = ReadWalsCsv(in);
    auto find = [&](const std::string &language) {
      auto it = tables.find(language);
      if (it == tables.end()) {
        throw InvalidArgumentError("language " + language +
                                   " not found in WALS export");
      }
      return it->second;
    };
    metrics["shared_wals"] = SharedWals(find(config.lang_a), find(config.lang_b));
  }
  if (metrics.empty()) {
    throw InvalidArgumentError(
        "metrics needs --features-a/b, --corpus-a/b or --wals with "
        "--lang-a/b");
  }
  fs::path out_path = OutputDir(config) / "metrics.json";
  WriteJsonFile(out_path, metrics);
  result.outputs = {out_path};
  result.stats = metrics;
  return result;
}

CommandResult RunCodelength(const PipelineConfig &config) {
  RequireInput(config.loss_log, "loss-log");
  CommandResult result;
  result.inputs = {config.loss_log};
  std::ifstream in(config.loss_log);
  if (!in) throw IoError("cannot open " + config.loss_log);
  LossLog log = ReadLossLog(in);
  double bits = OnlineCodelength(log);
  nlohmann::json json = {{"codelength_bits", bits},
                         {"codelength_kbits", bits / 1000.0},
                         {"num_classes", log.num_classes},
                         {"first_subset_tokens", log.first_subset_tokens},
                         {"subsets", log.subsets.size()}};
  fs::path out_path = OutputDir(config) / "codelength.json";
  WriteJsonFile(out_path, json);
  result.outputs = {out_path};
  result.stats = json;
  return result;
}

CommandResult RunBpeLearn(const PipelineConfig &config) {
  if (config.corpora.empty()) {
    throw InvalidArgumentError("missing required --corpus");
  }
  CommandResult result;
  std::vector<TokenizedSentence> corpus;
  for (const auto &path : config.corpora) {
    result.inputs.push_back(path);
    auto part = LoadCorpus(path);
    std::move(part.begin(), part.end(), std::back_inserter(corpus));
  }
  BpeVocabulary vocabulary = LearnBpe(corpus, config.bpe_merges);
  fs::path dir = OutputDir(config);
  fs::path codes = dir / "bpe.codes", vocab = dir / "bpe.vocab";
  {
    auto out = OpenOutput(codes);
    WriteBpeCodes(out, vocabulary);
    auto vocab_out = OpenOutput(vocab);
    for (const auto &symbol : vocabulary.vocab()) vocab_out << symbol << '\n';
  }
  result.outputs = {codes, vocab};
  result.stats = {{"requested_merges", config.bpe_merges},
                  {"learned_merges", vocabulary.num_merges()},
                  {"vocab_size", vocabulary.vocab().size()}};
  return result;
}

// Options bound to a scratch config; only options given on the command line
// are copied over the defaults and config-file values.
class FlagBinder {
 public:
  FlagBinder(CLI::App *app, PipelineConfig &flags) : app_(app), flags_(flags) {}

  template <typename T>
  FlagBinder &Option(const std::string &name, T PipelineConfig::*field,
                     const std::string &help) {
    CLI::Option *option = app_->add_option(name, flags_.*field, help);
    Track(option, field);
    return *this;
  }

  FlagBinder &Flag(const std::string &name, bool PipelineConfig::*field,
                   const std::string &help) {
    CLI::Option *option = app_->add_flag(name, flags_.*field, help);
    Track(option, field);
    return *this;
  }

  void ApplyTo(PipelineConfig &config) const {
    for (const auto &[option, apply] : bindings_) {
      if (option->count() > 0) apply(config);
    }
  }

 private:
  template <typename T>
  void Track(CLI::Option *option, T PipelineConfig::*field) {
    PipelineConfig *flags = &flags_;
    bindings_.emplace_back(option, [flags, field](PipelineConfig &config) {
      config.*field = flags->*field;
    });
  }

  CLI::App *app_;
  PipelineConfig &flags_;
  std::vector<std::pair<CLI::Option *, std::function<void(PipelineConfig &)>>>
      bindings_;
};

void AddOptions(Subcommand command, FlagBinder &bind) {
  using C = PipelineConfig;
  bind.Option("--out", &C::output_dir,
              std::string("Output directory (default: $") + kOutputDirEnv +
                  " or " + kDefaultOutputDir + ")")
      .Option("--threads", &C::threads, "Worker threads; 0 uses every core");
  switch (command) {
    case Subcommand::kInduce:
      bind.Option("--src-vectors", &C::src_vectors, "Source word vectors")
          .Option("--tgt-vectors", &C::tgt_vectors, "Target word vectors")
          .Option("--seed-lexicon", &C::seed_lexicon, "Seed lexicon TSV")
          .Option("--src-corpus", &C::src_corpus,
                  "Source corpus for frequency ranking (default: vector "
                  "file order)")
          .Option("--vector-limit", &C::vector_limit,
                  "Read at most this many vectors per file (0: all)")
          .Option("--cap", &C::cap, "Number of frequent source words to translate")
          .Option("--csls-k", &C::csls_k, "CSLS neighbourhood size");
      break;
    case Subcommand::kMine:
      bind.Option("--docs", &C::docs,
                  "Linked documents: JSONL file or directory of <id>.src/<id>.tgt")
          .Option("--lexicon", &C::lexicon, "Source->target lexicon TSV")
          .Option("--threshold", &C::threshold, "Minimum Jaccard score");
      break;
    case Subcommand::kCodeswitch:
      bind.Option("--input", &C::input, "Monolingual corpus, one sentence per line")
          .Option("--lexicon", &C::lexicon, "Source->target lexicon TSV")
          .Option("--min-ratio", &C::min_ratio, "Lowest replaced-token ratio")
          .Option("--max-ratio", &C::max_ratio, "Highest replaced-token ratio")
          .Option("--seed", &C::seed, "Random seed")
          .Option("--direction", &C::direction,
                  "src2tgt uses the lexicon as is, tgt2src inverts it");
      break;
    case Subcommand::kEvalRetrieval:
      bind.Option("--gold", &C::gold, "Gold TSV: source-id, target-id")
          .Option("--predictions", &C::predictions,
                  "Predictions TSV: source-id, target-id, score")
          .Option("--src-text", &C::src_text,
                  "Source sentences for Jaccard retrieval (ids: line numbers)")
          .Option("--tgt-text", &C::tgt_text, "Target sentences")
          .Option("--lexicon", &C::lexicon, "Lexicon for Jaccard retrieval")
          .Option("--threshold", &C::threshold, "Assert pairs scoring at least this")
          .Flag("--sweep", &C::sweep, "Also write the full threshold sweep");
      break;
    case Subcommand::kRmss:
      bind.Option("--src-vectors", &C::src_vectors, "Source sentence embeddings")
          .Option("--tgt-vectors", &C::tgt_vectors, "Target sentence embeddings")
          .Option("--k", &C::rmss_k, "Neighbourhood size")
          .Flag("--full-matrix", &C::full_matrix, "Also write every score");
      break;
    case Subcommand::kMetrics:
      bind.Option("--features-a", &C::features_a, "Feature vector JSON")
          .Option("--features-b", &C::features_b, "Feature vector JSON")
          .Option("--corpus-a", &C::corpus_a, "Corpus of the first language")
          .Option("--corpus-b", &C::corpus_b, "Corpus of the second language")
          .Option("--overlap-merges", &C::overlap_merges,
                  "BPE merges per language for token overlap")
          .Option("--wals", &C::wals, "WALS CSV export")
          .Option("--lang-a", &C::lang_a, "First WALS language code")
          .Option("--lang-b", &C::lang_b, "Second WALS language code");
      break;
    case Subcommand::kCodelength:
      bind.Option("--loss-log", &C::loss_log, "Loss log JSON");
      break;
    case Subcommand::kBpeLearn:
      bind.Option("--corpus", &C::corpora, "Training corpus (repeatable)")
          .Option("--merges", &C::bpe_merges, "Number of merges");
      break;
  }
}

int ExitCodeFor(const Error &e) {
  return dynamic_cast<const NumericalError *>(&e) ? 2 : 1;
}

}  // namespace

std::optional<Subcommand> ParseSubcommand(std::string_view name) {
  for (const auto &info : kSubcommands) {
    if (name == info.name) return info.command;
  }
  return std::nullopt;
}

const char *SubcommandName(Subcommand command) {
  for (const auto &info : kSubcommands) {
    if (info.command == command) return info.name;
  }
  return "unknown";
}

std::vector<Subcommand> AllSubcommands() {
  std::vector<Subcommand> all;
  for (const auto &info : kSubcommands) all.push_back(info.command);
  return all;
}

CommandResult RunCommand(Subcommand command, const PipelineConfig &config) {
  config.Validate();
  switch (command) {
    case Subcommand::kInduce:
      return RunInduce(config);
    case Subcommand::kMine:
      return RunMine(config);
    case Subcommand::kCodeswitch:
      return RunCodeswitch(config);
    case Subcommand::kEvalRetrieval:
      return RunEvalRetrieval(config);
    case Subcommand::kRmss:
      return RunRmss(config);
    case Subcommand::kMetrics:
      return RunMetrics(config);
    case Subcommand::kCodelength:
      return RunCodelength(config);
    case Subcommand::kBpeLearn:
      return RunBpeLearn(config);
  }
  throw InvalidArgumentError("unknown subcommand");
}

void WriteErrorLine(std::ostream &err, std::string_view kind,
                    std::string_view message, std::string_view subcommand) {
  nlohmann::json line = {{"error", kind},
                         {"message", message},
                         {"subcommand", subcommand}};
  err << line.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
      << '\n';
}

int Execute(Subcommand command, const PipelineConfig &config,
            std::ostream &err) {
  const char *name = SubcommandName(command);
  auto start = std::chrono::steady_clock::now();
  try {
    CommandResult result = RunCommand(command, config);
    Manifest manifest;
    manifest.version = ToolVersion();
    manifest.subcommand = name;
    manifest.config = config;
    manifest.inputs = result.inputs;
    manifest.outputs = result.outputs;
    manifest.stats = result.stats;
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    WriteJsonFile(fs::path(config.output_dir) / "manifest.json",
                  manifest.ToJson());
    return 0;
  } catch (const Error &e) {
    WriteErrorLine(err, e.kind(), e.what(), name);
    return ExitCodeFor(e);
  } catch (const fs::filesystem_error &e) {
    WriteErrorLine(err, "io", e.what(), name);
    return 1;
  } catch (const std::exception &e) {
    WriteErrorLine(err, "internal", e.what(), name);
    return 2;
  }
}

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"lexmine: weakly supervised bitext mining toolkit"};
  app.set_version_flag("--version", ToolVersion());
  app.require_subcommand(1);

  PipelineConfig flags;
  std::string config_path;
  struct Entry {
    Subcommand command;
    CLI::App *app;
    FlagBinder binder;
  };
  std::vector<Entry> entries;
  entries.reserve(std::size(kSubcommands));
  for (const auto &info : kSubcommands) {
    CLI::App *sub = app.add_subcommand(info.name, info.description);
    sub->add_option("--config", config_path,
                    "JSON config file or manifest of a previous run");
    entries.push_back({info.command, sub, FlagBinder(sub, flags)});
    AddOptions(info.command, entries.back().binder);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    WriteErrorLine(err, "usage", e.what(), "");
    return 1;
  }

  for (const auto &entry : entries) {
    if (!entry.app->parsed()) continue;
    const char *name = SubcommandName(entry.command);
    PipelineConfig config = DefaultConfig();
    try {
      if (!config_path.empty()) config = LoadConfigFile(config_path, config);
    } catch (const Error &e) {
      WriteErrorLine(err, e.kind(), e.what(), name);
      return 1;
    }
    entry.binder.ApplyTo(config);
    return Execute(entry.command, config, err);
  }
  WriteErrorLine(err, "usage", "no subcommand given", "");
  return 1;
}

}  // namespace lexmine
