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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include "json.hpp"

#include "commands.h"
#include "lexmine/error.h"
#include "lexmine/mining.h"
#include "manifest.h"
#include "pipeline_config.h"
#include "testing/oracles.h"
#include "testing/synthetic.h"

namespace lexmine {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream(path, std::ios::binary) << content;
}

class ScratchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("lexmine_cli_") + info->test_suite_name() + "_" +
            info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const { return (dir_ / name).string(); }

  // Runs the CLI in-process; returns the exit status.
  int Run(std::vector<std::string> args) {
    args.insert(args.begin(), "lexmine");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return RunCli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST(PipelineConfigTest, JsonRoundTrip) {
  PipelineConfig config;
  config.threads = 3;
  config.threshold = 0.25;
  config.seed = 123456789012345ULL;
  config.corpora = {"a.txt", "b.txt"};
  config.direction = "tgt2src";
  config.full_matrix = true;
  EXPECT_EQ(FromJson(ToJson(config)), config);
  EXPECT_EQ(FromJson(json::parse(ToJson(config).dump())), config);
}

TEST(PipelineConfigTest, PartialJsonKeepsBaseAndRejectsUnknownKeys) {
  PipelineConfig base;
  base.csls_k = 5;
  auto config = FromJson(json{{"threshold", 0.3}}, base);
  EXPECT_EQ(config.threshold, 0.3);
  EXPECT_EQ(config.csls_k, 5);
  EXPECT_THROW(FromJson(json{{"treshold", 0.3}}), InvalidArgumentError);
  EXPECT_THROW(FromJson(json{{"threshold", "high"}}), Error);
}

TEST(PipelineConfigTest, ValidateRanges) {
  PipelineConfig config;
  EXPECT_NO_THROW(config.Validate());
  config.threshold = 1.5;
  EXPECT_THROW(config.Validate(), InvalidArgumentError);
  config = PipelineConfig();
  config.min_ratio = 0.7;
  EXPECT_THROW(config.Validate(), InvalidArgumentError);
  config = PipelineConfig();
  config.direction = "sideways";
  EXPECT_THROW(config.Validate(), InvalidArgumentError);
  config = PipelineConfig();
  config.csls_k = 0;
  EXPECT_THROW(config.Validate(), InvalidArgumentError);
}

TEST(PipelineConfigTest, HashTracksContent) {
  PipelineConfig a, b;
  EXPECT_EQ(ConfigHash(a), ConfigHash(b));
  EXPECT_EQ(ConfigHash(a).size(), 64u);
  b.seed = 1;
  EXPECT_NE(ConfigHash(a), ConfigHash(b));
}

TEST(PipelineConfigTest, OutputDirFromEnvironment) {
  ::setenv(kOutputDirEnv, "/tmp/from-env", 1);
  EXPECT_EQ(DefaultConfig().output_dir, "/tmp/from-env");
  ::unsetenv(kOutputDirEnv);
  EXPECT_EQ(DefaultConfig().output_dir, kDefaultOutputDir);
}

TEST(ManifestTest, Sha256KnownVectors) {
  EXPECT_EQ(Sha256Hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(SubcommandTest, NamesRoundTrip) {
  for (Subcommand c : AllSubcommands()) {
    EXPECT_EQ(ParseSubcommand(SubcommandName(c)), c);
  }
  EXPECT_EQ(AllSubcommands().size(), 8u);
  EXPECT_FALSE(ParseSubcommand("mine-all").has_value());
  EXPECT_EQ(ParseSubcommand("eval-retrieval"), Subcommand::kEvalRetrieval);
}

TEST(ErrorLineTest, SingleJsonLine) {
  std::ostringstream err;
  WriteErrorLine(err, "parse", "line 3: bad \"quote\"", "mine");
  std::string text = err.str();
  ASSERT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find('\n'), text.size() - 1);
  auto parsed = json::parse(text);
  EXPECT_EQ(parsed["error"], "parse");
  EXPECT_EQ(parsed["message"], "line 3: bad \"quote\"");
  EXPECT_EQ(parsed["subcommand"], "mine");
}

using CliTest = ScratchDir;

TEST_F(CliTest, CodelengthWritesResultAndManifest) {
  WriteFile(Path("log.json"),
            R"({"num_classes": 256, "first_subset_tokens": 100, "subsets": [)"
            R"({"size": 100, "loss_bits": 0}, {"size": 1000, "loss_bits": 7200}]})");
  ASSERT_EQ(Run({"codelength", "--loss-log", Path("log.json"), "--out", dir_}), 0)
      << err_.str();
  auto result = json::parse(ReadFile(dir_ / "codelength.json"));
  EXPECT_EQ(result["codelength_bits"], 8000.0);
  auto manifest = json::parse(ReadFile(dir_ / "manifest.json"));
  EXPECT_EQ(manifest["subcommand"], "codelength");
  EXPECT_EQ(manifest["tool"], "lexmine");
  EXPECT_EQ(manifest["config"]["loss_log"], Path("log.json"));
  EXPECT_EQ(manifest["config_sha256"].get<std::string>().size(), 64u);
  ASSERT_EQ(manifest["inputs"].size(), 1u);
  EXPECT_EQ(manifest["inputs"][0]["sha256"], Sha256File(Path("log.json")));
  EXPECT_EQ(manifest["outputs"][0]["sha256"],
            Sha256File(dir_ / "codelength.json"));
  EXPECT_TRUE(manifest.contains("wall_clock_seconds"));
}

TEST_F(CliTest, FlagsOverrideConfigFile) {
  WriteFile(Path("config.json"),
            json{{"threshold", 0.4}, {"output_dir", (dir_ / "a").string()}}.dump());
  WriteFile(Path("docs.jsonl"),
            R"({"doc_id": "d", "src": ["x y z w"], "tgt": ["x y q r s t"]})" "\n");
  WriteFile(Path("lex.tsv"), "");
  // Jaccard is 2/8: mined at 0.2, not at 0.4.
  ASSERT_EQ(Run({"mine", "--config", Path("config.json"), "--docs",
                 Path("docs.jsonl"), "--lexicon", Path("lex.tsv")}),
            0)
      << err_.str();
  EXPECT_EQ(ReadFile(dir_ / "a" / "mined.tsv"), "");
  ASSERT_EQ(Run({"mine", "--config", Path("config.json"), "--docs",
                 Path("docs.jsonl"), "--lexicon", Path("lex.tsv"),
                 "--threshold", "0.2", "--out", (dir_ / "b").string()}),
            0);
  EXPECT_EQ(ReadFile(dir_ / "b" / "mined.tsv"), "d\t0.250000\tx y z w\tx y q r s t\n");
  auto manifest = json::parse(ReadFile(dir_ / "b" / "manifest.json"));
  EXPECT_EQ(manifest["config"]["threshold"], 0.2);
}

TEST_F(CliTest, ManifestReplaysRun) {
  WriteFile(Path("mono.txt"), "s1 s2 s3 s4 s5 s6\ns2 s3 s4 s5 s6 s7 s8 s9\n");
  WriteFile(Path("lex.tsv"),
            "s1\tt1\ns2\tt2\ns3\tt3\ns4\tt4\ns5\tt5\ns6\tt6\ns7\tt7\ns8\tt8\ns9\tt9\n");
  fs::path first = dir_ / "first";
  ASSERT_EQ(Run({"codeswitch", "--input", Path("mono.txt"), "--lexicon",
                 Path("lex.tsv"), "--seed", "7", "--out", first.string()}),
            0);
  fs::path second = dir_ / "second";
  ASSERT_EQ(Run({"codeswitch", "--config", (first / "manifest.json").string(),
                 "--out", second.string()}),
            0)
      << err_.str();
  EXPECT_EQ(ReadFile(first / "codeswitched.txt"),
            ReadFile(second / "codeswitched.txt"));
  auto a = json::parse(ReadFile(first / "manifest.json"));
  auto b = json::parse(ReadFile(second / "manifest.json"));
  EXPECT_EQ(a["outputs"][0]["sha256"], b["outputs"][0]["sha256"]);
  auto config = LoadConfigFile(first / "manifest.json");
  EXPECT_EQ(config.seed, 7u);
}

TEST_F(CliTest, ErrorsAreSingleJsonLines) {
  EXPECT_EQ(Run({"mine", "--docs", Path("absent.jsonl"), "--lexicon",
                 Path("absent.tsv"), "--out", dir_}),
            1);
  auto line = json::parse(err_.str());
  EXPECT_EQ(line["error"], "io");
  EXPECT_EQ(line["subcommand"], "mine");

  EXPECT_EQ(Run({"mine", "--out", dir_}), 1);
  EXPECT_EQ(json::parse(err_.str())["error"], "invalid_argument");

  WriteFile(Path("bad.tsv"), "only-one-column\n");
  WriteFile(Path("docs.jsonl"), "");
  EXPECT_EQ(Run({"mine", "--docs", Path("docs.jsonl"), "--lexicon",
                 Path("bad.tsv"), "--out", dir_}),
            1);
  line = json::parse(err_.str());
  EXPECT_EQ(line["error"], "parse");
  EXPECT_NE(line["message"].get<std::string>().find("line 1"), std::string::npos);

  EXPECT_EQ(Run({"mine", "--threshold", "2", "--out", dir_}), 1);
  EXPECT_EQ(Run({}), 1);
  EXPECT_EQ(Run({"frobnicate"}), 1);
  EXPECT_FALSE(fs::exists(dir_ / "manifest.json"));
}

TEST_F(CliTest, NumericalErrorsExitWithTwo) {
  WriteFile(Path("s.vec"), "1 2\na 1 0\n");
  WriteFile(Path("t.vec"), "1 2\nb 0 1\n");
  EXPECT_EQ(Run({"rmss", "--src-vectors", Path("s.vec"), "--tgt-vectors",
                 Path("t.vec"), "--k", "1", "--out", dir_}),
            2);
  EXPECT_EQ(json::parse(err_.str())["error"], "numerical");
}

TEST_F(CliTest, InduceAndMineMatchOracle) {
  testing::WorldOptions options;
  options.vocab = 400;
  options.dim = 20;
  options.seed_pairs = 150;
  options.docs = 12;
  auto world = testing::MakeSyntheticWorld(options);
  {
    std::ofstream src(Path("src.vec")), tgt(Path("tgt.vec")),
        seed(Path("seed.tsv")), docs(Path("docs.jsonl"));
    WriteVectors(src, world.embeddings.source);
    WriteVectors(tgt, world.embeddings.target);
    for (const auto &p : world.embeddings.seed) seed << p.source << '\t' << p.target << '\n';
    for (const auto &doc : world.docs) {
      json record = {{"doc_id", doc.doc_id}};
      for (const auto &s : doc.src_sentences) record["src"].push_back(s.raw);
      for (const auto &t : doc.tgt_sentences) record["tgt"].push_back(t.raw);
      docs << record.dump() << '\n';
    }
  }
  ASSERT_EQ(Run({"induce", "--src-vectors", Path("src.vec"), "--tgt-vectors",
                 Path("tgt.vec"), "--seed-lexicon", Path("seed.tsv"), "--out",
                 dir_, "--threads", "2"}),
            0)
      << err_.str();
  Lexicon lexicon = ReadLexicon(dir_ / "lexicon.tsv");
  EXPECT_EQ(lexicon.provenance(), LexiconProvenance::kProjected);
  size_t correct = 0;
  for (const auto &p : world.embeddings.gold) {
    const std::string *t = lexicon.Find(p.source);
    correct += t != nullptr && *t == p.target;
  }
  EXPECT_GE(correct, 396u);

  ASSERT_EQ(Run({"mine", "--docs", Path("docs.jsonl"), "--lexicon",
                 (dir_ / "lexicon.tsv").string(), "--out", dir_}),
            0)
      << err_.str();

  // Same pairs, byte for byte, as the brute-force oracle formatted alike.
  std::vector<testing::OracleDoc> oracle_docs;
  for (const auto &doc : world.docs) {
    testing::OracleDoc d{doc.doc_id, {}, {}};
    for (const auto &s : doc.src_sentences) d.src.push_back(s.tokens);
    for (const auto &t : doc.tgt_sentences) d.tgt.push_back(t.tokens);
    oracle_docs.push_back(std::move(d));
  }
  std::map<std::string, std::string> map(lexicon.entries().begin(),
                                         lexicon.entries().end());
  std::ostringstream expected;
  for (const auto &m : testing::BruteForceMine(oracle_docs, map, 0.1)) {
    const auto &doc = *std::find_if(
        world.docs.begin(), world.docs.end(),
        [&](const auto &d) { return d.doc_id == m.doc_id; });
    char score[32];
    std::snprintf(score, sizeof(score), "%.6f", m.score);
    expected << m.doc_id << '\t' << score << '\t'
             << doc.src_sentences[m.src_index].raw << '\t'
             << doc.tgt_sentences[m.tgt_index].raw << '\n';
  }
  EXPECT_EQ(ReadFile(dir_ / "mined.tsv"), expected.str());
  auto manifest = json::parse(ReadFile(dir_ / "manifest.json"));
  EXPECT_EQ(manifest["stats"]["documents"], 12);
}

TEST_F(CliTest, CodeswitchDirectionInvertsLexicon) {
  WriteFile(Path("mono.txt"), "t1 t2 t3 t4 t5\n");
  WriteFile(Path("lex.tsv"), "s1\tt1\ns2\tt2\ns3\tt3\ns4\tt4\ns5\tt5\n");
  ASSERT_EQ(Run({"codeswitch", "--input", Path("mono.txt"), "--lexicon",
                 Path("lex.tsv"), "--direction", "tgt2src", "--out", dir_}),
            0)
      << err_.str();
  std::string line = ReadFile(dir_ / "codeswitched.txt");
  EXPECT_NE(line.find('s'), std::string::npos);
  auto manifest = json::parse(ReadFile(dir_ / "manifest.json"));
  EXPECT_EQ(manifest["stats"]["emitted"], 1);
}

TEST_F(CliTest, EvalRetrievalFromPredictionsAndJaccard) {
  WriteFile(Path("gold.tsv"), "1\t2\n2\t1\n3\t3\n");
  WriteFile(Path("pred.tsv"), "1\t2\t0.9\n2\t3\t0.8\n3\t3\t0.1\n");
  ASSERT_EQ(Run({"eval-retrieval", "--gold", Path("gold.tsv"), "--predictions",
                 Path("pred.tsv"), "--threshold", "0.5", "--sweep", "--out",
                 dir_}),
            0)
      << err_.str();
  auto report = json::parse(ReadFile(dir_ / "report.json"));
  EXPECT_EQ(report["predicted"], 2);
  EXPECT_EQ(report["correct"], 1);
  EXPECT_DOUBLE_EQ(report["precision"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(report["recall"].get<double>(), 1.0 / 3.0);
  std::string sweep = ReadFile(dir_ / "sweep.tsv");
  EXPECT_EQ(std::count(sweep.begin(), sweep.end(), '\n'), 4);

  WriteFile(Path("src.txt"), "ein hund\neine katze\ndas haus\n");
  WriteFile(Path("tgt.txt"), "a cat\na dog\nthe house\n");
  WriteFile(Path("lex.tsv"),
            "ein\ta\neine\ta\nhund\tdog\nkatze\tcat\ndas\tthe\nhaus\thouse\n");
  fs::path jac = dir_ / "jaccard";
  ASSERT_EQ(Run({"eval-retrieval", "--gold", Path("gold.tsv"), "--src-text",
                 Path("src.txt"), "--tgt-text", Path("tgt.txt"), "--lexicon",
                 Path("lex.tsv"), "--threshold", "0.5", "--out", jac.string()}),
            0)
      << err_.str();
  report = json::parse(ReadFile(jac / "report.json"));
  EXPECT_EQ(report["correct"], 3);
  EXPECT_EQ(report["f1"], 1.0);
  EXPECT_TRUE(fs::exists(jac / "predictions.tsv"));
}

TEST_F(CliTest, RmssWritesTopOneAndMatrix) {
  WriteFile(Path("s.vec"), "2 2\ns1 1 0.1\ns2 0.1 1\n");
  WriteFile(Path("t.vec"), "2 2\nt1 0.2 1\nt2 1 0.2\n");
  ASSERT_EQ(Run({"rmss", "--src-vectors", Path("s.vec"), "--tgt-vectors",
                 Path("t.vec"), "--k", "1", "--full-matrix", "--out", dir_}),
            0)
      << err_.str();
  std::string top = ReadFile(dir_ / "rmss_top1.tsv");
  EXPECT_EQ(top.substr(0, 6), "s1\tt2\t");
  EXPECT_NE(top.find("s2\tt1\t"), std::string::npos);
  std::string full = ReadFile(dir_ / "rmss_scores.tsv");
  EXPECT_EQ(full.substr(0, full.find('\n')), "source_id\tt1\tt2");
}

TEST_F(CliTest, MetricsAndBpeLearn) {
  WriteFile(Path("fa.json"), R"({"language": "a", "features": [1, 0, null]})");
  WriteFile(Path("fb.json"), R"({"language": "b", "features": [1, 0, 1]})");
  WriteFile(Path("ca.txt"), "ab ab\n");
  WriteFile(Path("cb.txt"), "ab ac\n");
  WriteFile(Path("wals.csv"), "language,feature_id,value\nx,1A,p\ny,1A,p\ny,2A,q\n");
  ASSERT_EQ(Run({"metrics", "--features-a", Path("fa.json"), "--features-b",
                 Path("fb.json"), "--corpus-a", Path("ca.txt"), "--corpus-b",
                 Path("cb.txt"), "--overlap-merges", "10", "--wals",
                 Path("wals.csv"), "--lang-a", "x", "--lang-b", "y", "--out",
                 dir_}),
            0)
      << err_.str();
  auto metrics = json::parse(ReadFile(dir_ / "metrics.json"));
  EXPECT_NEAR(metrics["syntactic_distance"].get<double>(), 0.0, 1e-15);
  EXPECT_EQ(metrics["token_overlap"], 0.5);
  EXPECT_DOUBLE_EQ(metrics["char_overlap"].get<double>(), 2.0 / 3.0);
  EXPECT_EQ(metrics["shared_wals"], 1);
  EXPECT_EQ(Run({"metrics", "--out", dir_}), 1);

  ASSERT_EQ(Run({"bpe-learn", "--corpus", Path("ca.txt"), "--corpus",
                 Path("cb.txt"), "--merges", "5", "--out", dir_}),
            0)
      << err_.str();
  EXPECT_EQ(ReadFile(dir_ / "bpe.codes"), "a b</w>\n");
  auto manifest = json::parse(ReadFile(dir_ / "manifest.json"));
  EXPECT_EQ(manifest["stats"]["learned_merges"], 1);
  EXPECT_EQ(manifest["inputs"].size(), 2u);
}

// The installed binary: exit codes and stderr as seen by a shell.
int Shell(const std::string &command, std::string *output) {
  FILE *pipe = ::popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return -1;
  char buf[512];
  output->clear();
  while (std::fgets(buf, sizeof(buf), pipe) != nullptr) *output += buf;
  int status = ::pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryReportsErrorsOnStderr) {
  std::string output;
  EXPECT_EQ(Shell(std::string(LEXMINE_CLI_PATH) + " --help", &output), 0);
  EXPECT_NE(output.find("codeswitch"), std::string::npos);
  EXPECT_EQ(Shell(std::string(LEXMINE_CLI_PATH) + " codelength --loss-log " +
                      Path("none.json") + " --out " + dir_.string(),
                  &output),
            1);
  auto line = json::parse(output);
  EXPECT_EQ(line["error"], "io");
  EXPECT_EQ(line["subcommand"], "codelength");
}

TEST_F(CliTest, BinaryCodeswitchIsDeterministic) {
  std::mt19937_64 rng(3);
  std::ostringstream mono, lex;
  for (int i = 0; i < 200; ++i) lex << "w" << i << "\tv" << i << '\n';
  std::uniform_int_distribution<int> word(0, 199), len(4, 20);
  for (int i = 0; i < 300; ++i) {
    for (int n = len(rng); n > 0; --n) mono << "w" << word(rng) << ' ';
    mono << '\n';
  }
  WriteFile(Path("mono.txt"), mono.str());
  WriteFile(Path("lex.tsv"), lex.str());
  std::string output;
  for (const char *sub : {"one", "two"}) {
    ASSERT_EQ(Shell(std::string(LEXMINE_CLI_PATH) + " codeswitch --input " +
                        Path("mono.txt") + " --lexicon " + Path("lex.tsv") +
                        " --seed 7 --out " + (dir_ / sub).string(),
                    &output),
              0)
        << output;
  }
  EXPECT_EQ(ReadFile(dir_ / "one" / "codeswitched.txt"),
            ReadFile(dir_ / "two" / "codeswitched.txt"));
  EXPECT_FALSE(ReadFile(dir_ / "one" / "codeswitched.txt").empty());
}

}  // namespace
}  // namespace lexmine
