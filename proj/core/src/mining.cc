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

#include "lexmine/mining.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>

#include "json.hpp"
#include "lexmine/error.h"
#include "lexmine/parallel.h"

namespace lexmine {
namespace {

std::string OneLine(const std::string &text) {
  std::string out = text;
  for (char &c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::vector<TokenizedSentence> TokenizeAll(const nlohmann::json &array,
                                           const NormalizerConfig &config) {
  std::vector<TokenizedSentence> out;
  for (const auto &item : array) {
    out.push_back(Tokenize(item.get<std::string>(), config));
  }
  return out;
}

void MineDocument(const LinkedDocumentPair &doc, const Lexicon &lexicon,
                  double threshold, std::vector<MinedPair> &out) {
  if (doc.src_sentences.empty() || doc.tgt_sentences.empty()) return;
  for (size_t i = 0; i < doc.src_sentences.size(); ++i) {
    const TokenizedSentence &src = doc.src_sentences[i];
    TokenSet translated = TranslateTokens(src, lexicon);
    double best = 0.0;
    size_t best_index = 0;
    bool found = false;
    for (size_t j = 0; j < doc.tgt_sentences.size(); ++j) {
      double score = Jaccard(translated, doc.tgt_sentences[j].token_set);
      if (score > best) {
        best = score;
        best_index = j;
        found = true;
      }
    }
    if (!found || best < threshold) continue;
    out.push_back(MinedPair{src, doc.tgt_sentences[best_index], best,
                            doc.doc_id, i, best_index});
  }
}

}  // namespace

TokenSet TranslateTokens(const TokenizedSentence &sentence,
                         const Lexicon &lexicon) {
  std::vector<std::string> out;
  out.reserve(sentence.tokens.size());
  for (const auto &token : sentence.tokens) {
    const std::string *translation = lexicon.Find(token);
    out.push_back(translation ? *translation : token);
  }
  return TokenSet(std::move(out));
}

double Jaccard(const TokenSet &s, const TokenSet &t) {
  if (s.empty() && t.empty()) return 0.0;
  size_t common = 0;
  auto a = s.begin(), b = t.begin();
  while (a != s.end() && b != t.end()) {
    int c = a->compare(*b);
    if (c == 0) {
      ++common;
      ++a;
      ++b;
    } else if (c < 0) {
      ++a;
    } else {
      ++b;
    }
  }
  size_t united = s.size() + t.size() - common;
  return static_cast<double>(common) / static_cast<double>(united);
}

std::vector<MinedPair> MineDocuments(std::span<const LinkedDocumentPair> docs,
                                     const Lexicon &lexicon,
                                     const MiningOptions &options) {
  if (!(options.threshold >= 0.0 && options.threshold <= 1.0)) {
    throw InvalidArgumentError("threshold must lie in [0, 1]");
  }
  std::vector<std::vector<MinedPair>> per_doc(docs.size());
  ParallelFor(docs.size(), options.threads, [&](size_t begin, size_t end) {
    for (size_t d = begin; d < end; ++d) {
      MineDocument(docs[d], lexicon, options.threshold, per_doc[d]);
    }
  });
  std::vector<MinedPair> out;
  for (auto &pairs : per_doc) {
    std::move(pairs.begin(), pairs.end(), std::back_inserter(out));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MinedPair &a, const MinedPair &b) {
                     if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
                     return a.src_index < b.src_index;
                   });
  return out;
}

std::vector<LinkedDocumentPair> ReadLinkedDocumentsJsonl(
    std::istream &in, const NormalizerConfig &config) {
  std::vector<LinkedDocumentPair> docs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto record = nlohmann::json::parse(line);
      LinkedDocumentPair doc;
      const auto &id = record.at("doc_id");
      doc.doc_id = id.is_string() ? id.get<std::string>() : id.dump();
      doc.src_sentences = TokenizeAll(record.at("src"), config);
      doc.tgt_sentences = TokenizeAll(record.at("tgt"), config);
      docs.push_back(std::move(doc));
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(e.what(), line_no);
    } catch (const DecodeError &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return docs;
}

std::vector<LinkedDocumentPair> ReadLinkedDocumentsDir(
    const std::filesystem::path &dir, const NormalizerConfig &config) {
  std::map<std::string, std::filesystem::path> sources;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".src") {
      sources.emplace(entry.path().stem().string(), entry.path());
    }
  }
  std::vector<LinkedDocumentPair> docs;
  for (const auto &[id, src_path] : sources) {
    auto tgt_path = dir / (id + ".tgt");
    if (!std::filesystem::exists(tgt_path)) {
      throw IoError("missing " + tgt_path.string() + " for " +
                    src_path.string());
    }
    LinkedDocumentPair doc;
    doc.doc_id = id;
    doc.src_sentences = TokenizeLines(ReadLines(src_path), config);
    doc.tgt_sentences = TokenizeLines(ReadLines(tgt_path), config);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<LinkedDocumentPair> LoadLinkedDocuments(
    const std::filesystem::path &path, const NormalizerConfig &config) {
  if (std::filesystem::is_directory(path)) {
    return ReadLinkedDocumentsDir(path, config);
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadLinkedDocumentsJsonl(in, config);
}

void WriteMinedTsv(std::ostream &out, std::span<const MinedPair> pairs) {
  char score[32];
  for (const auto &pair : pairs) {
    std::snprintf(score, sizeof(score), "%.6f", pair.score);
    out << OneLine(pair.doc_id) << '\t' << score << '\t'
        << OneLine(pair.src.raw) << '\t' << OneLine(pair.tgt.raw) << '\n';
  }
}

void WriteMinedParallel(std::ostream &src_out, std::ostream &tgt_out,
                        std::span<const MinedPair> pairs) {
  for (const auto &pair : pairs) {
    src_out << OneLine(pair.src.raw) << '\n';
    tgt_out << OneLine(pair.tgt.raw) << '\n';
  }
}

}  // namespace lexmine
