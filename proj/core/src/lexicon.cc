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

#include "lexmine/lexicon.h"

#include <fstream>

#include "lexmine/error.h"

namespace lexmine {
namespace {

constexpr std::string_view kProvenancePrefix = "# provenance:";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

struct ParsedFile {
  std::vector<SeedPair> pairs;
  LexiconProvenance provenance = LexiconProvenance::kSeed;
};

ParsedFile ParseLexiconFile(std::istream &in) {
  ParsedFile parsed;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind(kProvenancePrefix, 0) == 0) {
        auto value = Trim(std::string_view(line).substr(kProvenancePrefix.size()));
        if (value == "seed") {
          parsed.provenance = LexiconProvenance::kSeed;
        } else if (value == "projected") {
          parsed.provenance = LexiconProvenance::kProjected;
        } else {
          throw ParseError("unknown provenance \"" + std::string(value) + "\"",
                           line_no);
        }
      }
      continue;
    }
    size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected \"source<TAB>target\"", line_no);
    }
    SeedPair pair{line.substr(0, tab), line.substr(tab + 1)};
    if (pair.source.empty() || pair.target.empty()) {
      throw ParseError("empty word", line_no);
    }
    parsed.pairs.push_back(std::move(pair));
  }
  return parsed;
}

}  // namespace

const char *ProvenanceName(LexiconProvenance provenance) {
  switch (provenance) {
    case LexiconProvenance::kSeed:
      return "seed";
    case LexiconProvenance::kProjected:
      return "projected";
  }
  return "seed";
}

bool Lexicon::Insert(std::string source, std::string target) {
  return entries_.emplace(std::move(source), std::move(target)).second;
}

const std::string *Lexicon::Find(std::string_view source) const {
  auto it = entries_.find(source);
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::Inverted() const {
  // entries_ iterates sources in ascending order, so the first insert for a
  // target is its smallest source.
  Lexicon inverted(provenance_);
  for (const auto &[source, target] : entries_) inverted.Insert(target, source);
  return inverted;
}

Lexicon Lexicon::FromPairs(const std::vector<SeedPair> &pairs,
                           LexiconProvenance provenance) {
  Lexicon lexicon(provenance);
  for (const auto &pair : pairs) lexicon.Insert(pair.source, pair.target);
  return lexicon;
}

std::vector<SeedPair> ReadSeedPairs(std::istream &in) {
  return ParseLexiconFile(in).pairs;
}

std::vector<SeedPair> ReadSeedPairs(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadSeedPairs(in);
}

Lexicon ReadLexicon(std::istream &in) {
  ParsedFile parsed = ParseLexiconFile(in);
  return Lexicon::FromPairs(parsed.pairs, parsed.provenance);
}

Lexicon ReadLexicon(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadLexicon(in);
}

void WriteLexicon(std::ostream &out, const Lexicon &lexicon) {
  out << kProvenancePrefix << ' ' << ProvenanceName(lexicon.provenance())
      << '\n';
  for (const auto &[source, target] : lexicon.entries()) {
    out << source << '\t' << target << '\n';
  }
}

}  // namespace lexmine
