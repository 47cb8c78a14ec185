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

#ifndef LEXMINE_LEXICON_H_
#define LEXMINE_LEXICON_H_

#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lexmine {

enum class LexiconProvenance { kSeed, kProjected };

const char *ProvenanceName(LexiconProvenance provenance);

// One (source, target) entry of a seed dictionary. A source word may appear
// in several pairs.
struct SeedPair {
  std::string source;
  std::string target;
};

// Top-1 word translations: exactly one target per source word.
class Lexicon {
 public:
  explicit Lexicon(LexiconProvenance provenance = LexiconProvenance::kSeed)
      : provenance_(provenance) {}

  // Keeps the first translation of a source word; returns false if the
  // source was already present.
  bool Insert(std::string source, std::string target);

  // nullptr when the word has no translation.
  const std::string *Find(std::string_view source) const;
  bool contains(std::string_view source) const {
    return Find(source) != nullptr;
  }

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  LexiconProvenance provenance() const { return provenance_; }
  const std::map<std::string, std::string, std::less<>> &entries() const {
    return entries_;
  }

  // Target -> source. When several sources share a target, the
  // lexicographically smallest source is kept.
  Lexicon Inverted() const;

  static Lexicon FromPairs(const std::vector<SeedPair> &pairs,
                           LexiconProvenance provenance);

 private:
  std::map<std::string, std::string, std::less<>> entries_;
  LexiconProvenance provenance_;
};

// "source<TAB>target" lines. Blank lines and lines starting with '#' are
// skipped. Throws ParseError on a line without exactly one tab.
std::vector<SeedPair> ReadSeedPairs(std::istream &in);
std::vector<SeedPair> ReadSeedPairs(const std::filesystem::path &path);

// Reads a lexicon file, keeping the first translation per source. The
// provenance comes from a "# provenance: <seed|projected>" header line when
// present and defaults to seed.
Lexicon ReadLexicon(std::istream &in);
Lexicon ReadLexicon(const std::filesystem::path &path);

void WriteLexicon(std::ostream &out, const Lexicon &lexicon);

}  // namespace lexmine

#endif  // LEXMINE_LEXICON_H_
