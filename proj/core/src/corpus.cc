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

#include "lexmine/corpus.h"

#include <algorithm>
#include <fstream>

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "lexmine/error.h"

namespace lexmine {
namespace {

void ValidateUtf8(std::string_view text) {
  const auto *bytes = reinterpret_cast<const uint8_t *>(text.data());
  int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) throw DecodeError(start);
  }
}

icu::UnicodeString Normalize(std::string_view raw,
                             const NormalizerConfig &config) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  if (config.lowercase) text.toLower(icu::Locale::getRoot());
  // Lowercasing can break composition, so NFC runs last.
  if (config.nfc) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
    icu::UnicodeString normalized = nfc->normalize(text, status);
    if (U_FAILURE(status)) throw Error("NFC normalization failed");
    text = std::move(normalized);
  }
  return text;
}

void EmitToken(const icu::UnicodeString &text, int32_t begin, int32_t end,
               const NormalizerConfig &config,
               std::vector<std::string> &tokens) {
  if (config.strip_punctuation) {
    while (begin < end) {
      UChar32 c = text.char32At(begin);
      if (!u_ispunct(c)) break;
      begin += U16_LENGTH(c);
    }
    while (end > begin) {
      int32_t last = text.getChar32Start(end - 1);
      if (!u_ispunct(text.char32At(last))) break;
      end = last;
    }
  }
  if (begin >= end) return;
  std::string token;
  text.tempSubStringBetween(begin, end).toUTF8String(token);
  tokens.push_back(std::move(token));
}

}  // namespace

TokenSet::TokenSet(std::vector<std::string> tokens) : items_(std::move(tokens)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool TokenSet::contains(std::string_view token) const {
  return std::binary_search(items_.begin(), items_.end(), token);
}

TokenizedSentence Tokenize(std::string_view raw,
                           const NormalizerConfig &config) {
  ValidateUtf8(raw);
  icu::UnicodeString text = Normalize(raw, config);

  std::vector<std::string> tokens;
  int32_t start = -1;
  for (int32_t i = 0; i < text.length();) {
    UChar32 c = text.char32At(i);
    int32_t next = i + U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      if (start >= 0) EmitToken(text, start, i, config, tokens);
      start = -1;
    } else if (start < 0) {
      start = i;
    }
    i = next;
  }
  if (start >= 0) EmitToken(text, start, text.length(), config, tokens);

  TokenizedSentence sentence;
  sentence.raw = std::string(raw);
  sentence.token_set = TokenSet(tokens);
  sentence.tokens = std::move(tokens);
  return sentence;
}

TokenizedSentence FromTokens(std::vector<std::string> tokens) {
  tokens.erase(std::remove(tokens.begin(), tokens.end(), std::string()),
               tokens.end());
  TokenizedSentence sentence;
  sentence.raw = JoinTokens(tokens);
  sentence.token_set = TokenSet(tokens);
  sentence.tokens = std::move(tokens);
  return sentence;
}

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> ReadLines(std::istream &in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> ReadLines(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadLines(in);
}

std::vector<TokenizedSentence> TokenizeLines(
    std::span<const std::string> lines, const NormalizerConfig &config) {
  std::vector<TokenizedSentence> out;
  out.reserve(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(Tokenize(lines[i], config));
    } catch (const DecodeError &e) {
      throw ParseError(e.what(), i + 1);
    }
  }
  return out;
}

void FrequencyTable::Add(std::string_view token, int64_t count) {
  if (count <= 0) return;
  counts_[std::string(token)] += count;
  total_ += count;
}

void FrequencyTable::Add(const TokenizedSentence &sentence) {
  for (const auto &token : sentence.tokens) Add(token);
}

void FrequencyTable::Merge(const FrequencyTable &other) {
  for (const auto &[token, count] : other.counts_) Add(token, count);
}

int64_t FrequencyTable::count(std::string_view token) const {
  auto it = counts_.find(std::string(token));
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, int64_t>> FrequencyTable::TopK(
    size_t n) const {
  std::vector<std::pair<std::string, int64_t>> items(counts_.begin(),
                                                     counts_.end());
  auto by_count = [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  };
  n = std::min(n, items.size());
  std::partial_sort(items.begin(), items.begin() + n, items.end(), by_count);
  items.resize(n);
  return items;
}

FrequencyTable CountFrequencies(std::span<const TokenizedSentence> corpus) {
  FrequencyTable table;
  for (const auto &sentence : corpus) table.Add(sentence);
  return table;
}

}  // namespace lexmine
