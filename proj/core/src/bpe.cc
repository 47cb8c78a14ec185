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

#include "lexmine/bpe.h"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "lexmine/error.h"

namespace lexmine {
namespace {

std::string RankKey(std::string_view left, std::string_view right) {
  std::string key;
  key.reserve(left.size() + right.size() + 1);
  key.append(left);
  key.push_back('\x1f');
  key.append(right);
  return key;
}

size_t CodePointLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 1;
}

uint64_t PairKey(int left, int right) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(left)) << 32) |
         static_cast<uint32_t>(right);
}
int LeftOf(uint64_t key) { return static_cast<int>(key >> 32); }
int RightOf(uint64_t key) { return static_cast<int>(key & 0xffffffffu); }

// Merges every non-overlapping occurrence of (left, right), scanning left to
// right. Returns true if anything changed.
template <typename Symbol>
bool MergeInPlace(std::vector<Symbol> &seq, const Symbol &left,
                  const Symbol &right, const Symbol &product) {
  bool changed = false;
  std::vector<Symbol> out;
  out.reserve(seq.size());
  for (size_t i = 0; i < seq.size();) {
    if (i + 1 < seq.size() && seq[i] == left && seq[i + 1] == right) {
      out.push_back(product);
      i += 2;
      changed = true;
    } else {
      out.push_back(seq[i]);
      ++i;
    }
  }
  if (changed) seq = std::move(out);
  return changed;
}

class Learner {
 public:
  explicit Learner(const FrequencyTable &word_counts)
      : queue_(QueueOrder{&symbols_}) {
    std::vector<std::pair<std::string, int64_t>> words(
        word_counts.counts().begin(), word_counts.counts().end());
    std::sort(words.begin(), words.end());
    for (const auto &[word, count] : words) {
      std::vector<int> seq;
      for (auto &symbol : InitialSymbols(word)) {
        vocab_.insert(symbol);
        seq.push_back(Intern(symbol));
      }
      if (seq.empty()) continue;
      size_t w = seqs_.size();
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        uint64_t key = PairKey(seq[i], seq[i + 1]);
        pair_counts_[key] += count;
        where_[key].push_back(static_cast<int>(w));
      }
      seqs_.push_back(std::move(seq));
      freqs_.push_back(count);
    }
    for (const auto &[key, count] : pair_counts_) queue_.insert({count, key});
  }

  BpeVocabulary Run(int num_merges) {
    std::vector<BpeMerge> merges;
    for (int step = 0; step < num_merges; ++step) {
      if (queue_.empty() || queue_.begin()->count < 2) break;
      uint64_t key = queue_.begin()->key;
      BpeMerge merge{symbols_[LeftOf(key)], symbols_[RightOf(key)]};
      std::string product = merge.product();
      int product_id = Intern(product);
      vocab_.insert(product);
      Apply(key, product_id);
      merges.push_back(std::move(merge));
    }
    return BpeVocabulary(std::move(merges), std::move(vocab_));
  }

 private:
  struct QueueEntry {
    int64_t count;
    uint64_t key;
  };
  // Highest count first, then the lexicographically smallest pair.
  struct QueueOrder {
    const std::vector<std::string> *symbols;
    bool operator()(const QueueEntry &a, const QueueEntry &b) const {
      if (a.count != b.count) return a.count > b.count;
      const auto &s = *symbols;
      int c = s[LeftOf(a.key)].compare(s[LeftOf(b.key)]);
      if (c != 0) return c < 0;
      c = s[RightOf(a.key)].compare(s[RightOf(b.key)]);
      if (c != 0) return c < 0;
      return a.key < b.key;
    }
  };

  int Intern(const std::string &symbol) {
    auto [it, inserted] =
        symbol_ids_.emplace(symbol, static_cast<int>(symbols_.size()));
    if (inserted) symbols_.push_back(symbol);
    return it->second;
  }

  void Apply(uint64_t key, int product_id) {
    int left = LeftOf(key), right = RightOf(key);
    std::vector<int> words = std::move(where_[key]);
    where_.erase(key);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());

    std::unordered_map<uint64_t, int64_t> delta;
    for (int w : words) {
      auto &seq = seqs_[w];
      std::vector<int> before = seq;
      if (!MergeInPlace(seq, left, right, product_id)) continue;
      int64_t f = freqs_[w];
      for (size_t i = 0; i + 1 < before.size(); ++i) {
        delta[PairKey(before[i], before[i + 1])] -= f;
      }
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        uint64_t k = PairKey(seq[i], seq[i + 1]);
        delta[k] += f;
        if (seq[i] == product_id || seq[i + 1] == product_id) {
          where_[k].push_back(w);
        }
      }
    }
    for (const auto &[k, d] : delta) {
      if (d == 0) continue;
      auto it = pair_counts_.find(k);
      int64_t old = it == pair_counts_.end() ? 0 : it->second;
      if (old > 0) queue_.erase({old, k});
      int64_t now = old + d;
      if (now > 0) {
        pair_counts_[k] = now;
        queue_.insert({now, k});
      } else if (it != pair_counts_.end()) {
        pair_counts_.erase(it);
      }
    }
  }

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> symbol_ids_;
  std::vector<std::vector<int>> seqs_;
  std::vector<int64_t> freqs_;
  std::set<std::string> vocab_;
  std::unordered_map<uint64_t, int64_t> pair_counts_;
  std::unordered_map<uint64_t, std::vector<int>> where_;
  std::set<QueueEntry, QueueOrder> queue_;
};

}  // namespace

BpeVocabulary::BpeVocabulary(std::vector<BpeMerge> merges,
                             std::set<std::string> vocab)
    : merges_(std::move(merges)), vocab_(std::move(vocab)) {
  for (size_t i = 0; i < merges_.size(); ++i) {
    ranks_.emplace(RankKey(merges_[i].left, merges_[i].right),
                   static_cast<int>(i));
  }
}

int BpeVocabulary::Rank(std::string_view left, std::string_view right) const {
  auto it = ranks_.find(RankKey(left, right));
  return it == ranks_.end() ? -1 : it->second;
}

std::vector<std::string> InitialSymbols(std::string_view word) {
  std::vector<std::string> symbols;
  for (size_t i = 0; i < word.size();) {
    size_t len = std::min(CodePointLength(word[i]), word.size() - i);
    symbols.emplace_back(word.substr(i, len));
    i += len;
  }
  if (!symbols.empty()) symbols.back().append(kEndOfWord);
  return symbols;
}

BpeVocabulary LearnBpe(const FrequencyTable &word_counts, int num_merges) {
  if (num_merges < 0) throw InvalidArgumentError("num_merges must be >= 0");
  if (word_counts.empty()) throw InvalidArgumentError("BPE corpus is empty");
  return Learner(word_counts).Run(num_merges);
}

BpeVocabulary LearnBpe(std::span<const TokenizedSentence> corpus,
                       int num_merges) {
  return LearnBpe(CountFrequencies(corpus), num_merges);
}

std::vector<std::string> ApplyBpe(std::string_view word,
                                  const BpeVocabulary &vocabulary) {
  std::vector<std::string> symbols = InitialSymbols(word);
  // Applying merges strictly in learned order is the same as repeatedly
  // taking the lowest-ranked applicable merge above the last one applied.
  int last = -1;
  while (symbols.size() > 1) {
    int best = INT_MAX;
    for (size_t i = 0; i + 1 < symbols.size(); ++i) {
      int rank = vocabulary.Rank(symbols[i], symbols[i + 1]);
      if (rank > last && rank < best) best = rank;
    }
    if (best == INT_MAX) break;
    const BpeMerge &merge = vocabulary.merges()[best];
    MergeInPlace(symbols, merge.left, merge.right, merge.product());
    last = best;
  }
  return symbols;
}

void WriteBpeCodes(std::ostream &out, const BpeVocabulary &vocabulary) {
  for (const auto &merge : vocabulary.merges()) {
    out << merge.left << ' ' << merge.right << '\n';
  }
}

BpeVocabulary ReadBpeCodes(std::istream &in) {
  std::vector<BpeMerge> merges;
  std::set<std::string> vocab;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind("#version", 0) == 0) continue;
    std::istringstream fields(line);
    BpeMerge merge;
    std::string extra;
    if (!(fields >> merge.left >> merge.right) || (fields >> extra)) {
      throw ParseError("expected \"left right\"", line_no);
    }
    vocab.insert(merge.left);
    vocab.insert(merge.right);
    vocab.insert(merge.product());
    merges.push_back(std::move(merge));
  }
  return BpeVocabulary(std::move(merges), std::move(vocab));
}

}  // namespace lexmine
