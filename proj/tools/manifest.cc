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

#include "manifest.h"

#include <fstream>
#include <memory>
#include <set>

#include <openssl/evp.h>

#include "lexmine/error.h"

#ifndef LEXMINE_VERSION
#define LEXMINE_VERSION "0.0.0"
#endif

namespace lexmine {
namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error("cannot initialize SHA-256");
    }
  }
  void Update(const char *data, size_t size) {
    EVP_DigestUpdate(ctx_.get(), data, size);
  }
  std::string HexDigest() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_DigestFinal_ex(ctx_.get(), digest, &length);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    for (unsigned int i = 0; i < length; ++i) {
      hex.push_back(kHex[digest[i] >> 4]);
      hex.push_back(kHex[digest[i] & 0xf]);
    }
    return hex;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

void AddFileEntries(const std::filesystem::path &path, nlohmann::json &list) {
  if (std::filesystem::is_directory(path)) {
    std::set<std::filesystem::path> files;
    for (const auto &entry :
         std::filesystem::recursive_directory_iterator(path)) {
      if (entry.is_regular_file()) files.insert(entry.path());
    }
    for (const auto &file : files) AddFileEntries(file, list);
    return;
  }
  list.push_back({{"path", path.string()}, {"sha256", Sha256File(path)}});
}

}  // namespace

std::string Sha256Hex(std::string_view data) {
  Sha256 hash;
  hash.Update(data.data(), data.size());
  return hash.HexDigest();
}

std::string Sha256File(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Sha256 hash;
  char buffer[1 << 16];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    hash.Update(buffer, static_cast<size_t>(in.gcount()));
  }
  return hash.HexDigest();
}

const char *ToolVersion() { return LEXMINE_VERSION; }

nlohmann::json Manifest::ToJson() const {
  nlohmann::json json;
  json["tool"] = tool;
  json["version"] = version;
  json["subcommand"] = subcommand;
  json["config"] = lexmine::ToJson(config);
  json["config_sha256"] = ConfigHash(config);
  json["inputs"] = nlohmann::json::array();
  for (const auto &path : inputs) AddFileEntries(path, json["inputs"]);
  json["outputs"] = nlohmann::json::array();
  for (const auto &path : outputs) AddFileEntries(path, json["outputs"]);
  json["stats"] = stats;
  json["wall_clock_seconds"] = wall_clock_seconds;
  return json;
}

}  // namespace lexmine
