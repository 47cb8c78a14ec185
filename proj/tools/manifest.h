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

#ifndef LEXMINE_TOOLS_MANIFEST_H_
#define LEXMINE_TOOLS_MANIFEST_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pipeline_config.h"

namespace lexmine {

std::string Sha256Hex(std::string_view data);
std::string Sha256File(const std::filesystem::path &path);

// Record of one run: enough to re-execute it and to check its inputs and
// outputs. Passing the manifest back as --config replays the run.
struct Manifest {
  std::string tool = "lexmine";
  std::string version;
  std::string subcommand;
  PipelineConfig config;
  std::vector<std::filesystem::path> inputs;
  std::vector<std::filesystem::path> outputs;
  nlohmann::json stats = nlohmann::json::object();
  double wall_clock_seconds = 0.0;

  // Checksums are computed here; a directory input lists each regular file
  // below it.
  nlohmann::json ToJson() const;
};

const char *ToolVersion();

}  // namespace lexmine

#endif  // LEXMINE_TOOLS_MANIFEST_H_
