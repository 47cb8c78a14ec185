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

#ifndef LEXMINE_TOOLS_COMMANDS_H_
#define LEXMINE_TOOLS_COMMANDS_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pipeline_config.h"

namespace lexmine {

enum class Subcommand {
  kInduce,
  kMine,
  kCodeswitch,
  kEvalRetrieval,
  kRmss,
  kMetrics,
  kCodelength,
  kBpeLearn,
};

std::optional<Subcommand> ParseSubcommand(std::string_view name);
const char *SubcommandName(Subcommand command);
std::vector<Subcommand> AllSubcommands();

struct CommandResult {
  std::vector<std::filesystem::path> inputs;
  std::vector<std::filesystem::path> outputs;
  nlohmann::json stats = nlohmann::json::object();
};

// Runs one subcommand and writes its artifacts under config.output_dir.
// Throws lexmine::Error subclasses on bad input.
CommandResult RunCommand(Subcommand command, const PipelineConfig &config);

// RunCommand plus <output_dir>/manifest.json. Returns the process exit
// status; on failure writes a single JSON line to `err`:
//   {"error": <kind>, "message": <text>, "subcommand": <name>}
int Execute(Subcommand command, const PipelineConfig &config,
            std::ostream &err);

// Full command-line entry point (argument parsing included).
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

void WriteErrorLine(std::ostream &err, std::string_view kind,
                    std::string_view message, std::string_view subcommand);

}  // namespace lexmine

#endif  // LEXMINE_TOOLS_COMMANDS_H_
