// Copyright 2023 The Authors.
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

#ifndef TROPBUNDLE_COMMANDS_HPP_
#define TROPBUNDLE_COMMANDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tropbundle/json_io.hpp"

namespace tropbundle {

struct CommandOptions {
  std::optional<TropicalVector> z;      // Cox point for fiber.
  std::optional<TropicalVector> point;  // Membership query for fiber.
  std::optional<IntVector> a;           // Line bundle for tensor.
  std::optional<std::vector<std::string>> flat;  // See-saw flat for stability.
};

struct CommandResult {
  Json report;
  bool negative = false;  // A computed negative answer, not a failure.
};

struct CommandInfo {
  std::string name;
  int inputs;
  std::string summary;
};

const std::vector<CommandInfo>& Commands();
const CommandInfo* FindCommand(const std::string& name);

// Raises Error on invalid input or failed preconditions.
CommandResult RunCommand(const std::string& name, const std::vector<Json>& inputs,
                         const CommandOptions& options);

// Deterministic serialization of a report.
std::string DumpReport(const Json& report);

}  // namespace tropbundle

#endif  // TROPBUNDLE_COMMANDS_HPP_
