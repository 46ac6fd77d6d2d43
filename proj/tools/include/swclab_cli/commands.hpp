// Copyright 2026 The swclab Authors
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

#ifndef SWCLAB_CLI_COMMANDS_HPP_
#define SWCLAB_CLI_COMMANDS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "swclab/error.hpp"
#include "swclab/limits.hpp"
#include "swclab/verifiers.hpp"
#include "swclab_cli/spec_io.hpp"

namespace swclab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUnmet = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitInput = 4;

struct Invocation {
  std::string command;
  std::optional<std::string> spec_path;
  std::optional<std::string> codes_path;
  std::optional<std::string> out_path;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> q;
  bool force_search = false;
  std::optional<int> max_order;
  std::optional<int> max_n;
  std::optional<int> max_gens;
  // Environment lookup; replaceable in tests.
  std::function<const char*(const char*)> getenv;
};

struct CommandResult {
  json report;
  int exit_code = kExitOk;
  std::string diagnostic;  // for standard error; empty on success
};

const std::vector<std::string>& command_names();

int exit_code(Verdict v);
int exit_code(ErrorKind kind);

// Precedence: flags, then SWCLAB_MAX_ORDER / SWCLAB_MAX_N /
// SWCLAB_MAX_GENS, then the spec's bounds block, then defaults.
Limits resolve_limits(const Invocation& inv, const SpecFile* spec);

json verdict_to_json(const VerdictReport& r);

// Never throws for library or input errors; they become error reports.
CommandResult run_command(const Invocation& inv);

}  // namespace swclab::cli

#endif  // SWCLAB_CLI_COMMANDS_HPP_
