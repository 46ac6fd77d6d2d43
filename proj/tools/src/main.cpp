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


#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "swclab_cli/commands.hpp"

int main(int argc, char** argv) {
  using swclab::cli::Invocation;
  CLI::App app{"swclab: extension-property laboratory for linear codes over "
               "finite rings"};
  Invocation inv;
  std::string spec;
  app.add_option("command", inv.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(swclab::cli::command_names()));
  app.add_option("spec", spec, "Ring/module spec file (JSON)");
  app.add_option("--codes", inv.codes_path, "Codes or pack file (JSON)");
  app.add_option("--out", inv.out_path, "Write the emitted pack here");
  app.add_option("--m", inv.m, "Matrix size m of R = M_m(F_q)");
  app.add_option("--k", inv.k, "Column count k of A = M_{m x k}(F_q)");
  app.add_option("--q", inv.q, "Field order q");
  app.add_flag("--search", inv.force_search,
               "Use the brute-force search construction");
  app.add_option("--max-order", inv.max_order,
                 "Guard on |A| and |R| for group and lattice enumeration");
  app.add_option("--max-n", inv.max_n, "Largest code length enumerated");
  app.add_option("--max-gens", inv.max_gens,
                 "Most generators per enumerated code");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : swclab::cli::kExitInput;
  }
  if (!spec.empty()) inv.spec_path = spec;
  const swclab::cli::CommandResult result = swclab::cli::run_command(inv);
  std::cout << result.report.dump(2) << "\n";
  if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";
  return result.exit_code;
}
