// Copyright 2026 The teamsem Authors
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


#ifndef TEAMSEM_TOOLS_COMMANDS_H_
#define TEAMSEM_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace teamsem::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kUsage = 2,
  kBudget = 3,
};

struct CommandResult {
  int exit_code = kTrue;
  std::string out;
  std::string err;
};

struct CommonOptions {
  std::string deps_path;
  std::size_t max_team = std::size_t{1} << 20;
  std::uint64_t max_branches = 200'000'000;
  std::int64_t timeout_ms = 0;
  bool machine = false;
  // Literal team-semantics rules only, no prunings.
  bool plain = false;
  std::size_t threads = 1;
};

enum class TeamSource { kFile, kEpsilon, kEmpty };

CommandResult cmd_eval(const CommonOptions& common, const std::string& model_path,
                       TeamSource source, const std::string& team_path,
                       const std::string& formula);

struct RewriteFlags {
  bool trace = false;
  bool verify = false;
  bool inclusion = false;  // expand inc as a macro too
  std::vector<std::size_t> sizes{2, 3};
};

// Passes: expand-macros, prenex, disj-to-hook, hook-normalize, normal-form,
// eliminate-all.
CommandResult cmd_rewrite(const CommonOptions& common, const std::string& pass,
                          const std::string& formula,
                          const RewriteFlags& flags);

CommandResult cmd_demo_unsafety(const CommonOptions& common, int n,
                                const std::string& write_dir);

CommandResult cmd_props(const CommonOptions& common, const std::string& name,
                        std::size_t arity, std::size_t bound);

struct EquivFlags {
  std::vector<std::size_t> sizes{2, 3};
  std::size_t min_size = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  // Writes PREFIX.model and PREFIX.team for a counterexample.
  std::string counterexample_prefix;
};

CommandResult cmd_equiv(const CommonOptions& common, const std::string& f1,
                        const std::string& f2, const EquivFlags& flags);

// The FO(inc1) sentences of the unsafety demonstration, over E/2.
const std::vector<std::string>& unsafety_corpus();

// Parses the command line and runs one command.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace teamsem::cli

#endif  // TEAMSEM_TOOLS_COMMANDS_H_
