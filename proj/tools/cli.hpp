// Copyright 2026 The enwit Authors
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

#ifndef ENWIT_TOOLS_CLI_HPP_
#define ENWIT_TOOLS_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace enwit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitNumericalFailure = 3,
};

// Inclusive uniform grid; steps = number of points.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 1;

  void validate(const char* name) const;
  std::vector<double> values() const;
};

// key:value lines (same keys as the long flags, without dashes). Blank lines
// and '#' comments are ignored. Returns "--key=value" arguments.
std::vector<std::string> config_file_args(const std::string& path);

// Runs one subcommand. `args` excludes the program name. Never throws;
// errors are reported on `err` and mapped to ExitCode values.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace enwit::cli

#endif  // ENWIT_TOOLS_CLI_HPP_
