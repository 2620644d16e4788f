// Copyright 2026 The AQM Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef AQM_CLI_CLI_H
#define AQM_CLI_CLI_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace aqm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuleFailure = 2;

struct Environment {
    /// Default seed when --seed is not given (AQM_SEED).
    std::optional<std::uint64_t> seed;
};

/// Reads AQM_SEED. A malformed value is ignored with a warning on `err`.
Environment environment_from_process(std::ostream &err);

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 usage or parse error, 2 rule failure.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const Environment &env = {});

}  // namespace aqm::cli

#endif
