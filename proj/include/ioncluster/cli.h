// Copyright 2026 The ioncluster Authors
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

#ifndef IONCLUSTER_CLI_H
#define IONCLUSTER_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace ioncluster::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitTruncation = 3;

/// Entry point for the `ioncluster` tool. `args` excludes the program name.
/// Reports go to `out` (or to --out), diagnostics to `err`.
///
///   run   --protocol cluster6|chain:N | --sequence FILE  [--n-max N] [--snapshots] [--full] [--out PATH]
///   noise --protocol ... | --sequence FILE  [--n-max N] [--per-pulse-fidelity F]
///         [--jitter-sigma S] [--trials T] [--seed X] [--out PATH]
///   emit  --protocol cluster6|chain:N  [--out PATH]
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ioncluster::cli

#endif
