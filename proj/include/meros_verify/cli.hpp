// Copyright 2026 The meros_verify Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meros_verify::cli
{

inline constexpr int kExitPass = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

/**
 * @brief Entry point behind the meros_verify executable.
 *
 * @p args excludes the program name. Reports go to @p out (or the --out
 * file), diagnostics to @p err. Returns 0 when no error findings were
 * produced, 1 when at least one was, 2 on usage or input errors.
 */
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace meros_verify::cli
