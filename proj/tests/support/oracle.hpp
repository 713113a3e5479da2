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

#include <string>
#include <vector>

#include "meros_verify/conformance.hpp"
#include "meros_verify/finding.hpp"
#include "meros_verify/model.hpp"
#include "meros_verify/snapshot.hpp"

namespace meros_verify::testing
{

// Brute-force reference computations. Everything here works on plain vectors
// with linear scans and shares no code with the library's diff logic.

std::vector<Finding> oracle_diff(
  const ExpectedGraph & expected, const ObservedGraph & observed,
  const MatchPolicy & policy, Stage stage);

// Findings a srve run should produce on `after`, given that `before` conforms.
std::vector<Finding> oracle_snapshot_diff(
  const RuntimeSnapshot & before, const RuntimeSnapshot & after,
  const std::vector<std::string> & extra_ignored);

// Findings a sources run should produce for `found`, given that `prescribed` conforms.
std::vector<Finding> oracle_layout_diff(const SourceSnapshot & prescribed, const SourceSnapshot & found);

std::vector<Finding> oracle_unallocated(const SystemModel & model);

// Order-insensitive comparison; returns an empty string on equality and a
// readable listing of both sides otherwise.
std::string multiset_mismatch(std::vector<Finding> actual, std::vector<Finding> expected);

std::string describe(const Finding & finding);

}  // namespace meros_verify::testing
