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

#include "meros_verify/finding.hpp"

namespace meros_verify
{

std::string report_to_json(const VerificationReport & report);

/// A single report renders as an object, several as an array.
std::string reports_to_json(const std::vector<VerificationReport> & reports);

/// Stage banner followed by a finding table.
std::string report_to_text(const VerificationReport & report, bool color = false);

}  // namespace meros_verify
