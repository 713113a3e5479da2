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
#include <string_view>

#include "meros_verify/model.hpp"

namespace meros_verify
{

/**
 * @brief Parse a model document.
 *
 * Strict: unknown keys, missing keys and wrong scalar types are rejected.
 * Hardware links are made symmetric. Sibling order is kept as written.
 *
 * @throws SyntaxError on malformed JSON or schema violations.
 * @throws DuplicateNameError on repeated sibling names, requirement ids,
 *         plan ids, or source container names.
 * @throws DanglingReferenceError for unresolvable channel references,
 *         requirement parents (including cycles), hardware links and mappings.
 * @throws InvalidPlanError for a plan with both or neither of steps and parts.
 */
SystemModel parse_model(std::string_view text);

/// Canonical document: fixed key order, 2-space indent, sorted siblings.
std::string serialize_model(const SystemModel & model);

}  // namespace meros_verify
