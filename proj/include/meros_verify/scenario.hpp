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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meros_verify/finding.hpp"
#include "meros_verify/model.hpp"
#include "meros_verify/snapshot.hpp"

namespace meros_verify
{

using PlanRegistry = std::map<std::string, ValidationPlan, std::less<>>;

PlanRegistry make_registry(const std::vector<ValidationPlan> & plans);

/// @throws InvalidPlanError unless exactly one of steps and parts is non-empty
/// and every step label is non-empty.
void validate_plan(const ValidationPlan & plan);

/// Leaf steps of @p plan with composite parts expanded in order.
/// @throws UnresolvedPartError, CompositionCycleError
std::vector<PlanStep> flatten_steps(const ValidationPlan & plan, const PlanRegistry & registry);

struct ScenarioResult
{
  std::string plan_id;
  bool matched{false};
  /// Trace seq of the event matched by each leaf step, in step order.
  std::vector<long long> matched_indices;
  std::optional<std::size_t> first_failed_step;
  std::vector<Finding> findings;

  bool operator==(const ScenarioResult &) const = default;
};

/// Human-readable step description used in findings.
std::string describe_step(const PlanStep & step);

/// Trimmed, case-sensitive label and actor comparison; channel compared when the step sets one.
bool step_accepts(const PlanStep & step, const TraceEvent & event);

/**
 * @brief Greedy ordered-subsequence match of a plan against a trace.
 *
 * Each step takes the first acceptable event after the previous step's
 * event; composite plans continue part by part over the remaining suffix.
 * The first unmatched step yields ScenarioOrderViolation when an acceptable
 * event exists earlier in the trace, ScenarioStepMissing otherwise.
 *
 * @throws UnresolvedPartError, CompositionCycleError, InvalidPlanError
 */
ScenarioResult match_trace(
  const ValidationPlan & plan, const EventTrace & trace, const PlanRegistry & plans);

/// Activity tags in first-appearance order with whether every step carrying the tag matched.
std::vector<std::pair<std::string, bool>> annotate_activities(
  const ScenarioResult & result, const ValidationPlan & plan, const PlanRegistry & plans = {});

/// Trace-stage report for one result, scoped to the plan's scope.
VerificationReport scenario_report(const ScenarioResult & result, const ValidationPlan & plan);

/// Plans that no other plan uses as a part.
std::vector<std::string> root_plans(const PlanRegistry & plans);

}  // namespace meros_verify
