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

#include "meros_verify/scenario.hpp"

#include <algorithm>
#include <set>

#include "meros_verify/errors.hpp"

namespace meros_verify
{

namespace
{

std::string_view trim(std::string_view text)
{
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

void flatten_into(
  const ValidationPlan & plan, const PlanRegistry & registry,
  std::vector<std::string> & stack, std::vector<PlanStep> & out)
{
  if (std::find(stack.begin(), stack.end(), plan.id) != stack.end()) {
    std::string chain;
    for (const auto & id : stack) {
      chain += id + " -> ";
    }
    throw CompositionCycleError(chain + plan.id);
  }
  validate_plan(plan);
  stack.push_back(plan.id);
  out.insert(out.end(), plan.steps.begin(), plan.steps.end());
  for (const auto & part : plan.parts) {
    const auto it = registry.find(part);
    if (it == registry.end()) {
      throw UnresolvedPartError(plan.id, part);
    }
    flatten_into(it->second, registry, stack, out);
  }
  stack.pop_back();
}

}  // namespace

PlanRegistry make_registry(const std::vector<ValidationPlan> & plans)
{
  PlanRegistry registry;
  for (const auto & plan : plans) {
    registry.emplace(plan.id, plan);
  }
  return registry;
}

void validate_plan(const ValidationPlan & plan)
{
  if (plan.steps.empty() == plan.parts.empty()) {
    throw InvalidPlanError("plan '" + plan.id + "' must have either steps or parts");
  }
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    if (trim(plan.steps[i].label).empty()) {
      throw InvalidPlanError("plan '" + plan.id + "' step " + std::to_string(i) + " has an empty label");
    }
  }
}

std::vector<PlanStep> flatten_steps(const ValidationPlan & plan, const PlanRegistry & registry)
{
  std::vector<std::string> stack;
  std::vector<PlanStep> out;
  flatten_into(plan, registry, stack, out);
  return out;
}

std::string describe_step(const PlanStep & step)
{
  std::string out;
  if (!step.actor.empty()) {
    out += step.actor + ": ";
  }
  out += step.label;
  if (step.channel) {
    out += " on " + *step.channel;
  }
  return out;
}

bool step_accepts(const PlanStep & step, const TraceEvent & event)
{
  if (trim(step.label) != trim(event.label)) {
    return false;
  }
  if (!trim(step.actor).empty() && trim(step.actor) != trim(event.actor)) {
    return false;
  }
  return !step.channel || *step.channel == event.channel_fqn;
}

ScenarioResult match_trace(const ValidationPlan & plan, const EventTrace & trace, const PlanRegistry & plans)
{
  const std::vector<PlanStep> steps = flatten_steps(plan, plans);
  ScenarioResult result;
  result.plan_id = plan.id;

  std::size_t cursor = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto begin = trace.events.begin() + static_cast<std::ptrdiff_t>(cursor);
    const auto hit = std::find_if(
      begin, trace.events.end(), [&](const TraceEvent & e) {return step_accepts(steps[i], e);});
    if (hit != trace.events.end()) {
      result.matched_indices.push_back(hit->seq);
      cursor = static_cast<std::size_t>(hit - trace.events.begin()) + 1;
      continue;
    }

    result.first_failed_step = i;
    const std::string expected = "step " + std::to_string(i) + " (" + describe_step(steps[i]) + ")";
    const auto early = std::find_if(
      trace.events.begin(), begin, [&](const TraceEvent & e) {return step_accepts(steps[i], e);});
    if (early != begin) {
      result.findings.push_back(
        make_finding(
          Stage::trace, Severity::error, FindingClass::ScenarioOrderViolation, plan.id, expected,
          "seq " + std::to_string(early->seq)));
    } else {
      result.findings.push_back(
        make_finding(Stage::trace, Severity::error, FindingClass::ScenarioStepMissing, plan.id, expected, std::nullopt));
    }
    break;
  }
  result.matched = !result.first_failed_step.has_value();
  return result;
}

std::vector<std::pair<std::string, bool>> annotate_activities(
  const ScenarioResult & result, const ValidationPlan & plan, const PlanRegistry & plans)
{
  const std::vector<PlanStep> steps = flatten_steps(plan, plans);
  std::vector<std::pair<std::string, bool>> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!steps[i].activity) {
      continue;
    }
    const bool matched = i < result.matched_indices.size();
    auto it = std::find_if(
      out.begin(), out.end(), [&](const auto & entry) {return entry.first == *steps[i].activity;});
    if (it == out.end()) {
      out.emplace_back(*steps[i].activity, matched);
    } else {
      it->second = it->second && matched;
    }
  }
  return out;
}

VerificationReport scenario_report(const ScenarioResult & result, const ValidationPlan & plan)
{
  return make_report(Stage::trace, plan.scope, result.findings);
}

std::vector<std::string> root_plans(const PlanRegistry & plans)
{
  std::set<std::string> used;
  for (const auto & [id, plan] : plans) {
    used.insert(plan.parts.begin(), plan.parts.end());
  }
  std::vector<std::string> out;
  for (const auto & [id, plan] : plans) {
    if (used.count(id) == 0) {
      out.push_back(id);
    }
  }
  return out;
}

}  // namespace meros_verify
