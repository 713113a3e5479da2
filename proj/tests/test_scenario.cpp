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


#include <gtest/gtest.h>

#include <functional>

#include "fixture.hpp"
#include "generators.hpp"
#include "meros_verify/errors.hpp"
#include "meros_verify/scenario.hpp"

using namespace meros_verify;
namespace mt = meros_verify::testing;

namespace
{

PlanRegistry fixture_registry()
{
  return make_registry(mt::heros_model().plans);
}

TraceEvent event(long long seq, std::string label, std::string actor = "a", std::string channel = "/c")
{
  return TraceEvent{seq, std::move(channel), std::move(actor), std::move(label)};
}

ValidationPlan leaf(std::string id, std::vector<PlanStep> steps)
{
  ValidationPlan p;
  p.id = std::move(id);
  p.steps = std::move(steps);
  return p;
}

PlanStep step(std::string label, std::string actor = "", std::optional<std::string> activity = std::nullopt)
{
  return PlanStep{std::move(actor), std::move(label), std::nullopt, std::move(activity)};
}

// Lexicographically smallest strictly increasing assignment of steps to
// accepting events, found by exhaustive search in lexicographic order.
std::optional<std::vector<long long>> smallest_assignment(
  const std::vector<PlanStep> & steps, const EventTrace & trace)
{
  std::vector<long long> chosen;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t s, std::size_t from) {
      if (s == steps.size()) {
        return true;
      }
      for (std::size_t e = from; e < trace.events.size(); ++e) {
        const auto & ev = trace.events[e];
        const bool ok = ev.label == steps[s].label && (steps[s].actor.empty() || ev.actor == steps[s].actor);
        if (ok) {
          chosen.push_back(ev.seq);
          if (search(s + 1, e + 1)) {
            return true;
          }
          chosen.pop_back();
        }
      }
      return false;
    };
  if (search(0, 0)) {
    return chosen;
  }
  return std::nullopt;
}

}  // namespace

TEST(MatchTrace, LoadingExactTrace)
{
  const PlanRegistry reg = fixture_registry();
  const ValidationPlan & plan = reg.at("loading");
  const std::vector<std::string> labels = {
    "load", "marker position", "trajectory", "move above robot", "open gripper",
    "move above storage", "cube position", "pick", "close gripper", "base pose"};
  ASSERT_EQ(plan.steps.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    EXPECT_EQ(plan.steps[i].label, labels[i]);
  }
  const auto result = match_trace(plan, mt::heros_trace("loading"), reg);
  EXPECT_TRUE(result.matched);
  EXPECT_EQ(result.matched_indices, (std::vector<long long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_FALSE(result.first_failed_step);
  EXPECT_TRUE(result.findings.empty());
}

TEST(MatchTrace, OpenGripperDeleted)
{
  const PlanRegistry reg = fixture_registry();
  const EventTrace trace = mt::without_event(mt::heros_trace("loading"), 4);
  const auto result = match_trace(reg.at("loading"), trace, reg);
  EXPECT_FALSE(result.matched);
  EXPECT_EQ(result.first_failed_step, 4u);
  EXPECT_EQ(result.matched_indices.size(), 4u);
  ASSERT_EQ(result.findings.size(), 1u);
  EXPECT_EQ(result.findings[0].cls, FindingClass::ScenarioStepMissing);
  EXPECT_EQ(result.findings[0].subject, "loading");
  EXPECT_NE(result.findings[0].expected->find("open gripper"), std::string::npos);
}

TEST(MatchTrace, OutOfOrderEvent)
{
  const ValidationPlan plan = leaf("p", {step("a"), step("b")});
  const EventTrace trace{{event(1, "b"), event(2, "a")}};
  const auto result = match_trace(plan, trace, {});
  EXPECT_FALSE(result.matched);
  EXPECT_EQ(result.first_failed_step, 1u);
  ASSERT_EQ(result.findings.size(), 1u);
  EXPECT_EQ(result.findings[0].cls, FindingClass::ScenarioOrderViolation);
  EXPECT_EQ(result.findings[0].observed, "seq 1");
}

TEST(MatchTrace, LabelsTrimmedCaseSensitive)
{
  const ValidationPlan plan = leaf("p", {step(" pick ", "Arm")});
  EXPECT_TRUE(match_trace(plan, EventTrace{{event(1, "pick", " Arm")}}, {}).matched);
  EXPECT_FALSE(match_trace(plan, EventTrace{{event(1, "Pick", "Arm")}}, {}).matched);
  EXPECT_FALSE(match_trace(plan, EventTrace{{event(1, "pick", "arm")}}, {}).matched);
}

TEST(MatchTrace, ActorAndChannelOptional)
{
  PlanStep s = step("go");
  EXPECT_TRUE(match_trace(leaf("p", {s}), EventTrace{{event(1, "go", "anyone")}}, {}).matched);
  s.channel = "/x";
  EXPECT_FALSE(match_trace(leaf("p", {s}), EventTrace{{event(1, "go", "anyone", "/y")}}, {}).matched);
  EXPECT_TRUE(match_trace(leaf("p", {s}), EventTrace{{event(1, "go", "anyone", "/x")}}, {}).matched);
}

TEST(MatchTrace, EmptyPlanRejected)
{
  EXPECT_THROW(validate_plan(ValidationPlan{}), InvalidPlanError);
  EXPECT_THROW(match_trace(ValidationPlan{}, EventTrace{}, {}), InvalidPlanError);
  ValidationPlan both = leaf("p", {step("a")});
  both.parts = {"q"};
  EXPECT_THROW(validate_plan(both), InvalidPlanError);
  EXPECT_THROW(validate_plan(leaf("p", {step("  ")})), InvalidPlanError);
}

TEST(MatchTrace, CompositePartsMatchSequentially)
{
  ValidationPlan whole;
  whole.id = "whole";
  whole.parts = {"first", "second"};
  const PlanRegistry reg = make_registry({whole, leaf("first", {step("a")}), leaf("second", {step("b")})});
  EXPECT_TRUE(match_trace(whole, EventTrace{{event(1, "a"), event(2, "x"), event(3, "b")}}, reg).matched);
  const auto result = match_trace(whole, EventTrace{{event(1, "b"), event(2, "a")}}, reg);
  EXPECT_FALSE(result.matched);
  EXPECT_EQ(result.first_failed_step, 1u);
}

TEST(MatchTrace, CompositionErrors)
{
  ValidationPlan a;
  a.id = "a";
  a.parts = {"b"};
  ValidationPlan b;
  b.id = "b";
  b.parts = {"a"};
  EXPECT_THROW(match_trace(a, EventTrace{}, make_registry({a, b})), CompositionCycleError);
  EXPECT_THROW(match_trace(a, EventTrace{}, make_registry({a})), UnresolvedPartError);
}

TEST(MatchTrace, FixturePlansExactDeletionInsertion)
{
  const PlanRegistry reg = fixture_registry();
  mt::Rng rng(41);
  for (const char * id : {"loading", "unloading", "supporting", "obstacle"}) {
    const ValidationPlan & plan = reg.at(id);
    const EventTrace exact = mt::heros_trace(id);
    const auto steps = flatten_steps(plan, reg);
    ASSERT_EQ(exact.events.size(), steps.size()) << id;
    ASSERT_TRUE(match_trace(plan, exact, reg).matched) << id;
    for (std::size_t k = 0; k < exact.events.size(); ++k) {
      const auto result = match_trace(plan, mt::without_event(exact, k), reg);
      ASSERT_FALSE(result.matched) << id << " deletion " << k;
      ASSERT_EQ(result.first_failed_step, k) << id;
    }
    for (int i = 0; i < 10; ++i) {
      const EventTrace noisy = mt::with_foreign_events(exact, rng, 1 + mt::pick(rng, 5));
      ASSERT_TRUE(match_trace(plan, noisy, reg).matched) << id;
    }
  }
}

TEST(MatchTrace, FullScenarioWithChatter)
{
  const PlanRegistry reg = fixture_registry();
  const auto result = match_trace(reg.at("full_scenario"), mt::heros_trace("full_scenario"), reg);
  EXPECT_TRUE(result.matched);
  EXPECT_EQ(result.matched_indices.size(), flatten_steps(reg.at("full_scenario"), reg).size());
}

TEST(MatchTrace, GreedyIsLexicographicallySmallest)
{
  mt::Rng rng(8);
  const char * labels[] = {"a", "b", "c"};
  const char * actors[] = {"x", "y"};
  std::size_t matched = 0;
  for (int round = 0; round < 2000; ++round) {
    ValidationPlan plan;
    plan.id = "p";
    for (std::size_t s = 1 + mt::pick(rng, 4); s > 0; --s) {
      plan.steps.push_back(step(labels[mt::pick(rng, 3)], mt::coin(rng) ? actors[mt::pick(rng, 2)] : ""));
    }
    EventTrace trace;
    for (std::size_t e = 0, n = mt::pick(rng, 10); e < n; ++e) {
      trace.events.push_back(event(static_cast<long long>(e + 1) * 2, labels[mt::pick(rng, 3)], actors[mt::pick(rng, 2)]));
    }
    const auto result = match_trace(plan, trace, {});
    const auto oracle = smallest_assignment(plan.steps, trace);
    ASSERT_EQ(result.matched, oracle.has_value());
    if (oracle) {
      ASSERT_EQ(result.matched_indices, *oracle);
      ++matched;
    } else {
      ASSERT_TRUE(result.first_failed_step);
      ASSERT_EQ(result.matched_indices.size(), *result.first_failed_step);
    }
  }
  EXPECT_GT(matched, 200u);
}

TEST(AnnotateActivities, AllMatched)
{
  const PlanRegistry reg = fixture_registry();
  const auto result = match_trace(reg.at("supporting"), mt::heros_trace("supporting"), reg);
  const auto tags = annotate_activities(result, reg.at("supporting"), reg);
  ASSERT_EQ(tags.size(), 3u);
  EXPECT_EQ(tags[0], (std::pair<std::string, bool>{"ACT5", true}));
  EXPECT_EQ(tags[1], (std::pair<std::string, bool>{"ACT10", true}));
  EXPECT_EQ(tags[2], (std::pair<std::string, bool>{"ACT11", true}));
}

TEST(AnnotateActivities, UnmatchedAct5)
{
  const PlanRegistry reg = fixture_registry();
  const auto result = match_trace(reg.at("supporting"), mt::without_event(mt::heros_trace("supporting"), 3), reg);
  const auto tags = annotate_activities(result, reg.at("supporting"), reg);
  ASSERT_FALSE(tags.empty());
  EXPECT_EQ(tags[0], (std::pair<std::string, bool>{"ACT5", false}));
}

TEST(AnnotateActivities, NoTags)
{
  const ValidationPlan plan = leaf("p", {step("a")});
  EXPECT_TRUE(annotate_activities(match_trace(plan, EventTrace{{event(1, "a")}}, {}), plan).empty());
}

TEST(Plans, RootsAndReports)
{
  const PlanRegistry reg = fixture_registry();
  EXPECT_EQ(
    root_plans(reg), (std::vector<std::string>{"full_scenario", "loading", "obstacle", "supporting", "unloading"}));
  const auto result = match_trace(reg.at("obstacle"), EventTrace{}, reg);
  const auto report = scenario_report(result, reg.at("obstacle"));
  EXPECT_EQ(report.stage, Stage::trace);
  EXPECT_EQ(report.scope, "Obstacles");
  EXPECT_FALSE(report.pass);
}

TEST(Plans, StepDescriptorsUniquePerPlan)
{
  // Deletion sensitivity relies on no two steps of a plan accepting the same event.
  const PlanRegistry reg = fixture_registry();
  for (const auto & id : root_plans(reg)) {
    const auto steps = flatten_steps(reg.at(id), reg);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      for (std::size_t j = i + 1; j < steps.size(); ++j) {
        const bool same = steps[i].label == steps[j].label && steps[i].actor == steps[j].actor &&
          steps[i].channel == steps[j].channel;
        EXPECT_FALSE(same) << id << ": " << describe_step(steps[i]);
      }
    }
  }
}
