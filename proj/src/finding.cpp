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

#include "meros_verify/finding.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace meros_verify
{

namespace
{

constexpr std::array<const char *, 5> kStageNames{"model", "ssrve", "srve", "sources", "trace"};

constexpr std::array<const char *, 15> kClassNames{
  "MissingNode", "UnexpectedNode", "MissingEdge", "UnexpectedEdge", "TypeMismatch",
  "NameViolation", "MisplacedArtifact", "MissingPackage", "UnexpectedPackage",
  "UnallocatedRequirement", "DanglingAllocation", "DanglingReference", "DuplicateName",
  "ScenarioStepMissing", "ScenarioOrderViolation"};

}  // namespace

const char * to_string(Stage stage) {return kStageNames.at(static_cast<std::size_t>(stage));}

const char * to_string(Severity severity)
{
  return severity == Severity::error ? "error" : "warning";
}

const char * to_string(FindingClass cls) {return kClassNames.at(static_cast<std::size_t>(cls));}

std::optional<Stage> parse_stage(std::string_view text)
{
  for (std::size_t i = 0; i < kStageNames.size(); ++i) {
    if (text == kStageNames[i]) {
      return static_cast<Stage>(i);
    }
  }
  return std::nullopt;
}

std::optional<FindingClass> parse_finding_class(std::string_view text)
{
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (text == kClassNames[i]) {
      return static_cast<FindingClass>(i);
    }
  }
  return std::nullopt;
}

bool class_permitted(Stage stage, FindingClass cls)
{
  using C = FindingClass;
  switch (stage) {
    case Stage::model:
      return cls == C::UnallocatedRequirement || cls == C::DanglingAllocation ||
             cls == C::DanglingReference || cls == C::NameViolation || cls == C::DuplicateName;
    case Stage::ssrve:
    case Stage::srve:
      return cls == C::MissingNode || cls == C::UnexpectedNode || cls == C::MissingEdge ||
             cls == C::UnexpectedEdge || cls == C::TypeMismatch;
    case Stage::sources:
      return cls == C::MissingPackage || cls == C::UnexpectedPackage || cls == C::MisplacedArtifact;
    case Stage::trace:
      return cls == C::ScenarioStepMissing || cls == C::ScenarioOrderViolation;
  }
  return false;
}

bool finding_less(const Finding & a, const Finding & b)
{
  return std::tie(a.stage, a.cls, a.subject, a.expected, a.observed, a.severity) <
         std::tie(b.stage, b.cls, b.subject, b.expected, b.observed, b.severity);
}

void sort_findings(std::vector<Finding> & findings)
{
  std::sort(findings.begin(), findings.end(), finding_less);
}

Finding make_finding(
  Stage stage, Severity severity, FindingClass cls, std::string subject,
  std::optional<std::string> expected, std::optional<std::string> observed)
{
  if (!class_permitted(stage, cls)) {
    throw std::logic_error(
      std::string("finding class ") + to_string(cls) + " not permitted at stage " + to_string(stage));
  }
  return Finding{stage, severity, cls, std::move(subject), std::move(expected), std::move(observed)};
}

bool has_errors(const std::vector<Finding> & findings)
{
  return std::any_of(
    findings.begin(), findings.end(),
    [](const Finding & f) {return f.severity == Severity::error;});
}

VerificationReport make_report(Stage stage, std::string scope, std::vector<Finding> findings)
{
  sort_findings(findings);
  VerificationReport report;
  report.stage = stage;
  report.scope = std::move(scope);
  report.pass = !has_errors(findings);
  report.findings = std::move(findings);
  return report;
}

}  // namespace meros_verify
