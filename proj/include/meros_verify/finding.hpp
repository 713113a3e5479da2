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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace meros_verify
{

enum class Stage { model, ssrve, srve, sources, trace };

enum class Severity { error, warning };

enum class FindingClass
{
  MissingNode,
  UnexpectedNode,
  MissingEdge,
  UnexpectedEdge,
  TypeMismatch,
  NameViolation,
  MisplacedArtifact,
  MissingPackage,
  UnexpectedPackage,
  UnallocatedRequirement,
  DanglingAllocation,
  DanglingReference,
  DuplicateName,
  ScenarioStepMissing,
  ScenarioOrderViolation,
};

const char * to_string(Stage stage);
const char * to_string(Severity severity);
const char * to_string(FindingClass cls);

std::optional<Stage> parse_stage(std::string_view text);
std::optional<FindingClass> parse_finding_class(std::string_view text);

/// Whether findings of @p cls may be reported at @p stage.
bool class_permitted(Stage stage, FindingClass cls);

struct Finding
{
  Stage stage{Stage::model};
  Severity severity{Severity::error};
  FindingClass cls{FindingClass::NameViolation};
  /// Element path, fully qualified ROS name, requirement id, package or plan id.
  std::string subject;
  std::optional<std::string> expected;
  std::optional<std::string> observed;

  bool operator==(const Finding &) const = default;
};

/// Ordering used for every emitted list: stage, class, subject, then the
/// remaining fields so that the order is total.
bool finding_less(const Finding & a, const Finding & b);
void sort_findings(std::vector<Finding> & findings);

/// @throws std::logic_error if the class is not permitted at the stage.
Finding make_finding(
  Stage stage, Severity severity, FindingClass cls, std::string subject,
  std::optional<std::string> expected = std::nullopt,
  std::optional<std::string> observed = std::nullopt);

struct VerificationReport
{
  Stage stage{Stage::model};
  /// Element path of the verified system; empty for the whole model.
  std::string scope;
  std::vector<Finding> findings;
  bool pass{true};

  bool operator==(const VerificationReport &) const = default;
};

/// Sorts findings and sets pass from their severities.
VerificationReport make_report(Stage stage, std::string scope, std::vector<Finding> findings);

bool has_errors(const std::vector<Finding> & findings);

}  // namespace meros_verify
