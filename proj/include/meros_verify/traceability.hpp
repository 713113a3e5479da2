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

#include <array>
#include <string>
#include <vector>

#include "meros_verify/finding.hpp"
#include "meros_verify/model.hpp"
#include "meros_verify/scenario.hpp"

namespace meros_verify
{

enum class EvidenceStatus { unverified, pass, fail };

const char * to_string(EvidenceStatus status);

/// Stages that carry requirement evidence, in column order.
inline constexpr std::array<Stage, 4> kEvidenceStages{
  Stage::ssrve, Stage::srve, Stage::sources, Stage::trace};

struct TraceRow
{
  std::string requirement_id;
  std::string text;
  std::vector<std::string> allocated_paths;
  /// Indexed like kEvidenceStages.
  std::array<EvidenceStatus, 4> status{};
  std::vector<std::string> scenario_refs;

  EvidenceStatus status_at(Stage stage) const;
  EvidenceStatus overall() const;

  bool operator==(const TraceRow &) const = default;
};

struct TraceabilityMatrix
{
  std::vector<TraceRow> rows;

  bool operator==(const TraceabilityMatrix &) const = default;
};

/**
 * @brief Link requirements to their allocated elements and stage evidence.
 *
 * Per stage a row fails when an error finding's subject maps into one of its
 * allocated paths (prefix containment), passes when a report of that stage
 * covers one of the paths without such a finding, and is unverified
 * otherwise. Scenario results count as trace-stage evidence for plans whose
 * scope contains or lies inside an allocated path.
 *
 * @throws ForeignReportError when a report or result does not belong to the model.
 */
TraceabilityMatrix build_matrix(
  const SystemModel & model, const std::vector<VerificationReport> & reports,
  const std::vector<ScenarioResult> & scenario_results);

struct CoverageSummary
{
  std::size_t total{0};
  std::size_t allocated{0};
  std::size_t verified_pass{0};
  std::size_t verified_fail{0};
  std::size_t unverified{0};

  bool operator==(const CoverageSummary &) const = default;
};

CoverageSummary coverage_summary(const TraceabilityMatrix & matrix);

std::string matrix_to_json(const TraceabilityMatrix & matrix);
std::string matrix_to_text(const TraceabilityMatrix & matrix);

}  // namespace meros_verify
