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

#include "meros_verify/traceability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "meros_verify/errors.hpp"
#include "meros_verify/model_index.hpp"
#include "meros_verify/names.hpp"

namespace meros_verify
{

const char * to_string(EvidenceStatus status)
{
  switch (status) {
    case EvidenceStatus::unverified: return "unverified";
    case EvidenceStatus::pass: return "pass";
    case EvidenceStatus::fail: return "fail";
  }
  return "unverified";
}

namespace
{

std::size_t stage_column(Stage stage)
{
  const auto it = std::find(kEvidenceStages.begin(), kEvidenceStages.end(), stage);
  return static_cast<std::size_t>(it - kEvidenceStages.begin());
}

/// Maps finding subjects back onto element paths.
class SubjectMap
{
public:
  explicit SubjectMap(const ModelIndex & index)
  : index_(index)
  {
    for (const auto & ref : index.elements()) {
      if (ref.kind == ElementKind::node) {
        by_name_[index.node_fqn(ref)].push_back(ref.path);
        if (!ref.node->package.empty()) {
          by_package_[ref.node->package].push_back(ref.path);
        }
      } else if (ref.kind == ElementKind::channel) {
        const auto & name = ref.channel->channel_name;
        if (is_valid_name(name) && name.front() != '~') {
          by_name_[resolve_name(name, ref.ns)].push_back(ref.path);
        }
      }
    }
    for (const auto & plan : index.model().plans) {
      plans_[plan.id] = plan.scope;
    }
  }

  std::vector<std::string> paths(const Finding & finding) const
  {
    switch (finding.stage) {
      case Stage::sources:
        return lookup(by_package_, finding.subject);
      case Stage::ssrve:
      case Stage::srve: {
          // Edge subjects are "<node> <role> <channel>".
          const std::string name = finding.subject.substr(0, finding.subject.find(' '));
          auto found = lookup(by_name_, name);
          if (found.empty() && is_absolute_name(name)) {
            // Unknown node: charge the system that declared its namespace.
            std::string ns = namespace_of(name);
            while (true) {
              if (auto owner = index_.system_declaring_namespace(ns)) {
                found.push_back(*owner);
                break;
              }
              if (ns == "/") {
                break;
              }
              ns = namespace_of(ns);
            }
          }
          return found;
        }
      case Stage::trace: {
          const auto it = plans_.find(finding.subject);
          return it == plans_.end() ? std::vector<std::string>{} : std::vector<std::string>{it->second};
        }
      case Stage::model:
        return {finding.subject};
    }
    return {};
  }

  const std::string * plan_scope(const std::string & id) const
  {
    const auto it = plans_.find(id);
    return it == plans_.end() ? nullptr : &it->second;
  }

private:
  static std::vector<std::string> lookup(
    const std::map<std::string, std::vector<std::string>> & map, const std::string & key)
  {
    const auto it = map.find(key);
    return it == map.end() ? std::vector<std::string>{} : it->second;
  }

  const ModelIndex & index_;
  std::map<std::string, std::vector<std::string>> by_name_;
  std::map<std::string, std::vector<std::string>> by_package_;
  std::map<std::string, std::string> plans_;
};

bool related(std::string_view a, std::string_view b)
{
  return path_contains(a, b) || path_contains(b, a);
}

}  // namespace

EvidenceStatus TraceRow::status_at(Stage stage) const
{
  const std::size_t col = stage_column(stage);
  return col < status.size() ? status[col] : EvidenceStatus::unverified;
}

EvidenceStatus TraceRow::overall() const
{
  if (std::find(status.begin(), status.end(), EvidenceStatus::fail) != status.end()) {
    return EvidenceStatus::fail;
  }
  if (std::find(status.begin(), status.end(), EvidenceStatus::pass) != status.end()) {
    return EvidenceStatus::pass;
  }
  return EvidenceStatus::unverified;
}

TraceabilityMatrix build_matrix(
  const SystemModel & model, const std::vector<VerificationReport> & reports,
  const std::vector<ScenarioResult> & scenario_results)
{
  const ModelIndex index(model);
  const SubjectMap subjects(index);

  for (const auto & report : reports) {
    if (!report.scope.empty() && index.find_system(report.scope) == nullptr) {
      throw ForeignReportError(report.scope);
    }
  }
  // Trace evidence: scope of each plan and whether it matched.
  std::vector<std::pair<std::string, bool>> plan_evidence;
  for (const auto & result : scenario_results) {
    const std::string * scope = subjects.plan_scope(result.plan_id);
    if (scope == nullptr) {
      throw ForeignReportError(result.plan_id);
    }
    plan_evidence.emplace_back(*scope, result.matched);
  }

  TraceabilityMatrix matrix;
  for (const auto & req : model.requirements) {
    TraceRow row;
    row.requirement_id = req.id;
    row.text = req.text;
    row.allocated_paths = req.allocations;
    auto under_allocation = [&](const std::string & path) {
        return std::any_of(
          req.allocations.begin(), req.allocations.end(),
          [&](const std::string & a) {return path_contains(a, path);});
      };
    auto touches_allocation = [&](const std::string & path) {
        return std::any_of(
          req.allocations.begin(), req.allocations.end(),
          [&](const std::string & a) {return related(a, path);});
      };

    for (const auto & report : reports) {
      const std::size_t col = stage_column(report.stage);
      if (col >= row.status.size()) {
        continue;
      }
      auto & status = row.status[col];
      const bool trace = report.stage == Stage::trace;
      for (const auto & finding : report.findings) {
        if (finding.severity != Severity::error) {
          continue;
        }
        for (const auto & path : subjects.paths(finding)) {
          if (trace ? touches_allocation(path) : under_allocation(path)) {
            status = EvidenceStatus::fail;
          }
        }
      }
      const bool covers = trace ? touches_allocation(report.scope) :
        std::any_of(
        req.allocations.begin(), req.allocations.end(),
        [&](const std::string & a) {return path_contains(report.scope, a);});
      if (covers && status == EvidenceStatus::unverified) {
        status = EvidenceStatus::pass;
      }
    }

    auto & trace_status = row.status[stage_column(Stage::trace)];
    for (const auto & [scope, matched] : plan_evidence) {
      if (!touches_allocation(scope)) {
        continue;
      }
      if (!matched) {
        trace_status = EvidenceStatus::fail;
      } else if (trace_status == EvidenceStatus::unverified) {
        trace_status = EvidenceStatus::pass;
      }
    }

    for (const auto & plan : model.plans) {
      if (touches_allocation(plan.scope)) {
        row.scenario_refs.push_back(plan.id);
      }
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

CoverageSummary coverage_summary(const TraceabilityMatrix & matrix)
{
  CoverageSummary summary;
  summary.total = matrix.rows.size();
  for (const auto & row : matrix.rows) {
    if (!row.allocated_paths.empty()) {
      ++summary.allocated;
    }
    switch (row.overall()) {
      case EvidenceStatus::pass: ++summary.verified_pass; break;
      case EvidenceStatus::fail: ++summary.verified_fail; break;
      case EvidenceStatus::unverified: ++summary.unverified; break;
    }
  }
  return summary;
}

std::string matrix_to_json(const TraceabilityMatrix & matrix)
{
  using ordered = nlohmann::ordered_json;
  ordered rows = ordered::array();
  for (const auto & row : matrix.rows) {
    ordered r;
    r["id"] = row.requirement_id;
    r["text"] = row.text;
    r["allocated_paths"] = row.allocated_paths;
    ordered status = ordered::object();
    for (std::size_t i = 0; i < kEvidenceStages.size(); ++i) {
      status[to_string(kEvidenceStages[i])] = to_string(row.status[i]);
    }
    r["status"] = std::move(status);
    r["scenario_refs"] = row.scenario_refs;
    rows.push_back(std::move(r));
  }
  return rows.dump(2) + "\n";
}

std::string matrix_to_text(const TraceabilityMatrix & matrix)
{
  const std::vector<std::string> header{"id", "text", "allocations", "ssrve", "srve", "sources", "scenarios"};
  std::vector<std::vector<std::string>> cells;
  for (const auto & row : matrix.rows) {
    std::string allocations;
    for (const auto & path : row.allocated_paths) {
      allocations += allocations.empty() ? path : "; " + path;
    }
    cells.push_back(
      {row.requirement_id, row.text, allocations.empty() ? "-" : allocations,
        to_string(row.status_at(Stage::ssrve)), to_string(row.status_at(Stage::srve)),
        to_string(row.status_at(Stage::sources)), to_string(row.status_at(Stage::trace))});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto & line : cells) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string> & line) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        out << line[c];
        if (c + 1 < line.size()) {
          out << std::string(width[c] - line[c].size() + 2, ' ');
        }
      }
      out << '\n';
    };
  emit(header);
  std::vector<std::string> rule;
  for (auto w : width) {
    rule.emplace_back(w, '-');
  }
  emit(rule);
  for (const auto & line : cells) {
    emit(line);
  }
  const auto summary = coverage_summary(matrix);
  out << "\ntotal " << summary.total << ", allocated " << summary.allocated << ", pass "
      << summary.verified_pass << ", fail " << summary.verified_fail << ", unverified "
      << summary.unverified << '\n';
  return out.str();
}

}  // namespace meros_verify
