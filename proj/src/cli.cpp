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

#include "meros_verify/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "meros_verify/conformance.hpp"
#include "meros_verify/errors.hpp"
#include "meros_verify/model_index.hpp"
#include "meros_verify/model_io.hpp"
#include "meros_verify/report.hpp"
#include "meros_verify/scenario.hpp"
#include "meros_verify/snapshot.hpp"
#include "meros_verify/traceability.hpp"

namespace meros_verify::cli
{

namespace
{

struct Options
{
  std::string model_path;
  std::string snapshot_path;
  std::string sources_path;
  std::string trace_path;
  std::string stage{"all"};
  std::string scope;
  std::string plan;
  std::string format{"text"};
  std::string out_path;
  std::vector<std::string> ignore;
};

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void add_common(CLI::App & cmd, Options & opt)
{
  cmd.add_option("--model", opt.model_path, "Model document")->required();
  cmd.add_option("--snapshot", opt.snapshot_path, "Runtime graph snapshot");
  cmd.add_option("--sources", opt.sources_path, "Source tree snapshot");
  cmd.add_option("--trace", opt.trace_path, "Event trace (JSON lines)");
  cmd.add_option("--scope", opt.scope, "System path for ssrve");
  cmd.add_option("--plan", opt.plan, "Validation plan id");
  cmd.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd.add_option("--out", opt.out_path, "Write the report to this file");
  cmd.add_option("--ignore", opt.ignore, "Extra channel/node ignore pattern (repeatable)");
}

bool use_color(const Options & opt, const std::ostream & out)
{
  const char * env = std::getenv("MEROS_VERIFY_COLOR");
  const std::string mode = env != nullptr ? env : "auto";
  if (opt.format != "text" || mode == "never") {
    return false;
  }
  if (mode == "always") {
    return true;
  }
  return opt.out_path.empty() && &out == &std::cout && isatty(STDOUT_FILENO) != 0;
}

/// Evidence collected during one invocation.
struct Run
{
  SystemModel model;
  std::vector<VerificationReport> reports;
  std::vector<ScenarioResult> results;
  std::vector<std::pair<ValidationPlan, ScenarioResult>> annotated;
};

MatchPolicy policy_for(const Options & opt)
{
  MatchPolicy policy = MatchPolicy::defaults();
  policy.ignore_channels.insert(policy.ignore_channels.end(), opt.ignore.begin(), opt.ignore.end());
  policy.ignore_nodes.insert(policy.ignore_nodes.end(), opt.ignore.begin(), opt.ignore.end());
  return policy;
}

RuntimeSnapshot need_snapshot(const Options & opt, const char * stage)
{
  if (opt.snapshot_path.empty()) {
    throw UsageError(std::string("stage ") + stage + " requires --snapshot");
  }
  return parse_runtime_snapshot(read_file(opt.snapshot_path));
}

SourceSnapshot need_sources(const Options & opt)
{
  if (opt.sources_path.empty()) {
    throw UsageError("stage sources requires --sources");
  }
  return parse_source_snapshot(read_file(opt.sources_path));
}

void run_model(Run & run)
{
  run.reports.push_back(make_report(Stage::model, "", validate_model(run.model)));
}

void run_ssrve(Run & run, const Options & opt, const RuntimeSnapshot & snapshot)
{
  const MatchPolicy policy = policy_for(opt);
  if (!opt.scope.empty()) {
    run.reports.push_back(verify_subsystem(run.model, snapshot, opt.scope, policy));
    return;
  }
  auto reports = verify_subsystems(run.model, snapshot, policy);
  run.reports.insert(run.reports.end(), reports.begin(), reports.end());
}

void run_trace(Run & run, const Options & opt)
{
  if (opt.trace_path.empty()) {
    throw UsageError("stage trace requires --trace");
  }
  const EventTrace trace = parse_trace(read_file(opt.trace_path));
  const PlanRegistry registry = make_registry(run.model.plans);
  std::vector<std::string> ids;
  if (!opt.plan.empty()) {
    if (registry.find(opt.plan) == registry.end()) {
      throw UsageError("unknown plan '" + opt.plan + "'");
    }
    ids.push_back(opt.plan);
  } else {
    ids = root_plans(registry);
  }
  for (const auto & id : ids) {
    const ValidationPlan & plan = registry.at(id);
    ScenarioResult result = match_trace(plan, trace, registry);
    run.reports.push_back(scenario_report(result, plan));
    run.results.push_back(result);
    run.annotated.emplace_back(plan, std::move(result));
  }
}

void run_stage(Run & run, const Options & opt, const std::string & stage)
{
  if (stage == "model") {
    run_model(run);
  } else if (stage == "ssrve") {
    run_ssrve(run, opt, need_snapshot(opt, "ssrve"));
  } else if (stage == "srve") {
    run.reports.push_back(verify_system(run.model, need_snapshot(opt, "srve"), policy_for(opt)));
  } else if (stage == "sources") {
    run.reports.push_back(verify_sources(run.model, need_sources(opt)));
  } else if (stage == "trace") {
    run_trace(run, opt);
  } else if (stage == "all") {
    const RuntimeSnapshot snapshot = need_snapshot(opt, "all");
    const SourceSnapshot sources = need_sources(opt);
    run_model(run);
    run_ssrve(run, opt, snapshot);
    run.reports.push_back(verify_system(run.model, snapshot, policy_for(opt)));
    run.reports.push_back(verify_sources(run.model, sources));
    if (!opt.trace_path.empty()) {
      run_trace(run, opt);
    }
  } else {
    throw UsageError("unknown stage '" + stage + "'");
  }
}

/// Runs whichever stages the given inputs allow; used by the matrix command.
void run_available(Run & run, const Options & opt)
{
  if (!opt.snapshot_path.empty()) {
    run_stage(run, opt, "ssrve");
    run_stage(run, opt, "srve");
  }
  if (!opt.sources_path.empty()) {
    run_stage(run, opt, "sources");
  }
  if (!opt.trace_path.empty()) {
    run_trace(run, opt);
  }
}

std::string render_reports(const Run & run, const Options & opt, bool color, bool with_activities)
{
  if (opt.format == "json") {
    return reports_to_json(run.reports);
  }
  std::string text;
  for (const auto & report : run.reports) {
    text += report_to_text(report, color);
  }
  if (with_activities) {
    const PlanRegistry registry = make_registry(run.model.plans);
    for (const auto & [plan, result] : run.annotated) {
      const auto tags = annotate_activities(result, plan, registry);
      if (tags.empty()) {
        continue;
      }
      text += "  activities of " + plan.id + ":";
      for (const auto & [tag, ok] : tags) {
        text += " " + tag + (ok ? "=ok" : "=missed");
      }
      text += "\n";
    }
  }
  return text;
}

int exit_code(const Run & run)
{
  for (const auto & report : run.reports) {
    if (has_errors(report.findings)) {
      return kExitFindings;
    }
  }
  return kExitPass;
}

std::string render_matrix(const TraceabilityMatrix & matrix, const Options & opt)
{
  return opt.format == "json" ? matrix_to_json(matrix) : matrix_to_text(matrix);
}

}  // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Design-versus-realisation verification for ROS 2 systems", "meros_verify"};
  app.require_subcommand(1);
  Options opt;

  auto * check = app.add_subcommand("check-model", "Well-formedness of the model document");
  add_common(*check, opt);
  auto * verify = app.add_subcommand("verify", "Compare snapshots against the model");
  add_common(*verify, opt);
  verify->add_option("--stage", opt.stage, "Stage to run")
  ->check(CLI::IsMember({"model", "ssrve", "srve", "sources", "trace", "all"}));
  auto * validate = app.add_subcommand("validate", "Match an event trace against validation plans");
  add_common(*validate, opt);
  auto * matrix = app.add_subcommand("matrix", "Requirement traceability matrix");
  add_common(*matrix, opt);
  auto * all = app.add_subcommand("all", "Every stage plus the traceability matrix");
  add_common(*all, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success &) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError & e) {
    err << "meros_verify: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string rendered;
  Run state;
  try {
    state.model = parse_model(read_file(opt.model_path));
    const bool color = use_color(opt, out);
    if (check->parsed()) {
      run_model(state);
      rendered = render_reports(state, opt, color, false);
    } else if (verify->parsed()) {
      run_stage(state, opt, opt.stage);
      rendered = render_reports(state, opt, color, opt.stage == "trace" || opt.stage == "all");
    } else if (validate->parsed()) {
      run_trace(state, opt);
      rendered = render_reports(state, opt, color, true);
    } else if (matrix->parsed()) {
      run_available(state, opt);
      rendered = render_matrix(build_matrix(state.model, state.reports, state.results), opt);
    } else if (all->parsed()) {
      run_stage(state, opt, "all");
      const auto m = build_matrix(state.model, state.reports, state.results);
      if (opt.format == "json") {
        auto doc = nlohmann::ordered_json::object();
        doc["reports"] = nlohmann::ordered_json::parse(reports_to_json(state.reports));
        if (!doc["reports"].is_array()) {
          doc["reports"] = nlohmann::ordered_json::array({doc["reports"]});
        }
        doc["matrix"] = nlohmann::ordered_json::parse(matrix_to_json(m));
        rendered = doc.dump(2) + "\n";
      } else {
        rendered = render_reports(state, opt, color, true) + "\n" + matrix_to_text(m);
      }
    }
  } catch (const UsageError & e) {
    err << "meros_verify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error & e) {
    err << "meros_verify: " << e.what() << "\n";
    return kExitUsage;
  }

  if (opt.out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << rendered)) {
      err << "meros_verify: cannot write '" << opt.out_path << "'\n";
      return kExitUsage;
    }
  }
  return exit_code(state);
}

}  // namespace meros_verify::cli
