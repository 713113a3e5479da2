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

#include "meros_verify/conformance.hpp"

#include <future>
#include <map>
#include <tuple>
#include <utility>

#include "meros_verify/errors.hpp"
#include "meros_verify/model_index.hpp"
#include "meros_verify/names.hpp"

namespace meros_verify
{

const char * to_string(EdgeRole role)
{
  switch (role) {
    case EdgeRole::pub: return "pub";
    case EdgeRole::sub: return "sub";
    case EdgeRole::srv: return "srv";
    case EdgeRole::cli: return "cli";
    case EdgeRole::act_srv: return "act_srv";
    case EdgeRole::act_cli: return "act_cli";
  }
  return "pub";
}

std::string edge_subject(const Edge & edge)
{
  return edge.node_fqn + " " + to_string(edge.role) + " " + edge.channel_fqn;
}

bool pattern_matches(std::string_view pattern, std::string_view name)
{
  if (!pattern.empty() && pattern.back() == '*') {
    const auto prefix = pattern.substr(0, pattern.size() - 1);
    return name.substr(0, prefix.size()) == prefix;
  }
  return pattern == name;
}

MatchPolicy MatchPolicy::defaults()
{
  MatchPolicy policy;
  policy.ignore_channels = {
    "/parameter_events",
    "/rosout",
    "~/describe_parameters",
    "~/get_parameter_types",
    "~/get_parameters",
    "~/get_type_description",
    "~/list_parameters",
    "~/set_parameters",
    "~/set_parameters_atomically",
  };
  return policy;
}

bool MatchPolicy::ignores_channel(std::string_view channel_fqn, std::string_view node_fqn) const
{
  for (const auto & pattern : ignore_channels) {
    if (pattern.rfind("~/", 0) == 0) {
      const std::string resolved = std::string(node_fqn) + pattern.substr(1);
      if (pattern_matches(resolved, channel_fqn)) {
        return true;
      }
    } else if (pattern_matches(pattern, channel_fqn)) {
      return true;
    }
  }
  return false;
}

bool MatchPolicy::ignores_node(std::string_view node_fqn) const
{
  for (const auto & pattern : ignore_nodes) {
    if (pattern_matches(pattern, node_fqn)) {
      return true;
    }
  }
  return false;
}

ObservedGraph observed_graph(const RuntimeSnapshot & snapshot)
{
  ObservedGraph graph;
  for (const auto & node : snapshot.nodes) {
    graph.nodes.insert(node.fqn);
    auto add = [&](const std::vector<TypedName> & names, EdgeRole role) {
        for (const auto & tn : names) {
          graph.edges.insert(Edge{node.fqn, tn.name, role, tn.type, false});
        }
      };
    add(node.publishers, EdgeRole::pub);
    add(node.subscribers, EdgeRole::sub);
    add(node.services, EdgeRole::srv);
    add(node.clients, EdgeRole::cli);
    add(node.action_servers, EdgeRole::act_srv);
    add(node.action_clients, EdgeRole::act_cli);
  }
  return graph;
}

namespace
{

struct DerivedEdge
{
  Edge edge;
  /// Path of the system declaring the channel; empty for unresolved external endpoints.
  std::string declared_in;
};

struct Derived
{
  std::set<std::string> nodes;
  std::vector<DerivedEdge> edges;
};

Derived derive(const ModelIndex & index, std::string_view scope)
{
  Derived out;
  for (const auto & ref : index.elements()) {
    if (ref.kind != ElementKind::node || !path_contains(scope, ref.path)) {
      continue;
    }
    const std::string fqn = index.node_fqn(ref);
    out.nodes.insert(fqn);
    auto add = [&](const std::vector<EndpointDef> & endpoints, EdgeRole role) {
        for (const auto & ep : endpoints) {
          const ElementRef * channel = index.lookup_channel(ref.parent_path, ep.channel);
          if (channel != nullptr) {
            out.edges.push_back(
              DerivedEdge{
                Edge{fqn, resolve_name(channel->channel->channel_name, channel->ns, fqn), role,
                  channel->channel->interface_type, ep.external},
                channel->parent_path});
          } else {
            out.edges.push_back(
              DerivedEdge{Edge{fqn, resolve_name(ep.channel, ref.ns, fqn), role, "", true}, ""});
          }
        }
      };
    const NodeDef & node = *ref.node;
    add(node.publishes, EdgeRole::pub);
    add(node.subscribes, EdgeRole::sub);
    add(node.serves, EdgeRole::srv);
    add(node.calls, EdgeRole::cli);
    add(node.action_servers, EdgeRole::act_srv);
    add(node.action_clients, EdgeRole::act_cli);
  }
  return out;
}

const ElementRef & require_scope(const ModelIndex & index, std::string_view scope, bool allow_root)
{
  static const ElementRef root{};
  if (scope.empty() && allow_root) {
    return root;
  }
  const ElementRef * ref = index.find_system(scope);
  if (ref == nullptr) {
    throw UnknownScopeError(std::string(scope));
  }
  return *ref;
}

MatchPolicy with_model_ignores(MatchPolicy policy, const SystemModel & model)
{
  policy.ignore_channels.insert(
    policy.ignore_channels.end(), model.ignore_channels.begin(), model.ignore_channels.end());
  return policy;
}

using EdgeKey = std::tuple<std::string, std::string, EdgeRole>;

std::map<EdgeKey, const Edge *> keyed(const std::set<Edge> & edges, const std::set<std::string> & nodes,
  const MatchPolicy & policy)
{
  std::map<EdgeKey, const Edge *> out;
  for (const auto & edge : edges) {
    if (nodes.count(edge.node_fqn) == 0 || policy.ignores_channel(edge.channel_fqn, edge.node_fqn)) {
      continue;
    }
    out.emplace(EdgeKey{edge.node_fqn, edge.channel_fqn, edge.role}, &edge);
  }
  return out;
}

bool namespace_covers(std::string_view ns, std::string_view fqn)
{
  if (ns == "/") {
    return true;
  }
  return fqn.size() > ns.size() && fqn.compare(0, ns.size(), ns) == 0 && fqn[ns.size()] == '/';
}

}  // namespace

ExpectedGraph expected_graph(const SystemModel & model, std::string_view scope)
{
  const ModelIndex index(model);
  require_scope(index, scope, true);
  Derived derived = derive(index, scope);
  ExpectedGraph graph;
  graph.scope = std::string(scope);
  graph.nodes = std::move(derived.nodes);
  for (auto & de : derived.edges) {
    graph.edges.insert(std::move(de.edge));
  }
  return graph;
}

std::vector<Finding> diff_graphs(
  const ExpectedGraph & expected, const ObservedGraph & observed,
  const MatchPolicy & policy, Stage stage)
{
  std::vector<Finding> out;
  const Severity unexpected_severity = policy.treat_unexpected_as.value_or(
    stage == Stage::ssrve ? Severity::warning : Severity::error);

  std::set<std::string> common;
  for (const auto & node : expected.nodes) {
    if (policy.ignores_node(node)) {
      continue;
    }
    if (observed.nodes.count(node) == 0) {
      out.push_back(make_finding(stage, Severity::error, FindingClass::MissingNode, node));
    } else {
      common.insert(node);
    }
  }
  for (const auto & node : observed.nodes) {
    if (!policy.ignores_node(node) && expected.nodes.count(node) == 0) {
      out.push_back(make_finding(stage, unexpected_severity, FindingClass::UnexpectedNode, node));
    }
  }

  const auto want = keyed(expected.edges, common, policy);
  const auto have = keyed(observed.edges, common, policy);
  for (const auto & [key, edge] : want) {
    const auto it = have.find(key);
    if (it == have.end()) {
      out.push_back(
        make_finding(
          stage, Severity::error, FindingClass::MissingEdge, edge_subject(*edge),
          edge->type.empty() ? std::nullopt : std::optional<std::string>(edge->type), std::nullopt));
    } else if (!edge->type.empty() && edge->type != it->second->type) {
      out.push_back(
        make_finding(
          stage, Severity::error, FindingClass::TypeMismatch, edge_subject(*edge), edge->type,
          it->second->type));
    }
  }
  for (const auto & [key, edge] : have) {
    if (want.count(key) == 0) {
      out.push_back(
        make_finding(stage, Severity::error, FindingClass::UnexpectedEdge, edge_subject(*edge), std::nullopt, edge->type));
    }
  }
  sort_findings(out);
  return out;
}

VerificationReport verify_subsystem(
  const SystemModel & model, const RuntimeSnapshot & snapshot,
  std::string_view scope, const MatchPolicy & policy_in)
{
  const ModelIndex index(model);
  const ElementRef & scope_ref = require_scope(index, scope, false);
  const MatchPolicy policy = with_model_ignores(policy_in, model);

  const Derived all = derive(index, "");
  std::set<std::string> inside_channels;
  std::set<std::string> outside_channels;
  std::set<std::string> foreign_nodes;
  for (const auto & de : all.edges) {
    if (!de.declared_in.empty() && path_contains(scope, de.declared_in)) {
      inside_channels.insert(de.edge.channel_fqn);
    } else {
      outside_channels.insert(de.edge.channel_fqn);
    }
  }

  ExpectedGraph expected;
  expected.scope = std::string(scope);
  const Derived mine = derive(index, scope);
  expected.nodes = mine.nodes;
  for (const auto & de : mine.edges) {
    if (!de.declared_in.empty() && path_contains(scope, de.declared_in)) {
      expected.edges.insert(de.edge);
    }
  }
  for (const auto & node : all.nodes) {
    if (mine.nodes.count(node) == 0) {
      foreign_nodes.insert(node);
    }
  }

  const ObservedGraph full = observed_graph(snapshot);
  ObservedGraph observed;
  for (const auto & node : full.nodes) {
    if (namespace_covers(scope_ref.ns, node) && foreign_nodes.count(node) == 0) {
      observed.nodes.insert(node);
    }
  }
  for (const auto & edge : full.edges) {
    if (observed.nodes.count(edge.node_fqn) == 0) {
      continue;
    }
    const bool cross = outside_channels.count(edge.channel_fqn) > 0 &&
      inside_channels.count(edge.channel_fqn) == 0;
    if (!cross) {
      observed.edges.insert(edge);
    }
  }

  return make_report(Stage::ssrve, std::string(scope), diff_graphs(expected, observed, policy, Stage::ssrve));
}

std::vector<VerificationReport> verify_subsystems(
  const SystemModel & model, const RuntimeSnapshot & snapshot, const MatchPolicy & policy)
{
  std::vector<std::future<VerificationReport>> jobs;
  jobs.reserve(model.systems.size());
  for (const auto & system : model.systems) {
    jobs.push_back(
      std::async(
        std::launch::async, [&model, &snapshot, &policy, scope = system.name]() {
          return verify_subsystem(model, snapshot, scope, policy);
        }));
  }
  std::vector<VerificationReport> reports;
  reports.reserve(jobs.size());
  for (auto & job : jobs) {
    reports.push_back(job.get());
  }
  return reports;
}

std::vector<Finding> model_type_conflicts(const SystemModel & model, Stage stage)
{
  const ModelIndex index(model);
  std::map<std::string, std::set<std::string>> types;
  for (const auto & de : derive(index, "").edges) {
    if (!de.edge.type.empty()) {
      types[de.edge.channel_fqn].insert(de.edge.type);
    }
  }
  std::vector<Finding> out;
  for (const auto & [channel, seen] : types) {
    if (seen.size() < 2) {
      continue;
    }
    auto it = seen.begin();
    const std::string first = *it++;
    std::string rest;
    for (; it != seen.end(); ++it) {
      rest += rest.empty() ? *it : ", " + *it;
    }
    out.push_back(make_finding(stage, Severity::error, FindingClass::TypeMismatch, channel, first, rest));
  }
  return out;
}

VerificationReport verify_system(
  const SystemModel & model, const RuntimeSnapshot & snapshot, const MatchPolicy & policy_in)
{
  const MatchPolicy policy = with_model_ignores(policy_in, model);
  auto findings = diff_graphs(expected_graph(model, ""), observed_graph(snapshot), policy, Stage::srve);
  auto conflicts = model_type_conflicts(model, Stage::srve);
  findings.insert(findings.end(), conflicts.begin(), conflicts.end());
  return make_report(Stage::srve, "", std::move(findings));
}

VerificationReport verify_sources(const SystemModel & model, const SourceSnapshot & sources)
{
  std::map<std::string, std::string> prescribed;
  for (const auto & ws : model.sources.workspaces) {
    for (const auto & repo : ws.repositories) {
      for (const auto & pkg : repo.packages) {
        prescribed.emplace(pkg, ws.name + "/" + repo.name);
      }
    }
  }
  std::map<std::string, std::string> found;
  for (const auto & ws : sources.workspaces) {
    for (const auto & repo : ws.repositories) {
      for (const auto & pkg : repo.packages) {
        found.emplace(pkg, ws.name + "/" + repo.name);
      }
    }
  }

  std::vector<Finding> out;
  for (const auto & [pkg, where] : prescribed) {
    const auto it = found.find(pkg);
    if (it == found.end()) {
      out.push_back(make_finding(Stage::sources, Severity::error, FindingClass::MissingPackage, pkg, where, std::nullopt));
    } else if (it->second != where) {
      out.push_back(make_finding(Stage::sources, Severity::error, FindingClass::MisplacedArtifact, pkg, where, it->second));
    }
  }
  for (const auto & [pkg, where] : found) {
    if (prescribed.count(pkg) == 0) {
      out.push_back(
        make_finding(Stage::sources, Severity::warning, FindingClass::UnexpectedPackage, pkg, std::nullopt, where));
    }
  }
  return make_report(Stage::sources, "", std::move(out));
}

}  // namespace meros_verify
