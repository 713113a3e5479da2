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

#include "meros_verify/model.hpp"

#include <algorithm>
#include <tuple>

namespace meros_verify
{

const char * to_string(NodeKind kind)
{
  return kind == NodeKind::node ? "node" : "micro_node";
}

const char * to_string(ChannelKind kind)
{
  switch (kind) {
    case ChannelKind::topic: return "topic";
    case ChannelKind::service: return "service";
    case ChannelKind::action: return "action";
  }
  return "topic";
}

const char * to_string(PlanStage stage)
{
  return stage == PlanStage::subsystem ? "subsystem" : "system";
}

namespace
{

template<typename T>
void sort_by_name(std::vector<T> & items)
{
  std::stable_sort(
    items.begin(), items.end(),
    [](const T & a, const T & b) {return a.name < b.name;});
}

void sort_endpoints(std::vector<EndpointDef> & endpoints)
{
  std::stable_sort(
    endpoints.begin(), endpoints.end(),
    [](const EndpointDef & a, const EndpointDef & b) {
      return std::tie(a.channel, a.external) < std::tie(b.channel, b.external);
    });
}

void canonicalize_system(SystemDef & system)
{
  for (auto & child : system.children) {
    canonicalize_system(child);
  }
  sort_by_name(system.children);
  for (auto & node : system.nodes) {
    sort_endpoints(node.publishes);
    sort_endpoints(node.subscribes);
    sort_endpoints(node.serves);
    sort_endpoints(node.calls);
    sort_endpoints(node.action_servers);
    sort_endpoints(node.action_clients);
    sort_by_name(node.parameters);
  }
  sort_by_name(system.nodes);
  sort_by_name(system.channels);
  std::sort(system.allocated_requirements.begin(), system.allocated_requirements.end());
}

}  // namespace

SystemModel canonicalize(SystemModel model)
{
  for (auto & system : model.systems) {
    canonicalize_system(system);
  }
  sort_by_name(model.systems);
  for (auto & req : model.requirements) {
    std::sort(req.allocations.begin(), req.allocations.end());
  }
  std::stable_sort(
    model.requirements.begin(), model.requirements.end(),
    [](const RequirementDef & a, const RequirementDef & b) {return a.id < b.id;});
  for (auto & hw : model.hardware) {
    std::sort(hw.links.begin(), hw.links.end());
  }
  sort_by_name(model.hardware);
  std::stable_sort(
    model.hardware_mappings.begin(), model.hardware_mappings.end(),
    [](const HardwareMapping & a, const HardwareMapping & b) {
      return std::tie(a.system, a.hardware) < std::tie(b.system, b.hardware);
    });
  for (auto & ws : model.sources.workspaces) {
    for (auto & repo : ws.repositories) {
      std::sort(repo.packages.begin(), repo.packages.end());
    }
    sort_by_name(ws.repositories);
  }
  sort_by_name(model.sources.workspaces);
  std::sort(model.ignore_channels.begin(), model.ignore_channels.end());
  std::stable_sort(
    model.plans.begin(), model.plans.end(),
    [](const ValidationPlan & a, const ValidationPlan & b) {return a.id < b.id;});
  return model;
}

}  // namespace meros_verify
