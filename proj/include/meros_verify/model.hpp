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
#include <utility>
#include <vector>

namespace meros_verify
{

enum class NodeKind { node, micro_node };
enum class ChannelKind { topic, service, action };

/// Reference from a node endpoint to a channel declared in an enclosing system.
struct EndpointDef
{
  std::string channel;
  /// The endpoint crosses the model boundary; an unresolvable reference is
  /// then read as a channel name with an unconstrained interface type.
  bool external{false};

  bool operator==(const EndpointDef &) const = default;
};

struct ParameterDef
{
  std::string name;
  std::string file;

  bool operator==(const ParameterDef &) const = default;
};

struct NodeDef
{
  std::string name;
  NodeKind kind{NodeKind::node};
  std::string package;
  std::vector<EndpointDef> publishes;
  std::vector<EndpointDef> subscribes;
  std::vector<EndpointDef> serves;
  std::vector<EndpointDef> calls;
  std::vector<EndpointDef> action_servers;
  std::vector<EndpointDef> action_clients;
  std::vector<ParameterDef> parameters;

  bool operator==(const NodeDef &) const = default;
};

struct CommChannelDef
{
  /// Model identifier, referenced by EndpointDef::channel.
  std::string name;
  ChannelKind kind{ChannelKind::topic};
  /// ROS name, relative or absolute.
  std::string channel_name;
  std::string interface_type;

  bool operator==(const CommChannelDef &) const = default;
};

struct SystemDef
{
  std::string name;
  /// Absolute namespace, or empty to inherit from the parent.
  std::string ns;
  std::vector<SystemDef> children;
  std::vector<NodeDef> nodes;
  std::vector<CommChannelDef> channels;
  std::vector<std::string> allocated_requirements;

  bool operator==(const SystemDef &) const = default;
};

struct RequirementDef
{
  std::string id;
  std::string text;
  std::optional<std::string> parent;
  std::vector<std::string> allocations;

  bool operator==(const RequirementDef &) const = default;
};

struct HardwareDef
{
  std::string name;
  std::vector<std::string> links;

  bool operator==(const HardwareDef &) const = default;
};

struct HardwareMapping
{
  std::string system;
  std::string hardware;

  bool operator==(const HardwareMapping &) const = default;
};

struct RepositoryDef
{
  std::string name;
  std::vector<std::string> packages;

  bool operator==(const RepositoryDef &) const = default;
};

struct WorkspaceDef
{
  std::string name;
  std::vector<RepositoryDef> repositories;

  bool operator==(const WorkspaceDef &) const = default;
};

/// Workspace -> repository -> package containment. Shared by the design
/// model and the observed source snapshot.
struct SourceLayout
{
  std::vector<WorkspaceDef> workspaces;

  bool operator==(const SourceLayout &) const = default;
};

enum class PlanStage { subsystem, system };

struct PlanStep
{
  std::string actor;
  std::string label;
  std::optional<std::string> channel;
  std::optional<std::string> activity;

  bool operator==(const PlanStep &) const = default;
};

/// Ordered expectations taken from a sequence diagram. Exactly one of
/// steps and parts is non-empty.
struct ValidationPlan
{
  std::string id;
  PlanStage stage{PlanStage::subsystem};
  std::string scope;
  std::vector<PlanStep> steps;
  std::vector<std::string> parts;

  bool operator==(const ValidationPlan &) const = default;
};

struct SystemModel
{
  std::string name;
  std::vector<SystemDef> systems;
  std::vector<RequirementDef> requirements;
  std::vector<HardwareDef> hardware;
  std::vector<HardwareMapping> hardware_mappings;
  SourceLayout sources;
  std::vector<std::string> ignore_channels;
  std::vector<ValidationPlan> plans;

  bool operator==(const SystemModel &) const = default;
};

const char * to_string(NodeKind kind);
const char * to_string(ChannelKind kind);
const char * to_string(PlanStage stage);

/// Sorts every sibling list the way serialize_model emits it. Plan steps and
/// parts keep their order.
SystemModel canonicalize(SystemModel model);

}  // namespace meros_verify
