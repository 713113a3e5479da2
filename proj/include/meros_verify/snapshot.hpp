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

#include <string>
#include <string_view>
#include <vector>

#include "meros_verify/model.hpp"

namespace meros_verify
{

/// Endpoint as printed by graph introspection: resolved name plus interface type.
struct TypedName
{
  std::string name;
  std::string type;

  bool operator==(const TypedName &) const = default;
};

struct RuntimeNode
{
  std::string fqn;
  std::vector<TypedName> publishers;
  std::vector<TypedName> subscribers;
  std::vector<TypedName> services;
  std::vector<TypedName> clients;
  std::vector<TypedName> action_servers;
  std::vector<TypedName> action_clients;
  std::vector<std::string> parameters;

  bool operator==(const RuntimeNode &) const = default;
};

struct RuntimeSnapshot
{
  std::string captured_at;
  std::vector<RuntimeNode> nodes;

  bool operator==(const RuntimeSnapshot &) const = default;
};

struct SourceSnapshot
{
  std::vector<WorkspaceDef> workspaces;

  bool operator==(const SourceSnapshot &) const = default;
};

struct TraceEvent
{
  long long seq{0};
  std::string channel_fqn;
  std::string actor;
  std::string label;

  bool operator==(const TraceEvent &) const = default;
};

struct EventTrace
{
  std::vector<TraceEvent> events;

  bool operator==(const EventTrace &) const = default;
};

/**
 * @brief Parse a computation-graph snapshot.
 *
 * Node names must be absolute. Endpoint names are resolved against the node
 * (relative to its namespace, '~' to the node itself) and trailing slashes
 * are dropped.
 *
 * @throws SyntaxError, NameViolationError, DuplicateNameError
 */
RuntimeSnapshot parse_runtime_snapshot(std::string_view text);
std::string serialize_runtime_snapshot(const RuntimeSnapshot & snapshot);

/// @throws SyntaxError, DuplicateNameError
SourceSnapshot parse_source_snapshot(std::string_view text);
std::string serialize_source_snapshot(const SourceSnapshot & snapshot);

/// JSON lines, one event per line; blank lines are skipped.
/// @throws SyntaxError, NameViolationError, NonMonotonicSeqError
EventTrace parse_trace(std::string_view text);
std::string serialize_trace(const EventTrace & trace);

}  // namespace meros_verify
