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

#include "meros_verify/snapshot.hpp"

#include <set>
#include <utility>

#include "json_reader.hpp"
#include "meros_verify/errors.hpp"
#include "meros_verify/names.hpp"

namespace meros_verify
{

using detail::json;
using detail::ObjectReader;
using detail::schema_error;

namespace
{

std::vector<TypedName> read_typed_names(ObjectReader & reader, const char * key, const std::string & node_fqn)
{
  const json & arr = reader.array(key);
  std::vector<TypedName> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto & pair = arr[i];
    const std::string pointer = reader.child_pointer(key) + "/" + std::to_string(i);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      schema_error(pointer, "expected [name, type]");
    }
    const std::string raw = strip_trailing_slash(pair[0].get<std::string>());
    out.push_back(TypedName{resolve_name(raw, namespace_of(node_fqn), node_fqn), pair[1].get<std::string>()});
  }
  return out;
}

using ordered = nlohmann::ordered_json;

ordered typed_names_json(const std::vector<TypedName> & names)
{
  ordered arr = ordered::array();
  for (const auto & tn : names) {
    arr.push_back(ordered::array({tn.name, tn.type}));
  }
  return arr;
}

std::vector<WorkspaceDef> read_workspaces(ObjectReader & root)
{
  std::vector<WorkspaceDef> out;
  std::set<std::string> workspaces;
  std::set<std::string> repositories;
  std::set<std::string> packages;
  const json & arr = root.array("workspaces");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ObjectReader ws_reader(arr[i], "/workspaces/" + std::to_string(i));
    WorkspaceDef ws;
    ws.name = ws_reader.string("name");
    if (!workspaces.insert(ws.name).second) {
      throw DuplicateNameError(ws.name);
    }
    const json & repos = ws_reader.array("repositories");
    for (std::size_t j = 0; j < repos.size(); ++j) {
      ObjectReader repo_reader(repos[j], ws_reader.child_pointer("repositories") + "/" + std::to_string(j));
      RepositoryDef repo;
      repo.name = repo_reader.string("name");
      if (!repositories.insert(repo.name).second) {
        throw DuplicateNameError(ws.name + "/" + repo.name);
      }
      repo.packages = repo_reader.strings("packages");
      for (const auto & pkg : repo.packages) {
        if (!packages.insert(pkg).second) {
          throw DuplicateNameError(pkg);
        }
      }
      repo_reader.finish();
      ws.repositories.push_back(std::move(repo));
    }
    ws_reader.finish();
    out.push_back(std::move(ws));
  }
  return out;
}

}  // namespace

RuntimeSnapshot parse_runtime_snapshot(std::string_view text)
{
  const json doc = detail::parse_json(text);
  ObjectReader root(doc, "");
  RuntimeSnapshot snapshot;
  snapshot.captured_at = root.string_or_empty("captured_at");
  std::set<std::string> seen;
  const json & nodes = root.array("nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ObjectReader reader(nodes[i], "/nodes/" + std::to_string(i));
    RuntimeNode node;
    node.fqn = strip_trailing_slash(reader.string("fqn"));
    if (!is_absolute_name(node.fqn)) {
      throw NameViolationError(node.fqn, "is not an absolute node name");
    }
    if (!seen.insert(node.fqn).second) {
      throw DuplicateNameError(node.fqn);
    }
    node.publishers = read_typed_names(reader, "publishers", node.fqn);
    node.subscribers = read_typed_names(reader, "subscribers", node.fqn);
    node.services = read_typed_names(reader, "services", node.fqn);
    node.clients = read_typed_names(reader, "clients", node.fqn);
    node.action_servers = read_typed_names(reader, "action_servers", node.fqn);
    node.action_clients = read_typed_names(reader, "action_clients", node.fqn);
    node.parameters = reader.strings("parameters");
    reader.finish();
    snapshot.nodes.push_back(std::move(node));
  }
  root.finish();
  return snapshot;
}

std::string serialize_runtime_snapshot(const RuntimeSnapshot & snapshot)
{
  ordered doc;
  doc["captured_at"] = snapshot.captured_at;
  doc["nodes"] = ordered::array();
  for (const auto & node : snapshot.nodes) {
    ordered n;
    n["fqn"] = node.fqn;
    n["publishers"] = typed_names_json(node.publishers);
    n["subscribers"] = typed_names_json(node.subscribers);
    n["services"] = typed_names_json(node.services);
    n["clients"] = typed_names_json(node.clients);
    n["action_servers"] = typed_names_json(node.action_servers);
    n["action_clients"] = typed_names_json(node.action_clients);
    n["parameters"] = node.parameters;
    doc["nodes"].push_back(std::move(n));
  }
  return doc.dump(2) + "\n";
}

SourceSnapshot parse_source_snapshot(std::string_view text)
{
  const json doc = detail::parse_json(text);
  ObjectReader root(doc, "");
  SourceSnapshot snapshot;
  snapshot.workspaces = read_workspaces(root);
  root.finish();
  return snapshot;
}

std::string serialize_source_snapshot(const SourceSnapshot & snapshot)
{
  ordered doc;
  doc["workspaces"] = ordered::array();
  for (const auto & ws : snapshot.workspaces) {
    ordered w;
    w["name"] = ws.name;
    w["repositories"] = ordered::array();
    for (const auto & repo : ws.repositories) {
      ordered r;
      r["name"] = repo.name;
      r["packages"] = repo.packages;
      w["repositories"].push_back(std::move(r));
    }
    doc["workspaces"].push_back(std::move(w));
  }
  return doc.dump(2) + "\n";
}

EventTrace parse_trace(std::string_view text)
{
  EventTrace trace;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      continue;
    }
    const json doc = detail::parse_json(line, line_no - 1);
    ObjectReader reader(doc, "/" + std::to_string(line_no));
    TraceEvent event;
    event.seq = reader.integer("seq");
    event.channel_fqn = strip_trailing_slash(reader.string("channel_fqn"));
    event.actor = reader.string_or_empty("actor");
    event.label = reader.string("label");
    reader.finish();
    if (!is_absolute_name(event.channel_fqn)) {
      throw NameViolationError(event.channel_fqn, "is not an absolute channel name");
    }
    if (!trace.events.empty() && event.seq <= trace.events.back().seq) {
      throw NonMonotonicSeqError(trace.events.back().seq, event.seq, line_no);
    }
    trace.events.push_back(std::move(event));
  }
  return trace;
}

std::string serialize_trace(const EventTrace & trace)
{
  std::string out;
  for (const auto & event : trace.events) {
    ordered e;
    e["seq"] = event.seq;
    e["channel_fqn"] = event.channel_fqn;
    e["actor"] = event.actor;
    e["label"] = event.label;
    out += e.dump();
    out += '\n';
  }
  return out;
}

}  // namespace meros_verify
