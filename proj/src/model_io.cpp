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

#include "meros_verify/model_io.hpp"

#include <functional>
#include <map>
#include <set>
#include <utility>

#include "json_reader.hpp"
#include "meros_verify/errors.hpp"
#include "meros_verify/model_index.hpp"
#include "meros_verify/scenario.hpp"

namespace meros_verify
{

using detail::json;
using detail::ObjectReader;
using detail::schema_error;

namespace
{

std::string index_pointer(const std::string & base, std::size_t i)
{
  return base + "/" + std::to_string(i);
}

template<typename Fn>
void for_each_object(ObjectReader & reader, const char * key, Fn && fn)
{
  const json & arr = reader.array(key);
  const std::string base = reader.child_pointer(key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ObjectReader item(arr[i], index_pointer(base, i));
    fn(item);
    item.finish();
  }
}

NodeKind parse_node_kind(const std::string & text, const std::string & pointer)
{
  if (text == "node") {
    return NodeKind::node;
  }
  if (text == "micro_node") {
    return NodeKind::micro_node;
  }
  schema_error(pointer, "unknown node kind '" + text + "'");
}

ChannelKind parse_channel_kind(const std::string & text, const std::string & pointer)
{
  if (text == "topic") {
    return ChannelKind::topic;
  }
  if (text == "service") {
    return ChannelKind::service;
  }
  if (text == "action") {
    return ChannelKind::action;
  }
  schema_error(pointer, "unknown channel kind '" + text + "'");
}

PlanStage parse_plan_stage(const std::string & text, const std::string & pointer)
{
  if (text == "subsystem") {
    return PlanStage::subsystem;
  }
  if (text == "system") {
    return PlanStage::system;
  }
  schema_error(pointer, "unknown plan stage '" + text + "'");
}

std::vector<EndpointDef> read_endpoints(ObjectReader & reader, const char * key)
{
  std::vector<EndpointDef> out;
  for_each_object(
    reader, key, [&](ObjectReader & item) {
      EndpointDef ep;
      ep.channel = item.string("channel");
      ep.external = item.boolean("external", false);
      out.push_back(std::move(ep));
    });
  return out;
}

NodeDef read_node(ObjectReader & reader)
{
  NodeDef node;
  node.name = reader.string("name");
  const auto kind = reader.optional_string("kind");
  node.kind = kind ? parse_node_kind(*kind, reader.child_pointer("kind")) : NodeKind::node;
  node.package = reader.string_or_empty("package");
  node.publishes = read_endpoints(reader, "publishes");
  node.subscribes = read_endpoints(reader, "subscribes");
  node.serves = read_endpoints(reader, "serves");
  node.calls = read_endpoints(reader, "calls");
  node.action_servers = read_endpoints(reader, "action_servers");
  node.action_clients = read_endpoints(reader, "action_clients");
  for_each_object(
    reader, "parameters", [&](ObjectReader & item) {
      ParameterDef param;
      param.name = item.string("name");
      param.file = item.string_or_empty("file");
      node.parameters.push_back(std::move(param));
    });
  return node;
}

CommChannelDef read_channel(ObjectReader & reader)
{
  CommChannelDef channel;
  channel.name = reader.string("name");
  channel.kind = parse_channel_kind(reader.string("kind"), reader.child_pointer("kind"));
  channel.channel_name = reader.string("channel_name");
  channel.interface_type = reader.string("interface_type");
  return channel;
}

SystemDef read_system(ObjectReader & reader)
{
  SystemDef system;
  system.name = reader.string("name");
  system.ns = reader.string_or_empty("namespace");
  for_each_object(
    reader, "children", [&](ObjectReader & item) {system.children.push_back(read_system(item));});
  for_each_object(
    reader, "nodes", [&](ObjectReader & item) {system.nodes.push_back(read_node(item));});
  for_each_object(
    reader, "channels", [&](ObjectReader & item) {system.channels.push_back(read_channel(item));});
  system.allocated_requirements = reader.strings("allocated_requirements");
  return system;
}

ValidationPlan read_plan(ObjectReader & reader)
{
  ValidationPlan plan;
  plan.id = reader.string("id");
  plan.stage = parse_plan_stage(reader.string("stage"), reader.child_pointer("stage"));
  plan.scope = reader.string_or_empty("scope");
  for_each_object(
    reader, "steps", [&](ObjectReader & item) {
      PlanStep step;
      step.actor = item.string_or_empty("actor");
      step.label = item.string("label");
      step.channel = item.optional_string("channel");
      step.activity = item.optional_string("activity");
      plan.steps.push_back(std::move(step));
    });
  plan.parts = reader.strings("parts");
  return plan;
}

// Structural checks that make the model usable at all; everything softer is
// left to validate_model.

void check_system(const SystemDef & system, const std::string & path, std::vector<const SystemDef *> & chain)
{
  std::set<std::string> local;
  auto claim = [&](const std::string & name) {
      if (!local.insert(name).second) {
        throw DuplicateNameError(join_path(path, name));
      }
    };
  for (const auto & child : system.children) {
    claim(child.name);
  }
  for (const auto & node : system.nodes) {
    claim(node.name);
  }
  for (const auto & channel : system.channels) {
    claim(channel.name);
  }

  chain.push_back(&system);
  auto visible = [&](const std::string & id) {
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        for (const auto & channel : (*it)->channels) {
          if (channel.name == id) {
            return true;
          }
        }
      }
      return false;
    };
  for (const auto & node : system.nodes) {
    const std::string node_path = join_path(path, node.name);
    for (const auto * list : {&node.publishes, &node.subscribes, &node.serves, &node.calls,
        &node.action_servers, &node.action_clients})
    {
      for (const auto & ep : *list) {
        if (!ep.external && !visible(ep.channel)) {
          throw DanglingReferenceError(node_path, ep.channel);
        }
      }
    }
  }
  for (const auto & child : system.children) {
    check_system(child, join_path(path, child.name), chain);
  }
  chain.pop_back();
}

void collect_system_paths(const SystemDef & system, const std::string & parent, std::set<std::string> & out)
{
  const std::string path = join_path(parent, system.name);
  out.insert(path);
  for (const auto & child : system.children) {
    collect_system_paths(child, path, out);
  }
}

void check_model(SystemModel & model)
{
  std::set<std::string> top;
  for (const auto & system : model.systems) {
    if (!top.insert(system.name).second) {
      throw DuplicateNameError(system.name);
    }
  }
  std::vector<const SystemDef *> chain;
  for (const auto & system : model.systems) {
    check_system(system, system.name, chain);
  }

  std::map<std::string, const RequirementDef *> reqs;
  for (const auto & req : model.requirements) {
    if (!reqs.emplace(req.id, &req).second) {
      throw DuplicateNameError(req.id);
    }
  }
  for (const auto & req : model.requirements) {
    if (req.parent && reqs.count(*req.parent) == 0) {
      throw DanglingReferenceError(req.id, *req.parent);
    }
    // Walk the parent chain; revisiting the start means a cycle.
    std::set<std::string> seen{req.id};
    const RequirementDef * cur = &req;
    while (cur->parent) {
      if (!seen.insert(*cur->parent).second) {
        throw DanglingReferenceError(req.id, "parent cycle through " + *cur->parent);
      }
      cur = reqs.at(*cur->parent);
    }
  }

  std::map<std::string, std::set<std::string>> links;
  for (const auto & hw : model.hardware) {
    if (!links.emplace(hw.name, std::set<std::string>{}).second) {
      throw DuplicateNameError(hw.name);
    }
  }
  for (const auto & hw : model.hardware) {
    for (const auto & peer : hw.links) {
      if (links.count(peer) == 0) {
        throw DanglingReferenceError(hw.name, peer);
      }
      links[hw.name].insert(peer);
      links[peer].insert(hw.name);
    }
  }
  for (auto & hw : model.hardware) {
    // Symmetric closure, keeping the declared order first.
    std::set<std::string> have(hw.links.begin(), hw.links.end());
    for (const auto & peer : links[hw.name]) {
      if (have.insert(peer).second) {
        hw.links.push_back(peer);
      }
    }
  }

  std::set<std::string> system_paths;
  for (const auto & system : model.systems) {
    collect_system_paths(system, "", system_paths);
  }
  for (const auto & mapping : model.hardware_mappings) {
    if (system_paths.count(mapping.system) == 0) {
      throw DanglingReferenceError("hardware_mappings", mapping.system);
    }
    if (links.count(mapping.hardware) == 0) {
      throw DanglingReferenceError(mapping.system, mapping.hardware);
    }
  }

  std::set<std::string> workspaces;
  std::set<std::string> repositories;
  std::set<std::string> packages;
  for (const auto & ws : model.sources.workspaces) {
    if (!workspaces.insert(ws.name).second) {
      throw DuplicateNameError(ws.name);
    }
    for (const auto & repo : ws.repositories) {
      if (!repositories.insert(repo.name).second) {
        throw DuplicateNameError(ws.name + "/" + repo.name);
      }
      for (const auto & pkg : repo.packages) {
        if (!packages.insert(pkg).second) {
          throw DuplicateNameError(pkg);
        }
      }
    }
  }

  std::set<std::string> plan_ids;
  for (const auto & plan : model.plans) {
    if (!plan_ids.insert(plan.id).second) {
      throw DuplicateNameError(plan.id);
    }
    validate_plan(plan);
  }
}

using ordered = nlohmann::ordered_json;

ordered endpoints_json(const std::vector<EndpointDef> & endpoints)
{
  ordered arr = ordered::array();
  for (const auto & ep : endpoints) {
    ordered item;
    item["channel"] = ep.channel;
    item["external"] = ep.external;
    arr.push_back(std::move(item));
  }
  return arr;
}

ordered optional_json(const std::optional<std::string> & value)
{
  return value ? ordered(*value) : ordered(nullptr);
}

ordered system_json(const SystemDef & system)
{
  ordered out;
  out["name"] = system.name;
  out["namespace"] = system.ns;
  out["children"] = ordered::array();
  for (const auto & child : system.children) {
    out["children"].push_back(system_json(child));
  }
  out["nodes"] = ordered::array();
  for (const auto & node : system.nodes) {
    ordered n;
    n["name"] = node.name;
    n["kind"] = to_string(node.kind);
    n["package"] = node.package;
    n["publishes"] = endpoints_json(node.publishes);
    n["subscribes"] = endpoints_json(node.subscribes);
    n["serves"] = endpoints_json(node.serves);
    n["calls"] = endpoints_json(node.calls);
    n["action_servers"] = endpoints_json(node.action_servers);
    n["action_clients"] = endpoints_json(node.action_clients);
    n["parameters"] = ordered::array();
    for (const auto & param : node.parameters) {
      ordered p;
      p["name"] = param.name;
      p["file"] = param.file;
      n["parameters"].push_back(std::move(p));
    }
    out["nodes"].push_back(std::move(n));
  }
  out["channels"] = ordered::array();
  for (const auto & channel : system.channels) {
    ordered c;
    c["name"] = channel.name;
    c["kind"] = to_string(channel.kind);
    c["channel_name"] = channel.channel_name;
    c["interface_type"] = channel.interface_type;
    out["channels"].push_back(std::move(c));
  }
  out["allocated_requirements"] = system.allocated_requirements;
  return out;
}

}  // namespace

SystemModel parse_model(std::string_view text)
{
  const json doc = detail::parse_json(text);
  ObjectReader root(doc, "");
  SystemModel model;
  model.name = root.string("model_name");
  for_each_object(
    root, "systems", [&](ObjectReader & item) {model.systems.push_back(read_system(item));});
  for_each_object(
    root, "requirements", [&](ObjectReader & item) {
      RequirementDef req;
      req.id = item.string("id");
      req.text = item.string_or_empty("text");
      req.parent = item.optional_string("parent");
      req.allocations = item.strings("allocations");
      model.requirements.push_back(std::move(req));
    });
  for_each_object(
    root, "hardware", [&](ObjectReader & item) {
      HardwareDef hw;
      hw.name = item.string("name");
      hw.links = item.strings("links");
      model.hardware.push_back(std::move(hw));
    });
  for_each_object(
    root, "hardware_mappings", [&](ObjectReader & item) {
      HardwareMapping mapping;
      mapping.system = item.string("system");
      mapping.hardware = item.string("hardware");
      model.hardware_mappings.push_back(std::move(mapping));
    });
  if (doc.contains("sources")) {
    ObjectReader sources(root.object("sources"), "/sources");
    for_each_object(
      sources, "workspaces", [&](ObjectReader & ws_reader) {
        WorkspaceDef ws;
        ws.name = ws_reader.string("name");
        for_each_object(
          ws_reader, "repositories", [&](ObjectReader & repo_reader) {
            RepositoryDef repo;
            repo.name = repo_reader.string("name");
            repo.packages = repo_reader.strings("packages");
            ws.repositories.push_back(std::move(repo));
          });
        model.sources.workspaces.push_back(std::move(ws));
      });
    sources.finish();
  }
  model.ignore_channels = root.strings("ignore_channels");
  for_each_object(
    root, "plans", [&](ObjectReader & item) {model.plans.push_back(read_plan(item));});
  root.finish();

  check_model(model);
  return model;
}

std::string serialize_model(const SystemModel & input)
{
  const SystemModel model = canonicalize(input);
  ordered doc;
  doc["model_name"] = model.name;
  doc["systems"] = ordered::array();
  for (const auto & system : model.systems) {
    doc["systems"].push_back(system_json(system));
  }
  doc["requirements"] = ordered::array();
  for (const auto & req : model.requirements) {
    ordered r;
    r["id"] = req.id;
    r["text"] = req.text;
    r["parent"] = optional_json(req.parent);
    r["allocations"] = req.allocations;
    doc["requirements"].push_back(std::move(r));
  }
  doc["hardware"] = ordered::array();
  for (const auto & hw : model.hardware) {
    ordered h;
    h["name"] = hw.name;
    h["links"] = hw.links;
    doc["hardware"].push_back(std::move(h));
  }
  doc["hardware_mappings"] = ordered::array();
  for (const auto & mapping : model.hardware_mappings) {
    ordered m;
    m["system"] = mapping.system;
    m["hardware"] = mapping.hardware;
    doc["hardware_mappings"].push_back(std::move(m));
  }
  ordered workspaces = ordered::array();
  for (const auto & ws : model.sources.workspaces) {
    ordered w;
    w["name"] = ws.name;
    w["repositories"] = ordered::array();
    for (const auto & repo : ws.repositories) {
      ordered r;
      r["name"] = repo.name;
      r["packages"] = repo.packages;
      w["repositories"].push_back(std::move(r));
    }
    workspaces.push_back(std::move(w));
  }
  doc["sources"] = ordered::object();
  doc["sources"]["workspaces"] = std::move(workspaces);
  doc["ignore_channels"] = model.ignore_channels;
  doc["plans"] = ordered::array();
  for (const auto & plan : model.plans) {
    ordered p;
    p["id"] = plan.id;
    p["stage"] = to_string(plan.stage);
    p["scope"] = plan.scope;
    p["steps"] = ordered::array();
    for (const auto & step : plan.steps) {
      ordered s;
      s["actor"] = step.actor;
      s["label"] = step.label;
      s["channel"] = optional_json(step.channel);
      s["activity"] = optional_json(step.activity);
      p["steps"].push_back(std::move(s));
    }
    p["parts"] = plan.parts;
    doc["plans"].push_back(std::move(p));
  }
  return doc.dump(2) + "\n";
}

}  // namespace meros_verify
