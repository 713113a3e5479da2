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

#include "meros_verify/model_index.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "meros_verify/errors.hpp"
#include "meros_verify/names.hpp"
#include "meros_verify/scenario.hpp"

namespace meros_verify
{

std::string join_path(std::string_view parent, std::string_view name)
{
  if (parent.empty()) {
    return std::string(name);
  }
  std::string out(parent);
  out += '/';
  out += name;
  return out;
}

bool path_contains(std::string_view ancestor, std::string_view path)
{
  if (ancestor.empty()) {
    return true;
  }
  if (path.size() < ancestor.size() || path.compare(0, ancestor.size(), ancestor) != 0) {
    return false;
  }
  return path.size() == ancestor.size() || path[ancestor.size()] == '/';
}

ModelIndex::ModelIndex(const SystemModel & model)
: model_(&model)
{
  for (const auto & system : model.systems) {
    index_system(system, "", "/");
  }
}

void ModelIndex::index_system(const SystemDef & system, const std::string & parent_path, const std::string & parent_ns)
{
  const std::string path = join_path(parent_path, system.name);
  std::string ns = parent_ns;
  if (!system.ns.empty() && is_valid_namespace(system.ns)) {
    ns = strip_trailing_slash(system.ns);
  }

  auto add = [&](ElementRef ref, const void * address) {
      const std::size_t slot = elements_.size();
      if (!by_path_.emplace(ref.path, slot).second) {
        duplicates_.push_back(ref.path);
      }
      by_address_.emplace(address, slot);
      elements_.push_back(std::move(ref));
    };

  add(ElementRef{ElementKind::system, path, parent_path, ns, &system, nullptr, nullptr}, &system);
  for (const auto & node : system.nodes) {
    add(ElementRef{ElementKind::node, join_path(path, node.name), path, ns, &system, &node, nullptr}, &node);
  }
  for (const auto & channel : system.channels) {
    add(
      ElementRef{ElementKind::channel, join_path(path, channel.name), path, ns, &system, nullptr, &channel},
      &channel);
  }
  for (const auto & child : system.children) {
    index_system(child, path, ns);
  }
}

const ElementRef * ModelIndex::find(std::string_view path) const
{
  const auto it = by_path_.find(std::string(path));
  return it == by_path_.end() ? nullptr : &elements_[it->second];
}

const ElementRef * ModelIndex::find_system(std::string_view path) const
{
  const ElementRef * ref = find(path);
  return ref != nullptr && ref->kind == ElementKind::system ? ref : nullptr;
}

std::optional<std::string> ModelIndex::path_of(const SystemDef & system) const
{
  const auto it = by_address_.find(&system);
  return it == by_address_.end() ? std::nullopt : std::optional<std::string>(elements_[it->second].path);
}

std::optional<std::string> ModelIndex::path_of(const NodeDef & node) const
{
  const auto it = by_address_.find(&node);
  return it == by_address_.end() ? std::nullopt : std::optional<std::string>(elements_[it->second].path);
}

std::optional<std::string> ModelIndex::path_of(const CommChannelDef & channel) const
{
  const auto it = by_address_.find(&channel);
  return it == by_address_.end() ? std::nullopt : std::optional<std::string>(elements_[it->second].path);
}

const ElementRef * ModelIndex::lookup_channel(std::string_view system_path, std::string_view id) const
{
  std::string current(system_path);
  while (true) {
    const ElementRef * ref = find(join_path(current, id));
    if (ref != nullptr && ref->kind == ElementKind::channel) {
      return ref;
    }
    if (current.empty()) {
      return nullptr;
    }
    const ElementRef * system = find_system(current);
    if (system == nullptr) {
      return nullptr;
    }
    current = system->parent_path;
  }
}

std::string ModelIndex::node_fqn(const ElementRef & node) const
{
  return node.ns == "/" ? "/" + node.node->name : node.ns + "/" + node.node->name;
}

std::optional<std::string> ModelIndex::system_declaring_namespace(std::string_view ns) const
{
  for (const auto & ref : elements_) {
    if (ref.kind == ElementKind::system && !ref.system->ns.empty() && ref.ns == ns) {
      return ref.path;
    }
  }
  return std::nullopt;
}

namespace
{

void check_names(const SystemDef & system, const std::string & parent, std::vector<Finding> & out)
{
  const std::string path = join_path(parent, system.name);
  auto violation = [&](const std::string & subject, const std::string & expected, const std::string & observed) {
      out.push_back(make_finding(Stage::model, Severity::error, FindingClass::NameViolation, subject, expected, observed));
    };
  if (system.name.empty() || system.name.find('/') != std::string::npos) {
    violation(path, "system name without '/'", system.name);
  }
  if (!system.ns.empty() && !is_valid_namespace(system.ns)) {
    violation(path, "absolute namespace", system.ns);
  }
  for (const auto & node : system.nodes) {
    if (!is_valid_token(node.name)) {
      violation(join_path(path, node.name), "node name token", node.name);
    }
    if (!node.package.empty() && !is_valid_package_name(node.package)) {
      violation(join_path(path, node.name), "package name", node.package);
    }
  }
  for (const auto & channel : system.channels) {
    const std::string channel_path = join_path(path, channel.name);
    if (channel.name.empty() || channel.name.find('/') != std::string::npos) {
      violation(channel_path, "channel identifier without '/'", channel.name);
    }
    if (!is_valid_name(channel.channel_name)) {
      violation(channel_path, "ROS name", channel.channel_name);
    }
    if (!is_valid_interface_type(channel.interface_type)) {
      violation(channel_path, "pkg/category/Type", channel.interface_type);
    } else {
      const char * want = channel.kind == ChannelKind::topic ? "msg" :
        channel.kind == ChannelKind::service ? "srv" : "action";
      const auto category = interface_category(channel.interface_type);
      if (category != want) {
        violation(channel_path, std::string(want) + " interface for " + to_string(channel.kind), channel.interface_type);
      }
    }
  }
  for (const auto & child : system.children) {
    check_names(child, path, out);
  }
}

}  // namespace

std::vector<Finding> validate_model(const SystemModel & model)
{
  std::vector<Finding> out;
  const ModelIndex index(model);

  std::set<std::string> requirement_ids;
  for (const auto & req : model.requirements) {
    requirement_ids.insert(req.id);
    if (req.allocations.empty()) {
      out.push_back(make_finding(Stage::model, Severity::error, FindingClass::UnallocatedRequirement, req.id));
    }
    for (const auto & path : req.allocations) {
      if (index.find(path) == nullptr) {
        out.push_back(
          make_finding(Stage::model, Severity::error, FindingClass::DanglingAllocation, req.id, path, std::nullopt));
      }
    }
  }

  for (const auto & system : model.systems) {
    check_names(system, "", out);
  }
  for (const auto & name : model.ignore_channels) {
    // Literal names must be valid; prefixes before a trailing '*' are free-form.
    const bool ok = !name.empty() && (name.back() == '*' || is_valid_name(name));
    if (!ok) {
      out.push_back(make_finding(Stage::model, Severity::error, FindingClass::NameViolation, name, "channel pattern", name));
    }
  }

  std::map<std::string, std::vector<std::string>> fqns;
  std::set<std::string> packages;
  for (const auto & ws : model.sources.workspaces) {
    for (const auto & repo : ws.repositories) {
      for (const auto & pkg : repo.packages) {
        packages.insert(pkg);
        if (!is_valid_package_name(pkg)) {
          out.push_back(
            make_finding(Stage::model, Severity::error, FindingClass::NameViolation, pkg, "package name", pkg));
        }
      }
    }
  }
  for (const auto & ref : index.elements()) {
    if (ref.kind == ElementKind::node) {
      fqns[index.node_fqn(ref)].push_back(ref.path);
      if (!ref.node->package.empty() && packages.count(ref.node->package) == 0) {
        out.push_back(
          make_finding(Stage::model, Severity::error, FindingClass::DanglingReference, ref.path, ref.node->package, std::nullopt));
      }
    } else if (ref.kind == ElementKind::system) {
      for (const auto & id : ref.system->allocated_requirements) {
        if (requirement_ids.count(id) == 0) {
          out.push_back(make_finding(Stage::model, Severity::error, FindingClass::DanglingReference, ref.path, id, std::nullopt));
        }
      }
    }
  }
  for (auto & [fqn, paths] : fqns) {
    if (paths.size() > 1) {
      std::sort(paths.begin(), paths.end());
      std::string where;
      for (const auto & p : paths) {
        where += where.empty() ? p : ", " + p;
      }
      out.push_back(make_finding(Stage::model, Severity::error, FindingClass::DuplicateName, fqn, std::nullopt, where));
    }
  }
  for (const auto & path : index.duplicate_paths()) {
    out.push_back(make_finding(Stage::model, Severity::error, FindingClass::DuplicateName, path));
  }

  std::set<std::string> plan_ids;
  for (const auto & plan : model.plans) {
    plan_ids.insert(plan.id);
  }
  for (const auto & plan : model.plans) {
    if (!plan.scope.empty() && index.find_system(plan.scope) == nullptr) {
      out.push_back(make_finding(Stage::model, Severity::error, FindingClass::DanglingReference, plan.id, plan.scope, std::nullopt));
    }
    for (const auto & part : plan.parts) {
      if (plan_ids.count(part) == 0) {
        out.push_back(make_finding(Stage::model, Severity::error, FindingClass::DanglingReference, plan.id, part, std::nullopt));
      }
    }
    for (const auto & step : plan.steps) {
      if (step.channel && !is_absolute_name(*step.channel)) {
        out.push_back(
          make_finding(Stage::model, Severity::error, FindingClass::NameViolation, plan.id, "absolute channel name", *step.channel));
      }
    }
  }

  sort_findings(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace meros_verify
