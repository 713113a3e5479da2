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


#include "oracle.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace meros_verify::testing
{
namespace
{

bool glob(const std::string & pattern, const std::string & name)
{
  if (!pattern.empty() && pattern[pattern.size() - 1] == '*') {
    const std::string prefix = pattern.substr(0, pattern.size() - 1);
    return name.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), name.begin());
  }
  return pattern == name;
}

bool channel_ignored(const MatchPolicy & policy, const std::string & channel, const std::string & node)
{
  for (const auto & p : policy.ignore_channels) {
    std::string pattern = p;
    if (pattern.size() >= 2 && pattern[0] == '~' && pattern[1] == '/') {
      pattern = node + pattern.substr(1);
    }
    if (glob(pattern, channel)) {
      return true;
    }
  }
  return false;
}

bool node_ignored(const MatchPolicy & policy, const std::string & node)
{
  for (const auto & p : policy.ignore_nodes) {
    if (glob(p, node)) {
      return true;
    }
  }
  return false;
}

template<class C>
bool contains(const C & items, const std::string & value)
{
  for (const auto & item : items) {
    if (item == value) {
      return true;
    }
  }
  return false;
}

const char * role_name(EdgeRole r)
{
  const char * names[] = {"pub", "sub", "srv", "cli", "act_srv", "act_cli"};
  return names[static_cast<int>(r)];
}

std::string subject_of(const Edge & e)
{
  return e.node_fqn + " " + role_name(e.role) + " " + e.channel_fqn;
}

Finding raw(Stage stage, Severity sev, FindingClass cls, std::string subject,
  std::optional<std::string> expected = std::nullopt, std::optional<std::string> observed = std::nullopt)
{
  Finding f;
  f.stage = stage;
  f.severity = sev;
  f.cls = cls;
  f.subject = std::move(subject);
  f.expected = std::move(expected);
  f.observed = std::move(observed);
  return f;
}

struct FlatEdge
{
  std::string node;
  std::string channel;
  EdgeRole role;
  std::string type;
};

std::vector<FlatEdge> flatten(const RuntimeNode & node)
{
  std::vector<FlatEdge> out;
  auto add = [&](const std::vector<TypedName> & list, EdgeRole role) {
      for (const auto & tn : list) {
        out.push_back({node.fqn, tn.name, role, tn.type});
      }
    };
  add(node.publishers, EdgeRole::pub);
  add(node.subscribers, EdgeRole::sub);
  add(node.services, EdgeRole::srv);
  add(node.clients, EdgeRole::cli);
  add(node.action_servers, EdgeRole::act_srv);
  add(node.action_clients, EdgeRole::act_cli);
  return out;
}

bool infrastructure(const FlatEdge & e, const std::vector<std::string> & extra)
{
  static const char * services[] = {
    "describe_parameters", "get_parameter_types", "get_parameters", "get_type_description",
    "list_parameters", "set_parameters", "set_parameters_atomically"};
  if (e.channel == "/rosout" || e.channel == "/parameter_events" || contains(extra, e.channel)) {
    return true;
  }
  for (const char * s : services) {
    if (e.channel == e.node + "/" + s) {
      return true;
    }
  }
  return false;
}

const RuntimeNode * find_node(const RuntimeSnapshot & snap, const std::string & fqn)
{
  for (const auto & n : snap.nodes) {
    if (n.fqn == fqn) {
      return &n;
    }
  }
  return nullptr;
}

}  // namespace

std::string describe(const Finding & f)
{
  std::ostringstream os;
  os << to_string(f.stage) << ' ' << to_string(f.severity) << ' ' << to_string(f.cls) << " [" << f.subject
     << "] exp=" << f.expected.value_or("-") << " obs=" << f.observed.value_or("-");
  return os.str();
}

std::vector<Finding> oracle_diff(
  const ExpectedGraph & expected, const ObservedGraph & observed,
  const MatchPolicy & policy, Stage stage)
{
  std::vector<Finding> out;
  Severity unexpected = stage == Stage::ssrve ? Severity::warning : Severity::error;
  if (policy.treat_unexpected_as) {
    unexpected = *policy.treat_unexpected_as;
  }
  std::vector<std::string> both;
  for (const auto & n : expected.nodes) {
    if (node_ignored(policy, n)) {
      continue;
    }
    if (contains(observed.nodes, n)) {
      both.push_back(n);
    } else {
      out.push_back(raw(stage, Severity::error, FindingClass::MissingNode, n));
    }
  }
  for (const auto & n : observed.nodes) {
    if (!node_ignored(policy, n) && !contains(expected.nodes, n)) {
      out.push_back(raw(stage, unexpected, FindingClass::UnexpectedNode, n));
    }
  }

  std::vector<Edge> want;
  std::vector<Edge> have;
  for (const auto & e : expected.edges) {
    if (contains(both, e.node_fqn) && !channel_ignored(policy, e.channel_fqn, e.node_fqn)) {
      want.push_back(e);
    }
  }
  for (const auto & e : observed.edges) {
    if (contains(both, e.node_fqn) && !channel_ignored(policy, e.channel_fqn, e.node_fqn)) {
      have.push_back(e);
    }
  }
  auto same_key = [](const Edge & a, const Edge & b) {
      return a.node_fqn == b.node_fqn && a.channel_fqn == b.channel_fqn && a.role == b.role;
    };
  for (const auto & w : want) {
    const Edge * match = nullptr;
    for (const auto & h : have) {
      if (same_key(w, h)) {
        match = &h;
        break;
      }
    }
    if (match == nullptr) {
      std::optional<std::string> type;
      if (!w.type.empty()) {
        type = w.type;
      }
      out.push_back(raw(stage, Severity::error, FindingClass::MissingEdge, subject_of(w), type));
    } else if (!w.type.empty() && w.type != match->type) {
      out.push_back(raw(stage, Severity::error, FindingClass::TypeMismatch, subject_of(w), w.type, match->type));
    }
  }
  for (const auto & h : have) {
    bool found = false;
    for (const auto & w : want) {
      found = found || same_key(w, h);
    }
    if (!found) {
      out.push_back(raw(stage, Severity::error, FindingClass::UnexpectedEdge, subject_of(h), std::nullopt, h.type));
    }
  }
  return out;
}

std::vector<Finding> oracle_snapshot_diff(
  const RuntimeSnapshot & before, const RuntimeSnapshot & after,
  const std::vector<std::string> & extra_ignored)
{
  const Stage s = Stage::srve;
  std::vector<Finding> out;
  for (const auto & n : before.nodes) {
    if (find_node(after, n.fqn) == nullptr) {
      out.push_back(raw(s, Severity::error, FindingClass::MissingNode, n.fqn));
    }
  }
  for (const auto & n : after.nodes) {
    const RuntimeNode * old = find_node(before, n.fqn);
    if (old == nullptr) {
      out.push_back(raw(s, Severity::error, FindingClass::UnexpectedNode, n.fqn));
      continue;
    }
    const auto was = flatten(*old);
    const auto now = flatten(n);
    for (const auto & e : was) {
      if (infrastructure(e, extra_ignored)) {
        continue;
      }
      const FlatEdge * match = nullptr;
      for (const auto & f : now) {
        if (f.channel == e.channel && f.role == e.role) {
          match = &f;
        }
      }
      const std::string subject = e.node + " " + role_name(e.role) + " " + e.channel;
      if (match == nullptr) {
        out.push_back(raw(s, Severity::error, FindingClass::MissingEdge, subject, e.type));
      } else if (match->type != e.type) {
        out.push_back(raw(s, Severity::error, FindingClass::TypeMismatch, subject, e.type, match->type));
      }
    }
    for (const auto & f : now) {
      if (infrastructure(f, extra_ignored)) {
        continue;
      }
      bool found = false;
      for (const auto & e : was) {
        found = found || (f.channel == e.channel && f.role == e.role);
      }
      if (!found) {
        out.push_back(raw(s, Severity::error, FindingClass::UnexpectedEdge,
          f.node + " " + role_name(f.role) + " " + f.channel, std::nullopt, f.type));
      }
    }
  }
  return out;
}

std::vector<Finding> oracle_layout_diff(const SourceSnapshot & prescribed, const SourceSnapshot & found)
{
  using Placement = std::tuple<std::string, std::string>;
  auto placements = [](const SourceSnapshot & s) {
      std::vector<std::pair<std::string, std::string>> out;
      for (const auto & ws : s.workspaces) {
        for (const auto & repo : ws.repositories) {
          for (const auto & pkg : repo.packages) {
            out.emplace_back(pkg, ws.name + "/" + repo.name);
          }
        }
      }
      return out;
    };
  const auto want = placements(prescribed);
  const auto have = placements(found);
  std::vector<Finding> out;
  for (const auto & [pkg, where] : want) {
    const std::string * at = nullptr;
    for (const auto & [p, w] : have) {
      if (p == pkg) {
        at = &w;
      }
    }
    if (at == nullptr) {
      out.push_back(raw(Stage::sources, Severity::error, FindingClass::MissingPackage, pkg, where));
    } else if (*at != where) {
      out.push_back(raw(Stage::sources, Severity::error, FindingClass::MisplacedArtifact, pkg, where, *at));
    }
  }
  for (const auto & [pkg, where] : have) {
    bool known = false;
    for (const auto & [p, w] : want) {
      known = known || p == pkg;
    }
    if (!known) {
      out.push_back(raw(Stage::sources, Severity::warning, FindingClass::UnexpectedPackage, pkg, std::nullopt, where));
    }
  }
  return out;
}

std::vector<Finding> oracle_unallocated(const SystemModel & model)
{
  std::vector<Finding> out;
  for (const auto & r : model.requirements) {
    if (r.allocations.empty()) {
      out.push_back(raw(Stage::model, Severity::error, FindingClass::UnallocatedRequirement, r.id));
    }
  }
  return out;
}

std::string multiset_mismatch(std::vector<Finding> actual, std::vector<Finding> expected)
{
  auto key = [](const Finding & f) {
      return std::make_tuple(
        static_cast<int>(f.stage), static_cast<int>(f.cls), f.subject, static_cast<int>(f.severity),
        f.expected.value_or("\x01"), f.observed.value_or("\x01"));
    };
  auto by_key = [&](const Finding & a, const Finding & b) {return key(a) < key(b);};
  std::sort(actual.begin(), actual.end(), by_key);
  std::sort(expected.begin(), expected.end(), by_key);
  if (actual == expected) {
    return {};
  }
  std::ostringstream os;
  os << "actual (" << actual.size() << "):\n";
  for (const auto & f : actual) {
    os << "  " << describe(f) << '\n';
  }
  os << "oracle (" << expected.size() << "):\n";
  for (const auto & f : expected) {
    os << "  " << describe(f) << '\n';
  }
  return os.str();
}

}  // namespace meros_verify::testing
