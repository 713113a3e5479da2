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

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "meros_verify/finding.hpp"
#include "meros_verify/model.hpp"
#include "meros_verify/snapshot.hpp"

namespace meros_verify
{

enum class EdgeRole { pub, sub, srv, cli, act_srv, act_cli };

const char * to_string(EdgeRole role);

/// One endpoint of one node on one channel.
struct Edge
{
  std::string node_fqn;
  std::string channel_fqn;
  EdgeRole role{EdgeRole::pub};
  /// Empty means unconstrained (external endpoint without a declared channel).
  std::string type;
  bool external{false};

  auto operator<=>(const Edge &) const = default;
};

/// Subject string used in edge findings: "<node> <role> <channel>".
std::string edge_subject(const Edge & edge);

struct ExpectedGraph
{
  std::set<std::string> nodes;
  std::set<Edge> edges;
  std::string scope;

  bool operator==(const ExpectedGraph &) const = default;
};

struct ObservedGraph
{
  std::set<std::string> nodes;
  std::set<Edge> edges;

  bool operator==(const ObservedGraph &) const = default;
};

ObservedGraph observed_graph(const RuntimeSnapshot & snapshot);

/**
 * @brief Name filters applied before diffing.
 *
 * Patterns are literal names or a prefix followed by a single trailing '*'.
 * Channel patterns starting with "~/" are resolved against each edge's node.
 */
struct MatchPolicy
{
  std::vector<std::string> ignore_channels;
  std::vector<std::string> ignore_nodes;
  /// Severity of unexpected nodes; the stage default applies when unset
  /// (warning at ssrve, error elsewhere).
  std::optional<Severity> treat_unexpected_as;

  /// Infrastructure channels the middleware creates on its own.
  static MatchPolicy defaults();

  bool ignores_channel(std::string_view channel_fqn, std::string_view node_fqn) const;
  bool ignores_node(std::string_view node_fqn) const;
};

bool pattern_matches(std::string_view pattern, std::string_view name);

/**
 * @brief Design-side computation graph of the system at @p scope.
 *
 * Node names are resolved through the enclosing namespace chain; channel
 * names are resolved in the declaring system's namespace (private names
 * against the referencing node). An empty scope is the whole model.
 *
 * @throws UnknownScopeError
 */
ExpectedGraph expected_graph(const SystemModel & model, std::string_view scope);

/**
 * @brief Set difference of two graphs after policy filtering.
 *
 * MissingNode / UnexpectedNode per node set difference. Edge differences are
 * taken over nodes present on both sides only, so a missing or renamed node
 * is reported once rather than once per endpoint. Edges are keyed by
 * (node, channel, role); a key present on both sides with different types is
 * a TypeMismatch. Output is sorted.
 */
std::vector<Finding> diff_graphs(
  const ExpectedGraph & expected, const ObservedGraph & observed,
  const MatchPolicy & policy, Stage stage = Stage::srve);

/**
 * @brief Subsystem realisation verification (stage ssrve).
 *
 * Only connections inside the subsystem are compared: expected edges on
 * channels declared within the scope, and observed edges of in-scope nodes
 * except those on channels the model declares only outside the scope.
 * Observed nodes are those under the scope's namespace that the model does
 * not place in another system.
 *
 * @throws UnknownScopeError
 */
VerificationReport verify_subsystem(
  const SystemModel & model, const RuntimeSnapshot & snapshot,
  std::string_view scope, const MatchPolicy & policy);

/// ssrve for each top-level system, run concurrently, in model order.
std::vector<VerificationReport> verify_subsystems(
  const SystemModel & model, const RuntimeSnapshot & snapshot, const MatchPolicy & policy);

/**
 * @brief System verification (stage srve): the whole model against the whole
 * snapshot, plus design-level TypeMismatch where the model declares one
 * channel name with different interface types.
 */
VerificationReport verify_system(
  const SystemModel & model, const RuntimeSnapshot & snapshot, const MatchPolicy & policy);

/// Design-level channel type conflicts, one finding per conflicting channel fqn.
std::vector<Finding> model_type_conflicts(const SystemModel & model, Stage stage = Stage::srve);

/// Package placement against the prescribed workspace/repository layout (stage sources).
VerificationReport verify_sources(const SystemModel & model, const SourceSnapshot & sources);

}  // namespace meros_verify
