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
#include <string_view>
#include <unordered_map>
#include <vector>

#include "meros_verify/finding.hpp"
#include "meros_verify/model.hpp"

namespace meros_verify
{

/// "parent/name", or just name at the root.
std::string join_path(std::string_view parent, std::string_view name);

/// Reflexive prefix containment on element paths. The empty path is the
/// whole model and contains everything.
bool path_contains(std::string_view ancestor, std::string_view path);

enum class ElementKind { system, node, channel };

struct ElementRef
{
  ElementKind kind{ElementKind::system};
  std::string path;
  /// Enclosing system path for nodes and channels, parent path for systems.
  std::string parent_path;
  /// Resolved namespace in effect for the element.
  std::string ns;
  const SystemDef * system{nullptr};
  const NodeDef * node{nullptr};
  const CommChannelDef * channel{nullptr};
};

/**
 * @brief Path lookup over one model.
 *
 * Holds pointers into the indexed model, which must outlive the index.
 * Namespaces of systems whose own namespace is malformed fall back to the
 * inherited one so that indexing never throws.
 */
class ModelIndex
{
public:
  explicit ModelIndex(const SystemModel & model);

  const SystemModel & model() const {return *model_;}
  const std::vector<ElementRef> & elements() const {return elements_;}

  const ElementRef * find(std::string_view path) const;
  const ElementRef * find_system(std::string_view path) const;

  std::optional<std::string> path_of(const SystemDef & system) const;
  std::optional<std::string> path_of(const NodeDef & node) const;
  std::optional<std::string> path_of(const CommChannelDef & channel) const;

  /// Channel named @p id visible from the system at @p system_path, searching
  /// the system itself and then its ancestors.
  const ElementRef * lookup_channel(std::string_view system_path, std::string_view id) const;

  /// Fully qualified name of a node element.
  std::string node_fqn(const ElementRef & node) const;

  /// Path of the system whose effective namespace was declared as @p ns, outermost first.
  std::optional<std::string> system_declaring_namespace(std::string_view ns) const;

  /// Element paths sharing a path (duplicates across kinds); empty when the model is well formed.
  std::vector<std::string> duplicate_paths() const {return duplicates_;}

private:
  void index_system(const SystemDef & system, const std::string & parent_path, const std::string & parent_ns);

  const SystemModel * model_;
  std::vector<ElementRef> elements_;
  std::unordered_map<std::string, std::size_t> by_path_;
  std::unordered_map<const void *, std::size_t> by_address_;
  std::vector<std::string> duplicates_;
};

/**
 * @brief Well-formedness findings for a parsed model (stage model).
 *
 * Reports unallocated requirements, allocations that name no element,
 * grammar violations (namespaces, node names, channel names, package names,
 * interface types), duplicate node fqns after namespace resolution, and
 * references to unknown requirements, packages or plan parts. Sorted, and
 * empty iff the model is well formed.
 */
std::vector<Finding> validate_model(const SystemModel & model);

}  // namespace meros_verify
