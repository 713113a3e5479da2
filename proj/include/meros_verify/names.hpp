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

namespace meros_verify
{

// ROS name grammar: (~|/)?token('/'token)* with token = [A-Za-z][A-Za-z0-9_]*.
// "~/token..." is accepted as the ROS 2 spelling of a private name.

bool is_valid_token(std::string_view token);
bool is_valid_name(std::string_view name);

/// "/" or "/token(/token)*".
bool is_valid_namespace(std::string_view ns);

/// Absolute name: "/token(/token)*".
bool is_absolute_name(std::string_view name);

/**
 * @brief Resolve a graph resource name to its fully qualified form.
 *
 * Absolute names pass through, relative names are joined onto @p ns and
 * private names ('~' prefix) are joined onto @p node. The result always
 * starts with '/', never contains "//" and never ends with '/'.
 *
 * @throws NameViolationError if @p name or @p ns is malformed.
 * @throws MissingNodeContextError for a private name without @p node.
 */
std::string resolve_name(
  std::string_view name, std::string_view ns,
  const std::optional<std::string> & node = std::nullopt);

/// Namespace part of an absolute name ("/a/b" -> "/a", "/b" -> "/").
std::string namespace_of(std::string_view fqn);

/// Strips trailing '/' characters except for the root namespace.
std::string strip_trailing_slash(std::string_view name);

// REP-144 package names: lowercase letters, digits and underscores, starting with a letter.
bool is_valid_package_name(std::string_view name);

/// "pkg/category/Type" with category one of msg, srv, action.
bool is_valid_interface_type(std::string_view type);
std::string interface_category(std::string_view type);

}  // namespace meros_verify
