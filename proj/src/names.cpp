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

#include "meros_verify/names.hpp"

#include <cctype>

#include "meros_verify/errors.hpp"

namespace meros_verify
{

namespace
{

bool is_alpha(char c) {return std::isalpha(static_cast<unsigned char>(c)) != 0;}
bool is_alnum(char c) {return std::isalnum(static_cast<unsigned char>(c)) != 0;}

// token('/'token)*
bool is_token_sequence(std::string_view text)
{
  if (text.empty()) {
    return false;
  }
  std::size_t start = 0;
  while (true) {
    const auto slash = text.find('/', start);
    const auto token = text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    if (!is_valid_token(token)) {
      return false;
    }
    if (slash == std::string_view::npos) {
      return true;
    }
    start = slash + 1;
  }
}

}  // namespace

bool is_valid_token(std::string_view token)
{
  if (token.empty() || !is_alpha(token.front())) {
    return false;
  }
  for (char c : token) {
    if (!is_alnum(c) && c != '_') {
      return false;
    }
  }
  return true;
}

bool is_valid_name(std::string_view name)
{
  if (name.empty()) {
    return false;
  }
  if (name.front() == '/') {
    return is_token_sequence(name.substr(1));
  }
  if (name.front() == '~') {
    auto rest = name.substr(1);
    if (!rest.empty() && rest.front() == '/') {
      rest.remove_prefix(1);
    }
    return is_token_sequence(rest);
  }
  return is_token_sequence(name);
}

bool is_valid_namespace(std::string_view ns)
{
  return ns == "/" || is_absolute_name(ns);
}

bool is_absolute_name(std::string_view name)
{
  return !name.empty() && name.front() == '/' && is_token_sequence(name.substr(1));
}

std::string resolve_name(std::string_view name, std::string_view ns, const std::optional<std::string> & node)
{
  if (!is_valid_name(name)) {
    throw NameViolationError(std::string(name));
  }
  if (!is_valid_namespace(ns)) {
    throw NameViolationError(std::string(ns), "is not an absolute namespace");
  }
  if (name.front() == '/') {
    return std::string(name);
  }
  if (name.front() == '~') {
    if (!node) {
      throw MissingNodeContextError(std::string(name));
    }
    if (!is_absolute_name(*node)) {
      throw NameViolationError(*node, "is not an absolute node name");
    }
    auto rest = name.substr(1);
    if (rest.front() == '/') {
      rest.remove_prefix(1);
    }
    return *node + "/" + std::string(rest);
  }
  if (ns == "/") {
    return "/" + std::string(name);
  }
  return std::string(ns) + "/" + std::string(name);
}

std::string namespace_of(std::string_view fqn)
{
  const auto slash = fqn.rfind('/');
  if (slash == std::string_view::npos || slash == 0) {
    return "/";
  }
  return std::string(fqn.substr(0, slash));
}

std::string strip_trailing_slash(std::string_view name)
{
  while (name.size() > 1 && name.back() == '/') {
    name.remove_suffix(1);
  }
  return std::string(name);
}

bool is_valid_package_name(std::string_view name)
{
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::islower(u) && !std::isdigit(u) && c != '_') {
      return false;
    }
  }
  return true;
}

std::string interface_category(std::string_view type)
{
  const auto first = type.find('/');
  if (first == std::string_view::npos) {
    return {};
  }
  const auto second = type.find('/', first + 1);
  if (second == std::string_view::npos) {
    return {};
  }
  return std::string(type.substr(first + 1, second - first - 1));
}

bool is_valid_interface_type(std::string_view type)
{
  const auto first = type.find('/');
  if (first == std::string_view::npos) {
    return false;
  }
  const auto second = type.find('/', first + 1);
  if (second == std::string_view::npos || type.find('/', second + 1) != std::string_view::npos) {
    return false;
  }
  const auto category = type.substr(first + 1, second - first - 1);
  return is_valid_package_name(type.substr(0, first)) &&
         (category == "msg" || category == "srv" || category == "action") &&
         is_valid_token(type.substr(second + 1));
}

}  // namespace meros_verify
