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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace meros_verify::detail
{

using json = nlohmann::json;

/// Parses @p text, translating nlohmann parse errors into SyntaxError with line/col.
json parse_json(std::string_view text, std::size_t line_offset = 0);

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte);

[[noreturn]] void schema_error(const std::string & pointer, const std::string & message);

/// Strict accessor for one JSON object: every key read is recorded and
/// finish() rejects the rest.
class ObjectReader
{
public:
  ObjectReader(const json & value, std::string pointer);

  std::string string(const char * key);
  std::optional<std::string> optional_string(const char * key);
  /// Absent key reads as an empty string.
  std::string string_or_empty(const char * key);
  bool boolean(const char * key, bool fallback);
  long long integer(const char * key);
  /// Absent key reads as an empty array.
  const json & array(const char * key);
  const json & object(const char * key);
  std::vector<std::string> strings(const char * key);

  std::string child_pointer(const char * key) const {return pointer_ + "/" + key;}
  const std::string & pointer() const {return pointer_;}

  void finish() const;

private:
  const json * find(const char * key);

  const json & value_;
  std::string pointer_;
  std::set<std::string> seen_;
};

}  // namespace meros_verify::detail
