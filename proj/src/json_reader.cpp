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

#include "json_reader.hpp"

#include "meros_verify/errors.hpp"

namespace meros_verify::detail
{

namespace
{

const json & empty_array()
{
  static const json value = json::array();
  return value;
}

}  // namespace

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte)
{
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text, std::size_t line_offset)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error & e) {
    // nlohmann reports the offset one past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_col(text, byte);
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    if (colon != std::string::npos) {
      what = what.substr(colon + 2);
    }
    throw SyntaxError(what, line + line_offset, col);
  }
}

void schema_error(const std::string & pointer, const std::string & message)
{
  throw SyntaxError(message, 0, 0, pointer.empty() ? "/" : pointer);
}

ObjectReader::ObjectReader(const json & value, std::string pointer)
: value_(value), pointer_(std::move(pointer))
{
  if (!value_.is_object()) {
    schema_error(pointer_, "expected an object");
  }
}

const json * ObjectReader::find(const char * key)
{
  seen_.insert(key);
  const auto it = value_.find(key);
  return it == value_.end() ? nullptr : &*it;
}

std::string ObjectReader::string(const char * key)
{
  const json * v = find(key);
  if (v == nullptr) {
    schema_error(pointer_, std::string("missing key '") + key + "'");
  }
  if (!v->is_string()) {
    schema_error(child_pointer(key), "expected a string");
  }
  return v->get<std::string>();
}

std::optional<std::string> ObjectReader::optional_string(const char * key)
{
  const json * v = find(key);
  if (v == nullptr || v->is_null()) {
    return std::nullopt;
  }
  if (!v->is_string()) {
    schema_error(child_pointer(key), "expected a string or null");
  }
  return v->get<std::string>();
}

std::string ObjectReader::string_or_empty(const char * key)
{
  const json * v = find(key);
  if (v == nullptr) {
    return {};
  }
  if (!v->is_string()) {
    schema_error(child_pointer(key), "expected a string");
  }
  return v->get<std::string>();
}

bool ObjectReader::boolean(const char * key, bool fallback)
{
  const json * v = find(key);
  if (v == nullptr) {
    return fallback;
  }
  if (!v->is_boolean()) {
    schema_error(child_pointer(key), "expected a boolean");
  }
  return v->get<bool>();
}

long long ObjectReader::integer(const char * key)
{
  const json * v = find(key);
  if (v == nullptr) {
    schema_error(pointer_, std::string("missing key '") + key + "'");
  }
  if (!v->is_number_integer()) {
    schema_error(child_pointer(key), "expected an integer");
  }
  return v->get<long long>();
}

const json & ObjectReader::array(const char * key)
{
  const json * v = find(key);
  if (v == nullptr) {
    return empty_array();
  }
  if (!v->is_array()) {
    schema_error(child_pointer(key), "expected an array");
  }
  return *v;
}

const json & ObjectReader::object(const char * key)
{
  const json * v = find(key);
  if (v == nullptr) {
    schema_error(pointer_, std::string("missing key '") + key + "'");
  }
  if (!v->is_object()) {
    schema_error(child_pointer(key), "expected an object");
  }
  return *v;
}

std::vector<std::string> ObjectReader::strings(const char * key)
{
  const json & arr = array(key);
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      schema_error(child_pointer(key) + "/" + std::to_string(i), "expected a string");
    }
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

void ObjectReader::finish() const
{
  for (const auto & item : value_.items()) {
    if (seen_.count(item.key()) == 0) {
      schema_error(child_pointer(item.key().c_str()), "unknown key '" + item.key() + "'");
    }
  }
}

}  // namespace meros_verify::detail
