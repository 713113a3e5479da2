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

#include "meros_verify/errors.hpp"

#include <sstream>
#include <utility>

namespace meros_verify
{

namespace
{

std::string syntax_message(const std::string & message, std::size_t line, std::size_t col, const std::string & pointer)
{
  std::ostringstream out;
  out << "syntax error";
  if (line > 0) {
    out << " at line " << line << ", column " << col;
  }
  if (!pointer.empty()) {
    out << " at " << pointer;
  }
  out << ": " << message;
  return out.str();
}

}  // namespace

SyntaxError::SyntaxError(const std::string & message, std::size_t line, std::size_t col, std::string pointer)
: Error(syntax_message(message, line, col, pointer)), line_(line), col_(col), pointer_(std::move(pointer))
{
}

DuplicateNameError::DuplicateNameError(std::string path)
: Error("duplicate name '" + path + "'"), path_(std::move(path))
{
}

DanglingReferenceError::DanglingReferenceError(std::string path, std::string target)
: Error("'" + path + "' references unknown '" + target + "'"), path_(std::move(path)), target_(std::move(target))
{
}

NameViolationError::NameViolationError(std::string name, const std::string & why)
: Error("name '" + name + "' " + why), name_(std::move(name))
{
}

NonMonotonicSeqError::NonMonotonicSeqError(long long previous, long long current, std::size_t line)
: Error(
    "trace line " + std::to_string(line) + ": seq " + std::to_string(current) +
    " does not follow " + std::to_string(previous))
{
}

}  // namespace meros_verify
