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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meros_verify
{

/// Base class for every error raised while reading or checking inputs.
class Error : public std::runtime_error
{
public:
  explicit Error(const std::string & message)
  : std::runtime_error(message) {}
};

/**
 * @brief Malformed document or schema violation.
 *
 * Lexical JSON errors carry a 1-based line and column. Schema errors (unknown
 * key, wrong scalar type, missing key) carry the JSON pointer of the offending
 * value; line and column are 0 when the position is not known.
 */
class SyntaxError : public Error
{
public:
  SyntaxError(const std::string & message, std::size_t line, std::size_t col, std::string pointer = {});

  std::size_t line() const {return line_;}
  std::size_t col() const {return col_;}
  const std::string & pointer() const {return pointer_;}

private:
  std::size_t line_;
  std::size_t col_;
  std::string pointer_;
};

class DuplicateNameError : public Error
{
public:
  explicit DuplicateNameError(std::string path);
  const std::string & path() const {return path_;}

private:
  std::string path_;
};

class DanglingReferenceError : public Error
{
public:
  DanglingReferenceError(std::string path, std::string target);
  const std::string & path() const {return path_;}
  const std::string & target() const {return target_;}

private:
  std::string path_;
  std::string target_;
};

class NameViolationError : public Error
{
public:
  explicit NameViolationError(std::string name, const std::string & why = "does not satisfy the name grammar");
  const std::string & name() const {return name_;}

private:
  std::string name_;
};

class MissingNodeContextError : public Error
{
public:
  explicit MissingNodeContextError(const std::string & name)
  : Error("private name '" + name + "' resolved without a node") {}
};

class NonMonotonicSeqError : public Error
{
public:
  NonMonotonicSeqError(long long previous, long long current, std::size_t line);
};

class UnknownScopeError : public Error
{
public:
  explicit UnknownScopeError(const std::string & scope)
  : Error("scope '" + scope + "' does not name a system") {}
};

class ForeignReportError : public Error
{
public:
  explicit ForeignReportError(const std::string & scope)
  : Error("report scope '" + scope + "' is not part of this model") {}
};

class InvalidPlanError : public Error
{
public:
  using Error::Error;
};

class UnresolvedPartError : public Error
{
public:
  UnresolvedPartError(const std::string & plan, const std::string & part)
  : Error("plan '" + plan + "' references unknown part '" + part + "'") {}
};

class CompositionCycleError : public Error
{
public:
  explicit CompositionCycleError(const std::string & chain)
  : Error("plan composition cycle: " + chain) {}
};

}  // namespace meros_verify
