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

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "meros_verify/model.hpp"
#include "meros_verify/model_io.hpp"
#include "meros_verify/snapshot.hpp"

namespace meros_verify::testing
{

inline std::string fixture_path(const std::string & name)
{
  return std::string(MEROS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_text(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_text(const std::string & name) {return read_text(fixture_path(name));}

inline SystemModel heros_model() {return parse_model(fixture_text("model.json"));}
inline RuntimeSnapshot heros_runtime() {return parse_runtime_snapshot(fixture_text("runtime.json"));}
inline SourceSnapshot heros_sources() {return parse_source_snapshot(fixture_text("sources.json"));}
inline EventTrace heros_trace(const std::string & plan)
{
  return parse_trace(fixture_text("traces/" + plan + ".jsonl"));
}

}  // namespace meros_verify::testing
