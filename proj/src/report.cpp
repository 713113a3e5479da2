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

#include "meros_verify/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace meros_verify
{

namespace
{

using ordered = nlohmann::ordered_json;

ordered report_json(const VerificationReport & report)
{
  ordered out;
  out["stage"] = to_string(report.stage);
  out["scope"] = report.scope;
  out["pass"] = report.pass;
  out["findings"] = ordered::array();
  for (const auto & f : report.findings) {
    ordered item;
    item["stage"] = to_string(f.stage);
    item["severity"] = to_string(f.severity);
    item["class"] = to_string(f.cls);
    item["subject"] = f.subject;
    item["expected"] = f.expected ? ordered(*f.expected) : ordered(nullptr);
    item["observed"] = f.observed ? ordered(*f.observed) : ordered(nullptr);
    out["findings"].push_back(std::move(item));
  }
  return out;
}

constexpr const char * kRed = "\033[31m";
constexpr const char * kYellow = "\033[33m";
constexpr const char * kGreen = "\033[32m";
constexpr const char * kReset = "\033[0m";

}  // namespace

std::string report_to_json(const VerificationReport & report)
{
  return report_json(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport> & reports)
{
  if (reports.size() == 1) {
    return report_to_json(reports.front());
  }
  ordered arr = ordered::array();
  for (const auto & report : reports) {
    arr.push_back(report_json(report));
  }
  return arr.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport & report, bool color)
{
  std::ostringstream out;
  const char * verdict = report.pass ? "PASS" : "FAIL";
  out << "== stage " << to_string(report.stage) << " | scope "
      << (report.scope.empty() ? "<model>" : report.scope) << " | ";
  if (color) {
    out << (report.pass ? kGreen : kRed) << verdict << kReset;
  } else {
    out << verdict;
  }
  out << " ==\n";

  if (report.findings.empty()) {
    out << "  no findings\n";
    return out.str();
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"severity", "class", "subject", "expected", "observed"});
  for (const auto & f : report.findings) {
    rows.push_back(
      {to_string(f.severity), to_string(f.cls), f.subject, f.expected.value_or("-"),
        f.observed.value_or("-")});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto & row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << "  ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::string & cell = rows[r][c];
      const bool paint = color && r > 0 && c == 0;
      if (paint) {
        out << (cell == "error" ? kRed : kYellow) << cell << kReset;
      } else {
        out << cell;
      }
      if (c + 1 < rows[r].size()) {
        out << std::string(width[c] - cell.size() + 2, ' ');
      }
    }
    out << '\n';
  }
  std::size_t errors = 0;
  for (const auto & f : report.findings) {
    errors += f.severity == Severity::error ? 1 : 0;
  }
  out << "  " << errors << " error(s), " << report.findings.size() - errors << " warning(s)\n";
  return out.str();
}

}  // namespace meros_verify
