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


#include <gtest/gtest.h>

#include "json.hpp"
#include "meros_verify/finding.hpp"
#include "meros_verify/report.hpp"

using namespace meros_verify;

TEST(Finding, StageClassTable)
{
  EXPECT_TRUE(class_permitted(Stage::ssrve, FindingClass::MissingNode));
  EXPECT_TRUE(class_permitted(Stage::srve, FindingClass::TypeMismatch));
  EXPECT_TRUE(class_permitted(Stage::sources, FindingClass::MisplacedArtifact));
  EXPECT_TRUE(class_permitted(Stage::trace, FindingClass::ScenarioOrderViolation));
  EXPECT_TRUE(class_permitted(Stage::model, FindingClass::UnallocatedRequirement));
  EXPECT_FALSE(class_permitted(Stage::model, FindingClass::MissingNode));
  EXPECT_FALSE(class_permitted(Stage::trace, FindingClass::MissingPackage));
  EXPECT_FALSE(class_permitted(Stage::sources, FindingClass::UnexpectedEdge));
  EXPECT_THROW(make_finding(Stage::model, Severity::error, FindingClass::MissingEdge, "x"), std::logic_error);
}

TEST(Finding, NamesRoundTrip)
{
  for (int i = 0; i <= static_cast<int>(FindingClass::ScenarioOrderViolation); ++i) {
    const auto cls = static_cast<FindingClass>(i);
    EXPECT_EQ(parse_finding_class(to_string(cls)), cls);
  }
  for (int i = 0; i <= static_cast<int>(Stage::trace); ++i) {
    EXPECT_EQ(parse_stage(to_string(static_cast<Stage>(i))), static_cast<Stage>(i));
  }
  EXPECT_FALSE(parse_stage("bogus"));
}

TEST(Finding, ReportSortsAndPasses)
{
  const auto report = make_report(
    Stage::srve, "", {
      make_finding(Stage::srve, Severity::warning, FindingClass::UnexpectedNode, "/b"),
      make_finding(Stage::srve, Severity::error, FindingClass::MissingNode, "/z"),
      make_finding(Stage::srve, Severity::error, FindingClass::MissingNode, "/a"),
    });
  ASSERT_EQ(report.findings.size(), 3u);
  EXPECT_EQ(report.findings[0].subject, "/a");
  EXPECT_EQ(report.findings[1].subject, "/z");
  EXPECT_EQ(report.findings[2].subject, "/b");
  EXPECT_FALSE(report.pass);

  const auto warnings_only = make_report(
    Stage::ssrve, "S", {make_finding(Stage::ssrve, Severity::warning, FindingClass::UnexpectedNode, "/b")});
  EXPECT_TRUE(warnings_only.pass);
  EXPECT_TRUE(make_report(Stage::model, "", {}).pass);
}

TEST(Report, JsonSchema)
{
  const auto report = make_report(
    Stage::srve, "", {make_finding(Stage::srve, Severity::error, FindingClass::TypeMismatch, "/a pub /t", "x/msg/A", "x/msg/B"),
                      make_finding(Stage::srve, Severity::error, FindingClass::MissingNode, "/n")});
  const auto doc = nlohmann::ordered_json::parse(report_to_json(report));
  EXPECT_EQ(doc["stage"], "srve");
  EXPECT_EQ(doc["scope"], "");
  EXPECT_EQ(doc["pass"], false);
  ASSERT_EQ(doc["findings"].size(), 2u);
  const auto & first = doc["findings"][0];
  EXPECT_EQ(first["class"], "MissingNode");
  EXPECT_TRUE(first["expected"].is_null());
  EXPECT_TRUE(first["observed"].is_null());
  EXPECT_EQ(doc["findings"][1]["expected"], "x/msg/A");
  std::vector<std::string> keys;
  for (const auto & [k, v] : first.items()) {
    keys.push_back(k);
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"stage", "severity", "class", "subject", "expected", "observed"}));
}

TEST(Report, MultipleReportsAsArray)
{
  const auto a = make_report(Stage::model, "", {});
  const auto b = make_report(Stage::sources, "", {});
  EXPECT_TRUE(nlohmann::json::parse(reports_to_json({a, b})).is_array());
  EXPECT_TRUE(nlohmann::json::parse(reports_to_json({a})).is_object());
}

TEST(Report, TextBannerAndTable)
{
  const auto report = make_report(
    Stage::ssrve, "Obstacles", {make_finding(Stage::ssrve, Severity::error, FindingClass::MissingNode, "/board/x")});
  const std::string text = report_to_text(report);
  EXPECT_EQ(text.rfind("== stage ssrve | scope Obstacles | FAIL ==\n", 0), 0u);
  EXPECT_NE(text.find("MissingNode"), std::string::npos);
  EXPECT_NE(text.find("1 error(s), 0 warning(s)"), std::string::npos);
  EXPECT_EQ(text.find('\033'), std::string::npos);
  EXPECT_NE(report_to_text(report, true).find("\033[31m"), std::string::npos);
  EXPECT_NE(report_to_text(make_report(Stage::srve, "", {})).find("scope <model> | PASS"), std::string::npos);
}
