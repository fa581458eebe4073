/*
 * Copyright 2026 The advopt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "advopt/report.hpp"

#include <algorithm>

namespace advopt {

bool ScenarioReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check& ScenarioReport::add(std::string description, std::string expected, std::string actual, bool pass) {
  checks.push_back(Check{std::move(description), std::move(expected), std::move(actual), pass});
  return checks.back();
}

Check& ScenarioReport::add_equal(std::string description, const Rational& expected, const Rational& actual) {
  return add(std::move(description), to_string(expected), to_string(actual), expected == actual);
}

Check& ScenarioReport::add_true(std::string description, bool actual) {
  return add(std::move(description), "true", actual ? "true" : "false", actual);
}

namespace {

std::string failure_message(const ScenarioReport& report) {
  std::string message = "scenario " + report.name + " failed:";
  for (const auto& check : report.checks) {
    if (!check.pass) message += " [" + check.description + ": expected " + check.expected + ", got " + check.actual + "]";
  }
  return message;
}

}  // namespace

ScenarioFailed::ScenarioFailed(ScenarioReport report)
    : AssertionFailure(failure_message(report)), report_(std::move(report)) {}

nlohmann::json to_json(const ScenarioReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"description", c.description}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return {{"name", report.name}, {"overall", report.overall()}, {"checks", checks}, {"details", report.details}};
}

std::string to_text(const ScenarioReport& report) {
  std::string out = (report.overall() ? "PASS " : "FAIL ") + report.name + "\n";
  for (const auto& c : report.checks) {
    out += std::string("  [") + (c.pass ? "ok" : "FAILED") + "] " + c.description + ": expected " + c.expected +
           ", actual " + c.actual + "\n";
  }
  return out;
}

}  // namespace advopt
