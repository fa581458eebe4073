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

#ifndef ADVOPT_REPORT_HPP
#define ADVOPT_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "advopt/errors.hpp"
#include "advopt/rational.hpp"

namespace advopt {

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Outcome of a self-checking scenario.
struct ScenarioReport {
  std::string name;
  std::vector<Check> checks;
  /// Exact supporting values (rationals as strings).
  nlohmann::json details = nlohmann::json::object();

  bool overall() const;
  Check& add(std::string description, std::string expected, std::string actual, bool pass);
  Check& add_equal(std::string description, const Rational& expected, const Rational& actual);
  Check& add_true(std::string description, bool actual);
};

/// Raised by scenario runners when a check fails; carries the full report.
class ScenarioFailed : public AssertionFailure {
 public:
  explicit ScenarioFailed(ScenarioReport report);
  const ScenarioReport& report() const { return report_; }

 private:
  ScenarioReport report_;
};

nlohmann::json to_json(const ScenarioReport& report);
std::string to_text(const ScenarioReport& report);

}  // namespace advopt

#endif  // ADVOPT_REPORT_HPP
