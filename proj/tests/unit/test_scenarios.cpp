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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "advopt/cycle.hpp"
#include "advopt/errors.hpp"
#include "advopt/scenarios.hpp"
#include "oracles.hpp"

using namespace advopt;

namespace {

// Direct count for the closed-form pair: the k-step sum against x = -1 is
// the number of positive y-coordinates minus the number of negative ones.
Rational fiber_min_by_counting(std::int64_t k, std::int64_t y) {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  for (std::int64_t j = 0; j < k; ++j) {
    positive += (y + j > 0);
    negative += (y + j < 0);
  }
  const std::int64_t against_minus = positive - negative;  // sum of sgn(y) for x = -1
  const std::int64_t against_plus = negative - positive;   // sum of -sgn(y) for x = +1
  return Rational(std::min(against_minus, against_plus)) / Rational(k);
}

}  // namespace

TEST(Counterexample, FiberMinimum) {
  for (std::int64_t k = 1; k <= 12; ++k) {
    EXPECT_EQ(counterexample_fiber_min(k, 0, 1), Rational(-1));
    EXPECT_EQ(counterexample_fiber_min(k, 0, -1), Rational(-1));
    for (std::int64_t y = -15; y <= 15; ++y) {
      EXPECT_EQ(counterexample_fiber_min(k, y), -abs(fiber_min_by_counting(k, y))) << k << " " << y;
    }
  }
  EXPECT_EQ(counterexample_max_min(1, 5), Rational(0));
}

TEST(Counterexample, EnvelopeAndClosedForm) {
  for (std::int64_t k = 1; k <= 30; ++k) {
    const Rational v = counterexample_max_min(k, 30);
    EXPECT_LE(v, Rational(0));
    EXPECT_GE(v, Rational(-1, k));
    EXPECT_EQ(v, k % 2 == 1 ? Rational(0) : Rational(-1, k)) << k;
    EXPECT_EQ(counterexample_fiber_min(k, -(k / 2)), v);
  }
}

TEST(Counterexample, CheckPasses) {
  const auto report = counterexample_check(10, 10);
  EXPECT_TRUE(report.overall());
  EXPECT_EQ(report.details["delta_estimate"], "0");
  EXPECT_TRUE(counterexample_check(50, 50).overall());
  EXPECT_THROW(counterexample_check(1, 5), std::invalid_argument);
  EXPECT_THROW(counterexample_check(10, 9), std::invalid_argument);
}

TEST(CoveringRadius, Presets) {
  const Sft gm = golden_mean_shift();
  const Sft f2 = full_shift(Alphabet({"0", "1"}));
  const auto same = covering_radius(gm, gm, 12, 4);
  EXPECT_EQ(same.lo, Rational(0));
  EXPECT_LE(same.hi, Rational(2, 3));
  EXPECT_TRUE(covering_radius(gm, f2, 12, 4).contains(Rational(1, 2)));
  const auto covers = covering_radius(f2, gm, 12, 4);
  EXPECT_EQ(covers.lo, Rational(0));
  EXPECT_EQ(covers.hi, Rational(1, 3));
  EXPECT_FALSE(covering_radius_detail(f2, gm, 12, 4).degraded);
}

TEST(Classical, ScenarioMatchesCycleEnumeration) {
  const Sft gm = golden_mean_shift();
  const std::vector<Rational> w{Rational(-1), Rational(2)};
  const auto report = classical_scenario("gm", gm, w, 6, 1);
  EXPECT_TRUE(report.overall());
  EXPECT_EQ(report.details["classical_value"], to_string(oracle::classical_max(gm, w)));
}

TEST(RunAll, DefaultConfigPasses) {
  const auto reports = run_all(default_run_config());
  EXPECT_GE(reports.size(), 14u);
  for (const auto& r : reports) EXPECT_TRUE(r.overall()) << r.name << "\n" << to_text(r);
  EXPECT_EQ(to_json(reports).dump(), to_json(run_all(default_run_config())).dump());
}

TEST(RunAll, TamperedWeightIsIsolated) {
  auto config = default_run_config();
  config["hruskova"]["weights"] = {{"BD", "0"}};
  const auto reports = run_all(config);
  std::size_t failed = 0;
  for (const auto& r : reports) {
    const bool is_edge = r.name.rfind("hruskova", 0) == 0;
    if (is_edge) {
      failed += !r.overall();
    } else {
      EXPECT_TRUE(r.overall()) << r.name;
    }
  }
  EXPECT_GT(failed, 0u);
}

TEST(RunAll, ClassicalOnly) {
  nlohmann::json config = {{"classical",
                            {{{"name", "a"}, {"y", "full_shift_2"}, {"weights", {"0", "1"}}, {"k_max", 6}, {"L", 1}},
                             {{"name", "b"}, {"y", "golden_mean"}, {"weights", {"0", "1"}}, {"k_max", 6}, {"L", 2}},
                             {{"name", "c"}, {"y", "one_letter"}, {"weights", {"-7/2"}}, {"k_max", 4}, {"L", 0}}}}};
  const auto reports = run_all(config);
  ASSERT_EQ(reports.size(), 3u);
  const char* expected[] = {"1", "1/2", "-7/2"};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(reports[i].overall()) << to_text(reports[i]);
    EXPECT_EQ(reports[i].details["classical_value"], expected[i]);
  }
}

TEST(RunAll, RejectsBadConfigs) {
  EXPECT_THROW(run_all(nlohmann::json::array()), SchemaError);
  EXPECT_THROW(run_all({{"unknown", 1}}), SchemaError);
  EXPECT_THROW(run_all({{"counterexample", {{"k_max", -3}}}}), SchemaError);
  EXPECT_THROW(run_all({{"classical", {{{"y", "hexagon"}, {"weights", {"1"}}}}}}), SchemaError);
}

TEST(Report, SerializesExactly) {
  ScenarioReport r;
  r.name = "demo";
  r.add_equal("third", Rational(1, 3), Rational(1, 3));
  r.add_true("flag", false);
  EXPECT_FALSE(r.overall());
  const auto j = to_json(r);
  EXPECT_EQ(j["name"], "demo");
  EXPECT_EQ(j["checks"][0]["expected"], "1/3");
  EXPECT_EQ(j["overall"], false);
  EXPECT_NE(to_text(r).find("FAIL"), std::string::npos);
}
