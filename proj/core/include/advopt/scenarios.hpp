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

#ifndef ADVOPT_SCENARIOS_HPP
#define ADVOPT_SCENARIOS_HPP

#include <cstddef>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "advopt/bracket.hpp"
#include "advopt/minplus.hpp"
#include "advopt/report.hpp"
#include "advopt/sft.hpp"

namespace advopt {

/// min over x of the k-step average for the closed-form pair
/// X = {-1, +1} (fixed points), Y = integers plus two fixed points at
/// infinity (y -> y + 1), f(x, y) = -sgn(x y). `y` is ignored when
/// `infinity` is nonzero (+1 or -1).
Rational counterexample_fiber_min(std::int64_t k, std::int64_t y, int infinity = 0);

/// max over y in [-truncation, truncation] and both infinities.
Rational counterexample_max_min(std::int64_t k, std::int64_t truncation);

/// Throws ScenarioFailed when a check fails, std::invalid_argument unless
/// k_max >= 2 and truncation >= k_max.
ScenarioReport counterexample_check(std::size_t k_max, std::size_t truncation);

/// delta bracket for the Hamming potential (letters compared by name).
Bracket covering_radius(const Sft& x, const Sft& y, std::size_t k_max, std::size_t pmax,
                        const RkOptions& options = {});
DeltaResult covering_radius_detail(const Sft& x, const Sft& y, std::size_t k_max, std::size_t pmax,
                                   const RkOptions& options = {});

/// Classical case: X the one-letter shift and f(*, y) = g(y). Compares the
/// periodic lower bound, the delta bracket, the effective potential and the
/// max cycle mean of g. Throws ScenarioFailed on mismatch.
ScenarioReport classical_scenario(const std::string& name, const Sft& y, const std::vector<Rational>& weights,
                                  std::size_t k_max, std::size_t L);

/// Default configuration for run_all.
nlohmann::json default_run_config();

/// Runs the scenarios named in `config`. A scenario that fails a check is
/// reported as failed and does not stop the others; other errors propagate.
std::vector<ScenarioReport> run_all(const nlohmann::json& config);

nlohmann::json to_json(const std::vector<ScenarioReport>& reports);

}  // namespace advopt

#endif  // ADVOPT_SCENARIOS_HPP
