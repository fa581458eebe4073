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

#ifndef ADVOPT_THETA_HPP
#define ADVOPT_THETA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "advopt/bracket.hpp"
#include "advopt/budget.hpp"
#include "advopt/cycle.hpp"
#include "advopt/potential.hpp"
#include "advopt/rational.hpp"
#include "advopt/sft.hpp"

namespace advopt {

/// Per-window choice of fiber word. Keys are the legal Y-words of length
/// 2R+1, indexed by the letters of `windows.sft` (a recoding of Y with
/// window R, so keys are in lexicographic order).
struct SelectorTable {
  std::size_t L = 0;
  std::size_t D = 0;
  std::size_t R = 0;
  LetterIndex anchor = 0;
  Recoded windows;
  /// Lexicographically least minimizer of the x-sum against the window.
  std::vector<std::vector<LetterIndex>> minimizer;
  std::vector<Rational> minimum;
  /// Minimizer with both ends re-routed through the anchor; agrees with the
  /// minimizer on the central 2L+1 positions.
  std::vector<std::vector<LetterIndex>> selected;

  std::size_t size() const { return selected.size(); }
  std::optional<LetterIndex> key(const std::vector<LetterIndex>& y_window) const {
    return windows.map.block_letter(y_window);
  }
};

SelectorTable build_selector(const Sft& x, const Sft& y, const Potential& p, std::size_t L,
                             const Budget& budget = {});

struct EffectivePotential {
  SelectorTable selector;
  std::size_t window_radius = 0;
  /// Averaging length, 2R+1.
  std::size_t q = 0;
  /// g(B), aligned with selector keys.
  std::vector<Rational> values;
  Rational error_bound;

  std::size_t size() const { return values.size(); }
  const Rational& value(const std::vector<LetterIndex>& y_window) const;
};

/// `extra_variation` is added to the error bound untouched.
EffectivePotential effective_potential(const Sft& x, const Sft& y, const Potential& p, std::size_t L,
                                       const Rational& extra_variation = 0, const Budget& budget = {});

/// Mean of g along a periodic Y-orbit.
Rational orbit_mean(const EffectivePotential& g, const PeriodicOrbit& orbit);

/// Exports g as a potential document over a one-letter X and the recoded Y.
nlohmann::json to_json(const EffectivePotential& g);

struct AlphaEstimate {
  Bracket bracket;
  Rational center;
  Rational error_bound;
  std::size_t window_radius = 0;
  std::size_t q = 0;
  /// Optimal cycle in the recoded Y, as block letters.
  std::vector<NodeIndex> cycle;
};

/// [v - E, v + E] where v is the max cycle mean of g, intersected with
/// `known` when given. Throws InconsistencyError on an empty intersection.
AlphaEstimate alpha_estimate(const Sft& x, const Sft& y, const Potential& p, std::size_t L,
                             const std::optional<Bracket>& known = std::nullopt,
                             const Rational& extra_variation = 0, const Budget& budget = {});
AlphaEstimate alpha_estimate(const EffectivePotential& g, const std::optional<Bracket>& known = std::nullopt);

}  // namespace advopt

#endif  // ADVOPT_THETA_HPP
