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

#ifndef ADVOPT_GROUND_STATES_HPP
#define ADVOPT_GROUND_STATES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "advopt/budget.hpp"
#include "advopt/cycle.hpp"
#include "advopt/minplus.hpp"
#include "advopt/potential.hpp"
#include "advopt/rational.hpp"
#include "advopt/report.hpp"
#include "advopt/sft.hpp"

namespace advopt {

struct Interval {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::size_t length() const { return static_cast<std::size_t>(b - a + 1); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A replacement of y on [a, b] that raises every finite endpoint entry of
/// H by more than C. Both words cover [a-1, b+1].
struct ImprovementCertificate {
  Word base_word;
  Interval interval;
  Word improved_word;
  /// min over endpoint pairs of (H(improved) - H(base)) - C; positive.
  Rational margin;
};

/// Tries every legal replacement on [a, b] that keeps y(a-1) and y(b+1).
/// Returns the one with the largest margin (lexicographically least on
/// ties) or nothing when no replacement clears C.
/// Throws IntervalOutOfRange if `base` does not cover [a-1, b+1] or a > b,
/// std::invalid_argument if `base` is illegal.
std::optional<ImprovementCertificate> find_improvement(const Sft& y, const Sft& x, const Potential& p,
                                                       const Word& base, Interval interval, const Rational& C);

/// Same search, stopping at the first replacement that clears C.
bool has_improvement(const Sft& y, const Sft& x, const Potential& p, const Word& base, Interval interval,
                     const Rational& C);

/// Recomputes both endpoint tables from scratch and checks every field of
/// the certificate, including the reported margin.
bool validate(const ImprovementCertificate& certificate, const Sft& y, const Sft& x, const Potential& p,
              const Rational& C);

/// Margin of an explicit replacement, or nothing if `candidate` is not a
/// legal word agreeing with `base` off [a, b].
std::optional<Rational> improvement_margin(const Sft& y, const Sft& x, const Potential& p, const Word& base,
                                           const Word& candidate, Interval interval, const Rational& C);

enum class WindowStatus { certified, refuted };

struct WindowCertificate {
  PeriodicOrbit orbit;
  Rational C;
  std::size_t window = 0;
  WindowStatus status = WindowStatus::certified;
  /// Present exactly when refuted.
  std::optional<ImprovementCertificate> refutation;

  bool certified() const { return status == WindowStatus::certified; }
};

/// Checks every interval of length 1..W whose left end lies in [0, period).
/// Shorter intervals are tried first, then by starting coordinate. The orbit
/// must live in `y`. Throws std::invalid_argument if W == 0.
WindowCertificate certify_orbit(const PeriodicOrbit& orbit, const Sft& y, const Sft& x, const Potential& p,
                                const Rational& C, std::size_t W);

/// Decides whether `word` is forbidden in the ground-state shift by the
/// finite test used in forbidden_words. Windows already examined are
/// remembered across calls.
class ForbiddenWordTester {
 public:
  ForbiddenWordTester(const Sft& y, const Sft& x, const Potential& p, Rational C, std::size_t context,
                      Budget budget = {});

  bool is_forbidden(const std::vector<LetterIndex>& word);

 private:
  bool window_improvable(const std::vector<LetterIndex>& window);

  const Sft& y_;
  const Sft& x_;
  const Potential& p_;
  Rational C_;
  std::size_t context_;
  Budget budget_;
  std::vector<std::vector<LetterIndex>> extensions_;
  std::map<std::vector<LetterIndex>, bool> window_memo_;
  std::map<std::vector<LetterIndex>, bool> slice_memo_;
};

/// Length-n words w such that every extension of w by `context` legal
/// letters on each side has an improvable sub-interval. Sound, not
/// complete. Result is in lexicographic order, each word starting at 0.
/// Throws BudgetExceeded when the number of candidate words or extensions
/// exceeds the budget.
std::vector<Word> forbidden_words(const Sft& y, const Sft& x, const Potential& p, const Rational& C,
                                  std::size_t n, std::size_t context, const Budget& budget = {});

struct MaximizerCandidate {
  PeriodicOrbit orbit;
  PsiValue psi;
  WindowCertificate certificate;
};

/// Among orbits of period <= max_period certified at window W, the one with
/// the largest psi (first in orbit order on ties). Throws NotTransitive.
std::optional<MaximizerCandidate> periodic_maximizer_search(const Sft& x, const Sft& y, const Potential& p,
                                                            const Rational& C, std::size_t max_period,
                                                            std::size_t W);

/// Edge-shift example with a non-SFT ground-state shift.
struct HruskovaSystem {
  Sft x;
  Sft y;
  Potential f;
};

/// Weights keyed by edge name ("AB", "DD", ...). Missing keys keep the
/// built-in weight; unknown keys throw UnknownLetter.
HruskovaSystem hruskova_system(const std::map<std::string, Rational>& weight_overrides = {});

/// y_M restricted to [-1, M+3] and its rerouted twin y_M'.
Word hruskova_base_word(const Sft& y, std::size_t M);
Word hruskova_improved_word(const Sft& y, std::size_t M);

/// Runs all checks and returns the report. Throws ScenarioFailed (an
/// AssertionFailure) carrying the report if any check fails, and
/// std::invalid_argument for M outside [1, 8] or C outside [0, 1).
ScenarioReport hruskova_scenario(std::size_t M, const Rational& C,
                                 const std::map<std::string, Rational>& weight_overrides = {});

}  // namespace advopt

#endif  // ADVOPT_GROUND_STATES_HPP
