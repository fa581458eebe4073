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

#include <random>

#include <nlohmann/json.hpp>

#include "advopt/errors.hpp"
#include "advopt/minplus.hpp"
#include "advopt/theta.hpp"
#include "oracles.hpp"

using namespace advopt;

namespace {

Sft full2() { return full_shift(Alphabet({"0", "1"})); }

struct Flagship {
  Sft x = golden_mean_shift();
  Sft y = full2();
  Potential f = hamming_preset(x.alphabet(), y.alphabet());
};

}  // namespace

TEST(Selector, OneLetterShiftIsConstant) {
  const Sft one = one_letter_shift();
  const Sft f2 = full2();
  const Potential g = Potential::lifted(one.alphabet(), f2.alphabet(), {Rational(1), Rational(-1)});
  const auto table = build_selector(one, f2, g, 1);
  EXPECT_EQ(table.D, 1u);
  EXPECT_EQ(table.R, 2u);
  ASSERT_EQ(table.size(), 32u);
  for (const auto& sel : table.selected) EXPECT_EQ(sel, std::vector<LetterIndex>(5, 0));
}

TEST(Selector, ConstantPotentialPicksLeastWord) {
  const Flagship fl;
  const Potential c = Potential::constant(fl.x.alphabet(), fl.y.alphabet(), Rational(2));
  const auto table = build_selector(fl.x, fl.y, c, 1);
  for (std::size_t key = 0; key < table.size(); ++key) {
    EXPECT_EQ(table.minimizer[key], std::vector<LetterIndex>(7, 0));
    EXPECT_EQ(table.minimum[key], Rational(14));
  }
}

TEST(Selector, OnesWindowGetsAlternatingMinimizer) {
  const Flagship fl;
  const auto table = build_selector(fl.x, fl.y, fl.f, 1);
  EXPECT_EQ(table.D, 2u);
  EXPECT_EQ(table.R, 3u);
  const std::vector<LetterIndex> ones(7, 1);
  const auto key = table.key(ones);
  ASSERT_TRUE(key.has_value());
  EXPECT_EQ(fl.x.render(table.minimizer[*key]), "1,0,1,0,1,0,1");
  EXPECT_EQ(table.minimum[*key], oracle::min_cost(fl.x, fl.f, ones).value);
  EXPECT_EQ(table.minimum[*key], Rational(3));
  const auto& sel = table.selected[*key];
  EXPECT_EQ(sel.front(), table.anchor);
  EXPECT_TRUE(fl.x.allowed(sel.back(), table.anchor));
  EXPECT_TRUE(fl.x.is_legal(sel));
}

TEST(Selector, StoredMinimaAreOptimal) {
  std::size_t checked = 0;
  for (const auto& inst : oracle::corpus(401, 40)) {
    if (!transitivity_constant(inst.x)) {
      EXPECT_THROW(build_selector(inst.x, inst.y, inst.f, 0), NotTransitive);
      continue;
    }
    const auto table = build_selector(inst.x, inst.y, inst.f, 1);
    for (std::size_t key = 0; key < table.size(); ++key) {
      const auto& block = table.windows.map.block(static_cast<LetterIndex>(key));
      const auto want = oracle::min_cost(inst.x, inst.f, block);
      ASSERT_EQ(table.minimum[key], want.value) << inst.name;
      ASSERT_EQ(table.minimizer[key], want.argmin) << inst.name;
      const auto& sel = table.selected[key];
      ASSERT_TRUE(inst.x.is_legal(sel));
      ASSERT_EQ(sel.front(), table.anchor);
      ASSERT_TRUE(inst.x.allowed(sel.back(), table.anchor));
      for (std::size_t j = table.D; j <= table.D + 2 * table.L; ++j) ASSERT_EQ(sel[j], table.minimizer[key][j]);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(EffectivePotential, ZeroAndConstant) {
  const Flagship fl;
  const auto zero = effective_potential(fl.x, fl.y, Potential::constant(fl.x.alphabet(), fl.y.alphabet(), 0), 1);
  EXPECT_EQ(zero.error_bound, Rational(0));
  for (const auto& v : zero.values) EXPECT_EQ(v, Rational(0));
  const auto c = effective_potential(fl.x, fl.y, Potential::constant(fl.x.alphabet(), fl.y.alphabet(), -3), 2);
  EXPECT_EQ(c.q, 9u);
  EXPECT_EQ(c.error_bound, Rational(8, 3));
  for (const auto& v : c.values) EXPECT_EQ(v, Rational(-3));
  const auto extra = effective_potential(fl.x, fl.y, fl.f, 1, Rational(1, 10));
  EXPECT_EQ(extra.error_bound, Rational(8, 7) + Rational(1, 10));
  EXPECT_THROW(effective_potential(fl.x, fl.y, fl.f, 1, Rational(-1)), std::invalid_argument);
}

TEST(EffectivePotential, ClassicalIsSlidingAverage) {
  const Sft one = one_letter_shift();
  const Sft gm = golden_mean_shift();
  const std::vector<Rational> w{Rational(2), Rational(-1, 2)};
  const auto g = effective_potential(one, gm, Potential::lifted(one.alphabet(), gm.alphabet(), w), 2);
  for (std::size_t key = 0; key < g.size(); ++key) {
    Rational sum = 0;
    for (auto letter : g.selector.windows.map.block(static_cast<LetterIndex>(key))) sum += w[letter];
    EXPECT_EQ(g.values[key], sum / Rational(static_cast<long>(g.q)));
  }
}

TEST(EffectivePotential, ExportsAsPotentialDocument) {
  const Flagship fl;
  const auto g = effective_potential(fl.x, fl.y, fl.f, 1);
  const auto doc = to_json(g);
  const Potential back = load_potential(doc, one_letter_shift().alphabet(), g.selector.windows.sft.alphabet());
  for (LetterIndex key = 0; key < g.size(); ++key) EXPECT_EQ(back.at(0, key), g.values[key]);
  EXPECT_EQ(doc["averaging_length"], 7);
}

TEST(EffectivePotential, ErrorBoundDecreasesInL) {
  std::size_t pairs = 0;
  for (const auto& inst : oracle::corpus(402, 60)) {
    if (!transitivity_constant(inst.x) || inst.f.sup_norm() == 0) continue;
    Rational previous;
    for (std::size_t L = 0; L <= 3; ++L) {
      Budget budget;
      if (count_words(inst.y, 2 * (L + *transitivity_constant(inst.x)) + 1, budget.max_words) > 20000) break;
      const Rational e = effective_potential(inst.x, inst.y, inst.f, L).error_bound;
      if (L > 0) {
        ASSERT_LT(e, previous) << inst.name;
        ++pairs;
      }
      previous = e;
    }
  }
  EXPECT_GE(pairs, 50u);
}

TEST(EffectivePotential, OrbitMeansTrackPsi) {
  std::size_t checked = 0;
  for (const auto& inst : oracle::corpus(403, 40)) {
    const auto d = transitivity_constant(inst.x);
    if (!d || count_words(inst.y, 2 * (1 + *d) + 1, 20000) > 20000) continue;
    const auto g = effective_potential(inst.x, inst.y, inst.f, 1);
    for (const auto& orbit : enumerate_periodic_orbits(inst.y, 4)) {
      const Rational gap = abs(orbit_mean(g, orbit) - psi_periodic(inst.x, inst.f, orbit).value);
      ASSERT_LE(gap, g.error_bound) << inst.name << " " << inst.y.render(orbit.cycle());
      ++checked;
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(EffectivePotential, BudgetIsEnforced) {
  const Flagship fl;
  Budget tiny;
  tiny.max_words = 16;
  EXPECT_THROW(effective_potential(fl.x, fl.y, fl.f, 1, 0, tiny), BudgetExceeded);
}

TEST(AlphaEstimate, ConstantPinsTheValue) {
  const Flagship fl;
  const Potential c = Potential::constant(fl.x.alphabet(), fl.y.alphabet(), Rational(5, 2));
  const auto delta = delta_bracket(fl.x, fl.y, c, 4, 2);
  const auto est = alpha_estimate(fl.x, fl.y, c, 1, delta.bracket);
  EXPECT_EQ(est.center, Rational(5, 2));
  EXPECT_EQ(est.bracket.lo, Rational(5, 2));
  EXPECT_EQ(est.bracket.hi, Rational(5, 2));
}

TEST(AlphaEstimate, ClassicalCenterIsExact) {
  const Sft one = one_letter_shift();
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> w(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const Sft y = oracle::random_sft(rng, 1 + trial % 3, "y");
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < y.size(); ++i) weights.emplace_back(w(rng));
    const Potential p = Potential::lifted(one.alphabet(), y.alphabet(), weights);
    for (std::size_t L = 0; L <= 2; ++L) {
      const auto est = alpha_estimate(one, y, p, L);
      ASSERT_EQ(est.center, classical_value(y, weights, Objective::maximize)) << trial;
      ASSERT_EQ(est.center, oracle::classical_max(y, weights)) << trial;
    }
  }
}

TEST(AlphaEstimate, FlagshipContainsOneHalf) {
  const Flagship fl;
  const auto delta = delta_bracket(fl.x, fl.y, fl.f, 12, 6);
  const auto est = alpha_estimate(fl.x, fl.y, fl.f, 4, delta.bracket);
  EXPECT_TRUE(est.bracket.contains(Rational(1, 2)));
  EXPECT_LE(abs(est.center - Rational(1, 2)), est.error_bound);
  EXPECT_EQ(est.q, 13u);
}

TEST(AlphaEstimate, EmptyIntersectionIsAnError) {
  const Flagship fl;
  Bracket far{Rational(10), Rational(11), {"test", {}}, {"test", {}}};
  EXPECT_THROW(alpha_estimate(fl.x, fl.y, fl.f, 1, far), InconsistencyError);
}
