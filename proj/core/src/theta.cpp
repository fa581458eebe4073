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

#include "advopt/theta.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "advopt/errors.hpp"
#include "advopt/minplus.hpp"

namespace advopt {
namespace {

// Cheapest fill of window positions [from, to] (inclusive), lexicographically
// least on ties. The first letter is either `first` or any successor of
// `pred`; the last letter must be allowed before `succ`.
std::vector<LetterIndex> fill(const Sft& x, const Potential& p, const std::vector<LetterIndex>& y_window,
                              std::size_t from, std::size_t to, std::optional<LetterIndex> first,
                              std::optional<LetterIndex> pred, LetterIndex succ) {
  const std::size_t n = x.size();
  const std::size_t len = to - from + 1;
  std::vector<std::vector<ExtRational>> best(len, std::vector<ExtRational>(n, ExtRational::infinity()));
  for (LetterIndex u = 0; u < n; ++u) {
    if (x.allowed(u, succ)) best[len - 1][u] = p.at(u, y_window[to]);
  }
  for (std::size_t j = len - 1; j-- > 0;) {
    for (LetterIndex u = 0; u < n; ++u) {
      ExtRational tail = ExtRational::infinity();
      for (LetterIndex v : x.successors(u)) tail = min(tail, best[j + 1][v]);
      best[j][u] = tail + p.at(u, y_window[from + j]);
    }
  }
  auto admissible_first = [&](LetterIndex u) {
    return first ? u == *first : x.allowed(*pred, u);
  };
  ExtRational target = ExtRational::infinity();
  for (LetterIndex u = 0; u < n; ++u) {
    if (admissible_first(u)) target = min(target, best[0][u]);
  }
  if (!target.is_finite()) throw InconsistencyError("no legal anchor fill; transitivity constant is wrong");
  std::vector<LetterIndex> out;
  std::optional<LetterIndex> prev;
  for (std::size_t j = 0; j < len; ++j) {
    for (LetterIndex u = 0; u < n; ++u) {
      const bool ok = j == 0 ? admissible_first(u) : x.allowed(*prev, u);
      if (!ok || !(best[j][u] == target)) continue;
      out.push_back(u);
      prev = u;
      target = ExtRational(target.value() - p.at(u, y_window[from + j]));
      break;
    }
  }
  return out;
}

}  // namespace

SelectorTable build_selector(const Sft& x, const Sft& y, const Potential& p, std::size_t L, const Budget& budget) {
  p.require_compatible(x, y);
  const auto d = transitivity_constant(x);
  if (!d) throw NotTransitive("X is not transitive");
  const std::size_t D = *d;
  const std::size_t R = L + D;
  if (count_words(y, 2 * R + 1, budget.max_words) > budget.max_words) {
    throw BudgetExceeded("too many Y-windows of length " + std::to_string(2 * R + 1));
  }
  SelectorTable table{L, D, R, 0, recode(y, R), {}, {}, {}};
  const std::size_t count = table.windows.sft.size();
  table.minimizer.reserve(count);
  table.minimum.reserve(count);
  table.selected.reserve(count);
  for (LetterIndex key = 0; key < count; ++key) {
    const auto& block = table.windows.map.block(key);
    MinCostResult best = min_cost(x, p, Word{-static_cast<std::int64_t>(R), block});
    std::vector<LetterIndex> t = best.argmin.letters;
    std::vector<LetterIndex> anchored = t;
    const auto left = fill(x, p, block, 0, D - 1, table.anchor, std::nullopt, t[D]);
    const auto right = fill(x, p, block, D + 2 * L + 1, 2 * R, std::nullopt, t[D + 2 * L], table.anchor);
    std::copy(left.begin(), left.end(), anchored.begin());
    std::copy(right.begin(), right.end(), anchored.begin() + static_cast<std::ptrdiff_t>(D + 2 * L + 1));
    table.minimizer.push_back(std::move(t));
    table.minimum.push_back(std::move(best.value));
    table.selected.push_back(std::move(anchored));
  }
  return table;
}

const Rational& EffectivePotential::value(const std::vector<LetterIndex>& y_window) const {
  auto k = selector.key(y_window);
  if (!k) throw std::invalid_argument("not a legal window of length 2R+1");
  return values[*k];
}

EffectivePotential effective_potential(const Sft& x, const Sft& y, const Potential& p, std::size_t L,
                                       const Rational& extra_variation, const Budget& budget) {
  if (extra_variation < 0) throw std::invalid_argument("variation budget must be nonnegative");
  EffectivePotential g{build_selector(x, y, p, L, budget), 0, 0, {}, 0};
  g.window_radius = g.selector.R;
  g.q = 2 * g.window_radius + 1;
  const Rational q(static_cast<unsigned long>(g.q));
  g.values.reserve(g.selector.size());
  for (LetterIndex key = 0; key < g.selector.size(); ++key) {
    const auto& block = g.selector.windows.map.block(key);
    const auto& chosen = g.selector.selected[key];
    Rational sum = 0;
    for (std::size_t j = 0; j < block.size(); ++j) sum += p.at(chosen[j], block[j]);
    g.values.push_back(sum / q);
  }
  g.error_bound = 4 * Rational(static_cast<unsigned long>(g.selector.D)) * p.sup_norm() / q + extra_variation;
  return g;
}

Rational orbit_mean(const EffectivePotential& g, const PeriodicOrbit& orbit) {
  const auto r = static_cast<std::int64_t>(g.window_radius);
  const auto s = static_cast<std::int64_t>(orbit.period());
  Rational sum = 0;
  std::vector<LetterIndex> window(g.q);
  for (std::int64_t j = 0; j < s; ++j) {
    for (std::int64_t i = -r; i <= r; ++i) window[static_cast<std::size_t>(i + r)] = orbit.at(j + i);
    sum += g.value(window);
  }
  return sum / Rational(static_cast<unsigned long>(s));
}

nlohmann::json to_json(const EffectivePotential& g) {
  nlohmann::json row = nlohmann::json::array();
  for (const auto& v : g.values) row.push_back(to_string(v));
  return {{"x_letters", {"*"}},
          {"y_letters", g.selector.windows.sft.alphabet().letters()},
          {"values", nlohmann::json::array({row})},
          {"window_radius", g.window_radius},
          {"averaging_length", g.q},
          {"transitivity_constant", g.selector.D},
          {"error_bound", to_string(g.error_bound)}};
}

AlphaEstimate alpha_estimate(const EffectivePotential& g, const std::optional<Bracket>& known) {
  MeanCycle best = classical_cycle(g.selector.windows.sft, g.values, Objective::maximize);
  const std::vector<std::pair<std::string, std::string>> fields{
      {"window_radius", std::to_string(g.window_radius)},
      {"averaging_length", std::to_string(g.q)},
      {"center", to_string(best.mean)},
      {"error_bound", to_string(g.error_bound)}};
  Bracket own{best.mean - g.error_bound, best.mean + g.error_bound, Witness{"effective_potential", fields},
              Witness{"effective_potential", fields}};
  AlphaEstimate out{own, best.mean, g.error_bound, g.window_radius, g.q, std::move(best.cycle)};
  if (known) {
    auto both = intersect(own, *known);
    if (!both) {
      throw InconsistencyError("effective-potential bracket [" + to_string(own.lo) + ", " + to_string(own.hi) +
                               "] misses [" + to_string(known->lo) + ", " + to_string(known->hi) + "]");
    }
    out.bracket = *both;
  }
  return out;
}

AlphaEstimate alpha_estimate(const Sft& x, const Sft& y, const Potential& p, std::size_t L,
                             const std::optional<Bracket>& known, const Rational& extra_variation,
                             const Budget& budget) {
  return alpha_estimate(effective_potential(x, y, p, L, extra_variation, budget), known);
}

}  // namespace advopt
