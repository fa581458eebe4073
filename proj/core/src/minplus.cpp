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

#include "advopt/minplus.hpp"

#include <stdexcept>
#include <string>

#include "advopt/cycle.hpp"
#include "advopt/errors.hpp"

namespace advopt {

ExtRational CostVector::min() const {
  ExtRational best = ExtRational::infinity();
  for (const auto& e : entries) best = advopt::min(best, e);
  return best;
}

bool CostVector::dominates(const CostVector& other) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < other.entries[i]) return false;
  }
  return true;
}

Rational EndpointTable::min() const {
  if (entries.empty()) throw std::logic_error("empty endpoint table");
  Rational best = entries.begin()->second;
  for (const auto& [pair, value] : entries) {
    if (value < best) best = value;
  }
  return best;
}

Rational EndpointTable::max() const {
  if (entries.empty()) throw std::logic_error("empty endpoint table");
  Rational best = entries.begin()->second;
  for (const auto& [pair, value] : entries) {
    if (value > best) best = value;
  }
  return best;
}

namespace {

void check_inputs(const Sft& x, const Potential& p, const Word& y_word) {
  if (!(p.x_alphabet() == x.alphabet())) throw std::invalid_argument("potential does not match the x-shift");
  if (y_word.letters.empty()) throw std::invalid_argument("y-word must be nonempty");
  for (LetterIndex y : y_word.letters) {
    if (y >= p.y_alphabet().size()) throw std::invalid_argument("y-word letter outside the potential");
  }
}

// One min-plus step: next[v] = min_{u -> v} cost[u] + F(v, y).
void advance(const Sft& x, const Potential& p, LetterIndex y, const std::vector<ExtRational>& cost,
             std::vector<ExtRational>& next) {
  next.assign(x.size(), ExtRational::infinity());
  for (LetterIndex v = 0; v < x.size(); ++v) {
    ExtRational best = ExtRational::infinity();
    for (LetterIndex u : x.predecessors(v)) best = min(best, cost[u]);
    if (best.is_finite()) next[v] = best + p.at(v, y);
  }
}

std::vector<ExtRational> forward(const Sft& x, const Potential& p, const Word& y_word,
                                 std::vector<ExtRational> initial) {
  std::vector<ExtRational> next;
  for (std::size_t j = 1; j < y_word.size(); ++j) {
    advance(x, p, y_word.letters[j], initial, next);
    initial.swap(next);
  }
  return initial;
}

}  // namespace

MinCostResult min_cost(const Sft& x, const Potential& p, const Word& y_word) {
  check_inputs(x, p, y_word);
  const std::size_t k = y_word.size();
  const std::size_t n = x.size();

  // suffix[j][u]: cheapest sum over positions j..k-1 with x(j) = u
  std::vector<std::vector<Rational>> suffix(k, std::vector<Rational>(n));
  for (LetterIndex u = 0; u < n; ++u) suffix[k - 1][u] = p.at(u, y_word.letters[k - 1]);
  for (std::size_t j = k - 1; j-- > 0;) {
    for (LetterIndex u = 0; u < n; ++u) {
      const auto& succ = x.successors(u);
      Rational best = suffix[j + 1][succ.front()];
      for (LetterIndex v : succ) {
        if (suffix[j + 1][v] < best) best = suffix[j + 1][v];
      }
      suffix[j][u] = best + p.at(u, y_word.letters[j]);
    }
  }

  Word argmin{y_word.start, {}};
  LetterIndex current = 0;
  for (LetterIndex u = 1; u < n; ++u) {
    if (suffix[0][u] < suffix[0][current]) current = u;
  }
  const Rational value = suffix[0][current];
  argmin.letters.push_back(current);
  for (std::size_t j = 1; j < k; ++j) {
    const Rational target = suffix[j - 1][current] - p.at(current, y_word.letters[j - 1]);
    for (LetterIndex v : x.successors(current)) {
      if (suffix[j][v] == target) {
        current = v;
        break;
      }
    }
    argmin.letters.push_back(current);
  }

  std::vector<ExtRational> start;
  start.reserve(n);
  for (LetterIndex u = 0; u < n; ++u) start.emplace_back(p.at(u, y_word.letters[0]));
  return MinCostResult{value, std::move(argmin), CostVector{forward(x, p, y_word, std::move(start))}};
}

EndpointTable h_table(const Sft& x, const Potential& p, const Word& y_word) {
  check_inputs(x, p, y_word);
  EndpointTable table;
  for (LetterIndex v1 = 0; v1 < x.size(); ++v1) {
    std::vector<ExtRational> start(x.size(), ExtRational::infinity());
    start[v1] = p.at(v1, y_word.letters[0]);
    const auto last = forward(x, p, y_word, std::move(start));
    for (LetterIndex v2 = 0; v2 < x.size(); ++v2) {
      if (last[v2].is_finite()) table.entries.emplace(std::make_pair(v1, v2), last[v2].value());
    }
  }
  return table;
}

bool sandwich_check(const Sft& x, const Potential& p, const Word& y_word, std::size_t d_x) {
  const Rational low = min_cost(x, p, y_word).value;
  const Rational high = low + 4 * Rational(static_cast<unsigned long>(d_x)) * p.sup_norm();
  for (const auto& [pair, value] : h_table(x, p, y_word).entries) {
    if (value < low || value > high) return false;
  }
  return true;
}

namespace {

struct Prefix {
  std::vector<LetterIndex> word;
  CostVector cost;
};

// Keeps `candidate` unless an already kept prefix with the same last letter
// dominates it. Kept prefixes are lexicographically earlier.
void keep_unless_dominated(std::vector<Prefix>& level, std::vector<std::vector<std::size_t>>& buckets,
                           Prefix candidate, bool prune) {
  auto& bucket = buckets[candidate.word.back()];
  if (prune) {
    for (std::size_t index : bucket) {
      if (level[index].cost.dominates(candidate.cost)) return;
    }
  }
  bucket.push_back(level.size());
  level.push_back(std::move(candidate));
}

RkResult best_of(const std::vector<Prefix>& level, std::size_t k) {
  std::size_t best = 0;
  ExtRational best_value = level[0].cost.min();
  for (std::size_t i = 1; i < level.size(); ++i) {
    ExtRational value = level[i].cost.min();
    if (value > best_value) {
      best = i;
      best_value = value;
    }
  }
  return RkResult{k, best_value.value(), Word{0, level[best].word}};
}

}  // namespace

std::vector<RkResult> r_k_sequence(const Sft& x, const Sft& y, const Potential& p, std::size_t k_max,
                                   const RkOptions& options) {
  p.require_compatible(x, y);
  if (k_max < 1) throw std::invalid_argument("k must be at least 1");
  const std::uint64_t cap = options.budget.max_words;
  const std::uint64_t count = count_words(y, k_max, cap);
  if (count > cap) {
    throw BudgetExceeded("more than " + std::to_string(cap) + " legal y-words of length " + std::to_string(k_max));
  }

  std::vector<RkResult> results;
  std::vector<Prefix> level;
  std::vector<std::vector<std::size_t>> buckets(y.size());
  for (LetterIndex b = 0; b < y.size(); ++b) {
    Prefix prefix{{b}, {}};
    for (LetterIndex u = 0; u < x.size(); ++u) prefix.cost.entries.emplace_back(p.at(u, b));
    keep_unless_dominated(level, buckets, std::move(prefix), options.prune);
  }
  results.push_back(best_of(level, 1));

  std::vector<ExtRational> next;
  for (std::size_t k = 2; k <= k_max; ++k) {
    std::vector<Prefix> grown;
    for (auto& bucket : buckets) bucket.clear();
    for (const auto& prefix : level) {
      for (LetterIndex b : y.successors(prefix.word.back())) {
        advance(x, p, b, prefix.cost.entries, next);
        Prefix child{prefix.word, CostVector{next}};
        child.word.push_back(b);
        keep_unless_dominated(grown, buckets, std::move(child), options.prune);
      }
    }
    level.swap(grown);
    results.push_back(best_of(level, k));
  }
  return results;
}

RkResult r_k(const Sft& x, const Sft& y, const Potential& p, std::size_t k, const RkOptions& options) {
  return r_k_sequence(x, y, p, k, options).back();
}

DeltaResult delta_bracket(const Sft& x, const Sft& y, const Potential& p, std::size_t k_max,
                          std::size_t orbit_period_max, const RkOptions& options) {
  p.require_compatible(x, y);
  const auto d_x = transitivity_constant(x);
  const auto d_y = transitivity_constant(y);
  if (!d_x) throw NotTransitive("x-shift is not certified transitive");
  if (!d_y) throw NotTransitive("y-shift is not certified transitive");

  DeltaResult result;
  result.d_x = *d_x;
  result.d_y = *d_y;
  result.gluing_constant = 4 * Rational(static_cast<unsigned long>(*d_x)) * p.sup_norm();

  const auto sequence = r_k_sequence(x, y, p, k_max, options);
  // r_{m+n} <= r_m + r_n + c must hold before c may be used in the bound.
  for (std::size_t total = 2; total <= k_max; ++total) {
    for (std::size_t m = 1; m < total; ++m) {
      const Rational excess = sequence[total - 1].value - sequence[m - 1].value - sequence[total - m - 1].value;
      if (excess > result.gluing_constant) {
        result.gluing_constant = excess;
        result.degraded = true;
      }
    }
  }

  std::size_t best_k = 0;
  for (const auto& rk : sequence) {
    const Rational bound = (rk.value + result.gluing_constant) / Rational(static_cast<unsigned long>(rk.k));
    if (result.rows.empty() || bound < result.rows.back().hi_k) best_k = rk.k;
    const Rational hi = result.rows.empty() ? bound : std::min(bound, result.rows.back().hi_k);
    result.rows.push_back(DeltaRow{rk.k, rk.value, bound, hi});
  }

  const auto& best_row = result.rows[best_k - 1];
  result.bracket.hi = best_row.hi_k;
  result.bracket.hi_witness = Witness{"subadditive_rk",
                                      {{"k", std::to_string(best_k)},
                                       {"r_k", to_string(best_row.r_k)},
                                       {"argmax_y", y.render(sequence[best_k - 1].argmax_y)},
                                       {"gluing_constant", to_string(result.gluing_constant)}}};

  // Every Birkhoff average is at most the largest entry of F.
  Rational largest = p.at(0, 0);
  for (LetterIndex u = 0; u < x.size(); ++u) {
    for (LetterIndex v = 0; v < y.size(); ++v) largest = std::max(largest, p.at(u, v));
  }
  if (largest < result.bracket.hi) {
    result.bracket.hi = largest;
    result.bracket.hi_witness = Witness{"potential_max", {{"max_entry", to_string(largest)}}};
  }

  const auto lower = alpha_per_lower(x, y, p, orbit_period_max);
  result.bracket.lo = lower.value;
  result.bracket.lo_witness = Witness{"periodic_orbit",
                                      {{"orbit", y.render(lower.best.orbit.cycle())},
                                       {"period", std::to_string(lower.best.orbit.period())},
                                       {"psi", to_string(lower.value)}}};
  if (result.bracket.lo > result.bracket.hi) {
    throw InconsistencyError("periodic lower bound " + to_string(result.bracket.lo) + " exceeds upper bound " +
                             to_string(result.bracket.hi));
  }
  return result;
}

}  // namespace advopt
