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

#ifndef ADVOPT_MINPLUS_HPP
#define ADVOPT_MINPLUS_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "advopt/bracket.hpp"
#include "advopt/budget.hpp"
#include "advopt/potential.hpp"
#include "advopt/rational.hpp"
#include "advopt/sft.hpp"

namespace advopt {

/// Min-plus DP state: cheapest Birkhoff sum per terminal x-letter, +inf when
/// the letter is unreachable.
struct CostVector {
  std::vector<ExtRational> entries;

  ExtRational min() const;
  /// Entrywise >=.
  bool dominates(const CostVector& other) const;

  friend bool operator==(const CostVector&, const CostVector&) = default;
};

struct MinCostResult {
  Rational value;
  /// Lexicographically least minimizing x-word, aligned with the y-word.
  Word argmin;
  CostVector final_vector;
};

/// min over legal x-words of sum_j F(x(j), y(j)).
MinCostResult min_cost(const Sft& x, const Potential& p, const Word& y_word);

/// H_{a,b,v1,v2}(y) for every endpoint pair joinable by a legal x-word of the
/// word's length.
struct EndpointTable {
  std::map<std::pair<LetterIndex, LetterIndex>, Rational> entries;

  Rational min() const;
  Rational max() const;
  bool contains(LetterIndex v1, LetterIndex v2) const { return entries.count({v1, v2}) != 0; }
  const Rational& at(LetterIndex v1, LetterIndex v2) const { return entries.at({v1, v2}); }
};

EndpointTable h_table(const Sft& x, const Potential& p, const Word& y_word);

/// min_cost <= every H entry <= min_cost + 4 * d_x * |f|.
bool sandwich_check(const Sft& x, const Potential& p, const Word& y_word, std::size_t d_x);

struct RkOptions {
  /// Drop y-prefixes whose cost vector is dominated by a lexicographically
  /// earlier prefix ending in the same letter. Value-preserving.
  bool prune = true;
  Budget budget;
};

struct RkResult {
  std::size_t k = 0;
  Rational value;
  /// Lexicographically least maximizing y-word.
  Word argmax_y;
};

/// r_k = max over legal y-words of length k of min_cost. Throws
/// BudgetExceeded when the number of legal y-words exceeds the budget.
RkResult r_k(const Sft& x, const Sft& y, const Potential& p, std::size_t k, const RkOptions& options = {});
/// r_1 ... r_{k_max} in one sweep.
std::vector<RkResult> r_k_sequence(const Sft& x, const Sft& y, const Potential& p, std::size_t k_max,
                                   const RkOptions& options = {});

struct DeltaRow {
  std::size_t k;
  Rational r_k;
  /// (r_k + c) / k
  Rational bound_k;
  /// running minimum of bound_k
  Rational hi_k;
};

struct DeltaResult {
  Bracket bracket;
  std::vector<DeltaRow> rows;
  Rational gluing_constant;
  /// Set when r_{m+n} <= r_m + r_n + c failed and c was enlarged.
  bool degraded = false;
  std::size_t d_x = 0;
  std::size_t d_y = 0;
};

/// hi = min_k (r_k + 4 d_x |f|) / k, lo = periodic lower bound. Throws
/// NotTransitive, BudgetExceeded or InconsistencyError.
DeltaResult delta_bracket(const Sft& x, const Sft& y, const Potential& p, std::size_t k_max,
                          std::size_t orbit_period_max, const RkOptions& options = {});

}  // namespace advopt

#endif  // ADVOPT_MINPLUS_HPP
