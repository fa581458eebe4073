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

#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "advopt/errors.hpp"

namespace oracle {

std::vector<Letters> all_words(const Sft& s, std::size_t length) {
  std::vector<Letters> out;
  const std::size_t n = s.size();
  Letters word(length, 0);
  while (true) {
    bool legal = true;
    for (std::size_t i = 1; i < length && legal; ++i) legal = s.allowed(word[i - 1], word[i]);
    if (legal) out.push_back(word);
    std::size_t pos = length;
    while (pos > 0 && word[pos - 1] + 1 == n) word[--pos] = 0;
    if (pos == 0) break;
    ++word[pos - 1];
  }
  return out;
}

std::vector<Letters> all_cyclic_words(const Sft& s, std::size_t length) {
  std::vector<Letters> out;
  for (auto& w : all_words(s, length)) {
    if (s.allowed(w.back(), w.front())) out.push_back(std::move(w));
  }
  return out;
}

IntPotential::IntPotential(const Potential& p) {
  mpz_class lcm = 1;
  const std::size_t nx = p.x_alphabet().size();
  const std::size_t ny = p.y_alphabet().size();
  for (LetterIndex u = 0; u < nx; ++u) {
    for (LetterIndex v = 0; v < ny; ++v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.at(u, v).get_den().get_mpz_t());
  }
  if (!lcm.fits_slong_p()) throw std::overflow_error("denominators too large for the oracle");
  scale = lcm.get_si();
  values.assign(nx, std::vector<std::int64_t>(ny));
  for (LetterIndex u = 0; u < nx; ++u) {
    for (LetterIndex v = 0; v < ny; ++v) {
      const Rational scaled = p.at(u, v) * Rational(lcm);
      if (!scaled.get_num().fits_slong_p()) throw std::overflow_error("weight too large for the oracle");
      values[u][v] = scaled.get_num().get_si();
    }
  }
}

Rational IntPotential::unscale(std::int64_t sum, std::int64_t length) const {
  Rational r(static_cast<long>(sum), static_cast<long>(scale * length));
  r.canonicalize();
  return r;
}

namespace {

std::int64_t score(const IntPotential& f, const Letters& x, const Letters& y, std::size_t y_offset = 0,
                   std::size_t y_period = 0) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const LetterIndex yl = y_period ? y[(y_offset + j) % y_period] : y[j];
    total += f.values[x[j]][yl];
  }
  return total;
}

}  // namespace

MinResult min_cost(const Sft& x, const Potential& p, const Letters& y) {
  const IntPotential f(p);
  std::optional<std::int64_t> best;
  Letters arg;
  for (const auto& w : all_words(x, y.size())) {
    const std::int64_t s = score(f, w, y);
    if (!best || s < *best) {
      best = s;
      arg = w;
    }
  }
  return {f.unscale(*best), arg};
}

std::map<std::pair<LetterIndex, LetterIndex>, Rational> h_table(const Sft& x, const Potential& p, const Letters& y) {
  const IntPotential f(p);
  std::map<std::pair<LetterIndex, LetterIndex>, std::int64_t> best;
  for (const auto& w : all_words(x, y.size())) {
    const std::int64_t s = score(f, w, y);
    auto [it, fresh] = best.emplace(std::make_pair(w.front(), w.back()), s);
    if (!fresh && s < it->second) it->second = s;
  }
  std::map<std::pair<LetterIndex, LetterIndex>, Rational> out;
  for (const auto& [key, s] : best) out.emplace(key, f.unscale(s));
  return out;
}

MaxMinResult r_k(const Sft& x, const Sft& y, const Potential& p, std::size_t k) {
  const IntPotential f(p);
  const auto xs = all_words(x, k);
  std::optional<std::int64_t> best;
  Letters arg;
  for (const auto& yw : all_words(y, k)) {
    std::int64_t inner = std::numeric_limits<std::int64_t>::max();
    for (const auto& xw : xs) inner = std::min(inner, score(f, xw, yw));
    if (!best || inner > *best) {
      best = inner;
      arg = yw;
    }
  }
  return {f.unscale(*best), arg};
}

std::uint64_t r_k_cost(const Sft& x, const Sft& y, std::size_t k) {
  return static_cast<std::uint64_t>(all_words(x, k).size()) * all_words(y, k).size();
}

namespace {

struct Best {
  bool found = false;
  Rational mean;
  std::vector<advopt::NodeIndex> cycle;

  void offer(const Rational& m, const std::vector<advopt::NodeIndex>& c, bool maximize) {
    const bool better = !found || (maximize ? m > mean : m < mean) ||
                        (m == mean && (c.size() < cycle.size() || (c.size() == cycle.size() && c < cycle)));
    if (better) {
      found = true;
      mean = m;
      cycle = c;
    }
  }
};

CycleResult extreme_cycle(const advopt::WeightedDigraph& g, bool maximize) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::pair<advopt::NodeIndex, const Rational*>>> adj(n);
  for (const auto& e : g.edges()) adj[e.from].emplace_back(e.to, &e.weight);
  Best best;
  std::vector<advopt::NodeIndex> path;
  std::vector<bool> on_path(n, false);
  // Depth-first listing of simple cycles whose smallest node is `s`.
  auto dfs = [&](auto&& self, advopt::NodeIndex s, advopt::NodeIndex v, const Rational& weight) -> void {
    for (const auto& [w, edge_weight] : adj[v]) {
      const Rational total = weight + *edge_weight;
      if (w == s) {
        best.offer(total / Rational(static_cast<unsigned long>(path.size())), path, maximize);
      } else if (w > s && !on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        self(self, s, w, total);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (advopt::NodeIndex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(dfs, s, s, Rational(0));
    on_path[s] = false;
  }
  if (!best.found) throw advopt::NoCycle("no cycle");
  return {best.mean, best.cycle};
}

}  // namespace

CycleResult min_mean_cycle(const advopt::WeightedDigraph& g) { return extreme_cycle(g, false); }
CycleResult max_mean_cycle(const advopt::WeightedDigraph& g) { return extreme_cycle(g, true); }

Rational psi(const Sft& x, const Potential& p, const Letters& orbit) {
  const IntPotential f(p);
  const std::size_t s0 = orbit.size();
  std::optional<Rational> best;
  for (std::size_t n = 1; n <= x.size(); ++n) {
    for (const auto& w : all_cyclic_words(x, s0 * n)) {
      const Rational mean = f.unscale(score(f, w, orbit, 0, s0), static_cast<std::int64_t>(w.size()));
      if (!best || mean < *best) best = mean;
    }
  }
  return *best;
}

Rational classical_max(const Sft& y, const std::vector<Rational>& weights) {
  std::optional<Rational> best;
  for (std::size_t len = 1; len <= y.size(); ++len) {
    for (const auto& w : all_cyclic_words(y, len)) {
      Rational total = 0;
      for (LetterIndex l : w) total += weights[l];
      const Rational mean = total / Rational(static_cast<unsigned long>(len));
      if (!best || mean > *best) best = mean;
    }
  }
  return *best;
}

std::optional<Improvement> best_improvement(const Sft& y, const Sft& x, const Potential& p, const Letters& base,
                                            const Rational& C) {
  const std::size_t len = base.size() - 2;
  const Letters inner(base.begin() + 1, base.end() - 1);
  const auto before = h_table(x, p, inner);
  std::optional<Improvement> best;
  for (const auto& w : all_words(y, len)) {
    if (!y.allowed(base.front(), w.front()) || !y.allowed(w.back(), base.back())) continue;
    const auto after = h_table(x, p, w);
    std::optional<Rational> least;
    for (const auto& [key, value] : before) {
      const Rational excess = after.at(key) - value;
      if (!least || excess < *least) least = excess;
    }
    const Rational margin = *least - C;
    if (margin > 0 && (!best || margin > best->margin)) best = Improvement{w, margin};
  }
  return best;
}

std::optional<std::size_t> transitivity(const Sft& s, std::size_t cap) {
  const std::size_t n = s.size();
  // reach[u] = letters reachable from u in exactly `step` steps.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (LetterIndex u = 0; u < n; ++u) reach[u][u] = true;
  for (std::size_t step = 1; step <= cap; ++step) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (LetterIndex u = 0; u < n; ++u) {
      for (LetterIndex v = 0; v < n; ++v) {
        if (!reach[u][v]) continue;
        for (LetterIndex w = 0; w < n; ++w) {
          if (s.allowed(v, w)) next[u][w] = true;
        }
      }
    }
    reach = std::move(next);
    bool full = true;
    for (const auto& row : reach) full = full && std::all_of(row.begin(), row.end(), [](bool b) { return b; });
    if (full) return step;
  }
  return std::nullopt;
}

Sft random_sft(std::mt19937_64& rng, std::size_t letters, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < letters; ++i) names.push_back(prefix + std::to_string(i));
  const advopt::Alphabet alphabet(names);
  std::bernoulli_distribution coin(0.6);
  while (true) {
    std::vector<std::pair<LetterIndex, LetterIndex>> edges;
    for (LetterIndex u = 0; u < letters; ++u) {
      for (LetterIndex v = 0; v < letters; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    try {
      return Sft::from_edges(alphabet, edges);
    } catch (const advopt::EmptyShiftError&) {
    }
  }
}

std::vector<Instance> corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> letters(1, 3);
  std::uniform_int_distribution<int> weight(-3, 3);
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Sft x = random_sft(rng, letters(rng), "a");
    Sft y = random_sft(rng, letters(rng), "b");
    std::vector<Rational> values;
    for (std::size_t j = 0; j < x.size() * y.size(); ++j) values.emplace_back(weight(rng));
    Potential f(x.alphabet(), y.alphabet(), std::move(values));
    out.push_back(Instance{"corpus#" + std::to_string(i), std::move(x), std::move(y), std::move(f)});
  }
  return out;
}

advopt::WeightedDigraph random_digraph(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nodes_dist(1, max_nodes);
  std::uniform_int_distribution<int> weight(-3, 3);
  while (true) {
    const std::size_t n = nodes_dist(rng);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_int_distribution<std::size_t> edge_count(1, std::min(max_edges, pairs.size()));
    pairs.resize(edge_count(rng));
    advopt::WeightedDigraph g(n);
    for (const auto& [u, v] : pairs) g.add_edge(u, v, Rational(weight(rng)));
    try {
      (void)extreme_cycle(g, false);
      return g;
    } catch (const advopt::NoCycle&) {
    }
  }
}

}  // namespace oracle
