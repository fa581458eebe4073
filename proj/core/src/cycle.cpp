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

#include "advopt/cycle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>

#include "advopt/errors.hpp"

namespace advopt {

WeightedDigraph::WeightedDigraph(std::size_t node_count, std::vector<std::string> labels)
    : node_count_(node_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != node_count_) {
    throw std::invalid_argument("one label per node expected");
  }
}

std::string WeightedDigraph::label(NodeIndex node) const {
  return labels_.empty() ? std::to_string(node) : labels_.at(node);
}

void WeightedDigraph::add_edge(NodeIndex from, NodeIndex to, Rational weight) {
  if (from >= node_count_ || to >= node_count_) throw std::invalid_argument("edge endpoint out of range");
  edges_.push_back(WeightedEdge{from, to, std::move(weight)});
}

namespace {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

// Adjacency in compressed form over a subset of edges.
struct Csr {
  std::vector<std::size_t> offset;
  std::vector<NodeIndex> target;
  std::vector<std::size_t> edge;  // index into the edge list the CSR was built from
};

template <class EdgeRange, class From, class To>
Csr build_csr(std::size_t n, const EdgeRange& edges, From from, To to) {
  Csr csr;
  csr.offset.assign(n + 1, 0);
  for (const auto& e : edges) ++csr.offset[from(e) + 1];
  for (std::size_t i = 0; i < n; ++i) csr.offset[i + 1] += csr.offset[i];
  csr.target.resize(edges.size());
  csr.edge.resize(edges.size());
  std::vector<std::size_t> fill(csr.offset.begin(), csr.offset.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t slot = fill[from(edges[i])]++;
    csr.target[slot] = to(edges[i]);
    csr.edge[slot] = i;
  }
  return csr;
}

// Iterative Tarjan; returns the component id of every node.
std::vector<std::size_t> strongly_connected(std::size_t n, const Csr& out) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeIndex> stack;
  std::vector<std::pair<NodeIndex, std::size_t>> call;
  std::size_t counter = 0;
  std::size_t components = 0;
  for (NodeIndex root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, out.offset[root]);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < out.offset[v + 1]) {
        const NodeIndex w = out.target[next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, out.offset[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        NodeIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const NodeIndex finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  return comp;
}

// Nodes whose component carries a cycle (size > 1 or a self-loop).
std::vector<bool> cyclic_nodes(std::size_t n, const Csr& out, const std::vector<std::size_t>& comp) {
  std::vector<std::size_t> comp_size(n, 0);
  for (NodeIndex v = 0; v < n; ++v) ++comp_size[comp[v]];
  std::vector<bool> cyclic(n, false);
  for (NodeIndex v = 0; v < n; ++v) {
    if (comp_size[comp[v]] > 1) {
      cyclic[v] = true;
      continue;
    }
    for (std::size_t i = out.offset[v]; i < out.offset[v + 1]; ++i) {
      if (out.target[i] == v) cyclic[v] = true;
    }
  }
  return cyclic;
}

struct IntEdge {
  NodeIndex from;
  NodeIndex to;
};

// Karp over integer weights with O(n) memory. Returns lambda = num/den and
// the shortest-walk potentials for reduced weights w*den - num.
template <class Int, class Wide>
struct KarpResult {
  Wide num;
  Wide den;
  std::vector<Wide> potential;
};

template <class Int, class Wide>
KarpResult<Int, Wide> karp(std::size_t n, const std::vector<IntEdge>& edges, const std::vector<Int>& weight) {
  const Csr in = build_csr(n, edges, [](const IntEdge& e) { return e.to; }, [](const IntEdge& e) { return e.from; });

  auto step = [&](const std::vector<Int>& prev, std::vector<Int>& cur) {
    for (NodeIndex v = 0; v < n; ++v) {
      std::size_t i = in.offset[v];
      Int best = prev[in.target[i]] + weight[in.edge[i]];
      for (++i; i < in.offset[v + 1]; ++i) {
        Int candidate = prev[in.target[i]] + weight[in.edge[i]];
        if (candidate < best) best = candidate;
      }
      cur[v] = best;
    }
  };

  // Every node has an in-edge inside its component, so every D_k is finite.
  std::vector<Int> prev(n, Int(0)), cur(n, Int(0));
  for (std::size_t k = 1; k <= n; ++k) {
    step(prev, cur);
    prev.swap(cur);
  }
  const std::vector<Int> walk_n = prev;

  std::vector<Wide> best_num(n), best_den(n, Wide(0));
  std::fill(prev.begin(), prev.end(), Int(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      step(prev, cur);
      prev.swap(cur);
    }
    const Wide den = static_cast<Wide>(static_cast<long>(n - k));
    for (NodeIndex v = 0; v < n; ++v) {
      const Wide num = static_cast<Wide>(walk_n[v] - prev[v]);
      if (best_den[v] == 0 || num * best_den[v] > best_num[v] * den) {
        best_num[v] = num;
        best_den[v] = den;
      }
    }
  }
  Wide lam_num = best_num[0];
  Wide lam_den = best_den[0];
  for (NodeIndex v = 1; v < n; ++v) {
    if (best_num[v] * lam_den < lam_num * best_den[v]) {
      lam_num = best_num[v];
      lam_den = best_den[v];
    }
  }

  std::vector<Wide> potential(n);
  std::fill(prev.begin(), prev.end(), Int(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      step(prev, cur);
      prev.swap(cur);
    }
    const Wide shift = lam_num * static_cast<Wide>(static_cast<long>(k));
    for (NodeIndex v = 0; v < n; ++v) {
      Wide value = static_cast<Wide>(prev[v]) * lam_den - shift;
      if (k == 0 || value < potential[v]) potential[v] = value;
    }
  }
  return {lam_num, lam_den, std::move(potential)};
}

template <class Int, class Wide>
std::vector<bool> tight_edges(const KarpResult<Int, Wide>& r, const std::vector<IntEdge>& edges,
                              const std::vector<Int>& weight) {
  std::vector<bool> tight(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Wide reduced = static_cast<Wide>(weight[i]) * r.den - r.num;
    tight[i] = r.potential[edges[i].from] + reduced == r.potential[edges[i].to];
  }
  return tight;
}

// Shortest cycle of the tight subgraph, lexicographically least from its
// smallest node.
std::vector<NodeIndex> shortest_tight_cycle(std::size_t n, const std::vector<IntEdge>& edges,
                                            const std::vector<bool>& tight) {
  std::vector<IntEdge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (tight[i]) kept.push_back(edges[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const IntEdge& a, const IntEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  const Csr out = build_csr(n, kept, [](const IntEdge& e) { return e.from; }, [](const IntEdge& e) { return e.to; });
  const Csr in = build_csr(n, kept, [](const IntEdge& e) { return e.to; }, [](const IntEdge& e) { return e.from; });
  const auto comp = strongly_connected(n, out);
  const auto cyclic = cyclic_nodes(n, out, comp);

  constexpr std::size_t far = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, far);
  std::vector<NodeIndex> touched;
  std::deque<NodeIndex> queue;

  auto bfs = [&](NodeIndex s, const Csr& adj, std::size_t limit) {
    for (NodeIndex v : touched) dist[v] = far;
    touched.clear();
    queue.clear();
    dist[s] = 0;
    touched.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
      const NodeIndex v = queue.front();
      queue.pop_front();
      if (dist[v] >= limit) continue;
      for (std::size_t i = adj.offset[v]; i < adj.offset[v + 1]; ++i) {
        const NodeIndex w = adj.target[i];
        if (w < s || comp[w] != comp[s] || dist[w] != far) continue;
        dist[w] = dist[v] + 1;
        touched.push_back(w);
        queue.push_back(w);
      }
    }
  };

  std::size_t best_length = far;
  NodeIndex best_start = 0;
  for (NodeIndex s = 0; s < n && best_length > 1; ++s) {
    if (!cyclic[s]) continue;
    bfs(s, out, best_length == far ? far : best_length - 1);
    std::size_t length = far;
    for (std::size_t i = in.offset[s]; i < in.offset[s + 1]; ++i) {
      const NodeIndex u = in.target[i];
      if (u == s) {
        length = 1;
      } else if (u > s && dist[u] != far) {
        length = std::min(length, dist[u] + 1);
      }
    }
    if (length < best_length) {
      best_length = length;
      best_start = s;
    }
  }
  if (best_length == far) throw std::logic_error("optimal mean without a tight cycle");

  // Distances back to the start, then greedy least successors.
  bfs(best_start, in, far);
  std::vector<NodeIndex> cycle{best_start};
  NodeIndex current = best_start;
  for (std::size_t i = 0; i + 1 < best_length; ++i) {
    const std::size_t remaining = best_length - 1 - i;
    NodeIndex chosen = far;
    for (std::size_t e = out.offset[current]; e < out.offset[current + 1]; ++e) {
      const NodeIndex w = out.target[e];
      if (w >= best_start && comp[w] == comp[best_start] && dist[w] == remaining) {
        chosen = w;
        break;
      }
    }
    if (chosen == far) throw std::logic_error("tight cycle reconstruction failed");
    cycle.push_back(chosen);
    current = chosen;
  }
  return cycle;
}

MeanCycle min_mean_cycle_impl(const WeightedDigraph& graph) {
  const std::size_t total = graph.node_count();
  const auto& all = graph.edges();
  const Csr out = build_csr(total, all, [](const WeightedEdge& e) { return e.from; },
                            [](const WeightedEdge& e) { return e.to; });
  const auto comp = strongly_connected(total, out);
  const auto cyclic = cyclic_nodes(total, out, comp);

  std::vector<NodeIndex> compact(total, std::numeric_limits<NodeIndex>::max());
  std::vector<NodeIndex> original;
  for (NodeIndex v = 0; v < total; ++v) {
    if (cyclic[v]) {
      compact[v] = original.size();
      original.push_back(v);
    }
  }
  if (original.empty()) throw NoCycle("graph has no directed cycle");
  const std::size_t n = original.size();

  std::vector<IntEdge> edges;
  std::vector<const Rational*> weights;
  for (const auto& e : all) {
    if (cyclic[e.from] && cyclic[e.to] && comp[e.from] == comp[e.to]) {
      edges.push_back(IntEdge{compact[e.from], compact[e.to]});
      weights.push_back(&e.weight);
    }
  }

  mpz_class scale = 1;
  for (const Rational* w : weights) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w->get_den().get_mpz_t());
  std::vector<mpz_class> scaled;
  scaled.reserve(weights.size());
  mpz_class max_abs = 0;
  for (const Rational* w : weights) {
    scaled.push_back(w->get_num() * (scale / w->get_den()));
    const mpz_class a = ::abs(scaled.back());
    if (a > max_abs) max_abs = a;
  }

  Rational mean;
  std::vector<NodeIndex> cycle;
  const mpz_class limit = mpz_class(1) << 60;
  if (max_abs * mpz_class(static_cast<unsigned long>(n + 1)) < limit) {
    std::vector<std::int64_t> w64;
    w64.reserve(scaled.size());
    for (const auto& w : scaled) w64.push_back(w.get_si());
    const auto r = karp<std::int64_t, Int128>(n, edges, w64);
    auto to_mpz = [](Int128 v) {
      const bool neg = v < 0;
      UInt128 u = neg ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
      mpz_class hi = static_cast<unsigned long>(u >> 64);
      mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
      return neg ? mpz_class(-out) : out;
    };
    mean = Rational(to_mpz(r.num), to_mpz(r.den) * scale);
    cycle = shortest_tight_cycle(n, edges, tight_edges(r, edges, w64));
  } else {
    const auto r = karp<mpz_class, mpz_class>(n, edges, scaled);
    mean = Rational(r.num, r.den * scale);
    cycle = shortest_tight_cycle(n, edges, tight_edges(r, edges, scaled));
  }
  mean.canonicalize();
  for (auto& v : cycle) v = original[v];
  return MeanCycle{std::move(mean), std::move(cycle)};
}

}  // namespace

MeanCycle min_mean_cycle(const WeightedDigraph& graph) { return min_mean_cycle_impl(graph); }

MeanCycle max_mean_cycle(const WeightedDigraph& graph) {
  WeightedDigraph negated(graph.node_count());
  for (const auto& e : graph.edges()) negated.add_edge(e.from, e.to, -e.weight);
  MeanCycle result = min_mean_cycle_impl(negated);
  result.mean = -result.mean;
  return result;
}

WeightedDigraph layered_graph(const Sft& x, const Potential& p, const PeriodicOrbit& orbit) {
  if (!(p.x_alphabet() == x.alphabet())) throw std::invalid_argument("potential does not match the x-shift");
  const std::size_t letters = x.size();
  const std::size_t period = orbit.period();
  for (LetterIndex y : orbit.cycle()) {
    if (y >= p.y_alphabet().size()) throw std::invalid_argument("orbit letter outside the potential");
  }
  WeightedDigraph graph(letters * period);
  for (std::size_t j = 0; j < period; ++j) {
    const LetterIndex y = orbit.cycle()[j];
    const std::size_t next = (j + 1) % period;
    for (LetterIndex u = 0; u < letters; ++u) {
      for (LetterIndex v : x.successors(u)) graph.add_edge(j * letters + u, next * letters + v, p.at(u, y));
    }
  }
  return graph;
}

PsiValue psi_periodic(const Sft& x, const Potential& p, const PeriodicOrbit& orbit) {
  MeanCycle best = min_mean_cycle(layered_graph(x, p, orbit));
  std::vector<LayeredNode> witness;
  witness.reserve(best.cycle.size());
  for (NodeIndex node : best.cycle) {
    witness.push_back(LayeredNode{static_cast<LetterIndex>(node % x.size()), node / x.size()});
  }
  return PsiValue{orbit, std::move(best.mean), std::move(witness)};
}

AlphaPerResult alpha_per_lower(const Sft& x, const Sft& y, const Potential& p, std::size_t max_period) {
  p.require_compatible(x, y);
  std::vector<PsiValue> orbits;
  for (const auto& orbit : enumerate_periodic_orbits(y, max_period)) orbits.push_back(psi_periodic(x, p, orbit));
  std::size_t best = 0;
  for (std::size_t i = 1; i < orbits.size(); ++i) {
    if (orbits[i].value > orbits[best].value) best = i;
  }
  PsiValue winner = orbits[best];
  Rational value = winner.value;
  return AlphaPerResult{std::move(value), std::move(winner), std::move(orbits)};
}

MeanCycle classical_cycle(const Sft& y, const std::vector<Rational>& weights, Objective mode) {
  if (weights.size() != y.size()) throw std::invalid_argument("one weight per letter expected");
  WeightedDigraph graph(y.size(), y.alphabet().letters());
  for (LetterIndex u = 0; u < y.size(); ++u) {
    for (LetterIndex v : y.successors(u)) graph.add_edge(u, v, weights[u]);
  }
  return mode == Objective::maximize ? max_mean_cycle(graph) : min_mean_cycle(graph);
}

Rational classical_value(const Sft& y, const std::vector<Rational>& weights, Objective mode) {
  return classical_cycle(y, weights, mode).mean;
}

}  // namespace advopt
