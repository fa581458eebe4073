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

#ifndef ADVOPT_CYCLE_HPP
#define ADVOPT_CYCLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "advopt/potential.hpp"
#include "advopt/rational.hpp"
#include "advopt/sft.hpp"

namespace advopt {

using NodeIndex = std::size_t;

struct WeightedEdge {
  NodeIndex from;
  NodeIndex to;
  Rational weight;
};

/// Finite digraph with exact rational edge weights. Parallel edges and
/// self-loops are allowed.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(std::size_t node_count, std::vector<std::string> labels = {});

  std::size_t node_count() const { return node_count_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  /// Empty when the graph was built without labels.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(NodeIndex node) const;

  void add_edge(NodeIndex from, NodeIndex to, Rational weight);

 private:
  std::size_t node_count_;
  std::vector<std::string> labels_;
  std::vector<WeightedEdge> edges_;
};

/// Optimal cycle mean with a witness. The witness is the shortest optimal
/// cycle, ties broken by the lexicographically least node sequence written
/// from its smallest node.
struct MeanCycle {
  Rational mean;
  std::vector<NodeIndex> cycle;
};

/// Karp's algorithm in exact arithmetic. Throws NoCycle on acyclic graphs.
MeanCycle min_mean_cycle(const WeightedDigraph& graph);
MeanCycle max_mean_cycle(const WeightedDigraph& graph);

/// Node of the layered graph used for periodic orbits: x-letter and phase.
struct LayeredNode {
  LetterIndex letter;
  std::size_t phase;

  friend bool operator==(const LayeredNode&, const LayeredNode&) = default;
};

struct PsiValue {
  PeriodicOrbit orbit;
  Rational value;
  std::vector<LayeredNode> witness_cycle;
};

/// Layered graph on (x-letter, phase mod s0) with edge weight F(u, y0(j)).
WeightedDigraph layered_graph(const Sft& x, const Potential& p, const PeriodicOrbit& orbit);

/// Minimum of the integral of f over liftings of the periodic measure
/// carried by `orbit`: the min mean cycle of the layered graph.
PsiValue psi_periodic(const Sft& x, const Potential& p, const PeriodicOrbit& orbit);

struct AlphaPerResult {
  Rational value;
  PsiValue best;
  /// One entry per enumerated orbit, in enumeration order.
  std::vector<PsiValue> orbits;
};

/// Max of psi_periodic over primitive y-orbits of period <= max_period. Ties
/// go to the first orbit in (period, word) order.
AlphaPerResult alpha_per_lower(const Sft& x, const Sft& y, const Potential& p, std::size_t max_period);

enum class Objective { maximize, minimize };

/// Classical ergodic optimum of a node-weighted shift: the extreme cycle mean
/// of the transition graph with edge weight taken from the source letter.
MeanCycle classical_cycle(const Sft& y, const std::vector<Rational>& weights, Objective mode);
Rational classical_value(const Sft& y, const std::vector<Rational>& weights, Objective mode);

}  // namespace advopt

#endif  // ADVOPT_CYCLE_HPP
