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

#include <algorithm>
#include <random>

#include "advopt/cycle.hpp"
#include "advopt/errors.hpp"
#include "oracles.hpp"

using namespace advopt;

namespace {

struct NamedEdge {
  const char* name;
  int weight;
};

// Vertex graph of the four-state edge-weight example.
WeightedDigraph edge_example(const std::string& nodes) {
  static const NamedEdge kEdges[] = {{"AA", 0},  {"AB", -1}, {"AC", -1}, {"BA", -1}, {"BB", 0},  {"BD", -3},
                                     {"CA", -1}, {"CC", 0},  {"CD", -2}, {"DB", -3}, {"DC", -2}, {"DD", 0}};
  std::vector<std::string> labels;
  for (char c : nodes) labels.emplace_back(1, c);
  WeightedDigraph g(labels.size(), labels);
  for (const auto& e : kEdges) {
    const auto from = nodes.find(e.name[0]);
    const auto to = nodes.find(e.name[1]);
    if (from == std::string::npos || to == std::string::npos) continue;
    g.add_edge(from, to, Rational(e.weight));
  }
  return g;
}

Sft full2() { return full_shift(Alphabet({"0", "1"})); }

}  // namespace

TEST(MinMeanCycle, SelfLoop) {
  WeightedDigraph g(1);
  g.add_edge(0, 0, Rational(7, 3));
  const auto r = min_mean_cycle(g);
  EXPECT_EQ(r.mean, Rational(7, 3));
  EXPECT_EQ(r.cycle, std::vector<NodeIndex>{0});
  EXPECT_EQ(max_mean_cycle(g).mean, Rational(7, 3));
}

TEST(MinMeanCycle, TwoCycleAveragesWeights) {
  WeightedDigraph g(2);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(1, 0, Rational(3));
  const auto r = min_mean_cycle(g);
  EXPECT_EQ(r.mean, Rational(2));
  EXPECT_EQ(r.cycle, (std::vector<NodeIndex>{0, 1}));
  g.add_edge(0, 0, Rational(0));
  EXPECT_EQ(max_mean_cycle(g).mean, Rational(2));
  EXPECT_EQ(min_mean_cycle(g).mean, Rational(0));
}

TEST(MinMeanCycle, EdgeExampleSubgraphs) {
  const auto ab = min_mean_cycle(edge_example("AB"));
  EXPECT_EQ(ab.mean, Rational(-1));
  EXPECT_EQ(ab.cycle, (std::vector<NodeIndex>{0, 1}));
  EXPECT_EQ(max_mean_cycle(edge_example("ABCD")).mean, Rational(0));
  EXPECT_EQ(min_mean_cycle(edge_example("ABCD")).mean, oracle::min_mean_cycle(edge_example("ABCD")).mean);
}

TEST(MinMeanCycle, AcyclicThrows) {
  WeightedDigraph g(3);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(1, 2, Rational(1));
  EXPECT_THROW(min_mean_cycle(g), NoCycle);
  EXPECT_THROW(max_mean_cycle(WeightedDigraph(2)), NoCycle);
}

TEST(MinMeanCycle, HandlesParallelEdgesAndNonIntegerWeights) {
  WeightedDigraph g(2);
  g.add_edge(0, 1, Rational(1, 3));
  g.add_edge(0, 1, Rational(-1, 2));
  g.add_edge(1, 0, Rational(0));
  EXPECT_EQ(min_mean_cycle(g).mean, Rational(-1, 4));
  EXPECT_EQ(max_mean_cycle(g).mean, Rational(1, 6));
}

TEST(MinMeanCycle, MatchesSimpleCycleEnumeration) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = oracle::random_digraph(rng, 6, 12);
    const auto got_min = min_mean_cycle(g);
    const auto want_min = oracle::min_mean_cycle(g);
    ASSERT_EQ(got_min.mean, want_min.mean) << trial;
    ASSERT_EQ(got_min.cycle, want_min.cycle) << trial;
    const auto got_max = max_mean_cycle(g);
    const auto want_max = oracle::max_mean_cycle(g);
    ASSERT_EQ(got_max.mean, want_max.mean) << trial;
    ASSERT_EQ(got_max.cycle, want_max.cycle) << trial;
  }
}

TEST(Psi, Examples) {
  const Sft gm = golden_mean_shift();
  const Sft f2 = full2();
  const auto ones = PeriodicOrbit::from_cycle(f2, {1});
  const Potential h = hamming_preset(gm.alphabet(), f2.alphabet());
  const auto value = psi_periodic(gm, h, ones);
  EXPECT_EQ(value.value, Rational(1, 2));
  EXPECT_EQ(value.value, oracle::psi(gm, h, ones.cycle()));
  ASSERT_EQ(value.witness_cycle.size(), 2u);

  const Potential c = Potential::constant(gm.alphabet(), f2.alphabet(), Rational(4, 5));
  for (const auto& orbit : enumerate_periodic_orbits(f2, 3)) {
    EXPECT_EQ(psi_periodic(gm, c, orbit).value, Rational(4, 5));
    EXPECT_EQ(psi_periodic(f2, hamming_preset(f2.alphabet()), orbit).value, Rational(0));
  }
}

TEST(Psi, WitnessMeanEqualsValue) {
  for (const auto& inst : oracle::corpus(201, 40)) {
    for (const auto& orbit : enumerate_periodic_orbits(inst.y, 3)) {
      const auto v = psi_periodic(inst.x, inst.f, orbit);
      Rational total = 0;
      for (const auto& node : v.witness_cycle) total += inst.f.at(node.letter, orbit.cycle()[node.phase]);
      ASSERT_EQ(total / Rational(static_cast<long>(v.witness_cycle.size())), v.value) << inst.name;
    }
  }
}

TEST(Psi, MatchesCyclicWordEnumeration) {
  for (const auto& inst : oracle::corpus(202, 60)) {
    for (const auto& orbit : enumerate_periodic_orbits(inst.y, 3)) {
      ASSERT_EQ(psi_periodic(inst.x, inst.f, orbit).value, oracle::psi(inst.x, inst.f, orbit.cycle()))
          << inst.name << " " << inst.y.render(orbit.cycle());
    }
  }
}

TEST(Psi, RotationAndPowersDoNotMatter) {
  for (const auto& inst : oracle::corpus(203, 40)) {
    for (const auto& orbit : enumerate_periodic_orbits(inst.y, 4)) {
      const Rational base = psi_periodic(inst.x, inst.f, orbit).value;
      auto word = orbit.cycle();
      for (std::size_t r = 1; r < word.size(); ++r) {
        std::rotate(word.begin(), word.begin() + 1, word.end());
        // from_cycle canonicalizes the rotation, so compare against the
        // enumeration evaluated on the rotated word itself.
        ASSERT_EQ(oracle::psi(inst.x, inst.f, word), base) << inst.name;
      }
      if (orbit.period() <= 2) {
        auto doubled = orbit.cycle();
        doubled.insert(doubled.end(), orbit.cycle().begin(), orbit.cycle().end());
        ASSERT_EQ(oracle::psi(inst.x, inst.f, doubled), base) << inst.name;
      }
    }
  }
}

TEST(Psi, BoundedBelowByFiniteWordAverages) {
  for (const auto& inst : oracle::corpus(204, 40)) {
    for (const auto& orbit : enumerate_periodic_orbits(inst.y, 3)) {
      const Rational value = psi_periodic(inst.x, inst.f, orbit).value;
      const std::size_t s0 = orbit.period();
      for (std::size_t n = 1; n <= 3; ++n) {
        Rational least;
        bool first = true;
        for (const auto& xw : oracle::all_words(inst.x, s0 * n)) {
          Rational sum = 0;
          for (std::size_t j = 0; j < xw.size(); ++j) sum += inst.f.at(xw[j], orbit.cycle()[j % s0]);
          if (first || sum < least) least = sum;
          first = false;
        }
        ASSERT_GE(value, least / Rational(static_cast<long>(s0 * n))) << inst.name;
      }
    }
  }
}

TEST(AlphaPer, Examples) {
  const Sft gm = golden_mean_shift();
  const Sft f2 = full2();
  const auto r = alpha_per_lower(gm, f2, hamming_preset(gm.alphabet(), f2.alphabet()), 2);
  EXPECT_EQ(r.value, Rational(1, 2));
  EXPECT_EQ(f2.render(r.best.orbit.cycle()), "1");
  ASSERT_EQ(r.orbits.size(), 3u);
  EXPECT_EQ(r.orbits[0].value, Rational(0));
  EXPECT_LE(r.orbits[2].value, Rational(1, 2));
  EXPECT_EQ(alpha_per_lower(gm, gm, hamming_preset(gm.alphabet()), 3).value, Rational(0));
  EXPECT_EQ(alpha_per_lower(gm, f2, Potential::constant(gm.alphabet(), f2.alphabet(), Rational(-1)), 3).value,
            Rational(-1));
}

TEST(AlphaPer, MonotoneInPeriod) {
  for (const auto& inst : oracle::corpus(205, 50)) {
    Rational previous;
    for (std::size_t p = 1; p <= 5; ++p) {
      const Rational v = alpha_per_lower(inst.x, inst.y, inst.f, p).value;
      if (p > 1) ASSERT_GE(v, previous) << inst.name;
      previous = v;
    }
  }
}

TEST(Classical, Examples) {
  const Sft one = one_letter_shift();
  EXPECT_EQ(classical_value(one, {Rational(-9, 2)}, Objective::maximize), Rational(-9, 2));
  const Sft gm = golden_mean_shift();
  EXPECT_EQ(classical_value(gm, {Rational(0), Rational(1)}, Objective::maximize), Rational(1, 2));
  EXPECT_EQ(classical_value(gm, {Rational(0), Rational(1)}, Objective::minimize), Rational(0));
  const Sft f2 = full2();
  EXPECT_EQ(classical_value(f2, {Rational(0), Rational(1)}, Objective::maximize), Rational(1));
  EXPECT_EQ(classical_cycle(f2, {Rational(0), Rational(1)}, Objective::maximize).cycle, std::vector<NodeIndex>{1});
}

TEST(Classical, MatchesCyclicWordEnumeration) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> w(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Sft y = oracle::random_sft(rng, 1 + trial % 4, "y");
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < y.size(); ++i) weights.emplace_back(w(rng));
    ASSERT_EQ(classical_value(y, weights, Objective::maximize), oracle::classical_max(y, weights)) << trial;
  }
}
