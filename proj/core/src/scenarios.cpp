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

#include "advopt/scenarios.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "advopt/cycle.hpp"
#include "advopt/errors.hpp"
#include "advopt/ground_states.hpp"
#include "advopt/potential.hpp"
#include "advopt/theta.hpp"

namespace advopt {
namespace {

Rational frac(std::int64_t num, std::int64_t den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// |[lo, hi] ∩ [from, to]| for integers.
std::int64_t overlap(std::int64_t lo, std::int64_t hi, std::int64_t from, std::int64_t to) {
  return std::max<std::int64_t>(0, std::min(hi, to) - std::max(lo, from) + 1);
}

}  // namespace

Rational counterexample_fiber_min(std::int64_t k, std::int64_t y, int infinity) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (infinity != 0) return -1;
  const std::int64_t last = y + k - 1;
  const std::int64_t negatives = overlap(y, last, std::numeric_limits<std::int64_t>::min() / 2, -1);
  const std::int64_t positives = overlap(y, last, 1, std::numeric_limits<std::int64_t>::max() / 2);
  // x = +1 gives (negatives - positives) / k and x = -1 the opposite.
  const std::int64_t gap = positives > negatives ? positives - negatives : negatives - positives;
  return frac(-gap, k);
}

Rational counterexample_max_min(std::int64_t k, std::int64_t truncation) {
  Rational best = counterexample_fiber_min(k, 0, 1);
  best = std::max(best, counterexample_fiber_min(k, 0, -1));
  for (std::int64_t y = -truncation; y <= truncation; ++y) best = std::max(best, counterexample_fiber_min(k, y));
  return best;
}

ScenarioReport counterexample_check(std::size_t k_max, std::size_t truncation) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  if (truncation < k_max) throw std::invalid_argument("truncation must be at least k_max");
  const auto kmax = static_cast<std::int64_t>(k_max);
  const auto trunc = static_cast<std::int64_t>(truncation);

  ScenarioReport report;
  report.name = "counterexample(k_max=" + std::to_string(k_max) + ",truncation=" + std::to_string(truncation) + ")";
  report.details["truncation_note"] =
      "for k <= k_max the maximizing y lies in [-k, 0] or at infinity, so truncation >= k_max loses nothing";

  bool infinity_ok = true;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    infinity_ok = infinity_ok && counterexample_fiber_min(k, 0, 1) == -1 && counterexample_fiber_min(k, 0, -1) == -1;
  }
  report.add_true("min_x A_k f(x, +inf) = min_x A_k f(x, -inf) = -1 for k <= k_max", infinity_ok);

  report.add_equal("k = 1: max_y min_x A_1 f", 0, counterexample_max_min(1, trunc));

  nlohmann::json sequence = nlohmann::json::array();
  bool envelope_ok = true;
  bool witness_ok = true;
  bool closed_form_ok = true;
  Rational tail_max = -1;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const Rational value = counterexample_max_min(k, trunc);
    const Rational floor = frac(-1, k);
    const Rational witness = counterexample_fiber_min(k, -(k / 2));
    envelope_ok = envelope_ok && floor <= value && value <= 0;
    witness_ok = witness_ok && witness >= floor && witness == value;
    closed_form_ok = closed_form_ok && value == (k % 2 == 1 ? Rational(0) : floor);
    if (2 * k >= kmax) tail_max = std::max(tail_max, value);
    sequence.push_back({{"k", k}, {"max_min", to_string(value)}, {"decimal", to_decimal(value)}});
  }
  report.details["max_min_sequence"] = sequence;
  report.details["decimal_note"] = "decimal renderings are non-authoritative";
  report.add_true("-1/k <= max_y min_x A_k f <= 0 for all k <= k_max", envelope_ok);
  report.add_true("y = -floor(k/2) attains the maximum, which is >= -1/k", witness_ok);
  report.add_true("maximum is 0 for odd k and -1/k for even k", closed_form_ok);

  // Invariant ergodic measures of Y sit on the two fixed points at infinity;
  // those of X are the two fixed points. Each product gives f = -1.
  Rational alpha;
  bool first = true;
  nlohmann::json products = nlohmann::json::array();
  for (int y_inf : {1, -1}) {
    Rational lifted_min;
    bool first_x = true;
    for (int x : {1, -1}) {
      const Rational value = -(x * y_inf > 0 ? 1 : -1);
      products.push_back({{"x", x}, {"y", y_inf > 0 ? "+inf" : "-inf"}, {"integral", to_string(value)}});
      if (first_x || value < lifted_min) lifted_min = value;
      first_x = false;
    }
    if (first || lifted_min > alpha) alpha = lifted_min;
    first = false;
  }
  report.details["product_measures"] = products;
  report.add_equal("alpha from the four product ergodic measures", -1, alpha);

  report.details["delta_estimate"] = to_string(tail_max);
  report.add_equal("delta estimate (max over k in [k_max/2, k_max])", 0, tail_max);
  report.add_equal("gap delta - alpha", 1, tail_max - alpha);

  if (!report.overall()) throw ScenarioFailed(report);
  return report;
}

DeltaResult covering_radius_detail(const Sft& x, const Sft& y, std::size_t k_max, std::size_t pmax,
                                   const RkOptions& options) {
  return delta_bracket(x, y, hamming_preset(x.alphabet(), y.alphabet()), k_max, pmax, options);
}

Bracket covering_radius(const Sft& x, const Sft& y, std::size_t k_max, std::size_t pmax, const RkOptions& options) {
  return covering_radius_detail(x, y, k_max, pmax, options).bracket;
}

ScenarioReport classical_scenario(const std::string& name, const Sft& y, const std::vector<Rational>& weights,
                                  std::size_t k_max, std::size_t L) {
  const Sft x = one_letter_shift();
  const Potential f = Potential::lifted(x.alphabet(), y.alphabet(), weights);
  const Rational classical = classical_value(y, weights, Objective::maximize);

  ScenarioReport report;
  report.name = "classical(" + name + ")";
  report.details["classical_value"] = to_string(classical);

  // Every simple cycle has length at most |Y|, so this period bound suffices.
  const AlphaPerResult periodic = alpha_per_lower(x, y, f, y.size());
  report.add_equal("periodic lower bound equals max cycle mean", classical, periodic.value);

  const DeltaResult delta = delta_bracket(x, y, f, k_max, y.size());
  report.add_equal("delta bracket lower end equals max cycle mean", classical, delta.bracket.lo);
  report.add_true("delta bracket contains max cycle mean", delta.bracket.contains(classical));
  report.add_true("subadditivity check not degraded", !delta.degraded);

  const AlphaEstimate estimate = alpha_estimate(x, y, f, L, delta.bracket);
  report.add_equal("effective-potential center equals max cycle mean", classical, estimate.center);
  report.details["alpha_estimate"] = {{"lo", to_string(estimate.bracket.lo)}, {"hi", to_string(estimate.bracket.hi)}};

  if (!report.overall()) throw ScenarioFailed(report);
  return report;
}

// ------------------------------------------------------------------ run_all

namespace {

Sft sft_from_config(const nlohmann::json& node) {
  if (node.is_string()) {
    const auto name = node.get<std::string>();
    if (name == "golden_mean") return golden_mean_shift();
    if (name == "full_shift_2") return full_shift(Alphabet({"0", "1"}));
    if (name == "full_shift_3") return full_shift(Alphabet({"0", "1", "2"}));
    if (name == "one_letter") return one_letter_shift();
    throw SchemaError("unknown shift preset \"" + name + "\"");
  }
  LoadedSft loaded = load_sft(node);
  if (loaded.recoding) throw SchemaError("run_all accepts one-step shifts only");
  return std::move(loaded.sft);
}

Rational rational_from(const nlohmann::json& node) {
  if (node.is_string()) return parse_rational(node.get<std::string>());
  if (node.is_number_integer()) return Rational(static_cast<long>(node.get<long long>()));
  throw SchemaError("rational values must be strings or integers");
}

std::size_t size_from(const nlohmann::json& node, const char* key, std::size_t fallback) {
  if (!node.contains(key)) return fallback;
  const auto& value = node[key];
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw SchemaError(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

template <typename Fn>
ScenarioReport isolate(Fn&& run) {
  try {
    return run();
  } catch (const ScenarioFailed& failed) {
    return failed.report();
  }
}

ScenarioReport covering_case(const nlohmann::json& c) {
  const Sft x = sft_from_config(c.at("x"));
  const Sft y = sft_from_config(c.at("y"));
  const std::size_t k_max = size_from(c, "k_max", 12);
  const std::size_t pmax = size_from(c, "pmax", 4);
  const DeltaResult delta = covering_radius_detail(x, y, k_max, pmax);

  ScenarioReport report;
  report.name = "covering_radius(" + c.value("name", std::string("unnamed")) + ")";
  report.details = {{"lo", to_string(delta.bracket.lo)},
                    {"hi", to_string(delta.bracket.hi)},
                    {"gluing_constant", to_string(delta.gluing_constant)}};
  report.add_true("subadditivity check not degraded", !delta.degraded);
  if (c.contains("expect")) {
    const auto& e = c["expect"];
    if (e.contains("contains")) {
      const Rational v = rational_from(e["contains"]);
      report.add("bracket contains " + to_string(v), "true",
                 "[" + to_string(delta.bracket.lo) + ", " + to_string(delta.bracket.hi) + "]",
                 delta.bracket.contains(v));
    }
    if (e.contains("lo")) report.add_equal("bracket lower end", rational_from(e["lo"]), delta.bracket.lo);
    if (e.contains("hi")) report.add_equal("bracket upper end", rational_from(e["hi"]), delta.bracket.hi);
  }
  if (!report.overall()) throw ScenarioFailed(report);
  return report;
}

ScenarioReport consistency_suite() {
  ScenarioReport report;
  report.name = "consistency";
  const Sft gm = golden_mean_shift();
  const Sft full = full_shift(Alphabet({"0", "1"}));
  const Potential ham = hamming_preset(gm.alphabet(), full.alphabet());
  const Rational half(1, 2);

  const AlphaPerResult periodic = alpha_per_lower(gm, full, ham, 4);
  report.add_equal("golden mean vs full shift: periodic lower bound", half, periodic.value);

  const DeltaResult delta = delta_bracket(gm, full, ham, 10, 4);
  report.add_equal("golden mean vs full shift: delta bracket lower end", half, delta.bracket.lo);
  report.add_true("golden mean vs full shift: bracket contains periodic lower bound",
                  delta.bracket.contains(periodic.value));

  const auto candidate = periodic_maximizer_search(gm, full, ham, 0, 2, 6);
  const std::string orbit_text = candidate ? full.render(candidate->orbit.cycle()) : "none";
  report.add("golden mean vs full shift: certified maximizer", "1", orbit_text, orbit_text == "1");
  report.add_equal("golden mean vs full shift: certified maximizer psi", half,
                   candidate ? candidate->psi.value : Rational(-1000));

  bool consistent = true;
  std::string estimate_text;
  try {
    const AlphaEstimate estimate = alpha_estimate(gm, full, ham, 1, delta.bracket);
    estimate_text = "[" + to_string(estimate.bracket.lo) + ", " + to_string(estimate.bracket.hi) + "]";
  } catch (const InconsistencyError& e) {
    consistent = false;
    estimate_text = e.what();
  }
  report.add("golden mean vs full shift: effective potential at L=1 meets delta bracket", "nonempty",
             estimate_text, consistent);

  const HruskovaSystem h = hruskova_system();
  const auto ground = periodic_maximizer_search(h.x, h.y, h.f, 0, 1, 8);
  const std::string ground_text = ground ? h.y.render(ground->orbit.cycle()) : "none";
  report.add("edge-shift example: certified maximizer", "AA", ground_text, ground_text == "AA");
  report.add_equal("edge-shift example: certified maximizer psi", 0, ground ? ground->psi.value : Rational(-1000));

  if (!report.overall()) throw ScenarioFailed(report);
  return report;
}

}  // namespace

nlohmann::json default_run_config() {
  return {
      {"counterexample", {{"k_max", 50}, {"truncation", 50}}},
      {"hruskova", {{"M", {1, 2, 3, 4}}, {"C", {"0", "1/2"}}}},
      {"covering_radius",
       {{{"name", "golden_mean_in_full_shift"}, {"x", "golden_mean"}, {"y", "full_shift_2"},
         {"k_max", 12}, {"pmax", 4}, {"expect", {{"contains", "1/2"}, {"lo", "1/2"}}}},
        {{"name", "full_shift_self"}, {"x", "full_shift_2"}, {"y", "full_shift_2"},
         {"k_max", 12}, {"pmax", 4}, {"expect", {{"lo", "0"}, {"hi", "1/3"}}}},
        {{"name", "full_shift_covers_golden_mean"}, {"x", "full_shift_2"}, {"y", "golden_mean"},
         {"k_max", 12}, {"pmax", 4}, {"expect", {{"lo", "0"}, {"hi", "1/3"}}}}}},
      {"classical",
       {{{"name", "golden_mean_weights"}, {"y", "golden_mean"}, {"weights", {"-1", "2"}}, {"k_max", 8}, {"L", 1}},
        {{"name", "full_shift_3_weights"}, {"y", "full_shift_3"}, {"weights", {"1/2", "-1", "1/3"}},
         {"k_max", 6}, {"L", 1}}}},
      {"consistency", true},
  };
}

std::vector<ScenarioReport> run_all(const nlohmann::json& config) {
  if (!config.is_object()) throw SchemaError("run configuration must be a JSON object");
  static const std::vector<std::string> known{"counterexample", "hruskova", "covering_radius", "classical",
                                              "consistency"};
  for (const auto& [key, value] : config.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw SchemaError("unknown run configuration key \"" + key + "\"");
    }
  }
  std::vector<ScenarioReport> reports;

  if (config.contains("counterexample") && !config["counterexample"].is_null()) {
    const auto& c = config["counterexample"];
    const std::size_t k_max = size_from(c, "k_max", 50);
    const std::size_t truncation = size_from(c, "truncation", k_max);
    reports.push_back(isolate([&] { return counterexample_check(k_max, truncation); }));
  }

  if (config.contains("hruskova") && !config["hruskova"].is_null()) {
    const auto& h = config["hruskova"];
    std::map<std::string, Rational> overrides;
    if (h.contains("weights")) {
      for (const auto& [edge, value] : h["weights"].items()) overrides[edge] = rational_from(value);
    }
    const auto ms = h.value("M", nlohmann::json::array({1, 2, 3, 4}));
    const auto cs = h.value("C", nlohmann::json::array({"0", "1/2"}));
    for (const auto& m : ms) {
      for (const auto& c : cs) {
        const auto M = m.get<std::size_t>();
        const Rational C = rational_from(c);
        reports.push_back(isolate([&] { return hruskova_scenario(M, C, overrides); }));
      }
    }
  }

  if (config.contains("covering_radius")) {
    for (const auto& c : config["covering_radius"]) reports.push_back(isolate([&] { return covering_case(c); }));
  }

  if (config.contains("classical")) {
    for (const auto& c : config["classical"]) {
      const Sft y = sft_from_config(c.at("y"));
      std::vector<Rational> weights;
      for (const auto& w : c.at("weights")) weights.push_back(rational_from(w));
      reports.push_back(isolate([&] {
        return classical_scenario(c.value("name", std::string("unnamed")), y, weights, size_from(c, "k_max", 8),
                                  size_from(c, "L", 1));
      }));
    }
  }

  if (config.value("consistency", false)) reports.push_back(isolate(consistency_suite));
  return reports;
}

nlohmann::json to_json(const std::vector<ScenarioReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace advopt
