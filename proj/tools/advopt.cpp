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

#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "advopt/cycle.hpp"
#include "advopt/errors.hpp"
#include "advopt/ground_states.hpp"
#include "advopt/minplus.hpp"
#include "advopt/potential.hpp"
#include "advopt/scenarios.hpp"
#include "advopt/sft.hpp"
#include "advopt/theta.hpp"

namespace {

using advopt::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw advopt::SchemaError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw advopt::SchemaError(path + ": " + e.what());
  }
}

struct Inputs {
  std::string x_path;
  std::string y_path;
  std::string f_path;
};

struct System {
  advopt::LoadedSft x;
  advopt::LoadedSft y;
  advopt::Potential f;
};

System load_system(const Inputs& in) {
  auto x = advopt::load_sft_file(in.x_path);
  auto y = advopt::load_sft_file(in.y_path);
  auto f = advopt::load_potential_for(read_json(in.f_path), x, y);
  return {std::move(x), std::move(y), std::move(f)};
}

void add_inputs(CLI::App* cmd, Inputs& in, bool with_f = true) {
  cmd->add_option("--x", in.x_path, "X shift document")->required()->check(CLI::ExistingFile);
  cmd->add_option("--y", in.y_path, "Y shift document")->required()->check(CLI::ExistingFile);
  if (with_f) cmd->add_option("--f", in.f_path, "potential document")->required()->check(CLI::ExistingFile);
}

json bracket_json(const advopt::Bracket& b) {
  auto witness = [](const advopt::Witness& w) {
    json fields = json::object();
    for (const auto& [k, v] : w.fields) fields[k] = v;
    return json{{"kind", w.kind}, {"fields", fields}};
  };
  return {{"lo", advopt::to_string(b.lo)},
          {"hi", advopt::to_string(b.hi)},
          {"lo_decimal", advopt::to_decimal(b.lo)},
          {"hi_decimal", advopt::to_decimal(b.hi)},
          {"lo_witness", witness(b.lo_witness)},
          {"hi_witness", witness(b.hi_witness)}};
}

json table_json(const advopt::EndpointTable& t, const advopt::Sft& x) {
  json out = json::array();
  for (const auto& [pair, value] : t.entries) {
    out.push_back({{"v1", x.alphabet().name(pair.first)},
                   {"v2", x.alphabet().name(pair.second)},
                   {"value", advopt::to_string(value)}});
  }
  return out;
}

void flatten(const json& node, const std::string& prefix, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

// CSV prints the "rows" table when there is one, else key,value pairs.
void emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    if (doc.contains("rows") && doc["rows"].is_array() && !doc["rows"].empty()) {
      const auto& rows = doc["rows"];
      bool first = true;
      for (const auto& [k, v] : rows[0].items()) {
        std::cout << (first ? "" : ",") << csv_cell(k);
        first = false;
      }
      std::cout << "\n";
      for (const auto& row : rows) {
        first = true;
        for (const auto& [k, v] : row.items()) {
          std::cout << (first ? "" : ",") << csv_cell(v);
          first = false;
        }
        std::cout << "\n";
      }
    } else {
      std::ostringstream flat;
      flatten(doc, "", flat);
      std::cout << "key,value\n";
      std::string line;
      std::istringstream lines(flat.str());
      while (std::getline(lines, line)) {
        const auto colon = line.find(": ");
        std::cout << csv_cell(line.substr(0, colon)) << "," << csv_cell(line.substr(colon + 2)) << "\n";
      }
    }
  } else {
    flatten(doc, "", std::cout);
  }
}

void emit_report(const advopt::ScenarioReport& report, const std::string& format) {
  if (format == "text") {
    std::cout << advopt::to_text(report);
  } else {
    emit(advopt::to_json(report), format);
  }
}

void write_delta_report(const std::string& path, const advopt::DeltaResult& result) {
  std::ofstream out(path);
  if (!out) throw advopt::SchemaError("cannot write " + path);
  out << "k,r_k,r_k/k,hi_k,lo\n";
  for (const auto& row : result.rows) {
    const Rational mean = row.r_k / Rational(static_cast<unsigned long>(row.k));
    out << row.k << "," << advopt::to_string(row.r_k) << "," << advopt::to_decimal(mean, 12) << ","
        << advopt::to_string(row.hi_k) << "," << advopt::to_string(result.bracket.lo) << "\n";
  }
}

Rational rational_option(const std::string& text) { return advopt::parse_rational(text); }

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seedless=", 11) == 0) {
      std::cerr << "advopt: --seedless takes no value\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Adversarial ergodic optimization on products of shifts of finite type"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--seedless", "no effect; all computations are deterministic");

  const advopt::Budget budget = advopt::Budget::from_environment();
  advopt::RkOptions rk_options;
  rk_options.budget = budget;
  int exit_code = kExitOk;

  Inputs rk_in;
  std::size_t rk_k = 1;
  bool rk_no_prune = false;
  auto* rk = app.add_subcommand("rk", "max over y-words of the min fiber sum");
  add_inputs(rk, rk_in);
  rk->add_option("--k", rk_k, "word length")->required()->check(CLI::PositiveNumber);
  rk->add_flag("--no-prune", rk_no_prune, "disable dominance pruning");
  rk->callback([&] {
    auto sys = load_system(rk_in);
    rk_options.prune = !rk_no_prune;
    auto result = advopt::r_k(sys.x.sft, sys.y.sft, sys.f, rk_k, rk_options);
    emit({{"k", result.k},
          {"r_k", advopt::to_string(result.value)},
          {"r_k_over_k_decimal", advopt::to_decimal(result.value / Rational(static_cast<unsigned long>(rk_k)))},
          {"argmax_y", sys.y.sft.render(result.argmax_y)}},
         format);
  });

  Inputs delta_in;
  std::size_t delta_kmax = 8;
  std::size_t delta_pmax = 4;
  std::string delta_report;
  auto* delta = app.add_subcommand("delta", "certified bracket for the adversarial value");
  add_inputs(delta, delta_in);
  delta->add_option("--kmax", delta_kmax, "largest word length")->check(CLI::PositiveNumber);
  delta->add_option("--pmax", delta_pmax, "largest orbit period for the lower end")->check(CLI::PositiveNumber);
  delta->add_option("--report", delta_report, "write the per-k table as CSV");
  delta->callback([&] {
    auto sys = load_system(delta_in);
    auto result = advopt::delta_bracket(sys.x.sft, sys.y.sft, sys.f, delta_kmax, delta_pmax, rk_options);
    if (!delta_report.empty()) write_delta_report(delta_report, result);
    json rows = json::array();
    for (const auto& row : result.rows) {
      rows.push_back({{"k", row.k},
                      {"r_k", advopt::to_string(row.r_k)},
                      {"r_k/k", advopt::to_decimal(row.r_k / Rational(static_cast<unsigned long>(row.k)))},
                      {"hi_k", advopt::to_string(row.hi_k)},
                      {"lo", advopt::to_string(result.bracket.lo)}});
    }
    emit({{"bracket", bracket_json(result.bracket)},
          {"gluing_constant", advopt::to_string(result.gluing_constant)},
          {"degraded", result.degraded},
          {"d_x", result.d_x},
          {"d_y", result.d_y},
          {"rows", rows}},
         format);
  });

  Inputs per_in;
  std::size_t per_pmax = 4;
  bool per_witness = false;
  auto* per = app.add_subcommand("alpha-per", "best periodic orbit value");
  add_inputs(per, per_in);
  per->add_option("--pmax", per_pmax, "largest orbit period")->check(CLI::PositiveNumber);
  per->add_flag("--witness", per_witness, "print the orbit and the minimizing layered cycle");
  per->callback([&] {
    auto sys = load_system(per_in);
    auto result = advopt::alpha_per_lower(sys.x.sft, sys.y.sft, sys.f, per_pmax);
    json doc{{"value", advopt::to_string(result.value)},
             {"value_decimal", advopt::to_decimal(result.value)},
             {"orbits_examined", result.orbits.size()}};
    if (per_witness) {
      json cycle = json::array();
      for (const auto& node : result.best.witness_cycle) {
        cycle.push_back({{"x", sys.x.sft.alphabet().name(node.letter)}, {"phase", node.phase}});
      }
      doc["orbit"] = sys.y.sft.render(result.best.orbit.cycle());
      doc["layered_cycle"] = cycle;
    }
    emit(doc, format);
  });

  Inputs alpha_in;
  std::size_t alpha_L = 1;
  std::size_t alpha_kmax = 0;
  std::size_t alpha_pmax = 4;
  std::string alpha_variation = "0";
  std::string alpha_export;
  auto* alpha = app.add_subcommand("alpha", "bracket from the effective potential on Y");
  add_inputs(alpha, alpha_in);
  alpha->add_option("--L", alpha_L, "central window radius");
  alpha->add_option("--kmax", alpha_kmax, "also intersect with the delta bracket up to this length");
  alpha->add_option("--pmax", alpha_pmax, "orbit period bound for that delta bracket");
  alpha->add_option("--variation", alpha_variation, "extra variation budget added to the error bound");
  alpha->add_option("--export", alpha_export, "write the effective potential as JSON");
  alpha->callback([&] {
    auto sys = load_system(alpha_in);
    auto g = advopt::effective_potential(sys.x.sft, sys.y.sft, sys.f, alpha_L, rational_option(alpha_variation),
                                         budget);
    std::optional<advopt::Bracket> known;
    if (alpha_kmax > 0) {
      known = advopt::delta_bracket(sys.x.sft, sys.y.sft, sys.f, alpha_kmax, alpha_pmax, rk_options).bracket;
    }
    auto estimate = advopt::alpha_estimate(g, known);
    if (!alpha_export.empty()) {
      std::ofstream out(alpha_export);
      if (!out) throw advopt::SchemaError("cannot write " + alpha_export);
      out << advopt::to_json(g).dump(2) << "\n";
    }
    emit({{"bracket", bracket_json(estimate.bracket)},
          {"center", advopt::to_string(estimate.center)},
          {"error_bound", advopt::to_string(estimate.error_bound)},
          {"window_radius", estimate.window_radius},
          {"averaging_length", estimate.q},
          {"averaging_length_note", "Q_L = 2 R_L + 1 (chosen convention)"},
          {"windows", g.size()}},
         format);
  });

  Inputs cert_in;
  std::string cert_orbit;
  std::string cert_C = "0";
  std::size_t cert_W = 8;
  auto* cert = app.add_subcommand("ground-certify", "bounded-window ground-state test for a periodic orbit");
  add_inputs(cert, cert_in);
  cert->add_option("--orbit", cert_orbit, "comma-separated cycle word in Y")->required();
  cert->add_option("--C", cert_C, "improvement threshold");
  cert->add_option("--W", cert_W, "largest interval length")->check(CLI::PositiveNumber);
  cert->callback([&] {
    auto sys = load_system(cert_in);
    const Rational C = rational_option(cert_C);
    auto orbit = advopt::PeriodicOrbit::from_cycle(sys.y.sft, sys.y.sft.parse_word(cert_orbit).letters);
    auto result = advopt::certify_orbit(orbit, sys.y.sft, sys.x.sft, sys.f, C, cert_W);
    json doc{{"orbit", sys.y.sft.render(orbit.cycle())},
             {"C", advopt::to_string(C)},
             {"window", cert_W},
             {"status", result.certified() ? "certified-up-to-W" : "refuted"}};
    doc["psi"] = advopt::to_string(advopt::psi_periodic(sys.x.sft, sys.f, orbit).value);
    if (result.refutation) {
      const auto& r = *result.refutation;
      auto inner = [&](const advopt::Word& w) {
        advopt::Word out{r.interval.a, {}};
        for (auto i = r.interval.a; i <= r.interval.b; ++i) out.letters.push_back(w.at(i));
        return out;
      };
      doc["refutation"] = {{"interval", {r.interval.a, r.interval.b}},
                           {"base_word", sys.y.sft.render(r.base_word)},
                           {"improved_word", sys.y.sft.render(r.improved_word)},
                           {"margin", advopt::to_string(r.margin)},
                           {"H_base", table_json(advopt::h_table(sys.x.sft, sys.f, inner(r.base_word)), sys.x.sft)},
                           {"H_improved",
                            table_json(advopt::h_table(sys.x.sft, sys.f, inner(r.improved_word)), sys.x.sft)}};
    }
    emit(doc, format);
  });

  std::size_t h_M = 3;
  std::string h_C = "0";
  std::string h_weights;
  auto* hr = app.add_subcommand("hruskova", "edge-shift example with a non-SFT ground-state shift");
  hr->add_option("--M", h_M, "length of the middle run")->check(CLI::Range(1, 8));
  hr->add_option("--C", h_C, "improvement threshold in [0, 1)");
  hr->add_option("--weights", h_weights, "JSON object of edge weight overrides");
  hr->callback([&] {
    std::map<std::string, Rational> overrides;
    if (!h_weights.empty()) {
      const auto weights = read_json(h_weights);
      if (!weights.is_object()) throw advopt::SchemaError("--weights must name a JSON object of edge weights");
      for (const auto& [edge, value] : weights.items()) {
        if (!value.is_string() && !value.is_number_integer()) {
          throw advopt::SchemaError("edge weights must be rational strings or integers");
        }
        overrides[edge] = value.is_string() ? advopt::parse_rational(value.get<std::string>())
                                            : Rational(static_cast<long>(value.get<long long>()));
      }
    }
    try {
      emit_report(advopt::hruskova_scenario(h_M, rational_option(h_C), overrides), format);
    } catch (const advopt::ScenarioFailed& failed) {
      emit_report(failed.report(), format);
      exit_code = kExitCheckFailed;
    }
  });

  std::size_t ce_kmax = 50;
  std::size_t ce_truncation = 0;
  auto* ce = app.add_subcommand("counterexample", "closed-form pair with alpha < delta");
  ce->add_option("--kmax", ce_kmax, "largest averaging length");
  ce->add_option("--truncation", ce_truncation, "range of integer y examined (default kmax)");
  ce->callback([&] {
    try {
      emit_report(advopt::counterexample_check(ce_kmax, ce_truncation == 0 ? ce_kmax : ce_truncation), format);
    } catch (const advopt::ScenarioFailed& failed) {
      emit_report(failed.report(), format);
      exit_code = kExitCheckFailed;
    }
  });

  Inputs cr_in;
  std::size_t cr_kmax = 12;
  std::size_t cr_pmax = 4;
  auto* cr = app.add_subcommand("covering-radius", "delta bracket for the Hamming potential");
  add_inputs(cr, cr_in, false);
  cr->add_option("--kmax", cr_kmax, "largest word length")->check(CLI::PositiveNumber);
  cr->add_option("--pmax", cr_pmax, "largest orbit period")->check(CLI::PositiveNumber);
  cr->callback([&] {
    auto x = advopt::load_sft_file(cr_in.x_path);
    auto y = advopt::load_sft_file(cr_in.y_path);
    auto result = advopt::covering_radius_detail(x.sft, y.sft, cr_kmax, cr_pmax, rk_options);
    emit({{"bracket", bracket_json(result.bracket)}, {"degraded", result.degraded}}, format);
  });

  std::string ra_config;
  auto* ra = app.add_subcommand("run-all", "run every self-checking scenario");
  ra->add_option("--config", ra_config, "scenario configuration (JSON)")->check(CLI::ExistingFile);
  ra->callback([&] {
    const nlohmann::json config = ra_config.empty() ? advopt::default_run_config() : read_json(ra_config);
    const auto reports = advopt::run_all(config);
    bool all = true;
    for (const auto& r : reports) all = all && r.overall();
    if (format == "text") {
      for (const auto& r : reports) std::cout << advopt::to_text(r);
    } else {
      emit({{"overall", all}, {"reports", advopt::to_json(reports)}}, format);
    }
    if (!all) exit_code = kExitCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version come through here with code 0.
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const advopt::SchemaError& e) {
    std::cerr << "advopt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const advopt::UnknownLetter& e) {
    std::cerr << "advopt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const advopt::Error& e) {
    std::cerr << "advopt: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "advopt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "advopt: " << e.what() << "\n";
    return kExitComputation;
  }
  return exit_code;
}
