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

#include "advopt/potential.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "advopt/errors.hpp"

namespace advopt {

Potential::Potential(Alphabet x_alphabet, Alphabet y_alphabet, std::vector<Rational> values)
    : x_(std::move(x_alphabet)), y_(std::move(y_alphabet)), values_(std::move(values)) {
  if (values_.size() != x_.size() * y_.size()) {
    throw std::invalid_argument("potential matrix does not match its alphabets");
  }
}

Potential Potential::constant(const Alphabet& x_alphabet, const Alphabet& y_alphabet, const Rational& c) {
  return Potential(x_alphabet, y_alphabet, std::vector<Rational>(x_alphabet.size() * y_alphabet.size(), c));
}

Potential Potential::lifted(const Alphabet& x_alphabet, const Alphabet& y_alphabet,
                            const std::vector<Rational>& y_weights) {
  if (y_weights.size() != y_alphabet.size()) throw std::invalid_argument("one weight per y-letter expected");
  std::vector<Rational> values;
  values.reserve(x_alphabet.size() * y_alphabet.size());
  for (std::size_t u = 0; u < x_alphabet.size(); ++u) {
    values.insert(values.end(), y_weights.begin(), y_weights.end());
  }
  return Potential(x_alphabet, y_alphabet, std::move(values));
}

const Rational& Potential::evaluate(std::string_view x_letter, std::string_view y_letter) const {
  return at(x_.index_of(x_letter), y_.index_of(y_letter));
}

Rational Potential::sup_norm() const {
  Rational best = 0;
  for (const auto& v : values_) {
    Rational a = abs(v);
    if (a > best) best = a;
  }
  return best;
}

Potential Potential::rebind(const Alphabet& x_alphabet, const Alphabet& y_alphabet) const {
  if (x_alphabet == x_ && y_alphabet == y_) return *this;
  std::vector<Rational> values;
  values.reserve(x_alphabet.size() * y_alphabet.size());
  for (const auto& u : x_alphabet.letters()) {
    const LetterIndex xi = x_.index_of(u);
    for (const auto& v : y_alphabet.letters()) values.push_back(at(xi, y_.index_of(v)));
  }
  return Potential(x_alphabet, y_alphabet, std::move(values));
}

Potential Potential::lift(const RecodingMap* x_map, const RecodingMap* y_map) const {
  if (x_map && !(x_map->source_alphabet() == x_)) throw std::invalid_argument("x recoding does not match");
  if (y_map && !(y_map->source_alphabet() == y_)) throw std::invalid_argument("y recoding does not match");
  const Alphabet& xa = x_map ? x_map->block_alphabet() : x_;
  const Alphabet& ya = y_map ? y_map->block_alphabet() : y_;
  std::vector<Rational> values;
  values.reserve(xa.size() * ya.size());
  for (LetterIndex u = 0; u < xa.size(); ++u) {
    const LetterIndex cu = x_map ? x_map->center(u) : u;
    for (LetterIndex v = 0; v < ya.size(); ++v) values.push_back(at(cu, y_map ? y_map->center(v) : v));
  }
  return Potential(xa, ya, std::move(values));
}

void Potential::require_compatible(const Sft& x, const Sft& y) const {
  if (!(x.alphabet() == x_) || !(y.alphabet() == y_)) {
    throw std::invalid_argument("potential alphabets do not match the shifts; rebind first");
  }
}

Potential hamming_preset(const Alphabet& x_alphabet, const Alphabet& y_alphabet) {
  std::vector<Rational> values;
  values.reserve(x_alphabet.size() * y_alphabet.size());
  for (const auto& u : x_alphabet.letters()) {
    for (const auto& v : y_alphabet.letters()) values.emplace_back(u == v ? 0 : 1);
  }
  return Potential(x_alphabet, y_alphabet, std::move(values));
}

Potential hamming_preset(const Alphabet& alphabet) { return hamming_preset(alphabet, alphabet); }

Rational sup_norm(const Potential& p) { return p.sup_norm(); }

namespace {

std::vector<std::string> string_list(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw SchemaError(std::string("potential document needs a \"") + key + "\" array");
  }
  std::vector<std::string> out;
  for (const auto& v : doc[key]) {
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      out.push_back(std::to_string(v.get<long long>()));
    } else {
      throw SchemaError(std::string("\"") + key + "\" entries must be strings");
    }
  }
  return out;
}

Rational json_rational(const nlohmann::json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw SchemaError("potential values must be rational strings, got " + value.dump());
}

}  // namespace

Potential load_potential(const nlohmann::json& document, const Alphabet& x_alphabet,
                         const Alphabet& y_alphabet) {
  if (!document.is_object()) throw SchemaError("potential document must be a JSON object");
  if (document.contains("preset")) {
    if (document["preset"] != "hamming") throw SchemaError("unknown preset " + document["preset"].dump());
    return hamming_preset(x_alphabet, y_alphabet);
  }
  Alphabet xs(string_list(document, "x_letters"));
  Alphabet ys(string_list(document, "y_letters"));
  if (!document.contains("values") || !document["values"].is_array() ||
      document["values"].size() != xs.size()) {
    throw SchemaError("\"values\" must have one row per x-letter");
  }
  std::vector<Rational> values;
  for (const auto& row : document["values"]) {
    if (!row.is_array() || row.size() != ys.size()) throw SchemaError("each row needs one entry per y-letter");
    for (const auto& entry : row) values.push_back(json_rational(entry));
  }
  return Potential(std::move(xs), std::move(ys), std::move(values));
}

Potential load_potential_for(const nlohmann::json& document, const LoadedSft& x, const LoadedSft& y) {
  if (document.is_object() && document.contains("preset")) {
    const Alphabet& xa = x.recoding ? x.recoding->source_alphabet() : x.sft.alphabet();
    const Alphabet& ya = y.recoding ? y.recoding->source_alphabet() : y.sft.alphabet();
    Potential base = load_potential(document, xa, ya);
    return base.lift(x.recoding ? &*x.recoding : nullptr, y.recoding ? &*y.recoding : nullptr)
        .rebind(x.sft.alphabet(), y.sft.alphabet());
  }
  Potential base = load_potential(document, x.sft.alphabet(), y.sft.alphabet());
  auto fits = [](const Alphabet& have, const Alphabet& want) {
    for (const auto& letter : want.letters()) {
      if (!have.find(letter)) return false;
    }
    return true;
  };
  const bool x_direct = fits(base.x_alphabet(), x.sft.alphabet());
  const bool y_direct = fits(base.y_alphabet(), y.sft.alphabet());
  if (x_direct && y_direct) return base.rebind(x.sft.alphabet(), y.sft.alphabet());

  // Written over source letters of a recoded shift: fit to the source
  // alphabets, then lift to the blocks.
  const Alphabet& xa = (!x_direct && x.recoding) ? x.recoding->source_alphabet() : x.sft.alphabet();
  const Alphabet& ya = (!y_direct && y.recoding) ? y.recoding->source_alphabet() : y.sft.alphabet();
  Potential fitted = base.rebind(xa, ya);
  return fitted
      .lift(!x_direct && x.recoding ? &*x.recoding : nullptr, !y_direct && y.recoding ? &*y.recoding : nullptr)
      .rebind(x.sft.alphabet(), y.sft.alphabet());
}

nlohmann::json to_json(const Potential& p) {
  nlohmann::json values = nlohmann::json::array();
  for (LetterIndex u = 0; u < p.x_alphabet().size(); ++u) {
    nlohmann::json row = nlohmann::json::array();
    for (LetterIndex v = 0; v < p.y_alphabet().size(); ++v) row.push_back(to_string(p.at(u, v)));
    values.push_back(std::move(row));
  }
  return {{"x_letters", p.x_alphabet().letters()}, {"y_letters", p.y_alphabet().letters()}, {"values", values}};
}

}  // namespace advopt
