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

#ifndef ADVOPT_POTENTIAL_HPP
#define ADVOPT_POTENTIAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "advopt/rational.hpp"
#include "advopt/sft.hpp"

namespace advopt {

/// Locally constant potential f(x, y) = F(x(0), y(0)) with exact entries,
/// stored row-major by x-letter.
class Potential {
 public:
  Potential(Alphabet x_alphabet, Alphabet y_alphabet, std::vector<Rational> values);

  static Potential constant(const Alphabet& x_alphabet, const Alphabet& y_alphabet, const Rational& c);
  /// Potential that ignores x: F(u, v) = g(v).
  static Potential lifted(const Alphabet& x_alphabet, const Alphabet& y_alphabet,
                          const std::vector<Rational>& y_weights);

  const Alphabet& x_alphabet() const { return x_; }
  const Alphabet& y_alphabet() const { return y_; }

  const Rational& at(LetterIndex x, LetterIndex y) const { return values_[x * y_.size() + y]; }
  /// Lookup by letter name. Throws UnknownLetter.
  const Rational& evaluate(std::string_view x_letter, std::string_view y_letter) const;

  Rational sup_norm() const;

  /// Restricts (by letter name) to the given alphabets. Throws UnknownLetter
  /// when a letter has no entry.
  Potential rebind(const Alphabet& x_alphabet, const Alphabet& y_alphabet) const;
  /// Lifts onto block alphabets: F'(b, c) = F(center(b), center(c)). Either
  /// map may be absent, meaning that side is used as-is.
  Potential lift(const RecodingMap* x_map, const RecodingMap* y_map) const;

  /// Throws std::invalid_argument unless the alphabets match the shifts.
  void require_compatible(const Sft& x, const Sft& y) const;

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  Alphabet x_;
  Alphabet y_;
  std::vector<Rational> values_;
};

/// F(u, v) = 1 - [u = v] on a single alphabet: the covering-radius potential.
Potential hamming_preset(const Alphabet& alphabet);
/// Same, comparing letter names across two alphabets.
Potential hamming_preset(const Alphabet& x_alphabet, const Alphabet& y_alphabet);

Rational sup_norm(const Potential& p);

/// {"x_letters", "y_letters", "values": [[rational-string...]...]} or
/// {"preset": "hamming"}; presets need the alphabets of the two shifts.
/// Throws SchemaError.
Potential load_potential(const nlohmann::json& document, const Alphabet& x_alphabet,
                         const Alphabet& y_alphabet);
/// Loads a document and fits it to the shifts, lifting through recodings
/// when the document is written over the source letters.
Potential load_potential_for(const nlohmann::json& document, const LoadedSft& x, const LoadedSft& y);

nlohmann::json to_json(const Potential& p);

}  // namespace advopt

#endif  // ADVOPT_POTENTIAL_HPP
