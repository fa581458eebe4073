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

#ifndef ADVOPT_BRACKET_HPP
#define ADVOPT_BRACKET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "advopt/rational.hpp"

namespace advopt {

/// Where a bound came from: a kind tag and ordered key/value details.
struct Witness {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string* field(const std::string& key) const {
    for (const auto& [k, v] : fields) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

/// Certified enclosure [lo, hi] of a functional value.
struct Bracket {
  Rational lo;
  Rational hi;
  Witness lo_witness;
  Witness hi_witness;

  bool contains(const Rational& value) const { return lo <= value && value <= hi; }
  Rational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
};

/// Intersection keeping the witness of whichever side is tighter; nullopt
/// when the brackets are disjoint.
std::optional<Bracket> intersect(const Bracket& a, const Bracket& b);

}  // namespace advopt

#endif  // ADVOPT_BRACKET_HPP
