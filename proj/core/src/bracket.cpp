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

#include "advopt/bracket.hpp"

#include <cstdlib>
#include <string>

#include "advopt/budget.hpp"

namespace advopt {

std::optional<Bracket> intersect(const Bracket& a, const Bracket& b) {
  Bracket out;
  if (a.lo >= b.lo) {
    out.lo = a.lo;
    out.lo_witness = a.lo_witness;
  } else {
    out.lo = b.lo;
    out.lo_witness = b.lo_witness;
  }
  if (a.hi <= b.hi) {
    out.hi = a.hi;
    out.hi_witness = a.hi_witness;
  } else {
    out.hi = b.hi;
    out.hi_witness = b.hi_witness;
  }
  if (out.lo > out.hi) return std::nullopt;
  return out;
}

Budget Budget::from_environment() {
  Budget budget;
  if (const char* text = std::getenv("ADVOPT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text, &end, 10);
    if (end != text && *end == '\0' && value > 0) budget.max_words = value;
  }
  return budget;
}

}  // namespace advopt
