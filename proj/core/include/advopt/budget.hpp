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

#ifndef ADVOPT_BUDGET_HPP
#define ADVOPT_BUDGET_HPP

#include <cstdint>

namespace advopt {

/// Caps on exhaustive enumerations.
struct Budget {
  /// Legal words a single enumeration may visit (y-words for r_k, windows
  /// for the effective potential, candidate words for forbidden_words).
  std::uint64_t max_words = 2'000'000;

  /// Default budget, with max_words replaced by $ADVOPT_BUDGET when set to a
  /// positive integer.
  static Budget from_environment();
};

}  // namespace advopt

#endif  // ADVOPT_BUDGET_HPP
