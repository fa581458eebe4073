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

#ifndef ADVOPT_RATIONAL_HPP
#define ADVOPT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace advopt {

/// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Decimal and exponent notation are rejected
/// with SchemaError.
Rational parse_rational(std::string_view text);

/// Canonical string form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Fixed-point rendering with `digits` digits after the point, rounded half
/// away from zero. For display only.
std::string to_decimal(const Rational& value, int digits = 12);

Rational abs(const Rational& value);

/// A rational extended by +infinity. Used as the "unreachable" cost in the
/// min-plus recursions.
class ExtRational {
 public:
  static ExtRational infinity() { return ExtRational(); }

  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent

  bool is_finite() const { return value_.has_value(); }
  const Rational& value() const { return *value_; }

  ExtRational operator+(const Rational& rhs) const {
    if (!value_) return infinity();
    return ExtRational(*value_ + rhs);
  }
  ExtRational operator+(const ExtRational& rhs) const {
    if (!value_ || !rhs.value_) return infinity();
    return ExtRational(*value_ + *rhs.value_);
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.is_finite() != b.is_finite()) return false;
    return !a.is_finite() || a.value() == b.value();
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (!a.is_finite() || !b.is_finite()) {
      return b.is_finite() <=> a.is_finite();
    }
    int c = cmp(a.value(), b.value());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  ExtRational() = default;
  std::optional<Rational> value_;
};

std::string to_string(const ExtRational& value);

inline ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

}  // namespace advopt

#endif  // ADVOPT_RATIONAL_HPP
