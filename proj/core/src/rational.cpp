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

#include "advopt/rational.hpp"

#include <cctype>

#include "advopt/errors.hpp"

namespace advopt {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw SchemaError("not an exact rational: \"" + std::string(text) + "\"");
  }
  Rational value;
  value.get_num() = mpz_class(std::string(num), 10);
  value.get_den() = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (value.get_den() == 0) throw SchemaError("zero denominator: \"" + std::string(text) + "\"");
  if (text.front() == '-') value.get_num() = -value.get_num();
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const ExtRational& value) {
  return value.is_finite() ? to_string(value.value()) : std::string("inf");
}

std::string to_decimal(const Rational& value, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = value.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  // round half away from zero: floor((2*num*scale + den) / (2*den))
  mpz_class scaled = (2 * num * scale + value.get_den()) / (2 * value.get_den());
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::string frac_text = frac.get_str();
  if (static_cast<int>(frac_text.size()) < digits) {
    frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  }
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + frac_text;
  return out;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace advopt
