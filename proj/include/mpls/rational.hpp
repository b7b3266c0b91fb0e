// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "mpls/errors.hpp"

namespace mpls {

/// Exact weight / parameter type. All comparisons in the solvers are exact.
using Rational = mpq_class;
using Weight = Rational;

/// Parses "12", "-3", "0.7", "1.25e-3" or "7/10" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ConstructionError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw ConstructionError("malformed rational literal '" + s + "'");
    }
    q.canonicalize();
    return q;
  }

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;  // value = digits * 10^(-scale)
  bool seen_point = false;
  bool any_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw ConstructionError("malformed rational literal '" + s + "'");
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw ConstructionError("malformed rational literal '" + s + "'");
    std::string exp = s.substr(i + 1);
    if (exp.empty()) throw ConstructionError("malformed exponent in '" + s + "'");
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp, &used);
    } catch (const std::exception&) {
      throw ConstructionError("malformed exponent in '" + s + "'");
    }
    if (used != exp.size() || e > 4096 || e < -4096) {
      throw ConstructionError("malformed exponent in '" + s + "'");
    }
    scale -= e;
  }
  mpz_class num(digits, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q;
  if (scale >= 0) {
    q = Rational(num, pow10);
  } else {
    q = Rational(num * pow10);
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

/// Exact text form: a terminating decimal when the denominator is 2^a 5^b,
/// otherwise "p/q". parse_rational(format_rational(q)) == q.
inline std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  mpz_class den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return q.get_str(10);

  unsigned long places = twos > fives ? twos : fives;
  if (places == 0) return q.get_num().get_str(10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, places);
  mpz_class scaled = q.get_num() * pow10 / q.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str(10);
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// floor(q) as an integer-valued rational.
inline Rational floor_rational(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

/// Exact value of x / 2^53 for the top 53 bits of a 64-bit draw, in [0, 1).
inline Rational unit_from_bits(std::uint64_t bits) {
  mpz_class num;
  num = static_cast<unsigned long>(bits >> 11);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 53);
  Rational u(num, den);
  u.canonicalize();
  return u;
}

}  // namespace mpls
