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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rtrop/hyperfield.hpp"
#include "rtrop/rational.hpp"

namespace rtrop {

struct Term {
  Rational coeff;
  Rational exp;
  friend bool operator==(const Term&, const Term&) = default;
};

struct ParseOptions {
  /// Largest exponent denominator accepted by the parser.
  long max_exponent_denominator = 1000000;
};

/// Finite sum of terms c * t^q with c, q rational.
///
/// Terms are kept sorted by strictly increasing exponent with no zero
/// coefficients. The ordering is the one of the real Puiseux series field:
/// f > 0 iff the coefficient of the lowest exponent is positive, and the
/// valuation of f is that lowest exponent.
class PuiseuxPoly {
 public:
  PuiseuxPoly() = default;
  PuiseuxPoly(long c);  // NOLINT(google-explicit-constructor)
  PuiseuxPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static PuiseuxPoly monomial(const Rational& coeff, const Rational& exp);
  /// Any term list; like exponents are merged and zeros dropped.
  static PuiseuxPoly from_terms(std::vector<Term> terms);
  static PuiseuxPoly parse(std::string_view text, const ParseOptions& options = {});

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for 0 and for single terms at exponent 0.
  bool is_constant() const;
  /// Constant term value; requires is_constant().
  Rational constant_value() const;

  /// Sign of the leading coefficient.
  Sign sign() const;
  /// Lowest exponent; infinity for 0.
  Valuation valuation() const;
  /// Coefficient at the lowest exponent; 0 for the zero element.
  Rational leading_coeff() const;

  std::string str() const;

  PuiseuxPoly operator-() const;
  PuiseuxPoly& operator+=(const PuiseuxPoly& o);
  PuiseuxPoly& operator-=(const PuiseuxPoly& o);
  PuiseuxPoly& operator*=(const PuiseuxPoly& o);
  friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
  friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);

  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const PuiseuxPoly& a, const PuiseuxPoly& b);

 private:
  std::vector<Term> terms_;
};

/// The monomial t^exp.
PuiseuxPoly t_pow(const Rational& exp = Rational(1));

/// Leading coefficient together with the valuation.
struct FineValue {
  Rational leading_coeff;
  Valuation val = Valuation::infinity();

  bool is_zero() const { return val.is_infinite(); }
  friend FineValue operator*(const FineValue& a, const FineValue& b);
  friend bool operator==(const FineValue&, const FineValue&) = default;
};

FineValue fval(const PuiseuxPoly& f);

/// sgn(f) * |f| as an element of RT: (sign of leading coefficient, valuation).
RealTropVal signed_value(const PuiseuxPoly& f);

}  // namespace rtrop
