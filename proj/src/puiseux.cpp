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

#include "rtrop/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "rtrop/error.hpp"

namespace rtrop {

PuiseuxPoly::PuiseuxPoly(long c) : PuiseuxPoly(Rational(c)) {}

PuiseuxPoly::PuiseuxPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({c, Rational(0)});
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coeff, const Rational& exp) {
  PuiseuxPoly p;
  if (!coeff.is_zero()) p.terms_.push_back({coeff, exp});
  return p;
}

PuiseuxPoly PuiseuxPoly::from_terms(std::vector<Term> terms) {
  std::map<Rational, Rational> acc;
  for (auto& t : terms) acc[t.exp] += t.coeff;
  PuiseuxPoly p;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({c, e});
  }
  return p;
}

bool PuiseuxPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

Rational PuiseuxPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::not_trivially_valued, str() + " is not a constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Sign PuiseuxPoly::sign() const {
  return terms_.empty() ? Sign::zero : sign_of(terms_[0].coeff.sign());
}

Valuation PuiseuxPoly::valuation() const {
  return terms_.empty() ? Valuation::infinity() : Valuation(terms_[0].exp);
}

Rational PuiseuxPoly::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

namespace {

std::string mono_str(const Rational& e) {
  if (e == Rational(1)) return "t";
  if (e.is_integer() && e.sign() > 0) return "t^" + e.str();
  return "t^(" + e.str() + ")";
}

std::string term_str(const Term& t) {
  if (t.exp.is_zero()) return t.coeff.str();
  std::string m = mono_str(t.exp);
  if (t.coeff == Rational(1)) return m;
  if (t.coeff == Rational(-1)) return "-" + m;
  return t.coeff.str() + "*" + m;
}

}  // namespace

std::string PuiseuxPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string s = term_str(terms_[i]);
    if (i == 0) {
      out = s;
    } else if (s[0] == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.cend() || b != o.terms_.cend()) {
    if (b == o.terms_.cend() || (a != terms_.cend() && a->exp < b->exp)) {
      merged.push_back(*a++);
    } else if (a == terms_.cend() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({c, a->exp});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& o) { return *this += -o; }

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return PuiseuxPoly::monomial(a.terms_[0].coeff * b.terms_[0].coeff,
                                 a.terms_[0].exp + b.terms_[0].exp);
  }
  std::map<Rational, Rational> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) acc[x.exp + y.exp] += x.coeff * y.coeff;
  }
  PuiseuxPoly p;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({c, e});
  }
  return p;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const PuiseuxPoly& o) { return *this = *this * o; }

std::strong_ordering operator<=>(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  int s = static_cast<int>((a - b).sign());
  return s <=> 0;
}

PuiseuxPoly t_pow(const Rational& exp) { return PuiseuxPoly::monomial(Rational(1), exp); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : s_(text), opt_(options) {}

  PuiseuxPoly series() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    push(terms, term(), negative);
    while (true) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      push(terms, term(), c == '-');
    }
    return PuiseuxPoly::from_terms(std::move(terms));
  }

 private:
  static void push(std::vector<Term>& terms, Term t, bool negative) {
    if (negative) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
  }

  Term term() {
    Term t{Rational(1), Rational(0)};
    factor(t);
    while (true) {
      skip();
      if (peek() != '*') break;
      get();
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    skip();
    if (peek() == 't') {
      get();
      skip();
      if (peek() == '^') {
        get();
        t.exp += exponent();
      } else {
        t.exp += Rational(1);
      }
      return;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coefficient or 't'");
    mpz_class num = integer();
    mpz_class den = 1;
    skip();
    if (peek() == '/') {
      get();
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    t.coeff *= Rational(mpq_class(num, den));
  }

  Rational exponent() {
    skip();
    std::size_t start = pos_;
    Rational e;
    if (peek() == '(') {
      get();
      skip();
      bool negative = false;
      if (peek() == '-') {
        get();
        negative = true;
      }
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (peek() == '/') {
        get();
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      skip();
      if (peek() != ')') fail("expected ')'");
      get();
      e = Rational(mpq_class(negative ? mpz_class(-num) : num, den));
    } else {
      bool negative = false;
      if (peek() == '-') {
        get();
        negative = true;
      }
      mpz_class num = integer();
      e = Rational(mpq_class(negative ? mpz_class(-num) : num));
    }
    if (e.denominator() > opt_.max_exponent_denominator) {
      throw ParseError("exponent denominator exceeds " + std::to_string(opt_.max_exponent_denominator),
                       start);
    }
    return e;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view s_;
  const ParseOptions& opt_;
  std::size_t pos_ = 0;
};

}  // namespace

PuiseuxPoly PuiseuxPoly::parse(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).series();
}

FineValue operator*(const FineValue& a, const FineValue& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.leading_coeff * b.leading_coeff, a.val + b.val};
}

FineValue fval(const PuiseuxPoly& f) {
  if (f.is_zero()) return {};
  return {f.leading_coeff(), f.valuation()};
}

RealTropVal signed_value(const PuiseuxPoly& f) { return RealTropVal(f.sign(), f.valuation()); }

}  // namespace rtrop
