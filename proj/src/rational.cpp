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

#include "rtrop/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "rtrop/error.hpp"

namespace rtrop {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::syntax, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::syntax, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return v_.get_str(); }

std::size_t Rational::hash() const {
  std::hash<std::string> h;
  return h(v_.get_str(16));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Valuation Valuation::infinity() {
  Valuation v;
  v.infinite_ = true;
  return v;
}

Valuation Valuation::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return infinity();
  return Valuation(Rational::parse(text));
}

const Rational& Valuation::value() const {
  if (infinite_) throw std::logic_error("value() of infinite valuation");
  return q_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : q_.str(); }

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(a.q_ + b.q_);
}

Valuation operator-(const Valuation& a, const Valuation& b) {
  if (b.infinite_) throw Error(ErrorKind::invalid_argument, "division by the zero element");
  if (a.infinite_) return a;
  return Valuation(a.q_ - b.q_);
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.q_ == b.q_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.q_ <=> b.q_;
}

Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

}  // namespace rtrop
