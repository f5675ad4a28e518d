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

#include "rtrop/hyperfield.hpp"

#include "rtrop/error.hpp"

namespace rtrop {

char to_char(Sign s) {
  switch (s) {
    case Sign::plus: return '+';
    case Sign::minus: return '-';
    case Sign::zero: return '0';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::plus;
    case '-': return Sign::minus;
    case '0': return Sign::zero;
    default: throw Error(ErrorKind::syntax, std::string("bad sign character '") + c + "'");
  }
}

const char* to_string(Hyperfield h) {
  switch (h) {
    case Hyperfield::krasner: return "K";
    case Hyperfield::sign: return "S";
    case Hyperfield::tropical: return "T";
    case Hyperfield::real_tropical: return "RT";
  }
  return "?";
}

Hyperfield hyperfield_from_string(std::string_view s) {
  if (s == "K") return Hyperfield::krasner;
  if (s == "S") return Hyperfield::sign;
  if (s == "T") return Hyperfield::tropical;
  if (s == "RT") return Hyperfield::real_tropical;
  throw Error(ErrorKind::syntax, "unknown hyperfield '" + std::string(s) + "'");
}

RealTropVal::RealTropVal(Sign sign, Valuation val) : sign_(sign), val_(std::move(val)) {
  if ((sign_ == Sign::zero) != val_.is_infinite()) {
    throw Error(ErrorKind::invalid_argument,
                "sign is zero exactly when the valuation is infinite");
  }
}

RealTropVal RealTropVal::operator-() const {
  RealTropVal r = *this;
  r.sign_ = -sign_;
  return r;
}

RealTropVal operator*(const RealTropVal& a, const RealTropVal& b) {
  if (a.is_zero() || b.is_zero()) return RealTropVal::zero();
  return RealTropVal(a.sign_ * b.sign_, a.val_ + b.val_);
}

RealTropVal operator/(const RealTropVal& a, const RealTropVal& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "division by the zero element");
  if (a.is_zero()) return a;
  return RealTropVal(a.sign_ * b.sign_, a.val_ - b.val_);
}

std::string RealTropVal::str() const { return std::string(1, to_char(sign_)) + ":" + val_.str(); }

RealTropVal RealTropVal::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon != 1) throw Error(ErrorKind::syntax, "expected sign:valuation, got '" + std::string(text) + "'");
  Sign s = sign_from_char(text[0]);
  Valuation v = Valuation::parse(text.substr(2));
  return RealTropVal(s, v);
}

std::string multiplicative_display(const RealTropVal& x) {
  if (x.is_zero()) return "0";
  std::string sign(1, to_char(x.sign()));
  const Rational& q = x.val().value();
  if (q.is_zero()) return sign + "1";
  return sign + "e^{" + (-q).str() + "}";
}

std::strong_ordering real_order(const RealTropVal& a, const RealTropVal& b) {
  int sa = static_cast<int>(a.sign()), sb = static_cast<int>(b.sign());
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same nonzero sign: smaller valuation means larger magnitude.
  auto mag = b.val() <=> a.val();
  return sa > 0 ? mag : 0 <=> mag;
}

RealTropVal TropVal::element() const {
  return val.is_infinite() ? RealTropVal::zero() : RealTropVal(Sign::plus, val);
}

RealTropVal Krasner::element() const { return one ? RealTropVal::one() : RealTropVal::zero(); }

bool is_member(Hyperfield h, const RealTropVal& x) {
  if (x.is_zero()) return true;
  switch (h) {
    case Hyperfield::krasner: return x.sign() == Sign::plus && x.val() == Valuation(0);
    case Hyperfield::sign: return x.val() == Valuation(0);
    case Hyperfield::tropical: return x.sign() == Sign::plus;
    case Hyperfield::real_tropical: return true;
  }
  return false;
}

namespace {

void require_member(Hyperfield h, const RealTropVal& x) {
  if (!is_member(h, x)) {
    throw Error(ErrorKind::invalid_argument,
                x.str() + " is not an element of " + to_string(h));
  }
}

bool has_signs(Hyperfield h) { return h == Hyperfield::sign || h == Hyperfield::real_tropical; }

}  // namespace

HyperSet HyperSet::singleton(RealTropVal x) {
  HyperSet s;
  s.element_ = std::move(x);
  return s;
}

HyperSet HyperSet::ball(Valuation threshold) {
  if (threshold.is_infinite()) return singleton(RealTropVal::zero());
  HyperSet s;
  s.ball_ = true;
  s.threshold_ = std::move(threshold);
  return s;
}

bool HyperSet::contains(const RealTropVal& x) const {
  if (!ball_) return element_ == x;
  return x.is_zero() || x.val() >= threshold_;
}

bool operator==(const HyperSet& a, const HyperSet& b) {
  if (a.ball_ != b.ball_) return false;
  return a.ball_ ? a.threshold_ == b.threshold_ : a.element_ == b.element_;
}

std::string HyperSet::str() const {
  return ball_ ? "ball(" + threshold_.str() + ")" : "{" + element_.str() + "}";
}

RealTropVal hyper_mul(Hyperfield h, const RealTropVal& a, const RealTropVal& b) {
  require_member(h, a);
  require_member(h, b);
  return a * b;
}

HyperSet hyper_sum(Hyperfield h, std::span<const RealTropVal> xs) {
  if (xs.empty()) throw Error(ErrorKind::invalid_argument, "hypersum of an empty list");
  Valuation best = Valuation::infinity();
  for (const auto& x : xs) {
    require_member(h, x);
    best = min(best, x.val());
  }
  if (best.is_infinite()) return HyperSet::singleton(RealTropVal::zero());
  int count = 0;
  bool plus = false, minus = false;
  for (const auto& x : xs) {
    if (x.is_zero() || x.val() != best) continue;
    ++count;
    (x.sign() == Sign::plus ? plus : minus) = true;
  }
  if (has_signs(h)) {
    if (plus && minus) return HyperSet::ball(best);
    return HyperSet::singleton(RealTropVal(plus ? Sign::plus : Sign::minus, best));
  }
  if (count > 1) return HyperSet::ball(best);
  return HyperSet::singleton(RealTropVal(Sign::plus, best));
}

HyperSet hyper_add(Hyperfield h, const HyperSet& s, const RealTropVal& x) {
  require_member(h, x);
  if (!s.is_ball()) {
    const RealTropVal pair[] = {s.element(), x};
    return hyper_sum(h, pair);
  }
  if (!x.is_zero() && x.val() < s.threshold()) return HyperSet::singleton(x);
  return s;
}

HyperSet hyper_add(Hyperfield h, const HyperSet& a, const HyperSet& b) {
  if (!a.is_ball()) return hyper_add(h, b, a.element());
  if (!b.is_ball()) return hyper_add(h, a, b.element());
  return HyperSet::ball(min(a.threshold(), b.threshold()));
}

bool contains_zero(const HyperSet& s) { return s.contains_zero(); }

const char* to_string(HyperfieldHom f) {
  switch (f) {
    case HyperfieldHom::abs: return "abs";
    case HyperfieldHom::sgn: return "sgn";
    case HyperfieldHom::to_krasner: return "to-krasner";
  }
  return "?";
}

HyperfieldHom hom_from_string(std::string_view s) {
  if (s == "abs") return HyperfieldHom::abs;
  if (s == "sgn") return HyperfieldHom::sgn;
  if (s == "to-krasner") return HyperfieldHom::to_krasner;
  throw Error(ErrorKind::syntax, "unknown homomorphism '" + std::string(s) + "'");
}

Hyperfield hom_target(HyperfieldHom f, Hyperfield source) {
  switch (f) {
    case HyperfieldHom::abs:
      if (source == Hyperfield::real_tropical || source == Hyperfield::tropical) return Hyperfield::tropical;
      break;
    case HyperfieldHom::sgn:
      if (source == Hyperfield::real_tropical || source == Hyperfield::sign) return Hyperfield::sign;
      break;
    case HyperfieldHom::to_krasner:
      return Hyperfield::krasner;
  }
  throw Error(ErrorKind::invalid_argument,
              std::string(to_string(f)) + " is not defined on " + to_string(source));
}

RealTropVal pushmap(HyperfieldHom f, Hyperfield source, const RealTropVal& x) {
  hom_target(f, source);
  require_member(source, x);
  if (x.is_zero()) return x;
  switch (f) {
    case HyperfieldHom::abs: return RealTropVal(Sign::plus, x.val());
    case HyperfieldHom::sgn: return RealTropVal(x.sign(), Valuation(0));
    case HyperfieldHom::to_krasner: return RealTropVal::one();
  }
  return x;
}

}  // namespace rtrop
