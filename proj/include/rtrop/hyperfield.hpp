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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "rtrop/rational.hpp"

namespace rtrop {

// Elements of the hyperfields K, S, T and RT are all carried by a pair
// (sign, valuation). Magnitudes are stored additively: the multiplicative
// value a >= 0 is stored as -log a, so 0 maps to +inf and |a| > |b| holds
// exactly when val(a) < val(b).
//
//   K:  sign in {0,+}, valuation in {0, inf}
//   S:  sign in {0,+,-}, valuation in {0, inf}
//   T:  sign in {0,+}, any valuation
//   RT: any sign, any valuation
//
// In every case sign == 0 iff valuation == inf.

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
inline Sign operator-(Sign a) { return static_cast<Sign>(-static_cast<int>(a)); }
inline Sign sign_of(int x) { return x > 0 ? Sign::plus : (x < 0 ? Sign::minus : Sign::zero); }

char to_char(Sign s);
/// Accepts '+', '-', '0'.
Sign sign_from_char(char c);

enum class Hyperfield { krasner, sign, tropical, real_tropical };

const char* to_string(Hyperfield h);
/// Accepts "K", "S", "T", "RT".
Hyperfield hyperfield_from_string(std::string_view s);

/// Element of a hyperfield in (sign, valuation) form.
class RealTropVal {
 public:
  RealTropVal() : sign_(Sign::zero), val_(Valuation::infinity()) {}
  /// Throws when sign == zero disagrees with val == inf.
  RealTropVal(Sign sign, Valuation val);

  static RealTropVal zero() { return {}; }
  static RealTropVal one() { return {Sign::plus, Valuation(0)}; }

  Sign sign() const { return sign_; }
  const Valuation& val() const { return val_; }
  bool is_zero() const { return sign_ == Sign::zero; }

  RealTropVal operator-() const;
  /// Signs multiply, valuations add.
  friend RealTropVal operator*(const RealTropVal& a, const RealTropVal& b);
  /// Requires b != 0.
  friend RealTropVal operator/(const RealTropVal& a, const RealTropVal& b);
  friend bool operator==(const RealTropVal& a, const RealTropVal& b) = default;

  /// "+:1/2", "-:0", "0:inf".
  std::string str() const;
  static RealTropVal parse(std::string_view text);

 private:
  Sign sign_;
  Valuation val_;
};

/// Multiplicative rendering: "+e^{-1/2}", "-1", "0".
std::string multiplicative_display(const RealTropVal& x);

/// Total order on RT by real value sgn(x)*exp(-val(x)).
std::strong_ordering real_order(const RealTropVal& a, const RealTropVal& b);

/// Typed views of the smaller hyperfields.
struct TropVal {
  Valuation val = Valuation::infinity();
  friend TropVal operator*(const TropVal& a, const TropVal& b) { return {a.val + b.val}; }
  friend bool operator==(const TropVal&, const TropVal&) = default;
  RealTropVal element() const;
};

struct Krasner {
  bool one = false;
  friend Krasner operator*(Krasner a, Krasner b) { return {a.one && b.one}; }
  friend bool operator==(Krasner, Krasner) = default;
  RealTropVal element() const;
};

bool is_member(Hyperfield h, const RealTropVal& x);

/// Result of a hypersum: a singleton or the ball {0} ∪ {x : val(x) >= threshold}.
///
/// For S and K the only ball is the whole hyperfield (threshold 0).
class HyperSet {
 public:
  static HyperSet singleton(RealTropVal x);
  static HyperSet ball(Valuation threshold);

  bool is_ball() const { return ball_; }
  const RealTropVal& element() const { return element_; }
  const Valuation& threshold() const { return threshold_; }

  bool contains(const RealTropVal& x) const;
  bool contains_zero() const { return ball_ || element_.is_zero(); }

  friend bool operator==(const HyperSet& a, const HyperSet& b);
  std::string str() const;

 private:
  HyperSet() = default;
  bool ball_ = false;
  RealTropVal element_;
  Valuation threshold_ = Valuation::infinity();
};

RealTropVal hyper_mul(Hyperfield h, const RealTropVal& a, const RealTropVal& b);

/// Iterated hypersum of a nonempty list.
HyperSet hyper_sum(Hyperfield h, std::span<const RealTropVal> xs);

/// One fold step: every element of `s` added to `x`, collected.
HyperSet hyper_add(Hyperfield h, const HyperSet& s, const RealTropVal& x);
/// Union of all pairwise sums of two hypersets.
HyperSet hyper_add(Hyperfield h, const HyperSet& a, const HyperSet& b);

bool contains_zero(const HyperSet& s);

enum class HyperfieldHom { abs, sgn, to_krasner };

const char* to_string(HyperfieldHom f);
HyperfieldHom hom_from_string(std::string_view s);

/// Codomain of `f` applied to elements of `source`; throws on mismatch.
Hyperfield hom_target(HyperfieldHom f, Hyperfield source);
RealTropVal pushmap(HyperfieldHom f, Hyperfield source, const RealTropVal& x);

}  // namespace rtrop
