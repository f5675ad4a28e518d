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

#include <optional>

#include "doctest.h"
#include "rtrop/error.hpp"
#include "rtrop/hyperfield.hpp"
#include "support.hpp"

using namespace rtrop;

namespace {

RealTropVal R(const char* s) { return RealTropVal::parse(s); }

const Hyperfield kAll[] = {Hyperfield::krasner, Hyperfield::sign, Hyperfield::tropical, Hyperfield::real_tropical};

std::vector<RealTropVal> grid(Hyperfield h, std::initializer_list<long> vals = {0, 1, 2}) {
  std::vector<RealTropVal> out{RealTropVal::zero()};
  for (long v : vals) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      RealTropVal x(s, Valuation(v));
      if (is_member(h, x)) out.push_back(x);
    }
  }
  return out;
}

RealTropVal minus_one(Hyperfield h) {
  return h == Hyperfield::krasner || h == Hyperfield::tropical ? RealTropVal::one() : R("-:0");
}

}  // namespace

TEST_CASE("multiplication") {
  CHECK(hyper_mul(Hyperfield::real_tropical, R("+:1/2"), R("-:1")) == R("-:3/2"));
  CHECK(hyper_mul(Hyperfield::real_tropical, R("-:7"), RealTropVal::zero()).is_zero());
  CHECK(hyper_mul(Hyperfield::sign, R("-:0"), R("-:0")) == R("+:0"));
  CHECK_THROWS_AS(hyper_mul(Hyperfield::sign, R("+:1"), R("+:0")), Error);
}

TEST_CASE("hypersums") {
  RealTropVal a[] = {R("+:0"), R("-:0")};
  CHECK(hyper_sum(Hyperfield::real_tropical, a) == HyperSet::ball(Valuation(0)));
  RealTropVal b[] = {R("+:0"), R("+:0"), R("-:1")};
  CHECK(hyper_sum(Hyperfield::real_tropical, b) == HyperSet::singleton(R("+:0")));
  RealTropVal z[] = {RealTropVal::zero()};
  CHECK(hyper_sum(Hyperfield::real_tropical, z) == HyperSet::singleton(RealTropVal::zero()));
  RealTropVal t[] = {R("+:1"), R("+:1"), R("+:2")};
  CHECK(hyper_sum(Hyperfield::tropical, t) == HyperSet::ball(Valuation(1)));
  RealTropVal k[] = {R("+:0"), R("+:0")};
  CHECK(hyper_sum(Hyperfield::krasner, k) == HyperSet::ball(Valuation(0)));
  CHECK(hyper_sum(Hyperfield::sign, a) == HyperSet::ball(Valuation(0)));
  CHECK_THROWS_AS(hyper_sum(Hyperfield::real_tropical, std::span<const RealTropVal>{}), Error);
}

TEST_CASE("zero membership") {
  CHECK(HyperSet::ball(Valuation(0)).contains_zero());
  CHECK_FALSE(HyperSet::singleton(R("+:0")).contains_zero());
  CHECK(HyperSet::ball(Valuation(1)).contains(R("-:3")));
  CHECK_FALSE(HyperSet::ball(Valuation(1)).contains(R("-:1/2")));

  rtrop::testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    std::vector<PuiseuxPoly> lambda;
    PuiseuxPoly sum(0);
    long k = rng.uniform(1, 4);
    for (long j = 0; j < k; ++j) {
      lambda.push_back(rng.puiseux(false, 0.2));
      sum += lambda.back();
    }
    lambda.push_back(-sum);
    std::vector<RealTropVal> v;
    for (const auto& l : lambda) v.push_back(signed_value(l));
    CHECK(hyper_sum(Hyperfield::real_tropical, v).contains_zero());
  }
}

TEST_CASE("every association order agrees with the hypersum") {
  for (Hyperfield h : kAll) {
    CAPTURE(to_string(h));
    const auto g = grid(h);
    const std::size_t base = g.size();
    // sums[L][code]: hypersum of the list whose i-th entry is digit i of code.
    std::vector<std::vector<HyperSet>> sums(7);
    std::vector<std::size_t> pow{1};
    for (std::size_t len = 1; len <= 6; ++len) {
      pow.push_back(pow.back() * base);
      std::vector<RealTropVal> xs(len);
      for (std::size_t code = 0; code < pow[len]; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < len; ++i, c /= base) xs[i] = g[c % base];
        HyperSet s = hyper_sum(h, xs);
        for (std::size_t k = 1; k < len; ++k) {
          const HyperSet& left = sums[k][code % pow[k]];
          const HyperSet& right = sums[len - k][code / pow[k]];
          if (!(hyper_add(h, left, right) == s)) {
            FAIL_CHECK("split mismatch");
          }
          if (k == len - 1 && !(hyper_add(h, left, xs.back()) == s)) {
            FAIL_CHECK("fold mismatch");
          }
        }
        sums[len].push_back(s);
      }
    }
    CHECK(sums[6].size() == pow[6]);
  }
}

TEST_CASE("additive inverse") {
  for (Hyperfield h : kAll) {
    for (const auto& x : grid(h, {-1, 0, 1, 2, 5})) {
      RealTropVal pair[] = {x, hyper_mul(h, minus_one(h), x)};
      CHECK(hyper_sum(h, pair).contains_zero());
    }
  }
}

TEST_CASE("homomorphisms") {
  CHECK(pushmap(HyperfieldHom::abs, Hyperfield::real_tropical, R("-:3/2")) == R("+:3/2"));
  CHECK(pushmap(HyperfieldHom::sgn, Hyperfield::real_tropical, R("-:3/2")) == R("-:0"));
  CHECK(pushmap(HyperfieldHom::to_krasner, Hyperfield::sign, RealTropVal::zero()).is_zero());
  CHECK(hom_target(HyperfieldHom::abs, Hyperfield::real_tropical) == Hyperfield::tropical);
  CHECK_THROWS_AS(hom_target(HyperfieldHom::abs, Hyperfield::sign), Error);
  CHECK_THROWS_AS(hom_target(HyperfieldHom::sgn, Hyperfield::tropical), Error);

  struct Case {
    HyperfieldHom f;
    Hyperfield source;
  };
  const Case cases[] = {{HyperfieldHom::abs, Hyperfield::real_tropical},
                        {HyperfieldHom::sgn, Hyperfield::real_tropical},
                        {HyperfieldHom::to_krasner, Hyperfield::real_tropical},
                        {HyperfieldHom::to_krasner, Hyperfield::sign},
                        {HyperfieldHom::to_krasner, Hyperfield::tropical},
                        {HyperfieldHom::abs, Hyperfield::tropical},
                        {HyperfieldHom::sgn, Hyperfield::sign}};
  for (const auto& c : cases) {
    CAPTURE(to_string(c.f));
    Hyperfield target = hom_target(c.f, c.source);
    const auto g = grid(c.source);
    const auto probes = grid(c.source, {-1, 0, 1, 2, 3, 4});
    for (const auto& x : g) {
      for (const auto& y : g) {
        RealTropVal xy[] = {x, y};
        HyperSet s = hyper_sum(c.source, xy);
        RealTropVal fxy[] = {pushmap(c.f, c.source, x), pushmap(c.f, c.source, y)};
        HyperSet fs = hyper_sum(target, fxy);
        CHECK(pushmap(c.f, c.source, hyper_mul(c.source, x, y)) ==
              hyper_mul(target, fxy[0], fxy[1]));
        for (const auto& z : probes) {
          if (s.contains(z)) CHECK(fs.contains(pushmap(c.f, c.source, z)));
        }
      }
    }
  }
}

TEST_CASE("display and parsing") {
  CHECK(multiplicative_display(R("+:1/2")) == "+e^{-1/2}");
  CHECK(multiplicative_display(R("-:0")) == "-1");
  CHECK(multiplicative_display(RealTropVal::zero()) == "0");
  CHECK(R("0:inf").is_zero());
  CHECK(R("-:2/4").str() == "-:1/2");
  CHECK_THROWS_AS(R("+:inf"), Error);
  CHECK_THROWS_AS(R("*:1"), Error);
  CHECK(real_order(R("-:0"), R("-:1")) == std::strong_ordering::less);
  CHECK(real_order(R("+:0"), R("+:1")) == std::strong_ordering::greater);
  CHECK(HyperSet::ball(Valuation::infinity()) == HyperSet::singleton(RealTropVal::zero()));
}
