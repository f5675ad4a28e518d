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

#include "rtrop/flags.hpp"

#include <algorithm>

#include "rtrop/error.hpp"

namespace rtrop {

namespace {

QVector scaled(const QVector& v, Sign s) {
  QVector out = v;
  if (s == Sign::minus) {
    for (auto& x : out) x = -x;
  }
  return out;
}

std::size_t span_rank(const std::vector<QVector>& vs) {
  return vs.empty() ? 0 : rank_q(QMatrix::from_columns(vs));
}

bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b) {
  std::size_t ra = span_rank(a), rb = span_rank(b);
  if (ra != rb) return false;
  std::vector<QVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both) == ra;
}

}  // namespace

SignedFlag flag_from_seminorm(const DiagonalSignedSeminorm& s) {
  if (!s.is_trivially_valued()) throw Error(ErrorKind::not_trivially_valued, "flags need constant basis entries");
  QMatrix b = to_rational(s.basis());
  const std::size_t n = s.dim();
  std::size_t l = 0;
  while (l < n && s.weights()[l].is_finite()) ++l;
  SignedFlag f;
  f.dim = n;
  for (std::size_t j = l; j < n; ++j) f.kernel.push_back(b.column(j));
  const Rational top = l ? s.weights()[0].value() : Rational(0);
  for (std::size_t i = 1; i <= l; ++i) {
    f.steps.push_back(b.column(l - i));
    f.regions.push_back(Sign::plus);
    f.weights.push_back(Valuation(s.weights()[l - i].value() - top));
  }
  return f;
}

DiagonalSignedSeminorm seminorm_from_flag(const SignedFlag& f) {
  const std::size_t l = f.length();
  if (f.regions.size() != l || f.weights.size() != l || f.kernel.size() + l != f.dim) {
    throw Error(ErrorKind::dimension_mismatch, "inconsistent flag data");
  }
  std::vector<QVector> cols;
  std::vector<Valuation> w;
  for (std::size_t j = 0; j < l; ++j) {
    std::size_t i = l - j;  // b_j is the step of V_i
    cols.push_back(scaled(f.steps[i - 1], f.regions[i - 1]));
    w.push_back(f.weights[i - 1]);
  }
  for (const auto& k : f.kernel) {
    cols.push_back(k);
    w.push_back(Valuation::infinity());
  }
  return DiagonalSignedSeminorm(to_puiseux(QMatrix::from_columns(cols)), w);
}

bool equivalent(const SignedFlag& a, const SignedFlag& b) {
  if (a.dim != b.dim || a.length() != b.length() || a.weights != b.weights) return false;
  if (!same_span(a.kernel, b.kernel)) return false;
  std::vector<QVector> va = a.kernel, vb = b.kernel;
  int agree = 0, disagree = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    QVector fa = scaled(a.steps[i], a.regions[i]);
    QVector fb = scaled(b.steps[i], b.regions[i]);
    va.push_back(fa);
    vb.push_back(fb);
    if (!same_span(va, vb)) return false;
    // fb = α fa + (element of V_{i-1}); the regions match iff α > 0.
    auto x = solve_q(QMatrix::from_columns(va), fb);
    if (!x) return false;
    (x->back().sign() > 0 ? agree : disagree)++;
  }
  return agree == 0 || disagree == 0;
}

bool UnsignedFlag::is_complete() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& blk) { return blk.size() == 1; });
}

UnsignedFlag phi_flag(const SignedFlag& f) {
  UnsignedFlag u;
  u.dim = f.dim;
  u.kernel = f.kernel;
  for (std::size_t i = 0; i < f.length(); ++i) {
    // Steps i and i+1 merge when d_i = d_{i+1}: only the larger space is a
    // jump of the unsigned flag.
    if (!u.blocks.empty() && u.weights.back() == f.weights[i]) {
      u.blocks.back().push_back(f.steps[i]);
    } else {
      u.blocks.push_back({f.steps[i]});
      u.weights.push_back(f.weights[i]);
    }
  }
  return u;
}

bool equivalent(const UnsignedFlag& a, const UnsignedFlag& b) {
  if (a.dim != b.dim || a.blocks.size() != b.blocks.size() || a.weights != b.weights) return false;
  std::vector<QVector> va = a.kernel, vb = b.kernel;
  if (!same_span(va, vb)) return false;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    va.insert(va.end(), a.blocks[i].begin(), a.blocks[i].end());
    vb.insert(vb.end(), b.blocks[i].begin(), b.blocks[i].end());
    if (!same_span(va, vb)) return false;
  }
  return true;
}

std::vector<SignedFlag> phi_fiber(const UnsignedFlag& f) {
  if (!f.is_complete()) {
    throw Error(ErrorKind::infinite_fiber, "a step of dimension > 1 has infinitely many signed refinements");
  }
  const std::size_t l = f.blocks.size();
  if (l > 20) throw Error(ErrorKind::cap_exceeded, "flag too long to enumerate");
  std::vector<SignedFlag> reps;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << l); ++code) {
    SignedFlag s;
    s.dim = f.dim;
    s.kernel = f.kernel;
    for (std::size_t i = 0; i < l; ++i) {
      s.steps.push_back(f.blocks[i][0]);
      s.regions.push_back(code >> i & 1 ? Sign::minus : Sign::plus);
      s.weights.push_back(f.weights[i]);
    }
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](const SignedFlag& r) { return equivalent(r, s); });
    if (fresh) reps.push_back(std::move(s));
  }
  return reps;
}

}  // namespace rtrop
