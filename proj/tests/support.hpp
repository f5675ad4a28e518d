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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rtrop/covectors.hpp"
#include "rtrop/flags.hpp"
#include "rtrop/linalg.hpp"
#include "rtrop/matroid.hpp"
#include "rtrop/puiseux.hpp"
#include "rtrop/real_tropical.hpp"
#include "rtrop/seminorm.hpp"

namespace rtrop::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(g_); }
  std::mt19937_64& engine() { return g_; }

  Rational rational(long num = 5, long den = 3) {
    long n = 0;
    while (n == 0) n = uniform(-num, num);
    return Rational(mpq_class(n, uniform(1, den)));
  }

  /// Sparse element of Q[t^Q] with exponents in (1/2)Z; zero with
  /// probability `zero_prob`. Constant when `trivial`.
  PuiseuxPoly puiseux(bool trivial, double zero_prob = 0.25, long max_half_exp = 4) {
    if (coin(zero_prob)) return PuiseuxPoly(0);
    if (trivial) return PuiseuxPoly(rational());
    std::vector<Term> terms;
    long count = uniform(1, 2);
    for (long i = 0; i < count; ++i) {
      terms.push_back({rational(), Rational(mpq_class(uniform(-1, max_half_exp), 2))});
    }
    PuiseuxPoly p = PuiseuxPoly::from_terms(terms);
    return p.is_zero() ? PuiseuxPoly(1) : p;
  }

  PMatrix matrix(std::size_t rows, std::size_t cols, bool trivial, double zero_prob = 0.25) {
    PMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = puiseux(trivial, zero_prob);
    }
    return m;
  }

  /// Random matrix whose rows are independent.
  PMatrix full_rank_matrix(std::size_t rows, std::size_t cols, bool trivial, double zero_prob = 0.25) {
    for (;;) {
      PMatrix m = matrix(rows, cols, trivial, zero_prob);
      if (rank(m) == rows) return m;
    }
  }

  PVector vector(std::size_t n, bool trivial, double zero_prob = 0.2) {
    PVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(puiseux(trivial, zero_prob));
    return v;
  }

 private:
  std::mt19937_64 g_;
};

/// Signed valuation read directly off the term list.
inline RealTropVal oracle_sv(const PuiseuxPoly& p) {
  if (p.terms().empty()) return RealTropVal::zero();
  auto it = std::min_element(p.terms().begin(), p.terms().end(),
                             [](const Term& a, const Term& b) { return a.exp < b.exp; });
  return RealTropVal(it->coeff.sign() > 0 ? Sign::plus : Sign::minus, Valuation(it->exp));
}

/// Leibniz expansion over all permutations.
inline PuiseuxPoly oracle_det(const PMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  PuiseuxPoly total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    PuiseuxPoly term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

using QRow = std::vector<mpq_class>;

/// Nullspace basis of a rational matrix by plain Gauss-Jordan on mpq_class.
inline std::vector<QRow> oracle_nullspace(std::vector<QRow> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<QRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    QRow v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(v);
  }
  return basis;
}

/// Circuits of a constant matrix: supports S whose column kernel is a line
/// with full support on S.
inline std::vector<RTVector> oracle_circuits(const PMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<RTVector> out;
  for (std::uint64_t s = 1; s < (std::uint64_t(1) << cols); ++s) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < cols; ++j) {
      if (s >> j & 1) idx.push_back(j);
    }
    std::vector<QRow> a(rows, QRow(idx.size()));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < idx.size(); ++k) a[i][k] = m(i, idx[k]).constant_value().raw();
    }
    auto ker = oracle_nullspace(a, idx.size());
    if (ker.size() != 1) continue;
    if (std::any_of(ker[0].begin(), ker[0].end(), [](const mpq_class& x) { return x == 0; })) continue;
    RTVector c(cols);
    int flip = sgn(ker[0][0]);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      c[idx[k]] = RealTropVal(sgn(ker[0][k]) * flip > 0 ? Sign::plus : Sign::minus, Valuation(0));
    }
    out.push_back(c);
  }
  return out;
}

inline std::set<std::string> as_strings(const std::vector<RTVector>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) {
    std::string s;
    for (const auto& x : v) s += x.str() + ";";
    out.insert(s);
  }
  return out;
}

/// Every coordinate drawn from {0, (+,v), (-,v) : v in vals}, normalized and deduplicated.
inline std::vector<RealTropProjPoint> grid_points(std::size_t m, const std::vector<Valuation>& vals) {
  std::vector<RealTropVal> choices{RealTropVal::zero()};
  for (const auto& v : vals) {
    if (v.is_infinite()) continue;
    choices.emplace_back(Sign::plus, v);
    choices.emplace_back(Sign::minus, v);
  }
  std::vector<RealTropProjPoint> out;
  std::set<std::string> seen;
  std::vector<std::size_t> digit(m, 0);
  for (;;) {
    RTVector y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = choices[digit[i]];
    if (support_mask(y) != 0) {
      RealTropProjPoint p(y);
      if (seen.insert(p.str()).second) out.push_back(p);
    }
    std::size_t i = 0;
    while (i < m && ++digit[i] == choices.size()) digit[i++] = 0;
    if (i == m) break;
  }
  return out;
}

/// Random trivially valued diagonal seminorm with nondecreasing weights.
inline DiagonalSignedSeminorm random_diagonal(Rng& rng, std::size_t n, bool allow_infinite = true,
                                              bool trivial_basis = true) {
  for (;;) {
    PMatrix b = rng.matrix(n, n, trivial_basis, 0.3);
    if (det(b).is_zero()) continue;
    std::vector<Valuation> w;
    for (std::size_t j = 0; j < n; ++j) w.emplace_back(Rational(mpq_class(rng.uniform(0, 6), 2)));
    std::sort(w.begin(), w.end());
    if (allow_infinite) {
      std::size_t inf = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
      for (std::size_t j = n - inf; j < n; ++j) w[j] = Valuation::infinity();
    }
    return DiagonalSignedSeminorm(b, w);
  }
}

}  // namespace rtrop::testing
