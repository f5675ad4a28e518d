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

#include <cstddef>
#include <memory>
#include <vector>

#include "rtrop/linalg.hpp"
#include "rtrop/matroid.hpp"
#include "rtrop/real_tropical.hpp"

namespace rtrop {

/// ‖f‖_{B,c}: write f = Σ λ_j b_j and return (sgn λ_j, val λ_j + c_j) for
/// the smallest j minimizing val λ_j + c_j.
///
/// Weights are valuations and must be nondecreasing. A weight of inf makes
/// the corresponding basis vector part of the kernel.
class DiagonalSignedSeminorm {
 public:
  /// Columns of `basis` are b_0..b_n. Throws singular_basis,
  /// dimension_mismatch, or invalid_argument for decreasing weights.
  DiagonalSignedSeminorm(PMatrix basis, std::vector<Valuation> weights);

  std::size_t dim() const { return basis_.rows(); }
  const PMatrix& basis() const { return basis_; }
  const std::vector<Valuation>& weights() const { return weights_; }

  /// Signed values of the coordinates λ_j (Cramer's rule).
  RTVector coordinates(const PVector& f) const;
  RealTropVal eval(const PVector& f) const;

  /// Weights shifted so that the first finite weight is 0.
  DiagonalSignedSeminorm normalized() const;
  bool is_trivially_valued() const;

  friend bool operator==(const DiagonalSignedSeminorm& a, const DiagonalSignedSeminorm& b) {
    return a.basis_ == b.basis_ && a.weights_ == b.weights_;
  }

 private:
  PMatrix basis_;
  std::vector<Valuation> weights_;
  RealTropVal det_;
};

/// Binary tree of diagonal seminorms under composition
///   (‖·‖_1 ∘ ‖·‖_2)(v) = ‖v‖_1 if |‖v‖_1| >= |‖v‖_2|, else ‖v‖_2.
class SeminormExpr {
 public:
  static SeminormExpr leaf(DiagonalSignedSeminorm s);
  /// Throws dimension_mismatch.
  static SeminormExpr compose(const SeminormExpr& left, const SeminormExpr& right);

  std::size_t dim() const;
  bool is_leaf() const;
  const DiagonalSignedSeminorm& as_leaf() const;
  const SeminormExpr& left() const;
  const SeminormExpr& right() const;

  RealTropVal eval(const PVector& f) const;
  /// Leaves in left-to-right order; the expression equals their leftmost
  /// minimum-valuation composition.
  std::vector<DiagonalSignedSeminorm> leaves() const;

 private:
  struct Node;
  explicit SeminormExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Diagonal form of an expression whose leaves have constant entries.
/// Throws not_trivially_valued otherwise.
DiagonalSignedSeminorm diagonalize(const SeminormExpr& s);

/// sgn(x) if val(x) <= val(y), else sgn(y).
Sign nondiag_fixture(const PuiseuxPoly& x, const PuiseuxPoly& y);

/// (‖f_0‖ : ... : ‖f_m‖). Throws all_zero.
RealTropProjPoint project_pi(const SeminormExpr& s, const LinearEmbedding& iota);
/// Unnormalized values on each column.
RTVector pi_values(const SeminormExpr& s, const PMatrix& columns);

/// Valuation of |‖f‖|, the unsigned seminorm underlying s.
Valuation phi_abs_eval(const SeminormExpr& s, const PVector& f);

/// f ↦ scale · sgn(det[f, μ]) |det[f, μ]| for an (n+1) x n matrix μ.
struct CocircuitSeminorm {
  PMatrix mu;
  RealTropVal scale;
  RealTropVal eval(const PVector& f) const;
};

/// ‖·‖_{B,c} as the composition ‖·‖_{μ_0} ∘ ... ∘ ‖·‖_{μ_l} with
/// μ_i = B without b_i, over the finite weights.
std::vector<CocircuitSeminorm> cocircuit_decomposition(const DiagonalSignedSeminorm& s);
RealTropVal eval_composition(const std::vector<CocircuitSeminorm>& parts, const PVector& f);

}  // namespace rtrop
