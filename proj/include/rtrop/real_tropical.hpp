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
#include <string>
#include <string_view>
#include <vector>

#include "rtrop/covectors.hpp"
#include "rtrop/matroid.hpp"

namespace rtrop {

/// Point of real tropical projective space in signed valuation coordinates,
/// scaled so that its first nonzero coordinate is (+, 0).
class RealTropProjPoint {
 public:
  /// Normalizes; throws all_zero.
  explicit RealTropProjPoint(const RTVector& coords);

  /// "+:0,-:1/2,0:inf".
  static RealTropProjPoint parse(std::string_view text);

  const RTVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const RealTropVal& operator[](std::size_t i) const { return coords_[i]; }
  std::string str() const;

  friend bool operator==(const RealTropProjPoint&, const RealTropProjPoint&) = default;

 private:
  RTVector coords_;
};

/// Componentwise signed_value followed by normalization.
RealTropProjPoint trop_r_point(const PVector& coords);

/// 0 ∈ ⊕_{e ∈ Supp C} y_e C_e over RT.
bool hyperplane_member(const RTVector& y, const RTVector& circuit);
bool hyperplane_member(const RealTropProjPoint& y, const RTVector& circuit);

/// Columns f_0..f_m of an (n+1) x (m+1) matrix spanning the dual space.
class LinearEmbedding {
 public:
  /// Throws rank_deficient when the columns do not span.
  explicit LinearEmbedding(PMatrix columns);

  const PMatrix& matrix() const { return columns_; }
  std::size_t dim() const { return columns_.rows(); }
  std::size_t size() const { return columns_.cols(); }
  PVector column(std::size_t j) const { return columns_.column(j); }
  const std::vector<RTVector>& circuits() const { return circuits_; }

  /// Image of a point of P^n: x ↦ (f_0(x) : ... : f_m(x)).
  PVector apply(const PVector& x) const;

 private:
  PMatrix columns_;
  std::vector<RTVector> circuits_;
};

bool linear_space_member(const RealTropProjPoint& y, const LinearEmbedding& iota);
/// Same test for a raw vector; the zero vector passes.
bool linear_space_member(const RTVector& y, const std::vector<RTVector>& circuits);

/// Chains X_1 < ... < X_l of nonzero covectors, as poset indices.
struct BergmanFan {
  CovectorPoset poset;
  std::size_t rank = 0;
  std::vector<std::vector<std::size_t>> chains;

  std::vector<std::vector<std::size_t>> maximal_chains() const;
};

BergmanFan bergman_fan(const CovectorPoset& cov);

/// Level-set test: for each distinct finite valuation v of y, the signs of
/// the coordinates with valuation <= v must form a covector.
bool bergman_member(const RealTropProjPoint& y, const CovectorPoset& cov);
bool bergman_member(const RealTropProjPoint& y, const BergmanFan& fan);

}  // namespace rtrop
