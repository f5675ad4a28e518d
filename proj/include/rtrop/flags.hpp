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
#include <vector>

#include "rtrop/seminorm.hpp"

namespace rtrop {

/// Flag V_0 ⊊ V_1 ⊊ ... ⊊ V_l = V over Q with one region choice per step.
///
/// V_i = V_{i-1} + <steps[i-1]>; the chosen region of V_i \ V_{i-1} is the
/// open half containing regions[i-1] * steps[i-1]. Weights d_1..d_l are in
/// valuation form, nonincreasing, with d_l = 0.
struct SignedFlag {
  std::size_t dim = 0;
  std::vector<QVector> kernel;
  std::vector<QVector> steps;
  std::vector<Sign> regions;
  std::vector<Valuation> weights;

  std::size_t length() const { return steps.size(); }
};

/// Flag of a trivially valued diagonal seminorm: V_0 is spanned by the
/// infinite-weight basis vectors and V_i adds b_{l-i}.
SignedFlag flag_from_seminorm(const DiagonalSignedSeminorm& s);
DiagonalSignedSeminorm seminorm_from_flag(const SignedFlag& f);

/// Same subspaces and weights, and region choices that agree everywhere or
/// disagree everywhere.
bool equivalent(const SignedFlag& a, const SignedFlag& b);

/// Flag with steps of equal weight merged; blocks[i] spans V'_{i+1} mod V'_i.
struct UnsignedFlag {
  std::size_t dim = 0;
  std::vector<QVector> kernel;
  std::vector<std::vector<QVector>> blocks;
  std::vector<Valuation> weights;

  bool is_complete() const;
};

UnsignedFlag phi_flag(const SignedFlag& f);
bool equivalent(const UnsignedFlag& a, const UnsignedFlag& b);

/// Representatives of the signed flag classes over a flag whose blocks are
/// all one-dimensional. Throws infinite_fiber otherwise.
std::vector<SignedFlag> phi_fiber(const UnsignedFlag& f);

}  // namespace rtrop
