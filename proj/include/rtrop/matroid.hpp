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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rtrop/hyperfield.hpp"
#include "rtrop/linalg.hpp"

namespace rtrop {

using RTVector = std::vector<RealTropVal>;
using SignVector = std::vector<Sign>;

inline constexpr std::size_t kMaxGroundSet = 62;
inline constexpr std::uint64_t kDefaultCap = 5000000;

/// Alternating function on rank-tuples of {0,...,m-1} with hyperfield values.
///
/// Only increasing tuples with nonzero value are stored, keyed by bitmask.
class GrassmannPluecker {
 public:
  GrassmannPluecker(std::size_t rank, std::size_t ground_size, Hyperfield h);

  std::size_t rank() const { return rank_; }
  std::size_t ground_size() const { return ground_size_; }
  Hyperfield hyperfield() const { return h_; }

  /// `tuple` must be strictly increasing; stores x (zero erases).
  void set(std::span<const std::size_t> tuple, const RealTropVal& x);
  void set_mask(std::uint64_t mask, const RealTropVal& x);

  /// Value on an arbitrary tuple via the alternating rule.
  RealTropVal operator()(std::span<const std::size_t> tuple) const;
  /// Value on the increasing tuple with the given support.
  RealTropVal at_mask(std::uint64_t mask) const;

  const std::map<std::uint64_t, RealTropVal>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  friend bool operator==(const GrassmannPluecker&, const GrassmannPluecker&) = default;

 private:
  std::size_t rank_;
  std::size_t ground_size_;
  Hyperfield h_;
  std::map<std::uint64_t, RealTropVal> values_;
};

std::vector<std::size_t> mask_to_indices(std::uint64_t mask);
std::uint64_t indices_to_mask(std::span<const std::size_t> idx);

/// Plücker vector of the row space of `columns` pushed to `target`.
/// Throws rank_deficient unless rank(columns) equals the number of rows.
GrassmannPluecker gp_from_matrix(const PMatrix& columns, Hyperfield target,
                                 std::uint64_t cap = kDefaultCap);

struct GpReport {
  bool ok = true;
  std::uint64_t relations_checked = 0;
  /// First violating pair (X with rank+1 elements, Y with rank-1 elements).
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
};

/// Exhaustive check of the Grassmann-Plücker relations
///   0 ∈ ⊕_k (-1)^k φ(X - x_k) φ(x_k, Y).
/// Throws cap_exceeded when the number of (X, Y) pairs exceeds `cap`.
GpReport check_gp_relations(const GrassmannPluecker& phi, std::uint64_t cap = kDefaultCap);

GrassmannPluecker pushforward_gp(const GrassmannPluecker& phi, HyperfieldHom f);

/// Scales so that the first nonzero entry is (+, 0). Throws all_zero.
RTVector normalize(const RTVector& v);
SignVector signs(const RTVector& v);
std::uint64_t support_mask(const RTVector& v);
std::uint64_t support_mask(const SignVector& v);

/// Normalized signed valuated circuits of the column matroid, sorted.
std::vector<RTVector> circuits_from_matrix(const PMatrix& columns);

/// Circuits of the underlying matroid by minimal dependent set search.
std::vector<std::uint64_t> matroid_circuit_supports(const PMatrix& columns);

struct CircuitReport {
  bool ok = true;
  std::vector<std::string> violations;
  /// Size of the largest subset containing no circuit support.
  std::size_t max_independent = 0;
};

/// Checks (C0), (C2), (C3) on normalized representatives and reports (C4).
CircuitReport check_circuit_axioms(const std::vector<RTVector>& circuits, std::size_t ground_size);

/// Signed cocircuits ±(e ↦ φ(μ, e)) over increasing (rank-1)-tuples μ.
std::vector<SignVector> signed_cocircuits(const GrassmannPluecker& phi, std::uint64_t cap = kDefaultCap);
/// Normalized valuated cocircuits of an RT function.
std::vector<RTVector> valuated_cocircuits(const GrassmannPluecker& phi, std::uint64_t cap = kDefaultCap);

/// Rank of a subset in the underlying matroid of φ.
std::size_t matroid_rank(const GrassmannPluecker& phi, std::uint64_t subset);

std::string sign_string(const SignVector& v);
/// Total order used for all emitted sign vector lists: support size, then
/// the sign string with '+' < '-' < '0'.
bool sign_vector_less(const SignVector& a, const SignVector& b);
SignVector parse_sign_string(std::string_view s);

}  // namespace rtrop
