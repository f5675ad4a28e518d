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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtrop/matroid.hpp"

namespace rtrop {

/// (X ∘ Y)(e) = X(e) if X(e) != 0, else Y(e).
SignVector compose(const SignVector& x, const SignVector& y);
SignVector negate(const SignVector& x);
/// X <= Y: Y agrees with X on the support of X.
bool conforms(const SignVector& x, const SignVector& y);
/// Separation set S(X, Y) = {e : X(e) = -Y(e) != 0}.
std::uint64_t separation(const SignVector& x, const SignVector& y);

/// Finite set of sign vectors with its covering relation.
struct CovectorPoset {
  std::size_t ground_size = 0;
  /// Sorted by sign_vector_less; the zero vector comes first when present.
  std::vector<SignVector> vectors;
  /// (i, j): vectors[j] covers vectors[i].
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::optional<std::size_t> index_of(const SignVector& x) const;
  bool contains(const SignVector& x) const { return index_of(x).has_value(); }
};

/// Sorts, deduplicates and computes covers. Does not close the set.
CovectorPoset make_poset(std::size_t ground_size, std::vector<SignVector> vectors);

/// Smallest composition-closed set containing 0 and the given vectors.
/// Throws cap_exceeded when it grows beyond `cap` elements.
CovectorPoset covector_closure(std::size_t ground_size, const std::vector<SignVector>& cocircuits,
                               std::size_t cap = 200000);

struct CovectorReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// (Cov1) 0 present, (Cov2) symmetric, (Cov3) closed under ∘, (Cov4) elimination.
CovectorReport check_covector_axioms(const CovectorPoset& cov);

struct Flat {
  std::uint64_t elements = 0;
  std::size_t rank = 0;
};

/// The zero set X^0, certified closed in the underlying matroid of φ.
/// Throws not_a_flat otherwise.
Flat covector_zero_flat(const SignVector& x, const GrassmannPluecker& phi);

}  // namespace rtrop
