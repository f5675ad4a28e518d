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

/// Coordinate projection composed with a permutation: column j of the
/// target embedding is column map[j] of the source.
struct Morphism {
  std::size_t target = 0;
  std::vector<std::size_t> map;
};

/// y'_j = y_{map[j]}, renormalized. Throws all_zero.
RealTropProjPoint apply_morphism(const RealTropProjPoint& y, const std::vector<std::size_t>& map);

/// Throws morphism_mismatch unless column map[j] of `source` equals column
/// j of `target` for every j.
void check_morphism(const LinearEmbedding& source, const LinearEmbedding& target,
                    const std::vector<std::size_t>& map);

/// π_{ι'}(s) equals the image of π_ι(s) under the morphism.
bool check_diagram_commutes(const SeminormExpr& s, const LinearEmbedding& source,
                            const LinearEmbedding& target, const std::vector<std::size_t>& map);

struct FamilyMember {
  LinearEmbedding embedding;
  RealTropProjPoint point;
  std::vector<Morphism> morphisms;
};

struct CompatibleFamily {
  std::vector<FamilyMember> members;
};

/// Points π_ι(s) for each embedding, with the given morphisms attached.
CompatibleFamily family_from_seminorm(const SeminormExpr& s, const std::vector<LinearEmbedding>& embeddings,
                                      const std::vector<std::vector<Morphism>>& morphisms = {});

/// Throws inconsistent_family when some morphism does not carry its source
/// point to its target point.
void check_family(const CompatibleFamily& fam);

struct ProbeValue {
  PVector probe;
  RealTropVal value;
};

/// ‖f‖ = y_f / y_a for a reference functional a, read off every member
/// containing both a and f as columns.
///
/// The reference is the first standard dual vector e_k* with a nonzero
/// coordinate in some member. Throws no_applicable_embedding or
/// inconsistent_family.
std::vector<ProbeValue> reconstruct_from_family(const CompatibleFamily& fam, const std::vector<PVector>& probes);

}  // namespace rtrop
