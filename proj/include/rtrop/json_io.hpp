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

#include <vector>

#include "json.hpp"
#include "rtrop/covectors.hpp"
#include "rtrop/family.hpp"
#include "rtrop/flags.hpp"
#include "rtrop/matroid.hpp"
#include "rtrop/real_tropical.hpp"
#include "rtrop/seminorm.hpp"

namespace rtrop::json_io {

using nlohmann::json;

// Every reader throws Error(syntax) on malformed input.

json to_json(const Rational& q);
json to_json(const Valuation& v);
Valuation valuation_from_json(const json& j);

/// {"sign": "+", "val": "1/2"}
json to_json(const RealTropVal& x);
RealTropVal rt_from_json(const json& j);

/// ["+", "1/2"]
json to_pair(const RealTropVal& x);
RealTropVal rt_from_pair(const json& j);
json to_pairs(const RTVector& v);
RTVector rt_vector_from_json(const json& j);

json to_json(const HyperSet& s);
HyperSet hyperset_from_json(const json& j);

/// Entries are integers or Puiseux literals given as strings.
PuiseuxPoly puiseux_from_json(const json& j);
json to_json(const PuiseuxPoly& p);
/// Array of rows.
PMatrix matrix_from_json(const json& j);
json to_json(const PMatrix& m);
PVector pvector_from_json(const json& j);
json to_json(const PVector& v);
QVector qvector_from_json(const json& j);
json to_json(const QVector& v);

json to_json(const GrassmannPluecker& phi);
GrassmannPluecker gp_from_json(const json& j);

json to_json(const CovectorPoset& p);
CovectorPoset poset_from_json(const json& j);

json to_json(const BergmanFan& fan);

/// {"kind": "leaf", "basis": [b_0, ..., b_n], "c": ["0", "1", "inf"]} or
/// {"kind": "compose", "left": ..., "right": ...}. Each b_j is a vector.
json to_json(const DiagonalSignedSeminorm& s);
json to_json(const SeminormExpr& s);
SeminormExpr seminorm_from_json(const json& j);

json to_json(const SignedFlag& f);
SignedFlag flag_from_json(const json& j);
json to_json(const UnsignedFlag& f);

/// [{"embedding": rows, "point": pairs, "morphisms": [{"target": i, "map": [...]}]}]
json to_json(const CompatibleFamily& fam);
CompatibleFamily family_from_json(const json& j);

}  // namespace rtrop::json_io
