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

#include "rtrop/error.hpp"

namespace rtrop {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::all_zero: return "all_zero";
    case ErrorKind::rank_deficient: return "rank_deficient";
    case ErrorKind::cap_exceeded: return "cap_exceeded";
    case ErrorKind::singular_basis: return "singular_basis";
    case ErrorKind::not_a_flat: return "not_a_flat";
    case ErrorKind::not_trivially_valued: return "not_trivially_valued";
    case ErrorKind::infinite_fiber: return "infinite_fiber";
    case ErrorKind::morphism_mismatch: return "morphism_mismatch";
    case ErrorKind::no_applicable_embedding: return "no_applicable_embedding";
    case ErrorKind::inconsistent_family: return "inconsistent_family";
  }
  return "unknown";
}

}  // namespace rtrop
