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

#include "rtrop/family.hpp"

#include <optional>

#include "rtrop/error.hpp"

namespace rtrop {

RealTropProjPoint apply_morphism(const RealTropProjPoint& y, const std::vector<std::size_t>& map) {
  RTVector out;
  for (auto j : map) {
    if (j >= y.size()) throw Error(ErrorKind::morphism_mismatch, "morphism index out of range");
    out.push_back(y[j]);
  }
  return RealTropProjPoint(out);
}

void check_morphism(const LinearEmbedding& source, const LinearEmbedding& target,
                    const std::vector<std::size_t>& map) {
  if (map.size() != target.size() || source.dim() != target.dim()) {
    throw Error(ErrorKind::morphism_mismatch, "morphism shape does not fit the embeddings");
  }
  for (std::size_t j = 0; j < map.size(); ++j) {
    if (map[j] >= source.size() || source.column(map[j]) != target.column(j)) {
      throw Error(ErrorKind::morphism_mismatch,
                  "target column " + std::to_string(j) + " is not the mapped source column");
    }
  }
}

bool check_diagram_commutes(const SeminormExpr& s, const LinearEmbedding& source,
                            const LinearEmbedding& target, const std::vector<std::size_t>& map) {
  check_morphism(source, target, map);
  return apply_morphism(project_pi(s, source), map) == project_pi(s, target);
}

CompatibleFamily family_from_seminorm(const SeminormExpr& s, const std::vector<LinearEmbedding>& embeddings,
                                      const std::vector<std::vector<Morphism>>& morphisms) {
  CompatibleFamily fam;
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    fam.members.push_back({embeddings[i], project_pi(s, embeddings[i]),
                           i < morphisms.size() ? morphisms[i] : std::vector<Morphism>{}});
  }
  return fam;
}

void check_family(const CompatibleFamily& fam) {
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const auto& m = fam.members[i];
    if (m.point.size() != m.embedding.size()) {
      throw Error(ErrorKind::dimension_mismatch, "point length differs from embedding size");
    }
    for (const auto& mor : m.morphisms) {
      if (mor.target >= fam.members.size()) throw Error(ErrorKind::morphism_mismatch, "morphism target out of range");
      const auto& t = fam.members[mor.target];
      check_morphism(m.embedding, t.embedding, mor.map);
      std::optional<RealTropProjPoint> image;
      try {
        image = apply_morphism(m.point, mor.map);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::all_zero) throw;
      }
      if (!image || !(*image == t.point)) {
        throw Error(ErrorKind::inconsistent_family,
                    "member " + std::to_string(i) + " does not map to member " + std::to_string(mor.target));
      }
    }
  }
}

namespace {

std::optional<std::size_t> find_column(const LinearEmbedding& e, const PVector& f) {
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e.column(j) == f) return j;
  }
  return std::nullopt;
}

}  // namespace

std::vector<ProbeValue> reconstruct_from_family(const CompatibleFamily& fam, const std::vector<PVector>& probes) {
  if (fam.members.empty()) throw Error(ErrorKind::no_applicable_embedding, "empty family");
  check_family(fam);
  const std::size_t n = fam.members[0].embedding.dim();
  std::optional<PVector> ref;
  for (std::size_t k = 0; k < n && !ref; ++k) {
    PVector e(n, PuiseuxPoly(0));
    e[k] = PuiseuxPoly(1);
    for (const auto& m : fam.members) {
      auto j = find_column(m.embedding, e);
      if (j && !m.point[*j].is_zero()) {
        ref = e;
        break;
      }
    }
  }
  if (!ref) throw Error(ErrorKind::no_applicable_embedding, "no member has a nonzero standard dual coordinate");

  std::vector<ProbeValue> out;
  for (const auto& f : probes) {
    if (f.size() != n) throw Error(ErrorKind::dimension_mismatch, "probe length differs from n+1");
    std::optional<RealTropVal> value;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      const auto& m = fam.members[i];
      auto ja = find_column(m.embedding, *ref);
      auto jf = find_column(m.embedding, f);
      if (!ja || !jf) continue;
      if (m.point[*ja].is_zero()) {
        throw Error(ErrorKind::inconsistent_family,
                    "member " + std::to_string(i) + " vanishes on the reference functional");
      }
      RealTropVal v = m.point[*jf] / m.point[*ja];
      if (value && !(*value == v)) {
        throw Error(ErrorKind::inconsistent_family,
                    "members disagree on a probe (member " + std::to_string(i) + ")");
      }
      value = v;
    }
    if (!value) throw Error(ErrorKind::no_applicable_embedding, "no member contains the reference and the probe");
    out.push_back({f, *value});
  }
  return out;
}

}  // namespace rtrop
