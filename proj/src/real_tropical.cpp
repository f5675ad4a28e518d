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

#include "rtrop/real_tropical.hpp"

#include <algorithm>
#include <set>

#include "rtrop/error.hpp"

namespace rtrop {

RealTropProjPoint::RealTropProjPoint(const RTVector& coords) : coords_(normalize(coords)) {}

RealTropProjPoint RealTropProjPoint::parse(std::string_view text) {
  RTVector v;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    v.push_back(RealTropVal::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RealTropProjPoint(v);
}

std::string RealTropProjPoint::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].str();
  }
  return s;
}

RealTropProjPoint trop_r_point(const PVector& coords) {
  RTVector v;
  v.reserve(coords.size());
  for (const auto& x : coords) v.push_back(signed_value(x));
  return RealTropProjPoint(v);
}

bool hyperplane_member(const RTVector& y, const RTVector& circuit) {
  if (y.size() != circuit.size()) throw Error(ErrorKind::dimension_mismatch, "point and circuit lengths differ");
  RTVector terms;
  for (std::size_t e = 0; e < y.size(); ++e) {
    if (!circuit[e].is_zero()) terms.push_back(y[e] * circuit[e]);
  }
  if (terms.empty()) return true;
  return hyper_sum(Hyperfield::real_tropical, terms).contains_zero();
}

bool hyperplane_member(const RealTropProjPoint& y, const RTVector& circuit) {
  return hyperplane_member(y.coords(), circuit);
}

LinearEmbedding::LinearEmbedding(PMatrix columns) : columns_(std::move(columns)) {
  if (columns_.rows() == 0 || rank(columns_) != columns_.rows()) {
    throw Error(ErrorKind::rank_deficient, "embedding columns do not span the dual space");
  }
  circuits_ = circuits_from_matrix(columns_);
}

PVector LinearEmbedding::apply(const PVector& x) const {
  if (x.size() != dim()) throw Error(ErrorKind::dimension_mismatch, "point length differs from n+1");
  PVector out(size());
  for (std::size_t j = 0; j < size(); ++j) {
    PuiseuxPoly s;
    for (std::size_t i = 0; i < dim(); ++i) s += columns_(i, j) * x[i];
    out[j] = std::move(s);
  }
  return out;
}

bool linear_space_member(const RTVector& y, const std::vector<RTVector>& circuits) {
  return std::all_of(circuits.begin(), circuits.end(),
                     [&](const RTVector& c) { return hyperplane_member(y, c); });
}

bool linear_space_member(const RealTropProjPoint& y, const LinearEmbedding& iota) {
  if (y.size() != iota.size()) throw Error(ErrorKind::dimension_mismatch, "point length differs from m+1");
  return linear_space_member(y.coords(), iota.circuits());
}

std::vector<std::vector<std::size_t>> BergmanFan::maximal_chains() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : chains) {
    if (c.size() == rank) out.push_back(c);
  }
  return out;
}

BergmanFan bergman_fan(const CovectorPoset& cov) {
  BergmanFan fan;
  fan.poset = cov;
  const std::size_t n = cov.vectors.size();
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cov.vectors[i] != cov.vectors[j] && conforms(cov.vectors[i], cov.vectors[j])) above[i].push_back(j);
    }
  }
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self) -> void {
    fan.chains.push_back(chain);
    fan.rank = std::max(fan.rank, chain.size());
    for (auto j : above[chain.back()]) {
      chain.push_back(j);
      self(self);
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (support_mask(cov.vectors[i]) == 0) continue;
    chain.assign(1, i);
    extend(extend);
  }
  std::sort(fan.chains.begin(), fan.chains.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return fan;
}

bool bergman_member(const RealTropProjPoint& y, const CovectorPoset& cov) {
  if (y.size() != cov.ground_size) throw Error(ErrorKind::dimension_mismatch, "point length differs from ground set");
  std::set<Rational> levels;
  for (const auto& x : y.coords()) {
    if (!x.is_zero()) levels.insert(x.val().value());
  }
  for (const auto& v : levels) {
    SignVector s(y.size(), Sign::zero);
    for (std::size_t e = 0; e < y.size(); ++e) {
      if (!y[e].is_zero() && y[e].val().value() <= v) s[e] = y[e].sign();
    }
    if (!cov.contains(s)) return false;
  }
  return true;
}

bool bergman_member(const RealTropProjPoint& y, const BergmanFan& fan) { return bergman_member(y, fan.poset); }

}  // namespace rtrop
