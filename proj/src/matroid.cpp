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

#include "rtrop/matroid.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "rtrop/error.hpp"

namespace rtrop {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

// Calls fn(mask) for each k-subset of {0..n-1} in increasing mask order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    fn(mask);
    std::uint64_t c = mask & -mask;
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

Hyperfield check_ground(std::size_t m) {
  if (m > kMaxGroundSet) throw Error(ErrorKind::cap_exceeded, "ground set larger than 62 elements");
  return Hyperfield::real_tropical;
}

RealTropVal to_target(Hyperfield target, const RealTropVal& x) {
  switch (target) {
    case Hyperfield::real_tropical: return x;
    case Hyperfield::tropical: return pushmap(HyperfieldHom::abs, Hyperfield::real_tropical, x);
    case Hyperfield::sign: return pushmap(HyperfieldHom::sgn, Hyperfield::real_tropical, x);
    case Hyperfield::krasner: return pushmap(HyperfieldHom::to_krasner, Hyperfield::real_tropical, x);
  }
  return x;
}

bool vector_less(const RTVector& a, const RTVector& b) {
  auto sa = support_mask(a), sb = support_mask(b);
  auto ia = mask_to_indices(sa), ib = mask_to_indices(sb);
  if (ia != ib) return ia < ib;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i].sign() != b[i].sign()) return a[i].sign() > b[i].sign();
    return a[i].val() < b[i].val();
  }
  return false;
}

}  // namespace

GrassmannPluecker::GrassmannPluecker(std::size_t rank, std::size_t ground_size, Hyperfield h)
    : rank_(rank), ground_size_(ground_size), h_(h) {
  check_ground(ground_size);
  if (rank == 0 || rank > ground_size) {
    throw Error(ErrorKind::invalid_argument, "rank must lie in 1..|E|");
  }
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t indices_to_mask(std::span<const std::size_t> idx) {
  std::uint64_t m = 0;
  for (auto i : idx) m |= std::uint64_t{1} << i;
  return m;
}

void GrassmannPluecker::set(std::span<const std::size_t> tuple, const RealTropVal& x) {
  if (tuple.size() != rank_) throw Error(ErrorKind::dimension_mismatch, "tuple length differs from rank");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= ground_size_) throw Error(ErrorKind::invalid_argument, "tuple index out of range");
    if (i > 0 && tuple[i - 1] >= tuple[i]) throw Error(ErrorKind::invalid_argument, "tuple not increasing");
  }
  set_mask(indices_to_mask(tuple), x);
}

void GrassmannPluecker::set_mask(std::uint64_t mask, const RealTropVal& x) {
  if (static_cast<std::size_t>(std::popcount(mask)) != rank_) {
    throw Error(ErrorKind::dimension_mismatch, "tuple size differs from rank");
  }
  if (!is_member(h_, x)) {
    throw Error(ErrorKind::invalid_argument, x.str() + " is not an element of " + to_string(h_));
  }
  if (x.is_zero()) {
    values_.erase(mask);
  } else {
    values_[mask] = x;
  }
}

RealTropVal GrassmannPluecker::at_mask(std::uint64_t mask) const {
  auto it = values_.find(mask);
  return it == values_.end() ? RealTropVal::zero() : it->second;
}

RealTropVal GrassmannPluecker::operator()(std::span<const std::size_t> tuple) const {
  if (tuple.size() != rank_) throw Error(ErrorKind::dimension_mismatch, "tuple length differs from rank");
  std::uint64_t mask = 0;
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= ground_size_) throw Error(ErrorKind::invalid_argument, "tuple index out of range");
    std::uint64_t bit = std::uint64_t{1} << tuple[i];
    if (mask & bit) return RealTropVal::zero();
    mask |= bit;
    for (std::size_t j = 0; j < i; ++j) inversions += tuple[j] > tuple[i];
  }
  RealTropVal v = at_mask(mask);
  return inversions % 2 ? -v : v;
}

GrassmannPluecker gp_from_matrix(const PMatrix& columns, Hyperfield target, std::uint64_t cap) {
  const std::size_t r = columns.rows(), m = columns.cols();
  if (r == 0 || r > m) throw Error(ErrorKind::rank_deficient, "fewer columns than rows");
  check_ground(m);
  if (binomial(m, r) > cap) {
    throw Error(ErrorKind::cap_exceeded, "needs " + std::to_string(binomial(m, r)) + " determinants");
  }
  GrassmannPluecker phi(r, m, target);
  for_each_subset(m, r, [&](std::uint64_t mask) {
    auto idx = mask_to_indices(mask);
    phi.set_mask(mask, to_target(target, signed_value(det(columns.select_columns(idx)))));
  });
  if (phi.is_zero()) throw Error(ErrorKind::rank_deficient, "columns do not span");
  return phi;
}

GpReport check_gp_relations(const GrassmannPluecker& phi, std::uint64_t cap) {
  const std::size_t r = phi.rank(), m = phi.ground_size();
  GpReport report;
  std::uint64_t pairs = binomial(m, r + 1) * binomial(m, r - 1);
  if (pairs > cap) {
    throw Error(ErrorKind::cap_exceeded, "needs " + std::to_string(pairs) + " relations");
  }
  std::vector<std::uint64_t> ys;
  for_each_subset(m, r - 1, [&](std::uint64_t y) { ys.push_back(y); });
  std::vector<RealTropVal> terms(r + 1);
  std::vector<RealTropVal> left(r + 1);
  for_each_subset(m, r + 1, [&](std::uint64_t x) {
    if (!report.ok) return;
    auto xs = mask_to_indices(x);
    bool any = false;
    for (std::size_t k = 0; k <= r; ++k) {
      left[k] = phi.at_mask(x & ~(std::uint64_t{1} << xs[k]));
      if (k % 2) left[k] = -left[k];
      any = any || !left[k].is_zero();
    }
    for (auto y : ys) {
      ++report.relations_checked;
      if (!any) continue;
      for (std::size_t k = 0; k <= r; ++k) {
        std::uint64_t bit = std::uint64_t{1} << xs[k];
        if (left[k].is_zero() || (y & bit)) {
          terms[k] = RealTropVal::zero();
          continue;
        }
        // Moving x_k from the front into sorted position passes the smaller y's.
        RealTropVal v = phi.at_mask(y | bit);
        if (std::popcount(y & (bit - 1)) % 2) v = -v;
        terms[k] = left[k] * v;
      }
      if (!hyper_sum(phi.hyperfield(), terms).contains_zero()) {
        report.ok = false;
        report.x = xs;
        report.y = mask_to_indices(y);
        return;
      }
    }
  });
  return report;
}

GrassmannPluecker pushforward_gp(const GrassmannPluecker& phi, HyperfieldHom f) {
  GrassmannPluecker out(phi.rank(), phi.ground_size(), hom_target(f, phi.hyperfield()));
  for (const auto& [mask, v] : phi.values()) out.set_mask(mask, pushmap(f, phi.hyperfield(), v));
  return out;
}

RTVector normalize(const RTVector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const RealTropVal& x) { return !x.is_zero(); });
  if (it == v.end()) throw Error(ErrorKind::all_zero, "all coordinates are zero");
  RealTropVal s = *it;
  RTVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / s);
  return out;
}

SignVector signs(const RTVector& v) {
  SignVector s;
  s.reserve(v.size());
  for (const auto& x : v) s.push_back(x.sign());
  return s;
}

std::uint64_t support_mask(const RTVector& v) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) m |= std::uint64_t{1} << i;
  }
  return m;
}

std::uint64_t support_mask(const SignVector& v) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != Sign::zero) m |= std::uint64_t{1} << i;
  }
  return m;
}

namespace {

// Ranks of all column subsets of size <= rows + 1.
class RankTable {
 public:
  explicit RankTable(const PMatrix& columns) : columns_(columns) {}

  std::size_t operator()(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    auto idx = mask_to_indices(mask);
    std::size_t r = idx.empty() ? 0 : rank(columns_.select_columns(idx));
    cache_.emplace(mask, r);
    return r;
  }

 private:
  const PMatrix& columns_;
  std::unordered_map<std::uint64_t, std::size_t> cache_;
};

std::vector<std::uint64_t> minimal_dependent(const PMatrix& columns, RankTable& ranks) {
  const std::size_t m = columns.cols();
  check_ground(m);
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k <= std::min(m, columns.rows() + 1); ++k) {
    for_each_subset(m, k, [&](std::uint64_t s) {
      if (ranks(s) != k - 1) return;
      for (std::uint64_t rest = s; rest; rest &= rest - 1) {
        std::uint64_t e = rest & -rest;
        if (ranks(s & ~e) != k - 1) return;
      }
      out.push_back(s);
    });
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> matroid_circuit_supports(const PMatrix& columns) {
  RankTable ranks(columns);
  auto out = minimal_dependent(columns, ranks);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    return mask_to_indices(a) < mask_to_indices(b);
  });
  return out;
}

std::vector<RTVector> circuits_from_matrix(const PMatrix& columns) {
  RankTable ranks(columns);
  const std::size_t n = columns.rows(), m = columns.cols();
  std::vector<RTVector> out;
  for (std::uint64_t s : minimal_dependent(columns, ranks)) {
    auto idx = mask_to_indices(s);
    const std::size_t k = idx.size() - 1;
    RTVector c(m);
    if (k == 0) {
      // A zero column is a loop.
      c[idx[0]] = RealTropVal::one();
      out.push_back(c);
      continue;
    }
    PMatrix sub = columns.select_columns(idx);
    std::vector<std::size_t> rows;
    for_each_subset(n, k, [&](std::uint64_t rmask) {
      if (!rows.empty()) return;
      auto ri = mask_to_indices(rmask);
      if (rank(sub.select_rows(ri)) == k) rows = ri;
    });
    PMatrix block = sub.select_rows(rows);
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<std::size_t> keep;
      for (std::size_t j = 0; j <= k; ++j) {
        if (j != i) keep.push_back(j);
      }
      RealTropVal v = signed_value(det(block.select_columns(keep)));
      c[idx[i]] = i % 2 ? -v : v;
    }
    out.push_back(normalize(c));
  }
  std::sort(out.begin(), out.end(), vector_less);
  return out;
}

CircuitReport check_circuit_axioms(const std::vector<RTVector>& circuits, std::size_t ground_size) {
  check_ground(ground_size);
  CircuitReport report;
  auto violate = [&](std::string what) {
    report.ok = false;
    if (report.violations.size() < 16) report.violations.push_back(std::move(what));
  };
  std::vector<RTVector> cs;
  std::vector<std::uint64_t> supp;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i].size() != ground_size) {
      throw Error(ErrorKind::dimension_mismatch, "circuit length differs from ground set size");
    }
    std::uint64_t s = support_mask(circuits[i]);
    if (s == 0) {
      violate("C0: circuit " + std::to_string(i) + " is zero");
      continue;
    }
    cs.push_back(normalize(circuits[i]));
    supp.push_back(s);
  }
  const std::size_t n = cs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (supp[i] & ~supp[j]) == 0 && cs[i] != cs[j]) {
        violate("C2: support of circuit " + std::to_string(i) + " lies in circuit " + std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i < n && report.violations.size() < 16; ++i) {
    const RTVector& c = cs[i];
    for (std::size_t j = 0; j < n; ++j) {
      for (auto e : mask_to_indices(supp[i] & supp[j])) {
        RealTropVal alpha = -c[e] / cs[j][e];
        RTVector cp(ground_size);
        for (std::size_t g = 0; g < ground_size; ++g) cp[g] = alpha * cs[j][g];
        for (auto f : mask_to_indices(supp[i])) {
          if (!(c[f].val() < cp[f].val())) continue;
          bool found = false;
          for (std::size_t k = 0; k < n && !found; ++k) {
            const RTVector& d = cs[k];
            if (!d[e].is_zero() || d[f].is_zero()) continue;
            RealTropVal beta = c[f] / d[f];
            bool good = true;
            for (std::size_t g = 0; g < ground_size && good; ++g) {
              RealTropVal x = beta * d[g];
              if (x.val() > min(c[g].val(), cp[g].val())) continue;
              const RealTropVal pair[] = {c[g], cp[g]};
              good = hyper_sum(Hyperfield::real_tropical, pair).contains(x);
            }
            found = good;
          }
          if (!found) {
            violate("C3: circuits " + std::to_string(i) + ", " + std::to_string(j) + " at e=" +
                    std::to_string(e) + ", f=" + std::to_string(f));
          }
        }
      }
    }
  }
  if (ground_size > 24) throw Error(ErrorKind::cap_exceeded, "(C4) search limited to 24 elements");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << ground_size); ++a) {
    std::size_t size = std::popcount(a);
    if (size <= report.max_independent) continue;
    bool independent = std::none_of(supp.begin(), supp.end(), [&](std::uint64_t s) { return (s & ~a) == 0; });
    if (independent) report.max_independent = size;
  }
  return report;
}

std::string sign_string(const SignVector& v) {
  std::string s;
  for (auto x : v) s += to_char(x);
  return s;
}

SignVector parse_sign_string(std::string_view s) {
  SignVector v;
  for (char c : s) v.push_back(sign_from_char(c));
  return v;
}

bool sign_vector_less(const SignVector& a, const SignVector& b) {
  auto sa = std::popcount(support_mask(a)), sb = std::popcount(support_mask(b));
  if (sa != sb) return sa < sb;
  return sign_string(a) < sign_string(b);
}

namespace {

template <class Fn>
void for_each_cocircuit(const GrassmannPluecker& phi, std::uint64_t cap, Fn&& fn) {
  const std::size_t m = phi.ground_size(), r = phi.rank();
  if (binomial(m, r - 1) > cap) {
    throw Error(ErrorKind::cap_exceeded, "needs " + std::to_string(binomial(m, r - 1)) + " tuples");
  }
  for_each_subset(m, r - 1, [&](std::uint64_t mu) {
    RTVector v(m);
    for (std::size_t e = 0; e < m; ++e) {
      std::uint64_t bit = std::uint64_t{1} << e;
      if (mu & bit) continue;
      // φ(μ, e): e sits last, so it passes the larger μ's.
      RealTropVal x = phi.at_mask(mu | bit);
      if (std::popcount(mu & ~(bit - 1)) % 2) x = -x;
      v[e] = x;
    }
    if (support_mask(v) != 0) fn(v);
  });
}

}  // namespace

std::vector<SignVector> signed_cocircuits(const GrassmannPluecker& phi, std::uint64_t cap) {
  std::vector<SignVector> out;
  for_each_cocircuit(phi, cap, [&](const RTVector& v) {
    SignVector s = signs(v);
    out.push_back(s);
    for (auto& x : s) x = -x;
    out.push_back(s);
  });
  std::sort(out.begin(), out.end(), sign_vector_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RTVector> valuated_cocircuits(const GrassmannPluecker& phi, std::uint64_t cap) {
  std::vector<RTVector> out;
  for_each_cocircuit(phi, cap, [&](const RTVector& v) { out.push_back(normalize(v)); });
  std::sort(out.begin(), out.end(), vector_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t matroid_rank(const GrassmannPluecker& phi, std::uint64_t subset) {
  std::size_t best = 0;
  for (const auto& [basis, v] : phi.values()) {
    best = std::max<std::size_t>(best, std::popcount(basis & subset));
  }
  return best;
}

}  // namespace rtrop
