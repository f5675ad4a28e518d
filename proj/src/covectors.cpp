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

#include "rtrop/covectors.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "rtrop/error.hpp"

namespace rtrop {

SignVector compose(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::dimension_mismatch, "sign vector lengths differ");
  SignVector z = x;
  for (std::size_t e = 0; e < z.size(); ++e) {
    if (z[e] == Sign::zero) z[e] = y[e];
  }
  return z;
}

SignVector negate(const SignVector& x) {
  SignVector z = x;
  for (auto& s : z) s = -s;
  return z;
}

bool conforms(const SignVector& x, const SignVector& y) {
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] != Sign::zero && x[e] != y[e]) return false;
  }
  return true;
}

std::uint64_t separation(const SignVector& x, const SignVector& y) {
  std::uint64_t s = 0;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] != Sign::zero && x[e] == -y[e]) s |= std::uint64_t{1} << e;
  }
  return s;
}

std::optional<std::size_t> CovectorPoset::index_of(const SignVector& x) const {
  auto it = std::lower_bound(vectors.begin(), vectors.end(), x, sign_vector_less);
  if (it == vectors.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - vectors.begin());
}

CovectorPoset make_poset(std::size_t ground_size, std::vector<SignVector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ground_size) throw Error(ErrorKind::dimension_mismatch, "sign vector length");
  }
  std::sort(vectors.begin(), vectors.end(), sign_vector_less);
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  CovectorPoset p;
  p.ground_size = ground_size;
  p.vectors = std::move(vectors);
  const std::size_t n = p.vectors.size();
  // Strictly larger elements have strictly larger support, hence larger index.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> up;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (conforms(p.vectors[i], p.vectors[j]) && p.vectors[i] != p.vectors[j]) up.push_back(j);
    }
    for (auto j : up) {
      bool cover = std::none_of(up.begin(), up.end(), [&](std::size_t k) {
        return k != j && conforms(p.vectors[k], p.vectors[j]);
      });
      if (cover) p.covers.emplace_back(i, j);
    }
  }
  return p;
}

CovectorPoset covector_closure(std::size_t ground_size, const std::vector<SignVector>& cocircuits,
                               std::size_t cap) {
  std::set<SignVector> seen;
  std::vector<SignVector> all;
  auto add = [&](const SignVector& v) {
    if (v.size() != ground_size) throw Error(ErrorKind::dimension_mismatch, "sign vector length");
    if (seen.insert(v).second) {
      all.push_back(v);
      if (all.size() > cap) {
        throw Error(ErrorKind::cap_exceeded, "covector closure exceeds " + std::to_string(cap));
      }
    }
  };
  add(SignVector(ground_size, Sign::zero));
  for (const auto& c : cocircuits) add(c);
  // Every composite is a composite of a shorter composite with a generator.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cocircuits) {
      add(compose(all[i], c));
      add(compose(c, all[i]));
    }
  }
  return make_poset(ground_size, std::move(all));
}

namespace {

// Is there Z in cov with Z(e) = 0 and Z = xy off the separation set s?
bool has_eliminant(const CovectorPoset& cov, const SignVector& xy, std::uint64_t s, std::size_t e) {
  auto free_bits = mask_to_indices(s & ~(std::uint64_t{1} << e));
  std::size_t combos = 1;
  for (std::size_t i = 0; i < free_bits.size() && combos <= cov.vectors.size(); ++i) combos *= 3;
  if (combos > cov.vectors.size()) {
    return std::any_of(cov.vectors.begin(), cov.vectors.end(), [&](const SignVector& z) {
      if (z[e] != Sign::zero) return false;
      for (std::size_t g = 0; g < z.size(); ++g) {
        if (!(s >> g & 1) && z[g] != xy[g]) return false;
      }
      return true;
    });
  }
  SignVector z = xy;
  z[e] = Sign::zero;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    for (auto g : free_bits) {
      z[g] = static_cast<Sign>(static_cast<int>(c % 3) - 1);
      c /= 3;
    }
    if (cov.contains(z)) return true;
  }
  return false;
}

}  // namespace

CovectorReport check_covector_axioms(const CovectorPoset& cov) {
  CovectorReport r;
  auto violate = [&](std::string what) {
    r.ok = false;
    if (r.violations.size() < 16) r.violations.push_back(std::move(what));
  };
  const auto& vs = cov.vectors;
  if (!cov.contains(SignVector(cov.ground_size, Sign::zero))) violate("Cov1: zero vector missing");
  for (const auto& x : vs) {
    if (!cov.contains(negate(x))) violate("Cov2: missing negative of " + sign_string(x));
  }
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      if (!cov.contains(compose(x, y))) {
        violate("Cov3: " + sign_string(x) + " o " + sign_string(y) + " missing");
      }
    }
  }
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      std::uint64_t s = separation(x, y);
      if (!s) continue;
      SignVector xy = compose(x, y);
      for (std::uint64_t rest = s; rest; rest &= rest - 1) {
        std::size_t e = std::countr_zero(rest);
        bool found = has_eliminant(cov, xy, s, e);
        if (!found) {
          violate("Cov4: " + sign_string(x) + ", " + sign_string(y) + " at e=" + std::to_string(e));
        }
      }
    }
  }
  return r;
}

Flat covector_zero_flat(const SignVector& x, const GrassmannPluecker& phi) {
  if (x.size() != phi.ground_size()) throw Error(ErrorKind::dimension_mismatch, "sign vector length");
  std::uint64_t zero = 0;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] == Sign::zero) zero |= std::uint64_t{1} << e;
  }
  std::size_t r = matroid_rank(phi, zero);
  for (std::size_t e = 0; e < x.size(); ++e) {
    std::uint64_t bit = std::uint64_t{1} << e;
    if (!(zero & bit) && matroid_rank(phi, zero | bit) == r) {
      throw Error(ErrorKind::not_a_flat,
                  "zero set of " + sign_string(x) + " is not closed: element " + std::to_string(e) + " lies in its span");
    }
  }
  return {zero, r};
}

}  // namespace rtrop
