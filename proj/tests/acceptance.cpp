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

// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#include "rtrop/error.hpp"
#include "rtrop/family.hpp"
#include "support.hpp"

using namespace rtrop;
using namespace rtrop::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

RealTropVal R(const char* s) { return RealTropVal::parse(s); }

// ---------------------------------------------------------------------------
// 1. The tropical line x0 + x1 = x2.

// Real points (y0 : y1 : y0 + y1) read through valuations, case by case.
bool line_rule(const RTVector& y) {
  const RealTropVal &a = y[0], &b = y[1], &c = y[2];
  if (a.val() != b.val()) {
    const RealTropVal& dom = a.val() < b.val() ? a : b;
    return c == dom;
  }
  if (a.sign() == b.sign()) return c == a;
  return c.val() >= a.val();
}

Outcome criterion_1() {
  Outcome o;
  LinearEmbedding iota(PMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}));
  auto pattern = [](const char* s) {
    RTVector v;
    for (const char* c = s; *c; ++c) v.emplace_back(*c == '+' ? Sign::plus : Sign::minus, Valuation(0));
    return RealTropProjPoint(v);
  };
  for (auto s : {"+++", "---", "+--", "-++", "+-+", "-+-"}) {
    o.expect(linear_space_member(pattern(s), iota), std::string("pattern ") + s + " rejected");
  }
  for (auto s : {"++-", "--+"}) o.expect(!linear_space_member(pattern(s), iota), std::string("pattern ") + s + " accepted");

  std::vector<RealTropVal> choices{RealTropVal::zero()};
  for (long v : {0, 1, 2}) {
    choices.emplace_back(Sign::plus, Valuation(v));
    choices.emplace_back(Sign::minus, Valuation(v));
  }
  std::size_t checked = 0;
  for (const auto& a : choices) {
    for (const auto& b : choices) {
      for (const auto& c : choices) {
        RTVector y{a, b, c};
        if (support_mask(y) == 0) continue;
        ++checked;
        o.expect(linear_space_member(RealTropProjPoint(y), iota) == line_rule(y), "grid point " + RealTropProjPoint(y).str());
      }
    }
  }
  o.expect(checked == 342, "grid size");
  return o;
}

// ---------------------------------------------------------------------------
// 2. Order of the basis.

Outcome criterion_2() {
  Outcome o;
  PVector e1{1, 0}, e2{0, 1}, f{1, -1};
  DiagonalSignedSeminorm b(PMatrix::from_columns({e1, e2}), {Valuation(0), Valuation(0)});
  DiagonalSignedSeminorm bp(PMatrix::from_columns({e2, e1}), {Valuation(0), Valuation(0)});
  o.expect(b.eval(f) == R("+:0"), "(e1,e2) gives " + b.eval(f).str());
  o.expect(bp.eval(f) == R("-:0"), "(e2,e1) gives " + bp.eval(f).str());
  return o;
}

// ---------------------------------------------------------------------------
// 3. Axiom suites with injected corruptions.

// Lowers φ(Z a b) by 1000 for a 3-term relation on Z, a, b, c, d whose six
// values are all nonzero; that relation then has a single dominant term.
std::optional<GrassmannPluecker> corrupt_gp(const GrassmannPluecker& phi) {
  const std::size_t r = phi.rank(), m = phi.ground_size();
  if (r < 2 || m < r + 2) return std::nullopt;
  for (std::uint64_t z = 0; z < (std::uint64_t(1) << m); ++z) {
    if (static_cast<std::size_t>(__builtin_popcountll(z)) != r - 2) continue;
    auto rest = mask_to_indices(((std::uint64_t(1) << m) - 1) & ~z);
    for (std::size_t i = 0; i + 3 < rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        for (std::size_t k = j + 1; k < rest.size(); ++k) {
          for (std::size_t l = k + 1; l < rest.size(); ++l) {
            std::size_t q[4] = {rest[i], rest[j], rest[k], rest[l]};
            bool all = true;
            for (int x = 0; x < 4 && all; ++x) {
              for (int y = x + 1; y < 4 && all; ++y) {
                all = !phi.at_mask(z | std::uint64_t(1) << q[x] | std::uint64_t(1) << q[y]).is_zero();
              }
            }
            if (!all) continue;
            GrassmannPluecker bad = phi;
            std::uint64_t target = z | std::uint64_t(1) << q[0] | std::uint64_t(1) << q[1];
            RealTropVal v = phi.at_mask(target);
            bad.set_mask(target, RealTropVal(v.sign(), v.val() + Valuation(-1000)));
            return bad;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool mentions(const std::vector<std::string>& vs, const char* tag) {
  return std::any_of(vs.begin(), vs.end(), [&](const std::string& v) { return v.find(tag) != std::string::npos; });
}

Outcome criterion_3() {
  Outcome o;
  Rng rng(2026);
  std::size_t gp_corruptions = 0, circuit_corruptions = 0, covector_corruptions = 0, trivial = 0;
  for (int i = 0; i < 60; ++i) {
    bool trivially_valued = i % 3 == 0;
    std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4));
    std::size_t cols = static_cast<std::size_t>(rng.uniform(static_cast<long>(rows), 7));
    PMatrix m = rng.full_rank_matrix(rows, cols, trivially_valued, 0.3);
    const std::string tag = " (matrix " + std::to_string(i) + ")";

    auto phi = gp_from_matrix(m, Hyperfield::real_tropical);
    o.expect(check_gp_relations(phi).ok, "GP relations" + tag);
    if (auto bad = corrupt_gp(phi)) {
      ++gp_corruptions;
      o.expect(!check_gp_relations(*bad).ok, "GP corruption missed" + tag);
    }

    auto circuits = circuits_from_matrix(m);
    auto report = check_circuit_axioms(circuits, cols);
    o.expect(report.ok, "circuit axioms" + tag);
    o.expect(report.max_independent == rows, "circuit rank" + tag);
    for (const auto& c : circuits) {
      if (__builtin_popcountll(support_mask(c)) < 2) continue;
      RTVector twin = c;
      for (std::size_t e = cols; e-- > 0;) {
        if (!twin[e].is_zero()) {
          twin[e] = -twin[e];
          break;
        }
      }
      auto with_twin = circuits;
      with_twin.push_back(twin);
      auto r = check_circuit_axioms(with_twin, cols);
      o.expect(!r.ok && mentions(r.violations, "C2"), "circuit corruption missed" + tag);
      ++circuit_corruptions;
      break;
    }

    if (trivially_valued) ++trivial;
    auto cocircuits = signed_cocircuits(phi);
    auto cov = covector_closure(cols, cocircuits);
    o.expect(check_covector_axioms(cov).ok, "covector axioms" + tag);
    auto vs = cov.vectors;
    vs.erase(std::find(vs.begin(), vs.end(), cocircuits.front()));
    auto r = check_covector_axioms(make_poset(cols, vs));
    o.expect(!r.ok && mentions(r.violations, "Cov2"), "covector corruption missed" + tag);
    ++covector_corruptions;
  }
  // Deleting one circuit class of the four-element rank-2 example breaks (C3).
  auto four = circuits_from_matrix(PMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, -1}}));
  four.pop_back();
  auto r4 = check_circuit_axioms(four, 4);
  o.expect(!r4.ok && mentions(r4.violations, "C3"), "circuit deletion missed");
  // Removing a cocircuit pair before closing breaks (Cov4).
  std::vector<SignVector> fewer;
  for (const auto& c : signed_cocircuits(gp_from_matrix(PMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}), Hyperfield::real_tropical))) {
    if (sign_string(c) != "0++" && sign_string(c) != "0--") fewer.push_back(c);
  }
  auto rc = check_covector_axioms(covector_closure(3, fewer));
  o.expect(!rc.ok && mentions(rc.violations, "Cov4"), "cocircuit deletion missed");
  o.expect(gp_corruptions > 0 && circuit_corruptions > 0 && covector_corruptions > 0 && trivial > 0,
           "no corruption injected");
  return o;
}

// ---------------------------------------------------------------------------
// 4. Bergman fan membership equals circuit membership.

Outcome criterion_4() {
  Outcome o;
  Rng rng(4);
  const std::vector<Valuation> vals{Valuation(0), Valuation(1), Valuation::infinity()};
  for (int i = 0; i < 24; ++i) {
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, 3));
    std::size_t m = static_cast<std::size_t>(rng.uniform(std::max<long>(static_cast<long>(r), 3), 6));
    PMatrix a = rng.full_rank_matrix(r, m, true, 0.25);
    LinearEmbedding iota(a);
    auto cov = covector_closure(m, signed_cocircuits(gp_from_matrix(a, Hyperfield::real_tropical)));
    auto fan = bergman_fan(cov);
    for (const auto& y : grid_points(m, vals)) {
      if (bergman_member(y, fan) != linear_space_member(y, iota)) {
        o.expect(false, "disagreement at " + y.str() + " (matroid " + std::to_string(i) + ")");
      }
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 5. Tropicalized K-points lie in the real tropical linear space.

Outcome criterion_5() {
  Outcome o;
  Rng rng(5);
  const std::vector<PuiseuxPoly> cancel{1, -1, PuiseuxPoly::parse("1+t"), PuiseuxPoly::parse("1-t"),
                                        PuiseuxPoly::parse("-1+t"), PuiseuxPoly::parse("-1-t"), PuiseuxPoly::parse("t")};
  for (int i = 0; i < 12; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    LinearEmbedding iota(rng.full_rank_matrix(n, static_cast<std::size_t>(rng.uniform(static_cast<long>(n) + 1, 7)),
                                              i % 2 == 0, 0.3));
    for (int s = 0; s < 200; ++s) {
      PVector x;
      for (std::size_t k = 0; k < n; ++k) {
        x.push_back(s % 2 ? cancel[static_cast<std::size_t>(rng.uniform(0, 6))] : rng.puiseux(false, 0.15));
      }
      PVector fx = iota.apply(x);
      if (std::all_of(fx.begin(), fx.end(), [](const PuiseuxPoly& p) { return p.is_zero(); })) continue;
      auto y = trop_r_point(fx);
      o.expect(linear_space_member(y, iota), "point " + y.str() + " (embedding " + std::to_string(i) + ")");
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 6. Reconstruction from a compatible family.

Outcome criterion_6() {
  Outcome o;
  Rng rng(6);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    auto s = SeminormExpr::leaf(random_diagonal(rng, n, false, trial % 2 == 0));
    std::vector<PVector> probes;
    while (probes.size() < 6) {
      PVector p = rng.vector(n, trial % 2 == 0, 0.3);
      if (std::any_of(p.begin(), p.end(), [](const PuiseuxPoly& x) { return !x.is_zero(); })) probes.push_back(p);
    }
    std::vector<PVector> cols;
    for (std::size_t k = 0; k < n; ++k) {
      PVector e(n, PuiseuxPoly(0));
      e[k] = PuiseuxPoly(1);
      cols.push_back(e);
    }
    cols.insert(cols.end(), probes.begin(), probes.end());
    std::vector<LinearEmbedding> embeddings{LinearEmbedding(PMatrix::from_columns(cols))};
    std::vector<std::vector<Morphism>> morphisms(4);
    for (std::size_t g = 0; g < 3; ++g) {
      std::vector<std::size_t> map;
      for (std::size_t k = 0; k < n; ++k) map.push_back(k);
      map.push_back(n + 2 * g);
      map.push_back(n + 2 * g + 1);
      std::vector<PVector> sub;
      for (auto j : map) sub.push_back(cols[j]);
      embeddings.emplace_back(PMatrix::from_columns(sub));
      morphisms[0].push_back({g + 1, map});
    }
    auto fam = family_from_seminorm(s, embeddings, morphisms);
    auto table = reconstruct_from_family(fam, probes);
    std::optional<RealTropVal> factor;
    for (const auto& pv : table) {
      RealTropVal truth = s.eval(pv.probe);
      o.expect(pv.value.is_zero() == truth.is_zero(), "zero pattern differs");
      if (truth.is_zero()) continue;
      RealTropVal ratio = pv.value / truth;
      o.expect(!factor || ratio == *factor, "no global homothety factor");
      factor = ratio;
    }
    auto broken = fam;
    auto coords = broken.members[1].point.coords();
    std::size_t j = n;  // a probe coordinate
    coords[j] = coords[j].is_zero() ? R("+:7") : RealTropVal(coords[j].sign(), coords[j].val() + Valuation(1));
    broken.members[1].point = RealTropProjPoint(coords);
    bool caught = false;
    try {
      reconstruct_from_family(broken, probes);
    } catch (const Error& e) {
      caught = e.kind() == ErrorKind::inconsistent_family;
    }
    o.expect(caught, "corruption not detected (trial " + std::to_string(trial) + ")");
  }
  return o;
}

// ---------------------------------------------------------------------------
// 7. Circuits, covectors and cocircuit decomposition at finite level.

Outcome criterion_7() {
  Outcome o;
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    bool trivial = trial % 2 == 0;
    auto s = random_diagonal(rng, n, true, trivial);
    PMatrix cols = rng.full_rank_matrix(n, static_cast<std::size_t>(rng.uniform(static_cast<long>(n), 8)), trivial, 0.3);
    RTVector y = pi_values(SeminormExpr::leaf(s), cols);
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    for (const auto& c : circuits_from_matrix(cols)) o.expect(hyperplane_member(y, c), "circuit violated" + tag);
    auto cov = covector_closure(cols.cols(), signed_cocircuits(gp_from_matrix(cols, Hyperfield::real_tropical)));
    o.expect(cov.contains(signs(y)), "sign part is not a covector" + tag);
    auto parts = cocircuit_decomposition(s);
    for (std::size_t j = 0; j < cols.cols(); ++j) {
      o.expect(eval_composition(parts, cols.column(j)) == y[j], "decomposition differs" + tag);
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 8. Fibers of the forgetful map on flags.

Outcome criterion_8() {
  Outcome o;
  auto standard = [](std::size_t n, std::vector<Valuation> w) {
    std::vector<PVector> basis;
    for (std::size_t j = 0; j < n; ++j) {
      PVector e(n, PuiseuxPoly(0));
      e[j] = PuiseuxPoly(1);
      basis.push_back(e);
    }
    return DiagonalSignedSeminorm(PMatrix::from_columns(basis), std::move(w));
  };
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Valuation> w;
    for (std::size_t j = 0; j < n; ++j) w.emplace_back(static_cast<long>(j));
    auto u = phi_flag(flag_from_seminorm(standard(n, w)));
    auto fiber = phi_fiber(u);
    o.expect(fiber.size() == (std::size_t(1) << (n - 1)),
             "dim " + std::to_string(n) + ": " + std::to_string(fiber.size()) + " classes");
    for (std::size_t a = 0; a < fiber.size(); ++a) {
      for (std::size_t b = a + 1; b < fiber.size(); ++b) o.expect(!equivalent(fiber[a], fiber[b]), "duplicate class");
    }
  }
  auto proper = phi_fiber(phi_flag(flag_from_seminorm(standard(2, {Valuation(0), Valuation::infinity()}))));
  o.expect(proper.size() == 1, "proper seminorm fiber has " + std::to_string(proper.size()));
  auto strict = phi_fiber(phi_flag(flag_from_seminorm(standard(2, {Valuation(0), Valuation(1)}))));
  o.expect(strict.size() == 2, "strict fiber has " + std::to_string(strict.size()));
  return o;
}

// ---------------------------------------------------------------------------
// 9. Diagonalization of compositions.

Outcome criterion_9() {
  Outcome o;
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::size_t leaves = static_cast<std::size_t>(rng.uniform(1, 3));
    SeminormExpr e = SeminormExpr::leaf(random_diagonal(rng, n, true, true));
    for (std::size_t k = 1; k < leaves; ++k) {
      auto other = SeminormExpr::leaf(random_diagonal(rng, n, true, true));
      e = rng.coin(0.5) ? SeminormExpr::compose(e, other) : SeminormExpr::compose(other, e);
    }
    try {
      auto d = diagonalize(e);
      for (int k = 0; k < 200; ++k) {
        PVector g = rng.vector(n, true, 0.3);
        o.expect(d.eval(g) == e.eval(g), "disagreement (expression " + std::to_string(i) + ")");
      }
    } catch (const Error& err) {
      o.expect(false, std::string("diagonalize failed: ") + err.what());
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 10. Hyperfield micro-suite.

Outcome criterion_10() {
  Outcome o;
  const Hyperfield all[] = {Hyperfield::krasner, Hyperfield::sign, Hyperfield::tropical, Hyperfield::real_tropical};
  for (Hyperfield h : all) {
    std::vector<RealTropVal> g{RealTropVal::zero()};
    for (long v : {0, 1, 2}) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        RealTropVal x(s, Valuation(v));
        if (is_member(h, x)) g.push_back(x);
      }
    }
    const std::size_t base = g.size();
    std::vector<std::vector<HyperSet>> sums(7);
    std::vector<std::size_t> pow{1};
    for (std::size_t len = 1; len <= 6; ++len) {
      pow.push_back(pow.back() * base);
      std::vector<RealTropVal> xs(len);
      for (std::size_t code = 0; code < pow[len]; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < len; ++i, c /= base) xs[i] = g[c % base];
        HyperSet s = hyper_sum(h, xs);
        o.expect(s.is_ball() || is_member(h, s.element()), "sum leaves the hyperfield");
        for (std::size_t k = 1; k < len; ++k) {
          if (!(hyper_add(h, sums[k][code % pow[k]], sums[len - k][code / pow[k]]) == s)) {
            o.expect(false, std::string("association order changes a sum in ") + to_string(h));
          }
        }
        sums[len].push_back(s);
      }
    }
    RealTropVal minus_one = h == Hyperfield::krasner || h == Hyperfield::tropical ? RealTropVal::one() : R("-:0");
    for (const auto& x : g) {
      RealTropVal pair[] = {x, hyper_mul(h, minus_one, x)};
      o.expect(hyper_sum(h, pair).contains_zero(), "missing additive inverse");
    }
  }
  struct Hom {
    HyperfieldHom f;
    Hyperfield source;
  };
  for (const Hom& c : {Hom{HyperfieldHom::abs, Hyperfield::real_tropical}, Hom{HyperfieldHom::sgn, Hyperfield::real_tropical},
                       Hom{HyperfieldHom::to_krasner, Hyperfield::real_tropical}}) {
    Hyperfield target = hom_target(c.f, c.source);
    std::vector<RealTropVal> g{RealTropVal::zero()}, probes{RealTropVal::zero()};
    for (long v : {-1, 0, 1, 2, 3, 4}) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        if (v >= 0 && v <= 2) g.emplace_back(s, Valuation(v));
        probes.emplace_back(s, Valuation(v));
      }
    }
    for (const auto& x : g) {
      for (const auto& y : g) {
        RealTropVal xy[] = {x, y};
        RealTropVal fxy[] = {pushmap(c.f, c.source, x), pushmap(c.f, c.source, y)};
        HyperSet s = hyper_sum(c.source, xy), fs = hyper_sum(target, fxy);
        o.expect(pushmap(c.f, c.source, x * y) == hyper_mul(target, fxy[0], fxy[1]), "not multiplicative");
        for (const auto& z : probes) {
          if (s.contains(z)) o.expect(fs.contains(pushmap(c.f, c.source, z)), "image of a sum escapes");
        }
      }
    }
  }
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    auto f = rng.puiseux(false, 0.1), g = rng.puiseux(false, 0.1);
    o.expect(fval(f * g) == fval(f) * fval(g), "fval is not multiplicative");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_s;  // 0: no time bound
  };
  const Criterion criteria[] = {
      {1, "tropical line sign patterns and valuation grid", criterion_1, 1.0},
      {2, "basis order changes the sign", criterion_2, 0},
      {3, "axiom suites and injected corruptions", criterion_3, 60.0},
      {4, "Bergman membership equals circuit membership", criterion_4, 120.0},
      {5, "tropicalized K-points satisfy every circuit", criterion_5, 0},
      {6, "reconstruction from compatible families", criterion_6, 0},
      {7, "finite level of the universal matroid", criterion_7, 0},
      {8, "fiber counts of the forgetful map", criterion_8, 0},
      {9, "diagonalization agrees with compositions", criterion_9, 0},
      {10, "hyperfield micro-suite", criterion_10, 5.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_s > 0 && secs > c.budget_s) {
      o.ok = false;
      o.detail = "over the " + std::to_string(c.budget_s) + " s budget";
    }
    std::printf("criterion %2d: %s  %-48s %8.3f s%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                o.ok ? "" : "  -- ", o.detail.c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
