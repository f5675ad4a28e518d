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

#include "rtrop/json_io.hpp"

#include <algorithm>

#include "rtrop/error.hpp"

namespace rtrop::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::syntax, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  bad("expected a string or an integer, got " + j.dump());
}

const json& array(const json& j) {
  if (!j.is_array()) bad("expected an array, got " + j.dump());
  return j;
}

std::size_t index(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad("expected a nonnegative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }
json to_json(const Valuation& v) { return v.str(); }
Valuation valuation_from_json(const json& j) { return Valuation::parse(text(j)); }

json to_json(const RealTropVal& x) {
  return {{"sign", std::string(1, to_char(x.sign()))}, {"val", x.val().str()}};
}

RealTropVal rt_from_json(const json& j) {
  std::string s = text(field(j, "sign"));
  if (s.size() != 1) bad("bad sign '" + s + "'");
  return RealTropVal(sign_from_char(s[0]), valuation_from_json(field(j, "val")));
}

json to_pair(const RealTropVal& x) { return json::array({std::string(1, to_char(x.sign())), x.val().str()}); }

RealTropVal rt_from_pair(const json& j) {
  if (j.is_object()) return rt_from_json(j);
  if (j.is_string()) return RealTropVal::parse(j.get<std::string>());
  if (!j.is_array() || j.size() != 2) bad("expected [sign, val], got " + j.dump());
  std::string s = text(j[0]);
  if (s.size() != 1) bad("bad sign '" + s + "'");
  return RealTropVal(sign_from_char(s[0]), valuation_from_json(j[1]));
}

json to_pairs(const RTVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_pair(x));
  return a;
}

RTVector rt_vector_from_json(const json& j) {
  RTVector v;
  for (const auto& x : array(j)) v.push_back(rt_from_pair(x));
  return v;
}

json to_json(const HyperSet& s) {
  if (s.is_ball()) return {{"kind", "ball"}, {"val", s.threshold().str()}};
  json j = {{"kind", "singleton"}};
  j.update(to_json(s.element()));
  return j;
}

HyperSet hyperset_from_json(const json& j) {
  std::string kind = text(field(j, "kind"));
  if (kind == "ball") return HyperSet::ball(valuation_from_json(field(j, "val")));
  if (kind == "singleton") return HyperSet::singleton(rt_from_json(j));
  bad("unknown hyperset kind '" + kind + "'");
}

PuiseuxPoly puiseux_from_json(const json& j) { return PuiseuxPoly::parse(text(j)); }

json to_json(const PuiseuxPoly& p) {
  if (p.is_constant() && p.constant_value().is_integer()) {
    mpz_class z = p.constant_value().numerator();
    if (z.fits_slong_p()) return z.get_si();
  }
  return p.str();
}

PMatrix matrix_from_json(const json& j) {
  std::vector<PVector> rows;
  for (const auto& r : array(j)) rows.push_back(pvector_from_json(r));
  if (rows.empty()) bad("empty matrix");
  return PMatrix::from_rows(rows);
}

json to_json(const PMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

PVector pvector_from_json(const json& j) {
  PVector v;
  for (const auto& x : array(j)) v.push_back(puiseux_from_json(x));
  return v;
}

json to_json(const PVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

QVector qvector_from_json(const json& j) {
  QVector v;
  for (const auto& x : array(j)) v.push_back(Rational::parse(text(x)));
  return v;
}

json to_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.is_integer() && x.numerator().fits_slong_p()) {
      a.push_back(x.numerator().get_si());
    } else {
      a.push_back(x.str());
    }
  }
  return a;
}

json to_json(const GrassmannPluecker& phi) {
  json ground = json::array();
  for (std::size_t i = 0; i < phi.ground_size(); ++i) ground.push_back(i);
  json values = json::array();
  for (const auto& [mask, v] : phi.values()) {
    values.push_back({{"tuple", mask_to_indices(mask)}, {"value", to_json(v)}});
  }
  std::sort(values.begin(), values.end(),
            [](const json& a, const json& b) { return a["tuple"].get<std::vector<std::size_t>>() <
                                                      b["tuple"].get<std::vector<std::size_t>>(); });
  return {{"rank", phi.rank()}, {"ground", ground}, {"hyperfield", to_string(phi.hyperfield())}, {"values", values}};
}

GrassmannPluecker gp_from_json(const json& j) {
  std::size_t r = index(field(j, "rank"));
  std::size_t m = array(field(j, "ground")).size();
  Hyperfield h = hyperfield_from_string(text(field(j, "hyperfield")));
  GrassmannPluecker phi(r, m, h);
  for (const auto& entry : array(field(j, "values"))) {
    std::vector<std::size_t> tuple;
    for (const auto& i : array(field(entry, "tuple"))) tuple.push_back(index(i));
    phi.set(tuple, rt_from_pair(field(entry, "value")));
  }
  if (phi.is_zero()) throw Error(ErrorKind::invalid_argument, "Grassmann-Pluecker function is identically zero");
  return phi;
}

json to_json(const CovectorPoset& p) {
  json vs = json::array();
  for (const auto& v : p.vectors) vs.push_back(sign_string(v));
  json covers = json::array();
  for (const auto& [a, b] : p.covers) covers.push_back({a, b});
  return {{"vectors", vs}, {"covers", covers}};
}

CovectorPoset poset_from_json(const json& j) {
  std::vector<SignVector> vs;
  for (const auto& v : array(field(j, "vectors"))) vs.push_back(parse_sign_string(text(v)));
  std::size_t m = vs.empty() ? 0 : vs[0].size();
  return make_poset(m, vs);
}

json to_json(const BergmanFan& fan) {
  json cov = json::array();
  for (const auto& v : fan.poset.vectors) cov.push_back(sign_string(v));
  return {{"rank", fan.rank}, {"covectors", cov}, {"chains", fan.chains}};
}

json to_json(const DiagonalSignedSeminorm& s) {
  json basis = json::array();
  for (std::size_t j = 0; j < s.dim(); ++j) basis.push_back(to_json(s.basis().column(j)));
  json c = json::array();
  for (const auto& w : s.weights()) c.push_back(w.str());
  return {{"kind", "leaf"}, {"basis", basis}, {"c", c}};
}

json to_json(const SeminormExpr& s) {
  if (s.is_leaf()) return to_json(s.as_leaf());
  return {{"kind", "compose"}, {"left", to_json(s.left())}, {"right", to_json(s.right())}};
}

SeminormExpr seminorm_from_json(const json& j) {
  std::string kind = text(field(j, "kind"));
  if (kind == "compose") {
    return SeminormExpr::compose(seminorm_from_json(field(j, "left")), seminorm_from_json(field(j, "right")));
  }
  if (kind != "leaf") bad("unknown seminorm kind '" + kind + "'");
  std::vector<PVector> cols;
  for (const auto& b : array(field(j, "basis"))) cols.push_back(pvector_from_json(b));
  if (cols.empty()) bad("empty basis");
  std::vector<Valuation> w;
  for (const auto& c : array(field(j, "c"))) w.push_back(valuation_from_json(c));
  return SeminormExpr::leaf(DiagonalSignedSeminorm(PMatrix::from_columns(cols), w));
}

json to_json(const SignedFlag& f) {
  json kernel = json::array(), steps = json::array(), regions = json::array(), weights = json::array();
  for (const auto& k : f.kernel) kernel.push_back(to_json(k));
  for (const auto& s : f.steps) steps.push_back(to_json(s));
  for (auto r : f.regions) regions.push_back(std::string(1, to_char(r)));
  for (const auto& w : f.weights) weights.push_back(w.str());
  return {{"dim", f.dim}, {"kernel", kernel}, {"steps", steps}, {"regions", regions}, {"weights", weights}};
}

SignedFlag flag_from_json(const json& j) {
  SignedFlag f;
  f.dim = index(field(j, "dim"));
  for (const auto& k : array(field(j, "kernel"))) f.kernel.push_back(qvector_from_json(k));
  for (const auto& s : array(field(j, "steps"))) f.steps.push_back(qvector_from_json(s));
  for (const auto& r : array(field(j, "regions"))) {
    std::string s = text(r);
    if (s.size() != 1) bad("bad region sign");
    f.regions.push_back(sign_from_char(s[0]));
  }
  for (const auto& w : array(field(j, "weights"))) f.weights.push_back(valuation_from_json(w));
  return f;
}

json to_json(const UnsignedFlag& f) {
  json kernel = json::array(), blocks = json::array(), weights = json::array();
  for (const auto& k : f.kernel) kernel.push_back(to_json(k));
  for (const auto& b : f.blocks) {
    json blk = json::array();
    for (const auto& v : b) blk.push_back(to_json(v));
    blocks.push_back(blk);
  }
  for (const auto& w : f.weights) weights.push_back(w.str());
  return {{"dim", f.dim}, {"kernel", kernel}, {"blocks", blocks}, {"weights", weights}};
}

json to_json(const CompatibleFamily& fam) {
  json a = json::array();
  for (const auto& m : fam.members) {
    json mors = json::array();
    for (const auto& mor : m.morphisms) mors.push_back({{"target", mor.target}, {"map", mor.map}});
    a.push_back({{"embedding", to_json(m.embedding.matrix())}, {"point", to_pairs(m.point.coords())}, {"morphisms", mors}});
  }
  return a;
}

CompatibleFamily family_from_json(const json& j) {
  CompatibleFamily fam;
  for (const auto& m : array(j)) {
    std::vector<Morphism> mors;
    if (m.contains("morphisms")) {
      for (const auto& mor : array(m.at("morphisms"))) {
        Morphism x;
        x.target = index(field(mor, "target"));
        for (const auto& i : array(field(mor, "map"))) x.map.push_back(index(i));
        mors.push_back(std::move(x));
      }
    }
    fam.members.push_back({LinearEmbedding(matrix_from_json(field(m, "embedding"))),
                           RealTropProjPoint(rt_vector_from_json(field(m, "point"))), std::move(mors)});
  }
  return fam;
}

}  // namespace rtrop::json_io
