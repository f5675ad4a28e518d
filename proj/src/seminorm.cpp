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

#include "rtrop/seminorm.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "rtrop/error.hpp"

namespace rtrop {

DiagonalSignedSeminorm::DiagonalSignedSeminorm(PMatrix basis, std::vector<Valuation> weights)
    : basis_(std::move(basis)), weights_(std::move(weights)) {
  if (basis_.rows() == 0 || basis_.rows() != basis_.cols()) {
    throw Error(ErrorKind::dimension_mismatch, "basis must be a nonempty square matrix");
  }
  if (weights_.size() != basis_.cols()) throw Error(ErrorKind::dimension_mismatch, "one weight per basis vector");
  for (std::size_t j = 1; j < weights_.size(); ++j) {
    if (weights_[j] < weights_[j - 1]) throw Error(ErrorKind::invalid_argument, "weights must be nondecreasing");
  }
  det_ = signed_value(det(basis_));
  if (det_.is_zero()) throw Error(ErrorKind::singular_basis, "basis is singular");
}

RTVector DiagonalSignedSeminorm::coordinates(const PVector& f) const {
  if (f.size() != dim()) throw Error(ErrorKind::dimension_mismatch, "vector length differs from basis size");
  RTVector lambda(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    PMatrix m = basis_;
    m.set_column(j, f);
    lambda[j] = signed_value(det(m)) / det_;
  }
  return lambda;
}

RealTropVal DiagonalSignedSeminorm::eval(const PVector& f) const {
  RTVector lambda = coordinates(f);
  std::optional<std::size_t> best;
  Valuation level = Valuation::infinity();
  for (std::size_t j = 0; j < dim(); ++j) {
    Valuation v = lambda[j].val() + weights_[j];
    if (v < level) {
      level = v;
      best = j;
    }
  }
  if (!best) return RealTropVal::zero();
  return RealTropVal(lambda[*best].sign(), level);
}

DiagonalSignedSeminorm DiagonalSignedSeminorm::normalized() const {
  auto it = std::find_if(weights_.begin(), weights_.end(), [](const Valuation& w) { return w.is_finite(); });
  if (it == weights_.end()) return *this;
  Rational shift = it->value();
  std::vector<Valuation> w;
  for (const auto& x : weights_) w.push_back(x.is_finite() ? Valuation(x.value() - shift) : x);
  return DiagonalSignedSeminorm(basis_, w);
}

bool DiagonalSignedSeminorm::is_trivially_valued() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!basis_(i, j).is_constant()) return false;
    }
  }
  return true;
}

struct SeminormExpr::Node {
  std::optional<DiagonalSignedSeminorm> leaf;
  std::optional<SeminormExpr> left;
  std::optional<SeminormExpr> right;
  std::size_t dim = 0;
};

SeminormExpr SeminormExpr::leaf(DiagonalSignedSeminorm s) {
  auto n = std::make_shared<Node>();
  n->dim = s.dim();
  n->leaf = std::move(s);
  return SeminormExpr(std::move(n));
}

SeminormExpr SeminormExpr::compose(const SeminormExpr& left, const SeminormExpr& right) {
  if (left.dim() != right.dim()) throw Error(ErrorKind::dimension_mismatch, "composed seminorms differ in dimension");
  auto n = std::make_shared<Node>();
  n->dim = left.dim();
  n->left = left;
  n->right = right;
  return SeminormExpr(std::move(n));
}

std::size_t SeminormExpr::dim() const { return node_->dim; }
bool SeminormExpr::is_leaf() const { return node_->leaf.has_value(); }

const DiagonalSignedSeminorm& SeminormExpr::as_leaf() const {
  if (!is_leaf()) throw Error(ErrorKind::invalid_argument, "not a leaf");
  return *node_->leaf;
}

const SeminormExpr& SeminormExpr::left() const {
  if (is_leaf()) throw Error(ErrorKind::invalid_argument, "leaf has no children");
  return *node_->left;
}

const SeminormExpr& SeminormExpr::right() const {
  if (is_leaf()) throw Error(ErrorKind::invalid_argument, "leaf has no children");
  return *node_->right;
}

RealTropVal SeminormExpr::eval(const PVector& f) const {
  if (is_leaf()) return node_->leaf->eval(f);
  RealTropVal a = left().eval(f);
  RealTropVal b = right().eval(f);
  return a.val() <= b.val() ? a : b;
}

std::vector<DiagonalSignedSeminorm> SeminormExpr::leaves() const {
  if (is_leaf()) return {*node_->leaf};
  auto out = left().leaves();
  auto r = right().leaves();
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

namespace {

Rational act(const QVector& functional, const QVector& v) { return dot(functional, v); }

}  // namespace

DiagonalSignedSeminorm diagonalize(const SeminormExpr& s) {
  const std::size_t n = s.dim();
  auto leaves = s.leaves();
  struct Candidate {
    Valuation weight;
    std::size_t leaf;
    std::size_t j;
    QVector functional;  // j-th coordinate function of the leaf
    QVector own;         // b_j of the leaf
  };
  std::vector<Candidate> order;
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    if (!leaves[k].is_trivially_valued()) {
      throw Error(ErrorKind::not_trivially_valued, "diagonalize needs constant basis entries");
    }
    QMatrix b = to_rational(leaves[k].basis());
    QMatrix inv = inverse_q(b);
    for (std::size_t j = 0; j < n; ++j) {
      if (leaves[k].weights()[j].is_infinite()) continue;
      order.push_back({leaves[k].weights()[j], k, j, inv.row(j), b.column(j)});
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.weight, a.leaf, a.j) < std::tie(b.weight, b.leaf, b.j);
  });

  // W shrinks by one dimension per chosen functional.
  std::vector<QVector> w;
  for (std::size_t i = 0; i < n; ++i) {
    QVector e(n, Rational(0));
    e[i] = Rational(1);
    w.push_back(std::move(e));
  }
  std::vector<QVector> chosen_functionals;
  std::vector<QVector> out_basis;
  std::vector<Valuation> out_weights;
  for (const auto& c : order) {
    if (w.empty()) break;
    std::size_t pivot = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!act(c.functional, w[i]).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == w.size()) continue;
    bool own_in_w = std::all_of(chosen_functionals.begin(), chosen_functionals.end(),
                                [&](const QVector& m) { return act(m, c.own).is_zero(); });
    QVector b;
    if (own_in_w) {
      b = c.own;  // the leaf's own vector already has coordinate 1
    } else {
      Rational scale = Rational(1) / act(c.functional, w[pivot]);
      for (const auto& x : w[pivot]) b.push_back(x * scale);
    }
    std::vector<QVector> next;
    const Rational mp = act(c.functional, w[pivot]);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == pivot) continue;
      Rational f = act(c.functional, w[i]) / mp;
      QVector v = w[i];
      for (std::size_t t = 0; t < n; ++t) v[t] -= f * w[pivot][t];
      next.push_back(std::move(v));
    }
    w = std::move(next);
    chosen_functionals.push_back(c.functional);
    out_basis.push_back(std::move(b));
    out_weights.push_back(c.weight);
  }
  // Kernel: leaf vectors of weight inf that lie in W come first.
  std::vector<QVector> kernel;
  auto independent = [&](const QVector& v) {
    std::vector<QVector> cols = kernel;
    cols.push_back(v);
    return rank_q(QMatrix::from_columns(cols)) == cols.size();
  };
  for (const auto& l : leaves) {
    QMatrix b = to_rational(l.basis());
    for (std::size_t j = 0; j < n && kernel.size() < w.size(); ++j) {
      if (l.weights()[j].is_finite()) continue;
      QVector v = b.column(j);
      bool in_w = std::all_of(chosen_functionals.begin(), chosen_functionals.end(),
                              [&](const QVector& m) { return act(m, v).is_zero(); });
      if (in_w && independent(v)) kernel.push_back(std::move(v));
    }
  }
  for (auto& v : w) {
    if (kernel.size() == w.size()) break;
    if (independent(v)) kernel.push_back(std::move(v));
  }
  for (auto& v : kernel) {
    out_basis.push_back(std::move(v));
    out_weights.push_back(Valuation::infinity());
  }
  return DiagonalSignedSeminorm(to_puiseux(QMatrix::from_columns(out_basis)), out_weights);
}

Sign nondiag_fixture(const PuiseuxPoly& x, const PuiseuxPoly& y) {
  return x.valuation() <= y.valuation() ? x.sign() : y.sign();
}

RTVector pi_values(const SeminormExpr& s, const PMatrix& columns) {
  if (columns.rows() != s.dim()) throw Error(ErrorKind::dimension_mismatch, "embedding and seminorm dimensions differ");
  RTVector out;
  for (std::size_t j = 0; j < columns.cols(); ++j) out.push_back(s.eval(columns.column(j)));
  return out;
}

RealTropProjPoint project_pi(const SeminormExpr& s, const LinearEmbedding& iota) {
  RTVector v = pi_values(s, iota.matrix());
  if (support_mask(v) == 0) throw Error(ErrorKind::all_zero, "the seminorm vanishes on every functional");
  return RealTropProjPoint(v);
}

Valuation phi_abs_eval(const SeminormExpr& s, const PVector& f) { return s.eval(f).val(); }

RealTropVal CocircuitSeminorm::eval(const PVector& f) const {
  if (f.size() != mu.rows()) throw Error(ErrorKind::dimension_mismatch, "vector length");
  PMatrix m(mu.rows(), mu.cols() + 1);
  m.set_column(0, f);
  for (std::size_t j = 0; j < mu.cols(); ++j) m.set_column(j + 1, mu.column(j));
  return scale * signed_value(det(m));
}

std::vector<CocircuitSeminorm> cocircuit_decomposition(const DiagonalSignedSeminorm& s) {
  const std::size_t n = s.dim();
  RealTropVal d = signed_value(det(s.basis()));
  std::vector<CocircuitSeminorm> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.weights()[i].is_infinite()) continue;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) keep.push_back(j);
    }
    // λ_i = det(B with b_i := f) / det B = (-1)^i det[f, μ_i] / det B.
    RealTropVal scale = RealTropVal(Sign::plus, s.weights()[i]) / d;
    if (i % 2) scale = -scale;
    out.push_back({s.basis().select_columns(keep), scale});
  }
  return out;
}

RealTropVal eval_composition(const std::vector<CocircuitSeminorm>& parts, const PVector& f) {
  RealTropVal best;
  for (const auto& p : parts) {
    RealTropVal v = p.eval(f);
    if (v.val() < best.val()) best = v;
  }
  return best;
}

}  // namespace rtrop
