#pragma once

// Oracles and fixtures shared by the test binaries. The oracles work from raw
// structure constants with textbook dense elimination and never call the
// library's RowReducer, Subspace or counital code.

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "wha/axioms.hpp"
#include "wha/catalog.hpp"

namespace oracle {

using Q = wha::Rational;
using Vec = wha::Vector<Q>;
using Mat = wha::Matrix<Q>;
using H = wha::WeakHopfAlgebra<Q>;

// Reduced row echelon form by dense Gauss-Jordan elimination; returns pivots.
inline std::vector<std::size_t> dense_rref(Mat& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q inv = Q(1) / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Q f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline std::size_t dense_rank(Mat m) { return dense_rref(m).size(); }

inline std::vector<Vec> dense_nullspace(Mat m) {
  auto piv = dense_rref(m);
  std::vector<Vec> out;
  std::set<std::size_t> pset(piv.begin(), piv.end());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pset.count(f)) continue;
    Vec v(m.cols());
    v[f] = Q(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    out.push_back(v);
  }
  return out;
}

inline Mat columns(const std::vector<Vec>& vs, std::size_t n) {
  Mat m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  return m;
}

inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t n) {
  std::vector<Vec> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  std::size_t ra = dense_rank(columns(a, n)), rb = dense_rank(columns(b, n)), rab = dense_rank(columns(ab, n));
  return ra == rb && rb == rab;
}

// Products straight from the constants.
inline Vec prod(const H& h, const Vec& a, const Vec& b) {
  const std::size_t n = h.dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) r[k] += a[i] * b[j] * h.mult()(k, i * n + j);
    }
  }
  return r;
}

inline Vec basis(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Q(1);
  return v;
}

inline Q counit_of(const H& h, const Vec& a) {
  Q s(0);
  for (std::size_t i = 0; i < h.dim(); ++i) s += a[i] * h.counit()[i];
  return s;
}

// ε_t(x) = ε(1₁x)1₂ and ε_s(x) = 1₁ε(x1₂).
inline Vec eps_t(const H& h, const Vec& x) {
  const std::size_t n = h.dim();
  Vec r(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (h.unit()[u].is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Q c = h.unit()[u] * h.comult()(a * n + b, u);
        if (c.is_zero()) continue;
        r[b] += c * counit_of(h, prod(h, basis(n, a), x));
      }
  }
  return r;
}

inline Vec eps_s(const H& h, const Vec& x) {
  const std::size_t n = h.dim();
  Vec r(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (h.unit()[u].is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Q c = h.unit()[u] * h.comult()(a * n + b, u);
        if (c.is_zero()) continue;
        r[a] += c * counit_of(h, prod(h, x, basis(n, b)));
      }
  }
  return r;
}

// Kernel of Λ ↦ (gΛ − ε_t(g)Λ)_g (left) or (Λg − Λε_s(g))_g (right).
inline std::vector<Vec> integrals(const H& h, bool left) {
  const std::size_t n = h.dim();
  Mat eqs(n * n, n);
  for (std::size_t g = 0; g < n; ++g) {
    Vec bg = basis(n, g);
    Vec e = left ? eps_t(h, bg) : eps_s(h, bg);
    for (std::size_t l = 0; l < n; ++l) {
      Vec bl = basis(n, l);
      Vec d = left ? prod(h, bg, bl) : prod(h, bl, bg);
      Vec t = left ? prod(h, e, bl) : prod(h, bl, e);
      for (std::size_t k = 0; k < n; ++k) eqs(g * n + k, l) = d[k] - t[k];
    }
  }
  return dense_nullspace(eqs);
}

inline Mat matrix_of(std::size_t n, const std::function<Vec(const Vec&)>& f) {
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec c = f(basis(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

}  // namespace oracle

namespace fixtures {

using oracle::H;
using oracle::Q;

// Axiom groups of the weak Hopf algebra definition, keyed by report section.
inline std::string axiom_group(const std::string& section, bool antipode_suite) {
  if (antipode_suite) return "antipode";
  if (section == "coassoc" || section == "counit") return "coalgebra";
  return section;
}

// Failed groups, running the antipode suite only when the bialgebra suite passes.
inline std::set<std::string> failed_groups(const H& h) {
  std::set<std::string> out;
  auto b = wha::verify_weak_bialgebra(h);
  for (const auto& a : b.failed_axioms()) out.insert(axiom_group(a, false));
  if (b.passed())
    for (const auto& a : wha::verify_antipode(h).failed_axioms()) out.insert(axiom_group(a, true));
  return out;
}

enum class Tensor { mult, unit, comult, counit, antipode };

struct Corruption {
  std::string algebra;
  Tensor tensor;
  std::size_t row, col;  // entry of the structure matrix (vectors use row)
  Q delta;
  std::string target;
};

inline H apply(const H& h, const Corruption& c) {
  auto mult = h.mult();
  auto unit = h.unit();
  auto comult = h.comult();
  auto counit = h.counit();
  auto anti = h.antipode();
  switch (c.tensor) {
    case Tensor::mult: mult(c.row, c.col) += c.delta; break;
    case Tensor::unit: unit[c.row] += c.delta; break;
    case Tensor::comult: comult(c.row, c.col) += c.delta; break;
    case Tensor::counit: counit[c.row] += c.delta; break;
    case Tensor::antipode: anti(c.row, c.col) += c.delta; break;
  }
  return H(h.field(), h.labels(), mult, unit, comult, counit, anti);
}

// Eight single-entry corruptions, each isolating one axiom group.
inline std::vector<Corruption> eight_corruptions() {
  using T = Tensor;
  return {
      {"pairgpd2", T::unit, 0, 0, Q(-1), "unit"},                // 1 = g11 + g22 loses g11
      {"sum:kc2,pairgpd2", T::unit, 2, 0, Q(-1), "unit"},        // same on the groupoid summand
      {"k", T::counit, 0, 0, Q(-1), "coalgebra"},                // ε(1) = 0
      {"sum:sweedler,fun-c2", T::comult, 5, 4, Q(1), "coalgebra"},  // Δ(d_1) gains 1⊗d_g
      {"fun-c2", T::comult, 3, 0, Q(-1), "weak_unit"},           // Δ(d_1) gains −d_g⊗d_g
      {"kc2", T::mult, 0, 3, Q(-1), "weak_counit"},              // g·g = 0
      {"sweedler", T::antipode, 3, 2, Q(2), "antipode"},         // S(x) = gx, the negated value
      {"kc2", T::antipode, 0, 0, Q(1), "antipode"},              // S(1) = 2
  };
}

}  // namespace fixtures
