#pragma once

// Exhaustive verification of the weak bialgebra and antipode axioms on basis
// tuples. Section ids: assoc, unit, coassoc, counit, delta_mult, weak_unit,
// weak_counit; antipode_1..3, anti_mult, anti_unit, anti_comult, anti_counit,
// s_eps_s, s_eps_t.

#include <cstddef>
#include <string>
#include <vector>

#include "wha/counital.hpp"
#include "wha/report.hpp"

namespace wha {

namespace detail {

template <class K>
struct AxiomContext {
  const WeakHopfAlgebra<K>& h;
  std::vector<std::string> l1, l2, l3;
  VerificationReport& rep;

  AxiomContext(const WeakHopfAlgebra<K>& hh, VerificationReport& r) : h(hh), rep(r) {
    l1 = h.labels();
    l2 = tensor_labels(l1, l1);
    l3 = tensor_labels(l2, l1);
  }

  const std::vector<std::string>& labels_for(std::size_t len) const {
    const std::size_t n = h.dim();
    if (len == n) return l1;
    if (len == n * n) return l2;
    return l3;
  }

  void compare(const std::string& axiom, std::vector<std::size_t> idx, const Vector<K>& lhs, const Vector<K>& rhs) {
    if (lhs == rhs) return;
    const auto& lab = labels_for(lhs.size());
    rep.fail(axiom, std::move(idx), format_element(h.field(), lhs, lab), format_element(h.field(), rhs, lab));
  }

  void compare(const std::string& axiom, std::vector<std::size_t> idx, const K& lhs, const K& rhs) {
    if (lhs == rhs) return;
    rep.fail(axiom, std::move(idx), h.field().format(lhs), h.field().format(rhs));
  }
};

// Σ_{jk} x^{jk} ε(b_a b_j) ε(b_k b_b) for x ∈ H⊗H.
template <class K>
K split_pairing(const Matrix<K>& e, const Vector<K>& x, std::size_t n, std::size_t a, std::size_t b) {
  K s(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (e(a, j).is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const K& c = x[j * n + k];
      if (!c.is_zero() && !e(k, b).is_zero()) s += c * e(a, j) * e(k, b);
    }
  }
  return s;
}

}  // namespace detail

template <class K>
VerificationReport verify_weak_bialgebra(const WeakHopfAlgebra<K>& h) {
  VerificationReport rep;
  rep.check_name = "weak_bialgebra";
  detail::AxiomContext<K> ctx(h, rep);
  const std::size_t n = h.dim();
  const auto I = Matrix<K>::identity(n);
  const auto& alg = h.algebra();

  rep.section("assoc");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector<K> ij = alg.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        ctx.compare("assoc", {i, j, k}, h.R(k) * ij, h.L(i) * alg.basis_product(j, k));
    }

  rep.section("unit");
  {
    Matrix<K> lu = alg.left_mult(h.unit()), ru = alg.right_mult(h.unit());
    for (std::size_t i = 0; i < n; ++i) {
      Vector<K> e = unit_vector<K>(n, i);
      ctx.compare("unit", {i, 0}, lu * e, e);
      ctx.compare("unit", {i, 1}, ru * e, e);
    }
  }

  rep.section("coassoc");
  for (std::size_t i = 0; i < n; ++i) {
    Vector<K> d = h.delta(i);
    ctx.compare("coassoc", {i}, apply_kron(h.comult(), I, d), apply_kron(I, h.comult(), d));
  }

  rep.section("counit");
  {
    Matrix<K> eps = Matrix<K>::row(h.counit());
    for (std::size_t i = 0; i < n; ++i) {
      Vector<K> d = h.delta(i), e = unit_vector<K>(n, i);
      ctx.compare("counit", {i, 0}, apply_kron(eps, I, d), e);
      ctx.compare("counit", {i, 1}, apply_kron(I, eps, d), e);
    }
  }

  rep.section("delta_mult");
  {
    std::vector<Matrix<K>> dl(n);
    for (std::size_t i = 0; i < n; ++i) dl[i] = h.tensor_left_mult(h.delta(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        ctx.compare("delta_mult", {i, j}, h.delta(alg.basis_product(i, j)), dl[i] * h.delta(j));
  }

  rep.section("weak_unit");
  {
    const Vector<K>& d1 = h.delta_one();
    Vector<K> lhs = apply_kron(h.comult(), I, d1);
    // (Δ(1)⊗1)(1⊗Δ(1)) and (1⊗Δ(1))(Δ(1)⊗1) in H⊗H⊗H.
    Vector<K> a = kron(d1, h.unit()), b = kron(h.unit(), d1);
    auto triple_mult = [&](const Vector<K>& x, const Vector<K>& y) {
      Vector<K> r(n * n * n);
      for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        std::size_t p0 = p / (n * n), p1 = (p / n) % n, p2 = p % n;
        for (std::size_t q = 0; q < y.size(); ++q) {
          if (y[q].is_zero()) continue;
          std::size_t q0 = q / (n * n), q1 = (q / n) % n, q2 = q % n;
          K c = x[p] * y[q];
          Vector<K> t = kron(kron(alg.basis_product(p0, q0), alg.basis_product(p1, q1)), alg.basis_product(p2, q2));
          for (std::size_t r0 = 0; r0 < t.size(); ++r0)
            if (!t[r0].is_zero()) r[r0] += c * t[r0];
        }
      }
      return r;
    };
    ctx.compare("weak_unit", {0}, lhs, triple_mult(a, b));
    ctx.compare("weak_unit", {1}, lhs, triple_mult(b, a));
  }

  rep.section("weak_counit");
  {
    Matrix<K> e = counit_pairing(h);
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g) {
        Vector<K> fg = alg.basis_product(f, g);
        Vector<K> dg = h.delta(g);
        Vector<K> dg_swapped(n * n);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) dg_swapped[k * n + j] = dg[j * n + k];
        for (std::size_t k = 0; k < n; ++k) {
          K lhs = h.eps(h.R(k) * fg);
          ctx.compare("weak_counit", {f, g, k, 0}, lhs, detail::split_pairing(e, dg, n, f, k));
          ctx.compare("weak_counit", {f, g, k, 1}, lhs, detail::split_pairing(e, dg_swapped, n, f, k));
        }
      }
  }

  rep.finalize();
  return rep;
}

template <class K>
VerificationReport verify_antipode(const WeakHopfAlgebra<K>& h) {
  VerificationReport rep;
  rep.check_name = "antipode";
  detail::AxiomContext<K> ctx(h, rep);
  const std::size_t n = h.dim();
  const auto I = Matrix<K>::identity(n);
  const auto& S = h.antipode();
  const auto& m = h.mult();
  Matrix<K> es = eps_s_matrix(h), et = eps_t_matrix(h);

  rep.section("antipode_1");
  rep.section("antipode_2");
  rep.section("antipode_3");
  Matrix<K> m_mI = m * kron(m, I);
  for (std::size_t i = 0; i < n; ++i) {
    Vector<K> d = h.delta(i);
    ctx.compare("antipode_1", {i}, m * apply_kron(I, S, d), et.col(i));
    ctx.compare("antipode_2", {i}, m * apply_kron(S, I, d), es.col(i));
    Vector<K> d2 = apply_kron(h.comult(), I, d);
    Vector<K> lhs = m_mI * apply_kron(kron(S, I), S, d2);
    ctx.compare("antipode_3", {i}, lhs, S.col(i));
  }

  rep.section("anti_mult");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ctx.compare("anti_mult", {i, j}, S * h.algebra().basis_product(i, j), h.algebra().mul(S.col(j), S.col(i)));

  rep.section("anti_unit");
  ctx.compare("anti_unit", {}, S * h.unit(), h.unit());

  rep.section("anti_comult");
  for (std::size_t i = 0; i < n; ++i) {
    Vector<K> sd = apply_kron(S, S, h.delta(i));
    Vector<K> flipped(n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) flipped[k * n + j] = sd[j * n + k];
    ctx.compare("anti_comult", {i}, h.delta(S.col(i)), flipped);
  }

  rep.section("anti_counit");
  for (std::size_t i = 0; i < n; ++i) ctx.compare("anti_counit", {i}, h.eps(S.col(i)), h.counit()[i]);

  rep.section("s_eps_s");
  rep.section("s_eps_t");
  Matrix<K> a = S * es, b = et * S, c = S * et, d = es * S;
  for (std::size_t i = 0; i < n; ++i) {
    ctx.compare("s_eps_s", {i}, a.col(i), b.col(i));
    ctx.compare("s_eps_t", {i}, c.col(i), d.col(i));
  }

  rep.finalize();
  return rep;
}

template <class K>
bool passes_axiom_suites(const WeakHopfAlgebra<K>& h) {
  return verify_weak_bialgebra(h).passed() && verify_antipode(h).passed();
}

}  // namespace wha
