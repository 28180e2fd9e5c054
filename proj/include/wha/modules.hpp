#pragma once

// Left and right modules, bimodules, truncated tensor products, duals and
// twists over a weak Hopf algebra.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wha/counital.hpp"
#include "wha/intertwine.hpp"
#include "wha/report.hpp"

namespace wha {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

// action[i] is the matrix of m ↦ b_i·m (left) or m ↦ m·b_i (right).
template <class K>
struct ModuleRep {
  Side side = Side::left;
  std::size_t dim = 0;
  std::vector<Matrix<K>> action;

  Matrix<K> act(const Vector<K>& h) const {
    Matrix<K> r(dim, dim);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (!h[i].is_zero()) r += action[i] * h[i];
    return r;
  }
  ActionFamily<K> family() const { return {dim, action}; }
};

// left[i]: u ↦ b_i·u, right[j]: u ↦ u·b_j.
template <class K>
struct BimoduleRep {
  std::size_t dim = 0;
  std::vector<Matrix<K>> left, right;

  ActionFamily<K> family() const {
    ActionFamily<K> f{dim, left};
    f.ops.insert(f.ops.end(), right.begin(), right.end());
    return f;
  }
  ModuleRep<K> left_module() const { return {Side::left, dim, left}; }
  ModuleRep<K> right_module() const { return {Side::right, dim, right}; }
};

template <class K>
Matrix<K> combine(const std::vector<Matrix<K>>& ms, const Vector<K>& h, std::size_t dim) {
  Matrix<K> r(dim, dim);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) r += ms[i] * h[i];
  return r;
}

template <class K>
VerificationReport check_module(const Algebra<K>& a, const ModuleRep<K>& m) {
  VerificationReport rep;
  rep.check_name = std::string(side_name(m.side)) + "_module";
  rep.section("module_mult");
  rep.section("module_unit");
  if (m.action.size() != a.dim()) {
    rep.fail("module_shape", {}, std::to_string(m.action.size()), std::to_string(a.dim()));
    return rep;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix<K> lhs = m.side == Side::left ? m.action[i] * m.action[j] : m.action[j] * m.action[i];
      if (lhs != m.act(a.basis_product(i, j))) rep.fail("module_mult", {i, j}, "rho(b_i)rho(b_j)", "rho(b_i b_j)");
    }
  if (m.act(a.unit()) != Matrix<K>::identity(m.dim)) rep.fail("module_unit", {}, "rho(1)", "id");
  rep.finalize();
  return rep;
}

template <class K>
VerificationReport check_bimodule(const Algebra<K>& a, const Algebra<K>& b, const BimoduleRep<K>& u) {
  VerificationReport rep;
  rep.check_name = "bimodule";
  rep.absorb(check_module(a, u.left_module()), "left.");
  rep.absorb(check_module(b, u.right_module()), "right.");
  rep.section("commute");
  for (std::size_t i = 0; i < u.left.size(); ++i)
    for (std::size_t j = 0; j < u.right.size(); ++j)
      if (u.left[i] * u.right[j] != u.right[j] * u.left[i]) rep.fail("commute", {i, j}, "lambda rho", "rho lambda");
  rep.finalize();
  return rep;
}

template <class K>
ModuleRep<K> regular_module(const Algebra<K>& a, Side side) {
  ModuleRep<K> m{side, a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(side == Side::left ? a.L(i) : a.R(i));
  return m;
}

template <class K>
BimoduleRep<K> regular_bimodule(const Algebra<K>& a) {
  return {a.dim(), regular_module(a, Side::left).action, regular_module(a, Side::right).action};
}

// Module structure induced on an invariant subspace, in canonical coordinates.
template <class K>
ModuleRep<K> submodule(const ModuleRep<K>& m, const Subspace<K>& s) {
  ModuleRep<K> r{m.side, s.dim(), {}};
  for (const auto& a : m.action) r.action.push_back(restrict_to(a, s));
  return r;
}

template <class K>
BimoduleRep<K> subbimodule(const BimoduleRep<K>& m, const Subspace<K>& s) {
  BimoduleRep<K> r{s.dim(), {}, {}};
  for (const auto& a : m.left) r.left.push_back(restrict_to(a, s));
  for (const auto& a : m.right) r.right.push_back(restrict_to(a, s));
  return r;
}

// H_t as a left module, h·x = ε_t(hx); H_s as a right module, x·h = ε_s(xh).
template <class K>
ModuleRep<K> unit_object(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, Side side) {
  const Subspace<K>& sub = side == Side::left ? cd.Ht : cd.Hs;
  ModuleRep<K> m{side, sub.dim(), {}};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix<K> op = side == Side::left ? cd.eps_t * h.L(i) : cd.eps_s * h.R(i);
    m.action.push_back(coordinates_of<K>(op * sub.basis(), sub));
  }
  return m;
}

// Truncated tensor product together with its embedding into the ordinary tensor product.
template <class K>
struct TruncatedTensor {
  ModuleRep<K> module;
  Subspace<K> space;  // inside M ⊗ N
};

// Σ_{jk} x^{jk} (ρ_M(b_j) ⊗ ρ_N(b_k)) for x ∈ H⊗H.
template <class K>
Matrix<K> tensor_action(const Vector<K>& x, std::size_t n, const ModuleRep<K>& m, const ModuleRep<K>& nn) {
  Matrix<K> r(m.dim * nn.dim, m.dim * nn.dim);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!x[j * n + k].is_zero()) r += kron(m.action[j], nn.action[k]) * x[j * n + k];
  return r;
}

// M ⊗̄ℓ N = Δ(1)(M⊗N) with h·(m⊗n) = h₁m ⊗ h₂n, or M ⊗̄r N = (M⊗N)Δ(1) with
// (m⊗n)·h = mh₁ ⊗ nh₂.
template <class K>
TruncatedTensor<K> truncated_tensor(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& m, const ModuleRep<K>& n) {
  if (m.side != n.side) throw std::invalid_argument("truncated tensor of modules on different sides");
  const std::size_t d = h.dim();
  TruncatedTensor<K> t;
  t.space = image(tensor_action(h.delta_one(), d, m, n));
  t.module = {m.side, t.space.dim(), {}};
  for (std::size_t i = 0; i < d; ++i) t.module.action.push_back(restrict_to(tensor_action(h.delta(i), d, m, n), t.space));
  return t;
}

template <class K>
TruncatedTensor<K> tensor_left(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& m, const ModuleRep<K>& n) {
  if (m.side != Side::left) throw std::invalid_argument("tensor_left expects left modules");
  return truncated_tensor(h, m, n);
}

template <class K>
TruncatedTensor<K> tensor_right(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& m, const ModuleRep<K>& n) {
  if (m.side != Side::right) throw std::invalid_argument("tensor_right expects right modules");
  return truncated_tensor(h, m, n);
}

// Action composed with an algebra map σ (column i = σ(b_i)), same side.
template <class K>
ModuleRep<K> twist(const ModuleRep<K>& m, const Matrix<K>& sigma) {
  ModuleRep<K> r{m.side, m.dim, {}};
  for (std::size_t i = 0; i < sigma.cols(); ++i) r.action.push_back(m.act(sigma.col(i)));
  return r;
}

// ^S M for a right module M (h·m = mS(h)), or N^S for a left module N (n·h = S(h)n).
template <class K>
ModuleRep<K> s_twist(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& m) {
  ModuleRep<K> r = twist(m, h.antipode());
  r.side = m.side == Side::left ? Side::right : Side::left;
  return r;
}

// Dual space with [h·φ](m) = φ(S(h)m) (left) or [φ·h](m) = φ(mS(h)) (right).
template <class K>
ModuleRep<K> dual(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& m) {
  ModuleRep<K> r{m.side, m.dim, {}};
  for (std::size_t i = 0; i < h.dim(); ++i) r.action.push_back(m.act(h.antipode().col(i)).transpose());
  return r;
}

template <class K>
IsoWitness<K> is_isomorphic(const ModuleRep<K>& a, const ModuleRep<K>& b) {
  if (a.side != b.side) throw std::invalid_argument("is_isomorphic: modules on different sides");
  return is_isomorphic(a.family(), b.family());
}

template <class K>
IsoWitness<K> is_isomorphic(const BimoduleRep<K>& a, const BimoduleRep<K>& b) {
  return is_isomorphic(a.family(), b.family());
}

template <class K>
HomSpace<K> hom_space(const ModuleRep<K>& a, const ModuleRep<K>& b) {
  if (a.side != b.side) throw std::invalid_argument("hom_space: modules on different sides");
  return hom_space(a.family(), b.family());
}

// The invariant subspace spanned by the images of the generators under the action.
template <class K>
Subspace<K> generated_submodule(const std::vector<Matrix<K>>& ops, const std::vector<Vector<K>>& gens, std::size_t dim) {
  Subspace<K> s = Subspace<K>::from_vectors(gens, dim);
  for (;;) {
    std::vector<Vector<K>> vs;
    for (std::size_t j = 0; j < s.dim(); ++j) {
      vs.push_back(s.basis_vector(j));
      for (const auto& a : ops) vs.push_back(a * s.basis_vector(j));
    }
    Subspace<K> next = Subspace<K>::from_vectors(vs, dim);
    if (next.dim() == s.dim()) return next;
    s = std::move(next);
  }
}

}  // namespace wha
