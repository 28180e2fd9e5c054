#pragma once

// The Nakayama bimodule U = Hom_{H^e}(H, H^e) and its description through
// left integrals: U ≅ ∫^ℓ ⊗̄r H^{S²}.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wha/integrals.hpp"

namespace wha {

struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxNakayamaDim = 8;

// H^e = H ⊗ H^op, and Δ'(h) = h₁ ⊗ S(h₂) ∈ H^e.
template <class K>
struct Enveloping {
  Algebra<K> alg;
  Matrix<K> delta_prime;  // n² × n
};

template <class K>
Enveloping<K> enveloping(const WeakHopfAlgebra<K>& h) {
  Enveloping<K> e{tensor(h.algebra(), h.algebra().opposite()), {}};
  e.delta_prime = kron(Matrix<K>::identity(h.dim()), h.antipode()) * h.comult();
  return e;
}

// Δ' is multiplicative into H^e and Δ'(1) is idempotent.
template <class K>
VerificationReport check_enveloping(const WeakHopfAlgebra<K>& h, const Enveloping<K>& e) {
  VerificationReport rep;
  rep.check_name = "enveloping";
  rep.section("delta_prime_mult");
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e.delta_prime * h.algebra().basis_product(i, j) != e.alg.mul(e.delta_prime.col(i), e.delta_prime.col(j)))
        rep.fail("delta_prime_mult", {i, j}, "D'(b_i b_j)", "D'(b_i) D'(b_j)");
  Vector<K> d1 = e.delta_prime * h.unit();
  rep.expect(e.alg.mul(d1, d1) == d1, "delta_prime_idempotent");
  rep.finalize();
  return rep;
}

// An H-bimodule M viewed through (a⊗c)·m = a m c.
template <class K>
Matrix<K> he_action(const BimoduleRep<K>& m, const Vector<K>& x, std::size_t n) {
  Matrix<K> r(m.dim, m.dim);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!x[j * n + k].is_zero()) r += m.left[j] * m.right[k] * x[j * n + k];
  return r;
}

// L(M) = Δ'(1)M with h·m = h₁ m S(h₂).
template <class K>
TruncatedTensor<K> l_functor(const WeakHopfAlgebra<K>& h, const Enveloping<K>& e, const BimoduleRep<K>& m) {
  TruncatedTensor<K> t;
  t.space = image(he_action(m, Vector<K>(e.delta_prime * h.unit()), h.dim()));
  t.module = {Side::left, t.space.dim(), {}};
  for (std::size_t i = 0; i < h.dim(); ++i)
    t.module.action.push_back(restrict_to(he_action(m, e.delta_prime.col(i), h.dim()), t.space));
  return t;
}

// H^e as an H-bimodule by left multiplication: a·x = (a⊗1)x, x·c = (1⊗c)x.
template <class K>
BimoduleRep<K> enveloping_left_bimodule(const WeakHopfAlgebra<K>& h) {
  const auto I = Matrix<K>::identity(h.dim());
  BimoduleRep<K> b{h.dim() * h.dim(), {}, {}};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    b.left.push_back(kron(h.L(i), I));
    b.right.push_back(kron(I, h.R(i)));
  }
  return b;
}

template <class K>
struct NakayamaResult {
  BimoduleRep<K> U;
  Subspace<K> eval_space;    // {f(1)} ⊂ H^e
  Subspace<K> route2_space;  // {g(1) : g ∈ Hom_H(H_t, L(H^e))}
  BimoduleRep<K> rhs;        // ∫^ℓ ⊗̄r H^{S²}
  IsoWitness<K> witness;     // U → rhs
  bool invertible = false;
  std::optional<Matrix<K>> automorphism;  // μ with U ≅ H^μ, when found
  VerificationReport report;
};

// The residual H-bimodule structure on a right-multiplication-stable subspace
// of H^e: c·x = x(1⊗c), x·a = x(a⊗1).
template <class K>
BimoduleRep<K> enveloping_residual(const WeakHopfAlgebra<K>& h, const Subspace<K>& s) {
  const auto I = Matrix<K>::identity(h.dim());
  BimoduleRep<K> b{s.dim(), {}, {}};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    b.left.push_back(restrict_to(Matrix<K>(kron(I, h.L(i))), s));
    b.right.push_back(restrict_to(Matrix<K>(kron(h.R(i), I)), s));
  }
  return b;
}

// (∫^ℓ)^{⊗̄r p} ⊗̄r H^{S^{2p}}, left action on the last factor.
template <class K>
BimoduleRep<K> integral_twist_bimodule(const WeakHopfAlgebra<K>& h, const IntegralSpace<K>& li, std::size_t p) {
  if (p == 0) throw std::invalid_argument("integral_twist_bimodule: power must be positive");
  ModuleRep<K> acc = li.module;
  for (std::size_t k = 1; k < p; ++k) acc = tensor_right(h, acc, li.module).module;
  ModuleRep<K> hs = twist(regular_module(h.algebra(), Side::right), antipode_power(h, 2 * p));
  auto t = tensor_right(h, acc, hs);
  const auto I = Matrix<K>::identity(acc.dim);
  BimoduleRep<K> b{t.space.dim(), {}, t.module.action};
  for (std::size_t i = 0; i < h.dim(); ++i) b.left.push_back(restrict_to(Matrix<K>(kron(I, h.L(i))), t.space));
  return b;
}

template <class K>
BimoduleRep<K> bimodule_power(const BimoduleRep<K>& u, std::size_t p) {
  if (p == 0) throw std::invalid_argument("bimodule_power: power must be positive");
  BimoduleRep<K> acc = u;
  for (std::size_t k = 1; k < p; ++k) acc = bimodule_tensor(acc, u).bimodule;
  return acc;
}

// When U ≅ H as left modules through T, μ(b) = T⁻¹(T(1)·b).
template <class K>
std::optional<Matrix<K>> automorphism_candidate(const WeakHopfAlgebra<K>& h, const BimoduleRep<K>& u) {
  if (u.dim != h.dim()) return std::nullopt;
  auto w = is_isomorphic(regular_module(h.algebra(), Side::left), u.left_module());
  if (!w.exists) return std::nullopt;
  auto inv = is_invertible_matrix(w.map);
  Vector<K> u0 = w.map * h.unit();
  Matrix<K> mu(h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) mu.set_col(i, Vector<K>(inv.inverse * (u.right[i] * u0)));
  if (!is_algebra_endomorphism(h.algebra(), mu) || !is_invertible_matrix(mu).invertible) return std::nullopt;
  return mu;
}

template <class K>
NakayamaResult<K> nakayama(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd,
                           std::size_t max_dim = kDefaultMaxNakayamaDim) {
  const std::size_t n = h.dim();
  if (n > max_dim)
    throw LimitError("Nakayama computation refused: dim " + std::to_string(n) + " exceeds --max-dim " +
                     std::to_string(max_dim));
  NakayamaResult<K> out;
  auto& rep = out.report;
  rep.check_name = "nakayama";
  auto env = enveloping(h);
  rep.absorb(check_enveloping(h, env), "");

  // Hom_{H^e}(H, H^e) through the generators b_i⊗1 and 1⊗b_i.
  ActionFamily<K> src{n, {}}, tgt{n * n, {}};
  const auto I = Matrix<K>::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    src.ops.push_back(h.L(i));
    tgt.ops.push_back(kron(h.L(i), I));
  }
  for (std::size_t i = 0; i < n; ++i) {
    src.ops.push_back(h.R(i));
    tgt.ops.push_back(kron(I, h.R(i)));
  }
  auto hom = hom_space(src, tgt);
  std::vector<Vector<K>> vals;
  for (std::size_t j = 0; j < hom.dim(); ++j) vals.push_back(hom.map(j) * h.unit());
  out.eval_space = Subspace<K>::from_vectors(vals, n * n);
  rep.expect(out.eval_space.dim() == hom.dim(), "evaluation_injective");

  auto lhe = l_functor(h, env, enveloping_left_bimodule(h));
  auto hom2 = hom_space(unit_object(h, cd, Side::left), lhe.module);
  auto one = cd.Ht.coordinates(h.unit());
  if (!one) throw EngineError("unit is not in H_t");
  std::vector<Vector<K>> vals2;
  for (std::size_t j = 0; j < hom2.dim(); ++j) vals2.push_back(lhe.space.basis() * (hom2.map(j) * *one));
  out.route2_space = Subspace<K>::from_vectors(vals2, n * n);
  rep.expect(out.route2_space == out.eval_space, "routes_agree", std::to_string(out.eval_space.dim()),
             std::to_string(out.route2_space.dim()));

  out.U = enveloping_residual(h, out.eval_space);
  rep.absorb(check_bimodule(h.algebra(), h.algebra(), out.U), "U.");
  if (out.route2_space == out.eval_space) {
    auto u2 = enveloping_residual(h, out.route2_space);
    rep.expect(u2.left == out.U.left && u2.right == out.U.right, "route_witness_intertwines");
  }

  auto li = left_integrals(h, cd);
  out.rhs = integral_twist_bimodule(h, li, 1);
  out.witness = is_isomorphic(out.U, out.rhs);
  rep.expect(out.witness.exists, "integral_description", std::to_string(out.U.dim), std::to_string(out.rhs.dim));
  out.invertible = is_invertible_bimodule(h.algebra(), out.U).invertible;
  rep.expect(out.invertible, "invertible");
  out.automorphism = automorphism_candidate(h, out.U);
  rep.note("dim_U", std::to_string(out.U.dim));
  rep.note("automorphism_candidate", out.automorphism ? "found" : "none");
  rep.finalize();
  return out;
}

// U^{⊗p} ≅ (∫^ℓ)^{⊗̄r p} ⊗̄r H^{S^{2p}}.
template <class K>
VerificationReport check_nakayama_power(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const NakayamaResult<K>& nr,
                                        std::size_t p) {
  VerificationReport rep;
  rep.check_name = "nakayama_power";
  auto lhs = bimodule_power(nr.U, p);
  auto rhs = integral_twist_bimodule(h, left_integrals(h, cd), p);
  rep.expect(is_isomorphic(lhs, rhs).exists, "power_" + std::to_string(p), std::to_string(lhs.dim), std::to_string(rhs.dim));
  rep.finalize();
  return rep;
}

// H^eΔ'(1) = G^R(H^S) and Δ'(1)H^e ≅ G^R(H^{S²}), each with an H^e action and
// a residual H action (families: a-left, c-right/left, b-right).
template <class K>
VerificationReport check_enveloping_ideals(const WeakHopfAlgebra<K>& h) {
  VerificationReport rep;
  rep.check_name = "enveloping_ideals";
  const std::size_t n = h.dim();
  const auto I = Matrix<K>::identity(n);
  auto env = enveloping(h);
  Vector<K> d1 = env.delta_prime * h.unit();

  // H^eΔ'(1): (a⊗c)·x = (a⊗c)x, x·b = xΔ'(b).
  Subspace<K> left_ideal = image(env.alg.right_mult(d1));
  ActionFamily<K> f1{left_ideal.dim(), {}};
  for (std::size_t i = 0; i < n; ++i) f1.ops.push_back(restrict_to(Matrix<K>(kron(h.L(i), I)), left_ideal));
  for (std::size_t i = 0; i < n; ++i) f1.ops.push_back(restrict_to(Matrix<K>(kron(I, h.R(i))), left_ideal));
  for (std::size_t i = 0; i < n; ++i) f1.ops.push_back(restrict_to(env.alg.right_mult(env.delta_prime.col(i)), left_ideal));
  // G^R(H^S) = H⊗̄rH^S with a on the first factor, c on the right of the second.
  auto g1 = tensor_right(h, regular_module(h.algebra(), Side::right),
                         s_twist(h, regular_module(h.algebra(), Side::left)));
  rep.expect(g1.space == left_ideal, "left_ideal_subspace", std::to_string(left_ideal.dim()), std::to_string(g1.space.dim()));
  if (g1.space == left_ideal) {
    ActionFamily<K> e1{g1.space.dim(), {}};
    for (std::size_t i = 0; i < n; ++i) e1.ops.push_back(restrict_to(Matrix<K>(kron(h.L(i), I)), g1.space));
    for (std::size_t i = 0; i < n; ++i) e1.ops.push_back(restrict_to(Matrix<K>(kron(I, h.R(i))), g1.space));
    for (const auto& a : g1.module.action) e1.ops.push_back(a);
    rep.expect(intertwines(Matrix<K>::identity(e1.dim), f1, e1), "left_ideal_identity");
  }

  // Δ'(1)H^e: a·x = Δ'(a)x, x·b = x(b⊗1), x·c = x(1⊗c).
  Subspace<K> right_ideal = image(env.alg.left_mult(d1));
  ActionFamily<K> f2{right_ideal.dim(), {}};
  for (std::size_t i = 0; i < n; ++i) f2.ops.push_back(restrict_to(env.alg.left_mult(env.delta_prime.col(i)), right_ideal));
  for (std::size_t i = 0; i < n; ++i) f2.ops.push_back(restrict_to(Matrix<K>(kron(I, h.L(i))), right_ideal));
  for (std::size_t i = 0; i < n; ++i) f2.ops.push_back(restrict_to(Matrix<K>(kron(h.R(i), I)), right_ideal));
  // G^R(H^{S²}) = H⊗̄rH^{S²}: a on the first factor, c on the left of the second.
  auto g2 = tensor_right(h, regular_module(h.algebra(), Side::right),
                         twist(regular_module(h.algebra(), Side::right), antipode_power(h, 2)));
  ActionFamily<K> e2{g2.space.dim(), {}};
  for (std::size_t i = 0; i < n; ++i) e2.ops.push_back(restrict_to(Matrix<K>(kron(h.L(i), I)), g2.space));
  for (std::size_t i = 0; i < n; ++i) e2.ops.push_back(restrict_to(Matrix<K>(kron(I, h.L(i))), g2.space));
  for (const auto& a : g2.module.action) e2.ops.push_back(a);
  rep.expect(is_isomorphic(f2, e2).exists, "right_ideal_iso", std::to_string(f2.dim), std::to_string(e2.dim));
  rep.finalize();
  return rep;
}

// dim Hom_{H^e}(F^L(W), M) = dim Hom_H(W, L(M)).
template <class K>
VerificationReport check_ew_adjunction(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& w, const BimoduleRep<K>& m) {
  VerificationReport rep;
  rep.check_name = "ew_adjunction";
  auto fl = eilenberg_watts(h, w, EWVariant::FL);
  std::size_t lhs = hom_space(fl.family(), m.family()).dim();
  auto lm = l_functor(h, enveloping(h), m);
  std::size_t rhs = hom_space(w, lm.module).dim();
  rep.expect(lhs == rhs, "hom_dimensions", std::to_string(lhs), std::to_string(rhs));
  rep.finalize();
  return rep;
}

}  // namespace wha
