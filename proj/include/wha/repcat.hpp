#pragma once

// Monoidal structure of H-Mod and Mod-H: rigidity data for left duals,
// invertible objects, Eilenberg–Watts bimodules, bimodule tensor products,
// bimodule duals and twisted regular bimodules.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wha/modules.hpp"

namespace wha {

// Operators on vec(T) (row-major, T of shape rows × cols).
template <class K>
Matrix<K> right_compose_op(const Matrix<K>& m, std::size_t rows) {
  return kron(Matrix<K>::identity(rows), m.transpose());  // T ↦ T·m
}
template <class K>
Matrix<K> left_compose_op(const Matrix<K>& m, std::size_t cols) {
  return kron(m, Matrix<K>::identity(cols));  // T ↦ m·T
}

// ---------------------------------------------------------------------------
// Rigidity of left duals in (H-Mod, ⊗̄ℓ, H_t).

template <class K>
struct LeftDuality {
  ModuleRep<K> dual;
  TruncatedTensor<K> dual_m;  // M* ⊗̄ℓ M
  TruncatedTensor<K> m_dual;  // M ⊗̄ℓ M*
  Matrix<K> ev;               // M*⊗̄M → H_t, canonical coordinates
  Matrix<K> coev;             // H_t → M⊗̄M*, canonical coordinates
  VerificationReport report;
};

namespace detail {

// Left unit constraint H_t⊗̄X → X, z⊗x ↦ z·x, on the ambient H_t⊗X.
template <class K>
Matrix<K> left_unitor_ambient(const ModuleRep<K>& x, const Subspace<K>& ht) {
  const std::size_t t = ht.dim(), m = x.dim;
  Matrix<K> r(m, t * m);
  for (std::size_t s = 0; s < t; ++s) {
    Matrix<K> a = x.act(ht.basis_vector(s));
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t i = 0; i < m; ++i) r(i, s * m + c) = a(i, c);
  }
  return r;
}

// Right unit constraint X⊗̄H_t → X, x⊗z ↦ S^{-1}(z)·x, on the ambient X⊗H_t.
template <class K>
Matrix<K> right_unitor_ambient(const ModuleRep<K>& x, const Subspace<K>& ht, const Matrix<K>& s_inv) {
  const std::size_t t = ht.dim(), m = x.dim;
  Matrix<K> r(m, m * t);
  for (std::size_t s = 0; s < t; ++s) {
    Matrix<K> a = x.act(s_inv * ht.basis_vector(s));
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t i = 0; i < m; ++i) r(i, c * t + s) = a(i, c);
  }
  return r;
}

}  // namespace detail

// The evaluation is ev(φ⊗m) = φ(1₁m)1₂; the coevaluation is the solution of
// the first zigzag identity among module maps H_t → M⊗̄M*, and the second
// zigzag identity is then checked.
template <class K>
LeftDuality<K> left_duality(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const ModuleRep<K>& m) {
  if (m.side != Side::left) throw std::invalid_argument("left_duality expects a left module");
  LeftDuality<K> out;
  auto& rep = out.report;
  rep.check_name = "left_duality";
  const std::size_t n = h.dim(), md = m.dim, t = cd.Ht.dim();
  auto sinv = antipode_bijective(h);
  if (!sinv.invertible) {
    rep.fail("antipode_invertible", {}, "S", "singular");
    return out;
  }
  ModuleRep<K> unit = unit_object(h, cd, Side::left);
  out.dual = dual(h, m);
  out.dual_m = tensor_left(h, out.dual, m);
  out.m_dual = tensor_left(h, m, out.dual);

  // Ambient evaluation M*⊗M → H.
  Matrix<K> ev_amb(n, md * md);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const K& c = h.delta_one()[j * n + k];
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < md; ++a)
        for (std::size_t v = 0; v < md; ++v)
          if (!m.action[j](a, v).is_zero()) ev_amb(k, a * md + v) += c * m.action[j](a, v);
    }
  Matrix<K> ev_ht = coordinates_of<K>(ev_amb, cd.Ht);  // t × md²
  out.ev = ev_ht * out.dual_m.space.basis();
  rep.expect(intertwines(out.ev, out.dual_m.module.family(), unit.family()), "ev_morphism");

  // Unit constraints.
  auto unitors = [&](const ModuleRep<K>& x) {
    auto lt = tensor_left(h, unit, x);
    auto rt = tensor_left(h, x, unit);
    Matrix<K> l = detail::left_unitor_ambient(x, cd.Ht) * lt.space.basis();
    Matrix<K> r = detail::right_unitor_ambient(x, cd.Ht, sinv.inverse) * rt.space.basis();
    rep.expect(intertwines(l, lt.module.family(), x.family()) && intertwines(r, rt.module.family(), x.family()),
               "unitor_morphism");
    auto li = l.square() ? is_invertible_matrix(l) : InverseResult<K>{};
    auto ri = r.square() ? is_invertible_matrix(r) : InverseResult<K>{};
    rep.expect(li.invertible && ri.invertible, "unitor_invertible");
    return std::tuple{lt, rt, li.inverse, ri.inverse};
  };
  auto [lt_m, rt_m, linv_m, rinv_m] = unitors(m);
  auto [lt_d, rt_d, linv_d, rinv_d] = unitors(out.dual);
  if (!rep.passed()) return out;

  // Zigzag 1: M → H_t⊗̄M → (M⊗̄M*)⊗̄M = M⊗̄(M*⊗̄M) → M⊗̄H_t → M equals id.
  const Matrix<K>& bt = out.m_dual.space.basis();  // md² × q
  const std::size_t q = bt.cols();
  Matrix<K> amb_in = lt_m.space.basis() * linv_m;  // (t·md) × md
  Matrix<K> p = detail::right_unitor_ambient(m, cd.Ht, sinv.inverse) * kron(Matrix<K>::identity(md), ev_ht);
  const std::size_t unknowns = q * t;
  std::vector<SparseRow<K>> rows;
  Vector<K> rhs;
  // Y(q', s) = P · (b_{q'} e_s^T ⊗ I) · A
  std::vector<Matrix<K>> y(unknowns);
  for (std::size_t s = 0; s < t; ++s) {
    Matrix<K> as(md, md);
    for (std::size_t c = 0; c < md; ++c)
      for (std::size_t j = 0; j < md; ++j) as(c, j) = amb_in(s * md + c, j);
    for (std::size_t qq = 0; qq < q; ++qq)
      y[qq * t + s] = p * kron(Matrix<K>::column(bt.col(qq)), as);
  }
  for (std::size_t r = 0; r < md; ++r)
    for (std::size_t c = 0; c < md; ++c) {
      SparseRow<K> row;
      for (std::size_t u = 0; u < unknowns; ++u)
        if (!y[u](r, c).is_zero()) row.emplace_back(u, y[u](r, c));
      rows.push_back(std::move(row));
      rhs.push_back(r == c ? K(1) : K(0));
    }
  // Module map condition X ρ_1(b_i) = ρ_T(b_i) X.
  auto cond = intertwiner_conditions(unit.family(), out.m_dual.module.family());
  for (auto& c : cond) {
    rows.push_back(std::move(c));
    rhs.push_back(K(0));
  }
  Matrix<K> sys(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) sys(r, c) = v;
  auto x = solve(sys, rhs);
  if (!rep.expect(x.has_value(), "zigzag_1", "no coevaluation", "")) return out;
  out.coev = Matrix<K>(q, t);
  for (std::size_t qq = 0; qq < q; ++qq)
    for (std::size_t s = 0; s < t; ++s) out.coev(qq, s) = (*x)[qq * t + s];
  rep.expect(intertwines(out.coev, unit.family(), out.m_dual.module.family()), "coev_morphism");

  // Zigzag 2: M* → M*⊗̄H_t → M*⊗̄(M⊗̄M*) = (M*⊗̄M)⊗̄M* → H_t⊗̄M* → M* equals id.
  Matrix<K> coev_amb = bt * out.coev;                    // md² × t
  Matrix<K> in2 = rt_d.space.basis() * rinv_d;           // (md·t) × md
  Matrix<K> step = kron(Matrix<K>::identity(md), coev_amb) * in2;       // M*⊗M⊗M*
  Matrix<K> step2 = kron(ev_ht, Matrix<K>::identity(md)) * step;         // H_t⊗M*
  Matrix<K> out2 = detail::left_unitor_ambient(out.dual, cd.Ht) * step2;
  rep.expect(out2 == Matrix<K>::identity(md), "zigzag_2");
  rep.finalize();
  return out;
}

// ---------------------------------------------------------------------------
// Invertible objects.

template <class K>
struct InvertibilityCertificate {
  bool invertible = false;
  bool other_order = false;  // V* ⊗̄ V ≅ unit as well
  ModuleRep<K> inverse;
  IsoWitness<K> witness;
};

template <class K>
InvertibilityCertificate<K> is_invertible_object(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd,
                                                 const ModuleRep<K>& v) {
  InvertibilityCertificate<K> c;
  ModuleRep<K> unit = unit_object(h, cd, v.side);
  c.inverse = dual(h, v);
  auto vv = truncated_tensor(h, v, c.inverse);
  c.witness = is_isomorphic(vv.module, unit);
  c.invertible = c.witness.exists;
  c.other_order = is_isomorphic(truncated_tensor(h, c.inverse, v).module, unit).exists;
  return c;
}

// ---------------------------------------------------------------------------
// Eilenberg–Watts bimodules.

enum class EWVariant { FL, FR, GL, GR };

// F^L(W) = W⊗̄ℓH, F^R(W) = H⊗̄ℓW (left W), G^L(V) = V⊗̄rH, G^R(V) = H⊗̄rV (right V).
template <class K>
BimoduleRep<K> eilenberg_watts(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& w, EWVariant variant) {
  const bool f_side = variant == EWVariant::FL || variant == EWVariant::FR;
  if (f_side != (w.side == Side::left)) throw std::invalid_argument("eilenberg_watts: side mismatch");
  const bool h_first = variant == EWVariant::FR || variant == EWVariant::GR;
  ModuleRep<K> reg = regular_module(h.algebra(), w.side);
  auto t = h_first ? truncated_tensor(h, reg, w) : truncated_tensor(h, w, reg);
  const auto I = Matrix<K>::identity(w.dim);
  BimoduleRep<K> b{t.space.dim(), {}, {}};
  std::vector<Matrix<K>> extra;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Matrix<K>& mult = f_side ? h.R(i) : h.L(i);
    extra.push_back(restrict_to(h_first ? kron(mult, I) : kron(I, mult), t.space));
  }
  if (f_side) {
    b.left = t.module.action;
    b.right = std::move(extra);
  } else {
    b.left = std::move(extra);
    b.right = t.module.action;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Bimodules over a plain algebra A.

template <class K>
struct BimoduleTensor {
  BimoduleRep<K> bimodule;
  Quotient<K> quotient;  // of U1⊗U2
};

// U1 ⊗_A U2 = U1⊗U2 / span{u·a ⊗ v − u ⊗ a·v}.
template <class K>
BimoduleTensor<K> bimodule_tensor(const BimoduleRep<K>& u1, const BimoduleRep<K>& u2) {
  if (u1.right.size() != u2.left.size()) throw std::invalid_argument("bimodule_tensor: middle algebras differ");
  const std::size_t d1 = u1.dim, d2 = u2.dim;
  const auto I1 = Matrix<K>::identity(d1), I2 = Matrix<K>::identity(d2);
  RowReducer<K> red(d1 * d2);
  for (std::size_t a = 0; a < u1.right.size(); ++a) {
    Matrix<K> rel = kron(u1.right[a], I2) - kron(I1, u2.left[a]);
    for (std::size_t c = 0; c < rel.cols() && !red.full(); ++c) red.insert(to_sparse<K>(rel.col(c)));
  }
  BimoduleTensor<K> out;
  out.quotient = Quotient<K>(Subspace<K>::from_reducer(red));
  out.bimodule.dim = out.quotient.dim();
  for (const auto& l : u1.left) out.bimodule.left.push_back(out.quotient.induced(kron(l, I2)));
  for (const auto& r : u2.right) out.bimodule.right.push_back(out.quotient.induced(kron(I1, r)));
  return out;
}

// U* = Hom_A(_A U, _A A) with (b·f)(u) = f(u·b) and (f·a)(u) = f(u)a.
template <class K>
BimoduleRep<K> bimodule_dual(const Algebra<K>& a, const BimoduleRep<K>& u) {
  auto hom = hom_space(u.left_module().family(), regular_module(a, Side::left).family());
  BimoduleRep<K> d{hom.dim(), {}, {}};
  for (const auto& r : u.right) d.left.push_back(restrict_to(right_compose_op(r, a.dim()), hom.space));
  for (std::size_t i = 0; i < a.dim(); ++i) d.right.push_back(restrict_to(left_compose_op(a.R(i), u.dim), hom.space));
  return d;
}

template <class K>
struct BimoduleInvertibility {
  bool invertible = false;
  bool left_ok = false;   // U ⊗_A U* ≅ A
  bool right_ok = false;  // U* ⊗_A U ≅ A
  BimoduleRep<K> dual;
  IsoWitness<K> witness;
};

template <class K>
BimoduleInvertibility<K> is_invertible_bimodule(const Algebra<K>& a, const BimoduleRep<K>& u) {
  BimoduleInvertibility<K> r;
  r.dual = bimodule_dual(a, u);
  auto reg = regular_bimodule(a);
  r.witness = is_isomorphic(bimodule_tensor(u, r.dual).bimodule, reg);
  r.left_ok = r.witness.exists;
  r.right_ok = is_isomorphic(bimodule_tensor(r.dual, u).bimodule, reg).exists;
  r.invertible = r.left_ok && r.right_ok;
  return r;
}

// A^σ (right action u·b = uσ(b)) or ^σA (left action b·u = σ(b)u).
template <class K>
BimoduleRep<K> twisted_regular(const Algebra<K>& a, const Matrix<K>& sigma, Side twisted_side) {
  BimoduleRep<K> b = regular_bimodule(a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (twisted_side == Side::right)
      b.right[i] = a.right_mult(sigma.col(i));
    else
      b.left[i] = a.left_mult(sigma.col(i));
  }
  return b;
}

// H^{S²} and ^{S²}H.
template <class K>
std::pair<BimoduleRep<K>, BimoduleRep<K>> s_square_twist(const WeakHopfAlgebra<K>& h) {
  Matrix<K> s2 = h.antipode() * h.antipode();
  return {twisted_regular(h.algebra(), s2, Side::right), twisted_regular(h.algebra(), s2, Side::left)};
}

// For an algebra endomorphism σ: whether A^σ is an invertible bimodule, and
// whether σ is bijective. The two must agree.
struct TwistEquivalence {
  bool invertible = false;
  bool bijective = false;
  bool agree() const { return invertible == bijective; }
};

template <class K>
TwistEquivalence twist_equivalence(const Algebra<K>& a, const Matrix<K>& sigma) {
  TwistEquivalence t;
  t.invertible = is_invertible_bimodule(a, twisted_regular(a, sigma, Side::right)).invertible;
  t.bijective = is_invertible_matrix(sigma).invertible;
  return t;
}

// Whether σ (column i = σ(b_i)) is a unital algebra endomorphism.
template <class K>
bool is_algebra_endomorphism(const Algebra<K>& a, const Matrix<K>& sigma) {
  if (sigma * a.unit() != a.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (sigma * a.basis_product(i, j) != a.mul(sigma.col(i), sigma.col(j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subalgebras and the underlying H_t-bimodule of a left module.

// Algebra structure on an invariant subalgebra, in canonical coordinates.
template <class K>
Algebra<K> subalgebra(const Algebra<K>& a, const Subspace<K>& s) {
  const std::size_t d = s.dim();
  Matrix<K> m(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = s.coordinates(a.mul(s.basis_vector(i), s.basis_vector(j)));
      if (!c) throw EngineError("subalgebra: subspace not closed under multiplication");
      for (std::size_t k = 0; k < d; ++k) m(k, i * d + j) = (*c)[k];
    }
  auto u = s.coordinates(a.unit());
  if (!u) throw EngineError("subalgebra: unit not in subspace");
  return Algebra<K>(std::move(m), *u);
}

// Left module M as an H_t-bimodule: x·m and m*x = S^{-1}(x)m for x ∈ H_t.
template <class K>
BimoduleRep<K> underlying_target_bimodule(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const ModuleRep<K>& m) {
  auto sinv = antipode_bijective(h);
  if (!sinv.invertible) throw EngineError("antipode is not invertible");
  BimoduleRep<K> b{m.dim, {}, {}};
  for (std::size_t s = 0; s < cd.Ht.dim(); ++s) {
    b.left.push_back(m.act(cd.Ht.basis_vector(s)));
    b.right.push_back(m.act(sinv.inverse * cd.Ht.basis_vector(s)));
  }
  return b;
}

// M ⊗̄ℓ N against M ⊗_{H_t} N: the projection from the truncated subspace to
// the balanced quotient must be bijective.
template <class K>
VerificationReport truncated_vs_balanced(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const ModuleRep<K>& m,
                                         const ModuleRep<K>& n) {
  VerificationReport rep;
  rep.check_name = "truncated_vs_balanced";
  auto t = tensor_left(h, m, n);
  auto bt = bimodule_tensor(underlying_target_bimodule(h, cd, m), underlying_target_bimodule(h, cd, n));
  rep.expect(t.space.dim() == bt.bimodule.dim, "dimension", std::to_string(t.space.dim()), std::to_string(bt.bimodule.dim));
  if (rep.passed()) rep.expect(invertible_fast(Matrix<K>(bt.quotient.projection() * t.space.basis())), "identity_intertwines");
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------------------
// Hom_H(X, H) as a right module, (f·a)(x) = f(x)a.

template <class K>
ModuleRep<K> hom_to_regular(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& x) {
  if (x.side != Side::left) throw std::invalid_argument("hom_to_regular expects a left module");
  auto hom = hom_space(x, regular_module(h.algebra(), Side::left));
  ModuleRep<K> r{Side::right, hom.dim(), {}};
  for (std::size_t i = 0; i < h.dim(); ++i) r.action.push_back(restrict_to(left_compose_op(h.R(i), x.dim), hom.space));
  return r;
}

// Hom_H(W⊗̄ℓV, H) ≅ Hom_H(W, H⊗̄ℓV*) and Hom_H(V, H) ≅ Hom_H(H_t, H) ⊗̄r (V*)^S as right modules.
template <class K>
VerificationReport check_hom_adjunction(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const ModuleRep<K>& w,
                                        const ModuleRep<K>& v) {
  VerificationReport rep;
  rep.check_name = "hom_adjunction";
  ModuleRep<K> reg = regular_module(h.algebra(), Side::left);
  ModuleRep<K> vd = dual(h, v);
  auto lhs = hom_to_regular(h, tensor_left(h, w, v).module);
  // Hom_H(W, H⊗̄ℓV*) with right action through the H factor.
  auto hv = tensor_left(h, reg, vd);
  auto hom = hom_space(w, hv.module);
  ModuleRep<K> rhs{Side::right, hom.dim(), {}};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix<K> ri = restrict_to(kron(h.R(i), Matrix<K>::identity(v.dim)), hv.space);
    rhs.action.push_back(restrict_to(left_compose_op(ri, w.dim), hom.space));
  }
  rep.expect(is_isomorphic(lhs, rhs).exists, "adjunction", std::to_string(lhs.dim), std::to_string(rhs.dim));
  auto integ = hom_to_regular(h, unit_object(h, cd, Side::left));
  auto rhs2 = tensor_right(h, integ, s_twist(h, vd)).module;
  auto lhs2 = hom_to_regular(h, v);
  rep.expect(is_isomorphic(lhs2, rhs2).exists, "integral_factorization", std::to_string(lhs2.dim), std::to_string(rhs2.dim));
  rep.finalize();
  return rep;
}

}  // namespace wha
