#pragma once

// Left-left Hopf modules: coinvariants, the fundamental isomorphisms, and the
// free Hopf module H⊗̄ℓW with its comparison to H⊗̄rW^S.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wha/repcat.hpp"

namespace wha {

// action[i] = b_i·(−); coaction is (n·dim) × dim with m ↦ m_{[-1]} ⊗ m_{[0]}.
template <class K>
struct HopfModuleRep {
  std::size_t dim = 0;
  std::vector<Matrix<K>> action;
  Matrix<K> coaction;

  ModuleRep<K> module() const { return {Side::left, dim, action}; }
};

template <class K>
HopfModuleRep<K> regular_hopf_module(const WeakHopfAlgebra<K>& h) {
  return {h.dim(), regular_module(h.algebra(), Side::left).action, h.comult()};
}

namespace detail {

// Σ x^{jk} (A_j ⊗ B_k) with A from H-ops of size a, B from H-ops of size b.
template <class K>
Matrix<K> split_action(const Vector<K>& x, std::size_t n, const std::vector<Matrix<K>>& a, const std::vector<Matrix<K>>& b) {
  Matrix<K> r(a[0].rows() * b[0].rows(), a[0].cols() * b[0].cols());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!x[j * n + k].is_zero()) r += kron(a[j], b[k]) * x[j * n + k];
  return r;
}

// m ↦ 1₁ ⊗ 1₂m, as an (n·dim) × dim matrix.
template <class K>
Matrix<K> trivial_coaction(const WeakHopfAlgebra<K>& h, const std::vector<Matrix<K>>& action) {
  const std::size_t n = h.dim(), m = action[0].rows();
  const Vector<K>& d1 = h.delta_one();
  Matrix<K> r(n * m, m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const K& c = d1[j * n + k];
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (!action[k](a, b).is_zero()) r(j * m + a, b) += c * action[k](a, b);
    }
  return r;
}

// Coordinates of x ∈ H ⊗ ambient(s) against H ⊗ s, or nullopt if x leaves H ⊗ s.
template <class K>
std::optional<Matrix<K>> coordinates_in_tensor(const Matrix<K>& x, std::size_t n, const Subspace<K>& s) {
  const std::size_t amb = s.ambient_dim(), d = s.dim();
  Matrix<K> out(n * d, x.cols());
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<K> block(amb, x.cols());
    for (std::size_t r = 0; r < amb; ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) block(r, c) = x(j * amb + r, c);
    auto co_opt = try_coordinates_of(block, s);
    if (!co_opt) return std::nullopt;
    const Matrix<K>& co = *co_opt;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) out(j * d + r, c) = co(r, c);
  }
  return out;
}

}  // namespace detail

template <class K>
VerificationReport check_hopf_module(const WeakHopfAlgebra<K>& h, const HopfModuleRep<K>& m) {
  VerificationReport rep = check_module(h.algebra(), m.module());
  rep.check_name = "hopf_module";
  const std::size_t n = h.dim(), d = m.dim;
  const auto Id = Matrix<K>::identity(d), In = Matrix<K>::identity(n);
  for (const char* s : {"coassociative", "counital", "compatible", "truncated"}) rep.section(s);
  if (m.coaction.rows() != n * d || m.coaction.cols() != d) {
    rep.fail("coaction_shape", {}, m.coaction.shape(), std::to_string(n * d) + "x" + std::to_string(d));
    return rep;
  }
  if (kron(h.comult(), Id) * m.coaction != kron(In, m.coaction) * m.coaction)
    rep.fail("coassociative", {}, "(delta x id) rho", "(id x rho) rho");
  if (kron(Matrix<K>::row(h.counit()), Id) * m.coaction != Id) rep.fail("counital", {}, "(eps x id) rho", "id");
  std::vector<Matrix<K>> lh;
  for (std::size_t i = 0; i < n; ++i) lh.push_back(h.L(i));
  for (std::size_t i = 0; i < n; ++i)
    if (m.coaction * m.action[i] != detail::split_action(h.delta(i), n, lh, m.action) * m.coaction)
      rep.fail("compatible", {i}, "rho(b_i m)", "b_i1 m_-1 x b_i2 m_0");
  if (detail::split_action(h.delta_one(), n, lh, m.action) * m.coaction != m.coaction)
    rep.fail("truncated", {}, "delta(1) rho", "rho");
  rep.finalize();
  return rep;
}

// M^{co H} = {m : ρ(m) = 1₁ ⊗ 1₂m}.
template <class K>
Subspace<K> coinvariants(const WeakHopfAlgebra<K>& h, const HopfModuleRep<K>& m) {
  return kernel_basis(Matrix<K>(m.coaction - detail::trivial_coaction(h, m.action)));
}

template <class K>
struct FundamentalIsos {
  Subspace<K> coinv;
  Quotient<K> quotient;  // of H ⊗ M^{co H}
  HopfModuleRep<K> induced;  // H ⊗_{H_s} M^{co H}
  Matrix<K> f;  // induced → M, h⊗m ↦ hm
  Matrix<K> g;  // M → induced, m ↦ m_{[-2]} ⊗ S(m_{[-1]})m_{[0]}
  VerificationReport report;
};

template <class K>
FundamentalIsos<K> fundamental_isos(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const HopfModuleRep<K>& m) {
  FundamentalIsos<K> out;
  auto& rep = out.report;
  rep.check_name = "fundamental_theorem";
  for (const char* s : {"coinvariants_stable", "f_well_defined", "g_lands_in_coinvariants", "fg_identity", "gf_identity",
                        "f_module", "f_comodule", "g_module", "g_comodule"})
    rep.section(s);
  const std::size_t n = h.dim(), d = m.dim;
  out.coinv = coinvariants(h, m);
  const Subspace<K>& C = out.coinv;
  const std::size_t c = C.dim();
  const auto Ic = Matrix<K>::identity(c), In = Matrix<K>::identity(n);
  auto mod = m.module();

  // Relations hs ⊗ m − h ⊗ sm for s ∈ H_s.
  RowReducer<K> red(n * c);
  for (std::size_t s = 0; s < cd.Hs.dim(); ++s) {
    Vector<K> sv = cd.Hs.basis_vector(s);
    Matrix<K> sm = mod.act(sv) * C.basis();
    auto sm_c = try_coordinates_of(sm, C);
    if (!sm_c) {
      rep.fail("coinvariants_stable", {s}, "s m", "not coinvariant");
      continue;
    }
    Matrix<K> rel = kron(h.algebra().right_mult(sv), Ic) - kron(In, *sm_c);
    for (std::size_t col = 0; col < rel.cols() && !red.full(); ++col) red.insert(to_sparse<K>(rel.col(col)));
  }
  if (!rep.passed()) {
    rep.finalize();
    return out;
  }
  out.quotient = Quotient<K>(Subspace<K>::from_reducer(red));
  const auto& Q = out.quotient;
  const std::size_t q = Q.dim();

  out.induced.dim = q;
  for (std::size_t i = 0; i < n; ++i) out.induced.action.push_back(Q.induced(kron(h.L(i), Ic)));
  out.induced.coaction = kron(In, Q.projection()) * kron(h.comult(), Ic) * Q.section();

  Matrix<K> f_amb(d, n * c);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<K> col = m.action[i] * C.basis();
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t j = 0; j < c; ++j) f_amb(r, i * c + j) = col(r, j);
  }
  if (!(f_amb * Q.relations().basis()).is_zero()) rep.fail("f_well_defined", {}, "f(relations)", "0");
  out.f = f_amb * Q.section();

  // m ↦ (Δ⊗id)ρ(m) ↦ h ⊗ S(h')m' ∈ H ⊗ M.
  Matrix<K> mu_s(d, n * d);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<K> a = mod.act(h.antipode().col(i));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t j = 0; j < d; ++j) mu_s(r, i * d + j) = a(r, j);
  }
  Matrix<K> g_amb = kron(In, mu_s) * kron(h.comult(), Matrix<K>::identity(d)) * m.coaction;
  auto g_c = detail::coordinates_in_tensor(g_amb, n, C);
  if (!g_c) {
    rep.fail("g_lands_in_coinvariants", {}, "S(m_-1)m_0", "not coinvariant");
    rep.finalize();
    return out;
  }
  out.g = Q.projection() * *g_c;

  const auto Id = Matrix<K>::identity(d), Iq = Matrix<K>::identity(q);
  if (out.f.rows() != d || out.g.rows() != q || out.f * out.g != Id) rep.fail("fg_identity", {}, "f g", "id");
  if (out.g * out.f != Iq) rep.fail("gf_identity", {}, "g f", "id");
  for (std::size_t i = 0; i < n; ++i) {
    if (out.f * out.induced.action[i] != m.action[i] * out.f) rep.fail("f_module", {i}, "f(b_i x)", "b_i f(x)");
    if (out.g * m.action[i] != out.induced.action[i] * out.g) rep.fail("g_module", {i}, "g(b_i m)", "b_i g(m)");
  }
  if (m.coaction * out.f != kron(In, out.f) * out.induced.coaction) rep.fail("f_comodule", {}, "rho f", "(id x f) rho");
  if (out.induced.coaction * out.g != kron(In, out.g) * m.coaction) rep.fail("g_comodule", {}, "rho g", "(id x g) rho");
  rep.finalize();
  return out;
}

// H⊗̄ℓW with h·(x⊗w) = h₁x ⊗ h₂w and coaction x⊗w ↦ x₁ ⊗ (x₂⊗w).
template <class K>
struct FreeHopfModule {
  HopfModuleRep<K> hopf;
  Subspace<K> space;  // inside H ⊗ W
};

template <class K>
FreeHopfModule<K> free_hopf_module(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& w) {
  auto t = tensor_left(h, regular_module(h.algebra(), Side::left), w);
  FreeHopfModule<K> out;
  out.space = t.space;
  out.hopf.dim = t.space.dim();
  out.hopf.action = t.module.action;
  Matrix<K> amb = kron(h.comult(), Matrix<K>::identity(w.dim)) * t.space.basis();
  auto co = detail::coordinates_in_tensor(amb, h.dim(), t.space);
  if (!co) throw EngineError("free Hopf module: coaction leaves H ⊗ (H⊗̄W)");
  out.hopf.coaction = std::move(*co);
  return out;
}

// H ⊗_{H_s} W → H⊗̄ℓW, h⊗w ↦ h₁ ⊗ h₂w, is an isomorphism of left modules.
template <class K>
Matrix<K> swap_ambient(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& w);

template <class K>
VerificationReport check_free_vs_balanced(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const ModuleRep<K>& w) {
  VerificationReport rep;
  rep.check_name = "free_vs_balanced";
  const std::size_t n = h.dim();
  const auto Iw = Matrix<K>::identity(w.dim), In = Matrix<K>::identity(n);
  RowReducer<K> red(n * w.dim);
  for (std::size_t s = 0; s < cd.Hs.dim(); ++s) {
    Vector<K> sv = cd.Hs.basis_vector(s);
    Matrix<K> rel = kron(h.algebra().right_mult(sv), Iw) - kron(In, w.act(sv));
    for (std::size_t c = 0; c < rel.cols() && !red.full(); ++c) red.insert(to_sparse<K>(rel.col(c)));
  }
  Quotient<K> q(Subspace<K>::from_reducer(red));
  ModuleRep<K> bal{Side::left, q.dim(), {}};
  for (std::size_t i = 0; i < n; ++i) bal.action.push_back(q.induced(kron(h.L(i), Iw)));
  auto t = tensor_left(h, regular_module(h.algebra(), Side::left), w);
  Matrix<K> amb = swap_ambient(h, w);
  rep.expect((amb * q.relations().basis()).is_zero(), "well_defined");
  auto phi = try_coordinates_of(Matrix<K>(amb * q.section()), t.space);
  if (rep.expect(phi.has_value(), "lands_in_truncated")) {
    rep.expect(invertible_fast(*phi), "invertible", std::to_string(bal.dim), std::to_string(t.module.dim));
    rep.expect(intertwines(*phi, bal.family(), t.module.family()), "module_map");
  }
  rep.finalize();
  return rep;
}

// φ: H⊗̄rW^S → H⊗̄ℓW, g⊗w ↦ g₁ ⊗ g₂w, an isomorphism of H-bimodules
// between G^R(W^S) and F^R(W).
template <class K>
struct SwapIso {
  BimoduleRep<K> source;  // G^R(W^S)
  BimoduleRep<K> target;  // F^R(W)
  Subspace<K> source_space, target_space;
  Matrix<K> phi;
  VerificationReport report;
};

template <class K>
Matrix<K> swap_ambient(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& w) {
  const std::size_t n = h.dim(), m = w.dim;
  Matrix<K> phi(n * m, n * m);
  for (std::size_t g = 0; g < n; ++g) {
    Vector<K> dg = h.delta(g);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const K& c = dg[j * n + k];
        if (c.is_zero()) continue;
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b)
            if (!w.action[k](a, b).is_zero()) phi(j * m + a, g * m + b) += c * w.action[k](a, b);
      }
  }
  return phi;
}

template <class K>
SwapIso<K> swap_iso(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& w) {
  if (w.side != Side::left) throw std::invalid_argument("swap_iso expects a left module");
  SwapIso<K> out;
  auto& rep = out.report;
  rep.check_name = "swap_iso";
  out.target = eilenberg_watts(h, w, EWVariant::FR);
  out.source = eilenberg_watts(h, s_twist(h, w), EWVariant::GR);
  ModuleRep<K> reg = regular_module(h.algebra(), Side::left);
  out.target_space = tensor_left(h, reg, w).space;
  out.source_space = tensor_right(h, regular_module(h.algebra(), Side::right), s_twist(h, w)).space;
  Matrix<K> amb = swap_ambient(h, w);
  Matrix<K> img = amb * out.source_space.basis();
  auto phi = try_coordinates_of(img, out.target_space);
  if (!rep.expect(phi.has_value(), "lands_in_truncated")) {
    rep.finalize();
    return out;
  }
  out.phi = std::move(*phi);
  rep.expect(invertible_fast(out.phi), "invertible", std::to_string(out.source.dim), std::to_string(out.target.dim));
  if (rep.passed()) rep.expect(intertwines(out.phi, out.source.family(), out.target.family()), "bimodule_map");
  rep.finalize();
  return out;
}

// Naturality of the swap isomorphism along a module map t: W1 → W2.
template <class K>
bool swap_natural(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& w1, const ModuleRep<K>& w2, const Matrix<K>& t) {
  auto s1 = swap_iso(h, w1), s2 = swap_iso(h, w2);
  if (!s1.report.passed() || !s2.report.passed()) return false;
  Matrix<K> it = kron(Matrix<K>::identity(h.dim()), t);
  Matrix<K> src_map = coordinates_of(Matrix<K>(it * s1.source_space.basis()), s2.source_space);
  Matrix<K> tgt_map = coordinates_of(Matrix<K>(it * s1.target_space.basis()), s2.target_space);
  return s2.phi * src_map == tgt_map * s1.phi;
}

}  // namespace wha
