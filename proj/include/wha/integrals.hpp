#pragma once

// Left and right integrals, unimodularity, and their invertibility/duality checks.

#include <cstddef>
#include <string>

#include "wha/repcat.hpp"

namespace wha {

template <class K>
struct IntegralSpace {
  Side side = Side::left;   // left integrals carry a right module structure
  Subspace<K> space;
  ModuleRep<K> module;
};

namespace detail {

// ∫^ℓ = {h : b_i h = ε_t(b_i) h}, ∫^r = {h : h b_i = h ε_s(b_i)}.
template <class K>
Subspace<K> integral_kernel(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, Side side) {
  const std::size_t n = h.dim();
  const auto& alg = h.algebra();
  std::vector<SparseRow<K>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<K> c = side == Side::left ? Matrix<K>(h.L(i) - alg.left_mult(cd.eps_t.col(i)))
                                     : Matrix<K>(h.R(i) - alg.right_mult(cd.eps_s.col(i)));
    for (std::size_t r = 0; r < n; ++r) {
      auto row = to_sparse<K>(c.row_span(r));
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return kernel_basis(rows, n);
}

// {f(1) : f ∈ Hom(unit, H)} computed from the intertwiner space.
template <class K>
Subspace<K> integral_by_hom(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, Side side) {
  ModuleRep<K> unit = unit_object(h, cd, side == Side::left ? Side::left : Side::right);
  auto hom = hom_space(unit, regular_module(h.algebra(), unit.side));
  const Subspace<K>& sub = side == Side::left ? cd.Ht : cd.Hs;
  auto one = sub.coordinates(h.unit());
  if (!one) throw EngineError("unit is not in the counital subalgebra");
  std::vector<Vector<K>> vals;
  for (std::size_t j = 0; j < hom.dim(); ++j) vals.push_back(hom.map(j) * *one);
  return Subspace<K>::from_vectors(vals, h.dim());
}

}  // namespace detail

template <class K>
IntegralSpace<K> left_integrals(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd) {
  IntegralSpace<K> s;
  s.side = Side::left;
  s.space = detail::integral_kernel(h, cd, Side::left);
  if (detail::integral_by_hom(h, cd, Side::left) != s.space)
    throw EngineError("left integrals: kernel and Hom(H_t, H) computations disagree");
  s.module = submodule(regular_module(h.algebra(), Side::right), s.space);
  return s;
}

template <class K>
IntegralSpace<K> right_integrals(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd) {
  IntegralSpace<K> s;
  s.side = Side::right;
  s.space = detail::integral_kernel(h, cd, Side::right);
  if (detail::integral_by_hom(h, cd, Side::right) != s.space)
    throw EngineError("right integrals: kernel and Hom(H_s, H) computations disagree");
  s.module = submodule(regular_module(h.algebra(), Side::left), s.space);
  return s;
}

// ∫^ℓ ≅ H_s as right modules; the equivalent ∫^r ≅ H_t must agree.
template <class K>
bool is_unimodular(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const IntegralSpace<K>& left,
                   const IntegralSpace<K>& right) {
  bool a = is_isomorphic(left.module, unit_object(h, cd, Side::right)).exists;
  bool b = is_isomorphic(right.module, unit_object(h, cd, Side::left)).exists;
  if (a != b) throw EngineError("unimodularity criteria disagree");
  return a;
}

template <class K>
VerificationReport check_integral_invertibility(const WeakHopfAlgebra<K>& h, const CounitalData<K>& cd, const IntegralSpace<K>& left,
                                const IntegralSpace<K>& right) {
  VerificationReport rep;
  rep.check_name = "integral_invertibility";
  rep.expect(is_invertible_object(h, cd, left.module).invertible, "left_integral_invertible");
  rep.expect(is_invertible_object(h, cd, right.module).invertible, "right_integral_invertible");
  rep.expect(is_isomorphic(s_twist(h, left.module), right.module).exists, "twisted_left_is_right");
  rep.expect(is_isomorphic(left.module, s_twist(h, right.module)).exists, "left_is_twisted_right");
  rep.expect(left.space.dim() == right.space.dim(), "equal_dimension", std::to_string(left.space.dim()),
             std::to_string(right.space.dim()));
  Matrix<K> s2 = h.antipode() * h.antipode();
  rep.expect(is_isomorphic(twist(left.module, s2), left.module).exists, "s2_twist_rigid");
  rep.finalize();
  return rep;
}

template <class K>
std::vector<std::string> format_basis(const WeakHopfAlgebra<K>& h, const Subspace<K>& s) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < s.dim(); ++j) out.push_back(format_element(h.field(), s.basis_vector(j), h.labels()));
  return out;
}

}  // namespace wha
