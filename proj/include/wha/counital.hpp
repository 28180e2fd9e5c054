#pragma once

// Counital maps ε_s, ε_t, the counital subalgebras, and antipode invertibility.

#include <cstddef>
#include <optional>

#include "wha/algebra.hpp"

namespace wha {

// E(a, b) = ε(b_a b_b).
template <class K>
Matrix<K> counit_pairing(const WeakHopfAlgebra<K>& h) {
  const std::size_t n = h.dim();
  Matrix<K> e(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) e(a, b) = h.eps(h.algebra().basis_product(a, b));
  return e;
}

// ε_t(h) = ε(1₁h)1₂
template <class K>
Matrix<K> eps_t_matrix(const WeakHopfAlgebra<K>& h) {
  const std::size_t n = h.dim();
  const auto& d1 = h.delta_one();
  Matrix<K> e = counit_pairing(h), m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const K& c = d1[j * n + k];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!e(j, i).is_zero()) m(k, i) += c * e(j, i);
    }
  return m;
}

// ε_s(h) = 1₁ε(h1₂)
template <class K>
Matrix<K> eps_s_matrix(const WeakHopfAlgebra<K>& h) {
  const std::size_t n = h.dim();
  const auto& d1 = h.delta_one();
  Matrix<K> e = counit_pairing(h), m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const K& c = d1[j * n + k];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!e(i, k).is_zero()) m(j, i) += c * e(i, k);
    }
  return m;
}

template <class K>
struct CounitalData {
  Matrix<K> eps_s;
  Matrix<K> eps_t;
  Subspace<K> Hs;
  Subspace<K> Ht;
};

// {h : Δ(h) = 1₁ ⊗ h1₂}
template <class K>
Subspace<K> source_by_coproduct(const WeakHopfAlgebra<K>& h) {
  const std::size_t n = h.dim();
  Matrix<K> m = h.comult();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const K& c = h.delta_one()[j * n + k];
      if (c.is_zero()) continue;
      m -= kron(Matrix<K>::column(unit_vector<K>(n, j)), h.R(k)) * c;
    }
  return kernel_basis(m);
}

// {h : Δ(h) = 1₁h ⊗ 1₂}
template <class K>
Subspace<K> target_by_coproduct(const WeakHopfAlgebra<K>& h) {
  const std::size_t n = h.dim();
  Matrix<K> m = h.comult();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const K& c = h.delta_one()[j * n + k];
      if (c.is_zero()) continue;
      m -= kron(h.L(j), Matrix<K>::column(unit_vector<K>(n, k))) * c;
    }
  return kernel_basis(m);
}

template <class K>
CounitalData<K> counital(const WeakHopfAlgebra<K>& h) {
  CounitalData<K> c{eps_s_matrix(h), eps_t_matrix(h), {}, {}};
  c.Hs = image(c.eps_s);
  c.Ht = image(c.eps_t);
  if (source_by_coproduct(h) != c.Hs)
    throw InputError("inconsistent input: image of eps_s differs from {h : Δ(h) = 1₁ ⊗ h1₂}");
  if (target_by_coproduct(h) != c.Ht)
    throw InputError("inconsistent input: image of eps_t differs from {h : Δ(h) = 1₁h ⊗ 1₂}");
  return c;
}

template <class K>
InverseResult<K> antipode_bijective(const WeakHopfAlgebra<K>& h) {
  return is_invertible_matrix(h.antipode());
}

// Least k ≥ 1 with S^k = id, searched up to `limit`; nullopt if none found.
template <class K>
std::optional<std::size_t> antipode_order(const WeakHopfAlgebra<K>& h, std::size_t limit = 64) {
  const auto id = Matrix<K>::identity(h.dim());
  Matrix<K> p = h.antipode();
  for (std::size_t k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * h.antipode();
  }
  return std::nullopt;
}

template <class K>
Matrix<K> antipode_power(const WeakHopfAlgebra<K>& h, std::size_t k) {
  Matrix<K> p = Matrix<K>::identity(h.dim());
  for (std::size_t i = 0; i < k; ++i) p = p * h.antipode();
  return p;
}

}  // namespace wha
