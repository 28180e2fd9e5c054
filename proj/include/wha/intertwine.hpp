#pragma once

// Intertwiner spaces and isomorphism search between families of operators.
// A family is a list of square matrices (A_1..A_r) on one space; a map T
// intertwines (A_i) and (B_i) when T A_i = B_i T for all i.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wha/algebra.hpp"

namespace wha {

template <class K>
struct ActionFamily {
  std::size_t dim = 0;
  std::vector<Matrix<K>> ops;
};

template <class K>
struct HomSpace {
  std::size_t rows = 0, cols = 0;
  Subspace<K> space;

  std::size_t dim() const { return space.dim(); }
  Matrix<K> map(std::size_t j) const { return to_map(space.basis_vector(j)); }
  Matrix<K> to_map(const Vector<K>& v) const {
    Matrix<K> t(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t(r, c) = v[r * cols + c];
    return t;
  }
};

template <class K>
Vector<K> flatten(const Matrix<K>& t) {
  Vector<K> v(t.rows() * t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) v[r * t.cols() + c] = t(r, c);
  return v;
}

namespace detail {

template <class K>
void push_merged(std::vector<SparseRow<K>>& rows, SparseRow<K> row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow<K> merged;
  for (auto& e : row) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
  if (!merged.empty()) rows.push_back(std::move(merged));
}

}  // namespace detail

// Linear conditions T A_i − B_i T = 0 on T (tgt.dim × src.dim, row-major).
template <class K>
std::vector<SparseRow<K>> intertwiner_conditions(const ActionFamily<K>& src, const ActionFamily<K>& tgt) {
  if (src.ops.size() != tgt.ops.size()) throw std::invalid_argument("intertwiner: families of different length");
  const std::size_t ms = src.dim, mt = tgt.dim;
  std::vector<SparseRow<K>> rows;
  for (std::size_t i = 0; i < src.ops.size(); ++i) {
    const auto& a = src.ops[i];
    const auto& b = tgt.ops[i];
    if (a.rows() != ms || a.cols() != ms || b.rows() != mt || b.cols() != mt)
      throw std::invalid_argument("intertwiner: operator shape mismatch");
    for (std::size_t r = 0; r < mt; ++r)
      for (std::size_t c = 0; c < ms; ++c) {
        SparseRow<K> row;
        for (std::size_t k = 0; k < ms; ++k)
          if (!a(k, c).is_zero()) row.emplace_back(r * ms + k, a(k, c));
        for (std::size_t k = 0; k < mt; ++k)
          if (!b(r, k).is_zero()) row.emplace_back(k * ms + c, -b(r, k));
        detail::push_merged(rows, std::move(row));
      }
  }
  return rows;
}

template <class K>
HomSpace<K> hom_space(const ActionFamily<K>& src, const ActionFamily<K>& tgt) {
  HomSpace<K> h;
  h.rows = tgt.dim;
  h.cols = src.dim;
  h.space = kernel_basis(intertwiner_conditions(src, tgt), src.dim * tgt.dim);
  return h;
}

template <class K>
bool intertwines(const Matrix<K>& t, const ActionFamily<K>& src, const ActionFamily<K>& tgt) {
  for (std::size_t i = 0; i < src.ops.size(); ++i)
    if (t * src.ops[i] != tgt.ops[i] * t) return false;
  return true;
}

// Invertibility with a modular shortcut: a nonzero determinant modulo a prime
// not dividing any denominator certifies invertibility over Q.
template <class K>
bool invertible_fast(const Matrix<K>& t) {
  if (!t.square()) return false;
  if constexpr (is_rational_v<K>) {
    constexpr std::uint32_t p = 2147483629u;
    Field<ModP> f(p);
    Matrix<ModP> m(t.rows(), t.cols());
    bool ok = true;
    for (std::size_t r = 0; r < t.rows() && ok; ++r)
      for (std::size_t c = 0; c < t.cols() && ok; ++c) {
        const auto& q = t(r, c).raw();
        mpz_class num = q.get_num() % p, den = q.get_den() % p;
        if (den == 0) {
          ok = false;
          break;
        }
        m(r, c) = ModP(num.get_si(), p) / ModP(den.get_si(), p);
      }
    if (ok && rank(m) == t.rows()) return true;
  }
  return rank(t) == t.rows();
}

template <class K>
struct IsoWitness {
  bool exists = false;
  Matrix<K> map;
};

struct UndecidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kIsoSearchMaxHomDim = 8;

// Searches hom(src, tgt) for an invertible element: basis elements, pairwise
// sums, a few dense and seeded random combinations, then the grid {0..d}^k with d = dim. det(Σ λ_i T_i) is a polynomial of
// degree ≤ d, so when it is not identically zero it is nonzero somewhere on
// that grid.
template <class K>
IsoWitness<K> is_isomorphic(const ActionFamily<K>& src, const ActionFamily<K>& tgt) {
  IsoWitness<K> w;
  if (src.dim != tgt.dim) return w;
  if (src.dim == 0) {
    w.exists = true;
    w.map = Matrix<K>(0, 0);
    return w;
  }
  auto hom = hom_space(src, tgt);
  const std::size_t k = hom.dim(), d = src.dim;
  if (k == 0) return w;
  std::vector<Matrix<K>> ts;
  for (std::size_t j = 0; j < k; ++j) ts.push_back(hom.map(j));
  auto accept = [&](const Matrix<K>& t) {
    if (!invertible_fast(t)) return false;
    w.exists = true;
    w.map = t;
    return true;
  };
  for (const auto& t : ts)
    if (accept(t)) return w;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (accept(ts[a] + ts[b])) return w;
  // A few fixed dense combinations: all ones, then λ_j = j+1, λ_j = (j+1)².
  for (int shape = 0; shape < 3; ++shape) {
    Matrix<K> t(d, d);
    for (std::size_t j = 0; j < k; ++j) {
      long c = shape == 0 ? 1 : shape == 1 ? static_cast<long>(j + 1) : static_cast<long>((j + 1) * (j + 1));
      t += ts[j] * K(c);
    }
    if (accept(t)) return w;
  }
  // Seeded random combinations with coefficients in [-10^6, 10^6].
  std::mt19937 gen(20240611u);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix<K> t(d, d);
    for (std::size_t j = 0; j < k; ++j) t += ts[j] * K(coef(gen));
    if (accept(t)) return w;
  }
  // Necessary conditions: an isomorphism identifies hom(src, tgt) with End(src), End(tgt) and hom(tgt, src).
  if (hom_space(src, src).dim() != k || hom_space(tgt, tgt).dim() != k || hom_space(tgt, src).dim() != k) return w;
  if (k > kIsoSearchMaxHomDim)
    throw UndecidedError("isomorphism search undecided: hom space of dimension " + std::to_string(k) + " exceeds cap " +
                         std::to_string(kIsoSearchMaxHomDim));
  std::vector<std::size_t> lambda(k, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < k && lambda[pos] == d) lambda[pos++] = 0;
    if (pos == k) break;
    ++lambda[pos];
    Matrix<K> t(d, d);
    for (std::size_t j = 0; j < k; ++j)
      if (lambda[j]) t += ts[j] * K(static_cast<long>(lambda[j]));
    if (accept(t)) return w;
  }
  return w;
}

}  // namespace wha
