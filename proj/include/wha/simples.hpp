#pragma once

// Composition factors and simple modules, by splitting with null spaces of
// p(X) for elements X of the action algebra and irreducible factors p of their
// minimal polynomials (Norton's irreducibility test).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wha/modules.hpp"
#include "wha/poly.hpp"

namespace wha {

template <class K>
Poly<K> matrix_minimal_polynomial(const Matrix<K>& x) {
  const std::size_t d = x.rows();
  std::vector<Vector<K>> powers{flatten(Matrix<K>::identity(d))};
  Matrix<K> p = Matrix<K>::identity(d);
  for (;;) {
    Matrix<K> m(d * d, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j) m.set_col(j, powers[j]);
    auto ker = kernel_basis(m);
    if (ker.dim() > 0) {
      Vector<K> c = ker.basis_vector(0);
      return make_monic(Poly<K>(c.begin(), c.end()));
    }
    p = p * x;
    powers.push_back(flatten(p));
  }
}

template <class K>
Matrix<K> matrix_poly_eval(const Poly<K>& p, const Matrix<K>& x) {
  Matrix<K> acc(x.rows(), x.cols());
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * x;
    acc += Matrix<K>::identity(x.rows()) * p[k];
  }
  return acc;
}

// Irreducible factors of p that can be certified: linear factors from roots,
// and the square-free root-free part when its degree is at most 3.
template <class K>
std::vector<Poly<K>> known_irreducible_factors(const Field<K>& f, const Poly<K>& p) {
  std::vector<Poly<K>> out;
  Poly<K> rest = squarefree_part(p);
  for (const auto& r : roots_in_field(f, p)) {
    Poly<K> lin{-r, K(1)};
    out.push_back(lin);
    rest = poly_divmod(rest, lin).first;
  }
  if (degree(rest) >= 2 && degree(rest) <= 3) out.push_back(rest);
  return out;
}

// Basis of the span of all products of the action matrices, as matrices.
template <class K>
std::vector<Matrix<K>> action_algebra(const ModuleRep<K>& m) {
  std::vector<Matrix<K>> ops;
  for (const auto& a : m.action) ops.push_back(kron(a, Matrix<K>::identity(m.dim)));
  auto s = generated_submodule(ops, {flatten(Matrix<K>::identity(m.dim))}, m.dim * m.dim);
  HomSpace<K> shape{m.dim, m.dim, s};
  std::vector<Matrix<K>> out;
  for (std::size_t j = 0; j < s.dim(); ++j) out.push_back(shape.map(j));
  return out;
}

template <class K>
struct SplitOutcome {
  bool irreducible = false;
  std::optional<Subspace<K>> submodule;  // proper and nonzero
};

template <class K>
SplitOutcome<K> split_module(const Field<K>& f, const ModuleRep<K>& m) {
  SplitOutcome<K> out;
  const std::size_t d = m.dim;
  if (d <= 1) {
    out.irreducible = d == 1;
    return out;
  }
  std::vector<Matrix<K>> transposed;
  for (const auto& a : m.action) transposed.push_back(a.transpose());
  auto basis = action_algebra(m);
  std::vector<Matrix<K>> candidates = basis;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) candidates.push_back(basis[a] + basis[b]);
  for (const auto& x : candidates) {
    for (const auto& factor : known_irreducible_factors(f, matrix_minimal_polynomial(x))) {
      Matrix<K> theta = matrix_poly_eval(factor, x);
      auto ker = kernel_basis(theta);
      for (std::size_t j = 0; j < ker.dim(); ++j) {
        auto s = generated_submodule(m.action, {ker.basis_vector(j)}, d);
        if (s.dim() < d) {
          out.submodule = s;
          return out;
        }
      }
      auto kert = kernel_basis(Matrix<K>(theta.transpose()));
      for (std::size_t j = 0; j < kert.dim(); ++j) {
        auto s = generated_submodule(transposed, {kert.basis_vector(j)}, d);
        if (s.dim() < d) {
          out.submodule = kernel_basis(Matrix<K>(s.basis().transpose()));
          return out;
        }
      }
      if (static_cast<long>(ker.dim()) == degree(factor)) {
        out.irreducible = true;
        return out;
      }
    }
  }
  throw UndecidedError("irreducibility undecided for a module of dimension " + std::to_string(d));
}

template <class K>
std::vector<ModuleRep<K>> composition_factors(const Field<K>& f, const ModuleRep<K>& m) {
  if (m.dim == 0) return {};
  auto sp = split_module(f, m);
  if (sp.irreducible) return {m};
  Quotient<K> q(*sp.submodule);
  ModuleRep<K> top{m.side, q.dim(), {}};
  for (const auto& a : m.action) top.action.push_back(q.induced(a));
  auto out = composition_factors(f, submodule(m, *sp.submodule));
  for (auto& x : composition_factors(f, top)) out.push_back(std::move(x));
  return out;
}

// Simple modules up to isomorphism, from the composition factors of the regular
// module, ordered by dimension then discovery.
template <class K>
std::vector<ModuleRep<K>> simple_modules(const WeakHopfAlgebra<K>& h, Side side = Side::left) {
  std::vector<ModuleRep<K>> out;
  for (auto& s : composition_factors(h.field(), regular_module(h.algebra(), side))) {
    bool seen = false;
    for (const auto& t : out)
      if (is_isomorphic(s, t).exists) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dim < b.dim; });
  return out;
}

}  // namespace wha
