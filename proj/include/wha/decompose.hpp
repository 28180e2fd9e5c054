#pragma once

// Splitting a weak Hopf algebra into weak Hopf algebra summands along central
// idempotents.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wha/axioms.hpp"
#include "wha/poly.hpp"

namespace wha {

template <class K>
Subspace<K> center(const Algebra<K>& a) {
  const std::size_t n = a.dim();
  std::vector<SparseRow<K>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<K> c = a.L(i) - a.R(i);
    for (std::size_t r = 0; r < n; ++r) {
      auto row = to_sparse<K>(c.row_span(r));
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return kernel_basis(rows, n);
}

namespace detail {

// Evaluates p at x inside the block algebra with identity e.
template <class K>
Vector<K> eval_in_block(const Algebra<K>& a, const Poly<K>& p, const Vector<K>& x, const Vector<K>& e) {
  Vector<K> acc(a.dim());
  Vector<K> pw = e;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) acc = axpy(acc, p[k], pw);
    pw = a.mul(pw, x);
  }
  return acc;
}

// Coprime factors of a monic polynomial: one (x − r)^m per root, and the
// root-free cofactor when it is nonconstant.
template <class K>
std::vector<Poly<K>> coprime_factors(const Field<K>& f, const Poly<K>& p, bool& rootless_nonlinear) {
  std::vector<Poly<K>> out;
  Poly<K> rest = p;
  for (const auto& r : roots_in_field(f, p)) {
    Poly<K> lin{-r, K(1)};
    Poly<K> piece{K(1)};
    for (;;) {
      auto [q, rem] = poly_divmod(rest, lin);
      if (!rem.empty()) break;
      rest = q;
      piece = poly_mul(piece, lin);
    }
    out.push_back(piece);
  }
  rest = make_monic(rest);
  if (rest.size() > 1) {
    out.push_back(rest);
    if (squarefree_part(rest).size() > 2) rootless_nonlinear = true;
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

// Finest central idempotents reachable by splitting minimal polynomials of
// central elements over the field. Sets field_limited when some block has a
// central element whose square-free minimal polynomial has a root-free factor
// of degree > 1.
template <class K>
std::vector<Vector<K>> central_idempotents(const Field<K>& f, const Algebra<K>& a, bool& field_limited) {
  Subspace<K> z = center(a);
  std::vector<Vector<K>> done, work{a.unit()};
  field_limited = false;
  while (!work.empty()) {
    Vector<K> e = work.back();
    work.pop_back();
    bool split = false;
    bool limited = false;
    for (std::size_t j = 0; j < z.dim() && !split; ++j) {
      Vector<K> x = a.mul(e, z.basis_vector(j));
      Poly<K> mu = minimal_polynomial(a, x, e);
      bool rootless = false;
      auto pieces = detail::coprime_factors(f, mu, rootless);
      if (pieces.size() >= 2) {
        for (std::size_t i = 0; i < pieces.size(); ++i) {
          Poly<K> others = poly_divmod(mu, pieces[i]).first;
          auto [s, t] = poly_ext_gcd(pieces[i], others);
          work.push_back(detail::eval_in_block(a, poly_mul(t, others), x, e));
        }
        split = true;
      } else if (rootless) {
        limited = true;
      }
    }
    if (!split) {
      done.push_back(e);
      if (limited) field_limited = true;
    }
  }
  std::sort(done.begin(), done.end(), [](const Vector<K>& x, const Vector<K>& y) {
    auto first = [](const Vector<K>& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
      return v.size();
    };
    return first(x) < first(y);
  });
  return done;
}

template <class K>
struct Decomposition {
  std::vector<Vector<K>> idempotents;
  std::vector<Subspace<K>> blocks;
  std::vector<WeakHopfAlgebra<K>> summands;
  bool field_limited = false;
  VerificationReport report;
};

// The weak Hopf algebra structure restricted to the ideal eH.
template <class K>
WeakHopfAlgebra<K> restrict_to_block(const WeakHopfAlgebra<K>& h, const Subspace<K>& s, const Vector<K>& e) {
  const std::size_t n = h.dim(), d = s.dim();
  const auto& piv = s.pivots();
  Matrix<K> mult(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = s.coordinates(h.algebra().mul(s.basis_vector(i), s.basis_vector(j)));
      if (!c) throw EngineError("block is not closed under multiplication");
      for (std::size_t k = 0; k < d; ++k) mult(k, i * d + j) = (*c)[k];
    }
  auto unit = s.coordinates(e);
  if (!unit) throw EngineError("idempotent outside its block");
  Matrix<K> comult(d * d, d);
  Vector<K> counit(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector<K> x = h.delta(s.basis_vector(i));
    Vector<K> back(n * n);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const K& c = x[piv[a] * n + piv[b]];
        comult(a * d + b, i) = c;
        if (!c.is_zero()) back = axpy(back, c, kron(s.basis_vector(a), s.basis_vector(b)));
      }
    if (back != x) throw EngineError("comultiplication leaves the block");
    counit[i] = h.eps(s.basis_vector(i));
  }
  auto anti = try_coordinates_of(Matrix<K>(h.antipode() * s.basis()), s);
  if (!anti) throw EngineError("antipode leaves the block");
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < d; ++j) {
    Vector<K> v = s.basis_vector(j);
    bool unit_vec = v[piv[j]].is_one() && std::count_if(v.begin(), v.end(), [](const K& c) { return !c.is_zero(); }) == 1;
    labels.push_back(unit_vec ? h.labels()[piv[j]] : format_element(h.field(), v, h.labels()));
  }
  return WeakHopfAlgebra<K>(h.field(), std::move(labels), std::move(mult), std::move(*unit), std::move(comult),
                            std::move(counit), std::move(*anti));
}

template <class K>
Decomposition<K> decompose(const WeakHopfAlgebra<K>& h) {
  Decomposition<K> out;
  const auto& a = h.algebra();
  const std::size_t n = h.dim();
  auto fine = central_idempotents(h.field(), a, out.field_limited);
  const std::size_t r = fine.size();
  detail::UnionFind uf(r);
  for (std::size_t i = 0; i < r; ++i) {
    Vector<K> di = h.delta(fine[i]);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        if (i == j && j == k) continue;
        Vector<K> proj = h.tensor_left_mult(kron(fine[j], fine[k])) * di;
        if (!is_zero_vector(proj)) {
          uf.unite(i, j);
          uf.unite(i, k);
        }
      }
    Vector<K> si = h.S(fine[i]);
    for (std::size_t j = 0; j < r; ++j)
      if (!is_zero_vector(a.mul(si, fine[j]))) uf.unite(i, j);
  }
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < r; ++i)
    if (uf.find(i) == i) roots.push_back(i);
  for (std::size_t root : roots) {
    Vector<K> e(n);
    for (std::size_t i = 0; i < r; ++i)
      if (uf.find(i) == root) e = axpy(e, K(1), fine[i]);
    out.idempotents.push_back(e);
  }

  auto& rep = out.report;
  rep.check_name = "decomposition";
  for (const char* s : {"idempotent", "central", "orthogonal", "complete", "coproduct_block", "antipode_fixed", "summand_axioms"})
    rep.section(s);
  Subspace<K> z = center(a);
  Vector<K> total(n);
  const std::size_t m = out.idempotents.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = out.idempotents[i];
    total = axpy(total, K(1), e);
    if (a.mul(e, e) != e) rep.fail("idempotent", {i}, "e^2", "e");
    if (!z.contains(e)) rep.fail("central", {i}, "e", "not central");
    for (std::size_t j = i + 1; j < m; ++j)
      if (!is_zero_vector(a.mul(e, out.idempotents[j]))) rep.fail("orthogonal", {i, j}, "e_i e_j", "0");
    Vector<K> de = h.delta(e);
    if (h.tensor_left_mult(kron(e, e)) * de != de) rep.fail("coproduct_block", {i}, "(e x e) delta(e)", "delta(e)");
    if (h.S(e) != e) rep.fail("antipode_fixed", {i}, "S(e)", "e");
  }
  if (total != h.unit()) rep.fail("complete", {}, "sum e_i", "1");
  if (rep.passed())
    for (std::size_t i = 0; i < m; ++i) {
      out.blocks.push_back(image(a.left_mult(out.idempotents[i])));
      out.summands.push_back(restrict_to_block(h, out.blocks.back(), out.idempotents[i]));
      if (!passes_axiom_suites(out.summands.back())) rep.fail("summand_axioms", {i}, "summand", "fails axioms");
    }
  rep.note("field_limited", out.field_limited ? "true" : "false");
  rep.finalize();
  return out;
}

// A permutation π of basis indices with b_i ↦ b'_{π(i)} carrying all structure
// constants of a onto b; nullopt when none exists.
template <class K>
std::optional<std::vector<std::size_t>> basis_permutation(const WeakHopfAlgebra<K>& a, const WeakHopfAlgebra<K>& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) return std::nullopt;
  std::vector<std::size_t> pi(n, n);
  std::vector<char> used(n, 0);
  // Entries of a and b touching only assigned indices must agree.
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i) {
      std::size_t pi_i = pi[i];
      if (a.unit()[i] != b.unit()[pi_i] || a.counit()[i] != b.counit()[pi_i]) return false;
      for (std::size_t j = 0; j <= upto; ++j) {
        std::size_t pj = pi[j];
        if (a.antipode()(j, i) != b.antipode()(pj, pi_i)) return false;
        for (std::size_t k = 0; k <= upto; ++k) {
          std::size_t pk = pi[k];
          if (i == upto || j == upto || k == upto) {
            if (a.mult()(k, i * n + j) != b.mult()(pk, pi_i * n + pj)) return false;
            if (a.comult()(j * n + k, i) != b.comult()(pj * n + pk, pi_i)) return false;
          }
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      pi[i] = c;
      used[c] = 1;
      if (consistent(i) && self(self, i + 1)) return true;
      used[c] = 0;
    }
    pi[i] = n;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return pi;
}

}  // namespace wha
