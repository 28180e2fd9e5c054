#pragma once

// Univariate polynomials over a field (coefficients low to high), minimal
// polynomials of algebra elements, and roots in the base field.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wha/algebra.hpp"

namespace wha {

template <class K>
using Poly = std::vector<K>;

template <class K>
Poly<K> trim(Poly<K> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

template <class K>
long degree(const Poly<K>& p) {
  return static_cast<long>(p.size()) - 1;
}

template <class K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<K> r(a.size() + b.size() - 1, K(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

template <class K>
Poly<K> poly_sub(Poly<K> a, const Poly<K>& b) {
  if (a.size() < b.size()) a.resize(b.size(), K(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trim(std::move(a));
}

template <class K>
Poly<K> poly_add(Poly<K> a, const Poly<K>& b) {
  if (a.size() < b.size()) a.resize(b.size(), K(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return trim(std::move(a));
}

template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(Poly<K> a, const Poly<K>& b) {
  Poly<K> bb = trim(b);
  if (bb.empty()) throw std::domain_error("polynomial division by zero");
  a = trim(std::move(a));
  if (a.size() < bb.size()) return {{}, a};
  Poly<K> q(a.size() - bb.size() + 1, K(0));
  K lead_inv = bb.back().inverse();
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const K& top = a[shift + bb.size() - 1];
    if (top.is_zero()) continue;
    K c = top * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < bb.size(); ++j) a[shift + j] -= c * bb[j];
  }
  return {trim(std::move(q)), trim(std::move(a))};
}

template <class K>
Poly<K> make_monic(Poly<K> p) {
  p = trim(std::move(p));
  if (p.empty()) return p;
  K inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

// s, t with s·a + t·b = gcd(a, b) (monic).
template <class K>
std::pair<Poly<K>, Poly<K>> poly_ext_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = trim(a), r1 = trim(b);
  Poly<K> s0{K(1)}, s1{}, t0{}, t1{K(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, poly_sub(s0, poly_mul(q, s1)));
    t0 = std::exchange(t1, poly_sub(t0, poly_mul(q, t1)));
  }
  K inv = r0.back().inverse();
  for (auto& c : s0) c *= inv;
  for (auto& c : t0) c *= inv;
  return {trim(std::move(s0)), trim(std::move(t0))};
}

template <class K>
Poly<K> derivative(const Poly<K>& p) {
  Poly<K> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * K(static_cast<long>(i)));
  return trim(std::move(d));
}

template <class K>
K poly_eval(const Poly<K>& p, const K& x) {
  K r(0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// Product of the distinct irreducible factors; in positive characteristic a
// zero derivative leaves the input unchanged.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  Poly<K> d = derivative(p);
  if (d.empty()) return make_monic(p);
  return make_monic(poly_divmod(p, poly_gcd(p, d)).first);
}

// Minimal polynomial of x in an algebra with identity e, using multiplication
// by x restricted to the block.
template <class K>
Poly<K> minimal_polynomial(const Algebra<K>& a, const Vector<K>& x, const Vector<K>& e) {
  std::vector<Vector<K>> powers{e};
  Matrix<K> lx = a.left_mult(x);
  for (;;) {
    Matrix<K> m(a.dim(), powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j) m.set_col(j, powers[j]);
    auto ker = kernel_basis(m);
    if (ker.dim() > 0) {
      Vector<K> c = ker.basis_vector(0);
      return make_monic(Poly<K>(c.begin(), c.end()));
    }
    if (powers.size() > a.dim()) throw EngineError("minimal polynomial: no dependency found");
    powers.push_back(lx * powers.back());
  }
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

template <class K>
Poly<K> powmod(Poly<K> base, std::uint64_t e, const Poly<K>& m) {
  Poly<K> r{K(1)};
  base = poly_divmod(base, m).second;
  while (e) {
    if (e & 1) r = poly_divmod(poly_mul(r, base), m).second;
    base = poly_divmod(poly_mul(base, base), m).second;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Distinct roots of p in the base field, sorted.
inline std::vector<Rational> roots_in_field(const Field<Rational>&, const Poly<Rational>& p0) {
  Poly<Rational> p = squarefree_part(p0);
  std::vector<Rational> roots;
  if (p.empty()) return roots;
  if (p[0].is_zero()) {
    roots.push_back(Rational(0));
    p = poly_divmod(p, Poly<Rational>{Rational(0), Rational(1)}).first;
  }
  mpz_class lcm = 1;
  for (const auto& c : p) lcm = ::lcm(lcm, mpz_class(c.raw().get_den()));
  std::vector<mpz_class> ic;
  for (const auto& c : p) ic.push_back(mpz_class(c.raw() * lcm));
  for (const auto& num : detail::positive_divisors(ic.front()))
    for (const auto& den : detail::positive_divisors(ic.back()))
      for (int sign : {1, -1}) {
        Rational r(mpq_class(sign * num, den));
        if (poly_eval(p, r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::vector<ModP> roots_in_field(const Field<ModP>& f, const Poly<ModP>& p0) {
  const std::uint32_t q = f.p;
  Poly<ModP> p;
  for (const auto& c : p0) p.push_back(f.normalize(c));
  p = make_monic(trim(p));
  std::vector<ModP> roots;
  if (p.size() <= 1) return roots;
  if (q <= 65536) {
    for (std::uint32_t a = 0; a < q; ++a)
      if (poly_eval(p, f.from_int(a)).is_zero()) roots.push_back(f.from_int(a));
    return roots;
  }
  // Product of the distinct linear factors, split with (x+a)^((q-1)/2) − 1.
  Poly<ModP> x{f.from_int(0), f.from_int(1)};
  Poly<ModP> lin = poly_gcd(p, poly_sub(detail::powmod(x, q, p), x));
  std::vector<Poly<ModP>> work{lin};
  while (!work.empty()) {
    Poly<ModP> g = work.back();
    work.pop_back();
    if (g.size() <= 1) continue;
    if (g.size() == 2) {
      roots.push_back(-g[0] / g[1]);
      continue;
    }
    for (std::uint32_t a = 0;; ++a) {
      Poly<ModP> xa{f.from_int(a), f.from_int(1)};
      Poly<ModP> t = poly_sub(detail::powmod(xa, (q - 1) / 2, g), Poly<ModP>{f.from_int(1)});
      Poly<ModP> d = poly_gcd(g, t);
      if (d.size() > 1 && d.size() < g.size()) {
        work.push_back(d);
        work.push_back(poly_divmod(g, d).first);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const ModP& a, const ModP& b) { return a.value() < b.value(); });
  return roots;
}

}  // namespace wha
