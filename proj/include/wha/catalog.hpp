#pragma once

// Example weak Hopf algebras: group and function algebras, groupoid algebras,
// Sweedler's algebra, direct sums, and the builtin name table.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wha/algebra.hpp"

namespace wha {

// Sparse assembly of structure constants.
template <class K>
struct StructureBuilder {
  Field<K> field;
  std::size_t n;
  std::vector<std::string> labels;
  Matrix<K> mult, comult, antipode;
  Vector<K> unit, counit;

  StructureBuilder(Field<K> f, std::vector<std::string> labs)
      : field(std::move(f)), n(labs.size()), labels(std::move(labs)), mult(n, n * n), comult(n * n, n),
        antipode(n, n), unit(n, field.from_int(0)), counit(n, field.from_int(0)) {}

  // b_i b_j ∋ c b_k
  void product(std::size_t i, std::size_t j, std::size_t k, const K& c) { mult(k, i * n + j) += c; }
  // Δ(b_i) ∋ c b_j⊗b_k
  void coproduct(std::size_t i, std::size_t j, std::size_t k, const K& c) { comult(j * n + k, i) += c; }
  // S(b_i) ∋ c b_j
  void antipode_entry(std::size_t i, std::size_t j, const K& c) { antipode(j, i) += c; }

  WeakHopfAlgebra<K> build() const {
    auto norm = [&](Matrix<K> m) {
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto& x : m.row_span(r)) x = field.normalize(x);
      return m;
    };
    Vector<K> u = unit, e = counit;
    for (auto& x : u) x = field.normalize(x);
    for (auto& x : e) x = field.normalize(x);
    return WeakHopfAlgebra<K>(field, labels, norm(mult), u, norm(comult), e, norm(antipode));
  }
};

// Finite group given by its multiplication table over elements 0..g-1.
struct GroupTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> mul;

  std::size_t order() const { return labels.size(); }

  std::size_t identity() const {
    for (std::size_t e = 0; e < order(); ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < order() && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
      if (ok) return e;
    }
    throw InputError("group table has no identity");
  }

  std::size_t inverse(std::size_t a) const {
    std::size_t e = identity();
    for (std::size_t b = 0; b < order(); ++b)
      if (mul[a][b] == e && mul[b][a] == e) return b;
    throw InputError("group element " + labels[a] + " has no inverse");
  }

  void validate() const {
    const std::size_t g = order();
    if (g == 0) throw InputError("empty group table");
    if (mul.size() != g) throw InputError("group table has wrong row count");
    for (const auto& row : mul) {
      if (row.size() != g) throw InputError("group table row has wrong length");
      for (auto x : row)
        if (x >= g) throw InputError("group table entry out of range");
    }
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < g; ++b)
        for (std::size_t c = 0; c < g; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw InputError("group table is not associative");
    for (std::size_t a = 0; a < g; ++a) inverse(a);
  }

  static GroupTable cyclic(std::size_t n, const std::string& gen = "g") {
    GroupTable t;
    for (std::size_t i = 0; i < n; ++i) t.labels.push_back(i == 0 ? "1" : i == 1 ? gen : gen + "^" + std::to_string(i));
    t.mul.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
    return t;
  }
};

template <class K>
WeakHopfAlgebra<K> group_algebra(const Field<K>& f, const GroupTable& g) {
  g.validate();
  StructureBuilder<K> b(f, g.labels);
  const K one = f.from_int(1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) b.product(x, y, g.mul[x][y], one);
    b.coproduct(x, x, x, one);
    b.counit[x] = one;
    b.antipode_entry(x, g.inverse(x), one);
  }
  b.unit[g.identity()] = one;
  return b.build();
}

// Dual of the group algebra on the basis of delta functions δ_x.
template <class K>
WeakHopfAlgebra<K> function_algebra(const Field<K>& f, const GroupTable& g) {
  g.validate();
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back("d_" + l);
  StructureBuilder<K> b(f, labels);
  const K one = f.from_int(1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    b.product(x, x, x, one);
    b.unit[x] = one;
    b.antipode_entry(x, g.inverse(x), one);
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t c = 0; c < g.order(); ++c)
        if (g.mul[a][c] == x) b.coproduct(x, a, c, one);
  }
  b.counit[g.identity()] = one;
  return b.build();
}

// Arrow a: source → target; the product a·b is the composite "a after b",
// defined when source(a) = target(b). compose[a][b] is its index or -1.
struct GroupoidTable {
  std::size_t objects = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> source, target;
  std::vector<std::vector<long>> compose;

  std::size_t arrows() const { return labels.size(); }

  void validate() const {
    const std::size_t m = arrows();
    if (m == 0 || objects == 0) throw InputError("groupoid has no arrows");
    if (source.size() != m || target.size() != m || compose.size() != m) throw InputError("groupoid table shape mismatch");
    for (std::size_t a = 0; a < m; ++a) {
      if (source[a] >= objects || target[a] >= objects) throw InputError("arrow endpoint out of range");
      if (compose[a].size() != m) throw InputError("groupoid table row has wrong length");
      for (std::size_t b = 0; b < m; ++b) {
        long c = compose[a][b];
        bool composable = source[a] == target[b];
        if (composable != (c >= 0)) throw InputError("composition defined on non-composable pair or missing");
        if (c >= 0) {
          if (static_cast<std::size_t>(c) >= m) throw InputError("composite index out of range");
          if (source[c] != source[b] || target[c] != target[a]) throw InputError("composite has wrong endpoints");
        }
      }
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          long ab = compose[a][b], bc = compose[b][c];
          if (ab >= 0 && bc >= 0 && compose[ab][c] != compose[a][bc]) throw InputError("groupoid composition is not associative");
        }
    for (std::size_t o = 0; o < objects; ++o) identity(o);
    for (std::size_t a = 0; a < m; ++a) inverse(a);
  }

  std::size_t identity(std::size_t o) const {
    for (std::size_t e = 0; e < arrows(); ++e) {
      if (source[e] != o || target[e] != o) continue;
      bool ok = true;
      for (std::size_t a = 0; a < arrows() && ok; ++a) {
        if (source[a] == o) ok = compose[a][e] == static_cast<long>(a);
        if (ok && target[a] == o) ok = compose[e][a] == static_cast<long>(a);
      }
      if (ok) return e;
    }
    throw InputError("object " + std::to_string(o) + " has no identity arrow");
  }

  std::size_t inverse(std::size_t a) const {
    for (std::size_t b = 0; b < arrows(); ++b)
      if (compose[a][b] == static_cast<long>(identity(target[a])) && compose[b][a] == static_cast<long>(identity(source[a])))
        return b;
    throw InputError("arrow " + labels[a] + " has no inverse");
  }

  // Pair groupoid on n objects: one arrow g_ij: j → i for each pair, g_ij g_jk = g_ik.
  static GroupoidTable pair(std::size_t n) {
    GroupoidTable t;
    t.objects = n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        t.labels.push_back("g" + std::to_string(i + 1) + std::to_string(j + 1));
        t.target.push_back(i);
        t.source.push_back(j);
      }
    t.compose.assign(n * n, std::vector<long>(n * n, -1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t.compose[i * n + j][j * n + k] = static_cast<long>(i * n + k);
    return t;
  }

  // Disjoint union of groups viewed as one-object groupoids.
  static GroupoidTable disjoint_groups(const std::vector<GroupTable>& groups) {
    GroupoidTable t;
    std::vector<std::size_t> offset;
    for (std::size_t o = 0; o < groups.size(); ++o) {
      offset.push_back(t.labels.size());
      for (const auto& l : groups[o].labels) {
        t.labels.push_back(l + "@" + std::to_string(o));
        t.source.push_back(o);
        t.target.push_back(o);
      }
    }
    t.objects = groups.size();
    t.compose.assign(t.labels.size(), std::vector<long>(t.labels.size(), -1));
    for (std::size_t o = 0; o < groups.size(); ++o)
      for (std::size_t a = 0; a < groups[o].order(); ++a)
        for (std::size_t b = 0; b < groups[o].order(); ++b)
          t.compose[offset[o] + a][offset[o] + b] = static_cast<long>(offset[o] + groups[o].mul[a][b]);
    return t;
  }
};

template <class K>
WeakHopfAlgebra<K> groupoid_algebra(const Field<K>& f, const GroupoidTable& g) {
  g.validate();
  StructureBuilder<K> b(f, g.labels);
  const K one = f.from_int(1);
  for (std::size_t a = 0; a < g.arrows(); ++a) {
    for (std::size_t c = 0; c < g.arrows(); ++c)
      if (g.compose[a][c] >= 0) b.product(a, c, static_cast<std::size_t>(g.compose[a][c]), one);
    b.coproduct(a, a, a, one);
    b.counit[a] = one;
    b.antipode_entry(a, g.inverse(a), one);
  }
  for (std::size_t o = 0; o < g.objects; ++o) b.unit[g.identity(o)] = one;
  return b.build();
}

// Sweedler's 4-dimensional Hopf algebra on {1, g, x, gx}: g² = 1, x² = 0,
// xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(x) = −gx.
template <class K>
WeakHopfAlgebra<K> sweedler(const Field<K>& f) {
  if (f.characteristic() == 2) throw InputError("Sweedler's algebra requires characteristic different from 2");
  StructureBuilder<K> b(f, {"1", "g", "x", "gx"});
  const K one = f.from_int(1), neg = f.from_int(-1);
  enum { E = 0, G = 1, X = 2, GX = 3 };
  for (std::size_t i = 0; i < 4; ++i) {
    b.product(E, i, i, one);
    if (i != E) b.product(i, E, i, one);
  }
  b.product(G, G, E, one);
  b.product(G, X, GX, one);
  b.product(G, GX, X, one);
  b.product(X, G, GX, neg);
  b.product(GX, G, X, neg);
  // x·x = x·gx = gx·x = gx·gx = 0
  b.unit[E] = one;
  b.coproduct(E, E, E, one);
  b.coproduct(G, G, G, one);
  b.coproduct(X, X, E, one);
  b.coproduct(X, G, X, one);
  b.coproduct(GX, GX, G, one);
  b.coproduct(GX, E, GX, one);
  b.counit[E] = one;
  b.counit[G] = one;
  b.antipode_entry(E, E, one);
  b.antipode_entry(G, G, one);
  b.antipode_entry(X, GX, neg);
  b.antipode_entry(GX, X, one);
  return b.build();
}

template <class K>
WeakHopfAlgebra<K> base_field(const Field<K>& f) {
  return group_algebra(f, GroupTable::cyclic(1)).with_labels({"1"});
}

template <class K>
WeakHopfAlgebra<K> direct_sum(const WeakHopfAlgebra<K>& a, const WeakHopfAlgebra<K>& b) {
  if (!(a.field() == b.field())) throw InputError("direct sum of algebras over different fields");
  const std::size_t p = a.dim(), q = b.dim();
  std::vector<std::string> labels;
  std::set<std::string> la(a.labels().begin(), a.labels().end());
  bool clash = false;
  for (const auto& l : b.labels()) clash = clash || la.count(l);
  for (const auto& l : a.labels()) labels.push_back(clash ? "a." + l : l);
  for (const auto& l : b.labels()) labels.push_back(clash ? "b." + l : l);
  StructureBuilder<K> s(a.field(), labels);
  auto copy = [&](const WeakHopfAlgebra<K>& h, std::size_t off) {
    const std::size_t m = h.dim();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          const K& c = h.mult()(k, i * m + j);
          if (!c.is_zero()) s.product(off + i, off + j, off + k, c);
          const K& d = h.comult()(j * m + k, i);
          if (!d.is_zero()) s.coproduct(off + i, off + j, off + k, d);
        }
      for (std::size_t j = 0; j < m; ++j)
        if (!h.antipode()(j, i).is_zero()) s.antipode_entry(off + i, off + j, h.antipode()(j, i));
      s.unit[off + i] = h.unit()[i];
      s.counit[off + i] = h.counit()[i];
    }
  };
  copy(a, 0);
  copy(b, p);
  (void)q;
  return s.build();
}

inline const std::vector<std::string>& builtin_catalog_names() {
  static const std::vector<std::string> names = {
      "k", "kc2", "fun-c2", "sweedler", "pairgpd2", "pairgpd3", "sum:kc2,pairgpd2", "sum:sweedler,fun-c2",
      "sum:sweedler,pairgpd2"};
  return names;
}

template <class K>
std::optional<WeakHopfAlgebra<K>> builtin(const Field<K>& f, std::string_view name) {
  if (name == "k") return base_field(f);
  if (name == "kc2") return group_algebra(f, GroupTable::cyclic(2));
  if (name == "kc3") return group_algebra(f, GroupTable::cyclic(3));
  if (name == "fun-c2") return function_algebra(f, GroupTable::cyclic(2));
  if (name == "sweedler") return sweedler(f);
  if (name == "pairgpd2") return groupoid_algebra(f, GroupoidTable::pair(2));
  if (name == "pairgpd3") return groupoid_algebra(f, GroupoidTable::pair(3));
  if (name.starts_with("sum:")) {
    auto rest = name.substr(4);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto a = builtin(f, rest.substr(0, comma));
    auto b = builtin(f, rest.substr(comma + 1));
    if (!a || !b) return std::nullopt;
    return direct_sum(*a, *b);
  }
  return std::nullopt;
}

}  // namespace wha
