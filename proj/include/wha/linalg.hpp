#pragma once

// Exact elimination kernels: incremental sparse reduced row echelon form,
// canonical subspaces, kernels, solving, inverses and quotients.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wha/matrix.hpp"

namespace wha {

template <class K>
using SparseRow = std::vector<std::pair<std::size_t, K>>;

template <class K>
SparseRow<K> to_sparse(std::span<const K> dense) {
  SparseRow<K> r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) r.emplace_back(i, dense[i]);
  return r;
}

// Maintains the reduced row echelon form of the span of the rows inserted so
// far. Pivot rows are kept fully reduced, so reducing a new row only touches
// the pivot columns it starts with; the cost per insertion is proportional to
// its sparsity rather than to the current rank.
template <class K>
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols), pivot_row_(cols, npos), scratch_(cols), touched_mark_(cols, 0) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }

  // Returns true when the row was independent of the current span.
  bool insert(const SparseRow<K>& row) {
    if (full()) return false;
    touched_.clear();
    std::vector<std::size_t> pivot_hits;
    for (const auto& [c, v] : row) {
      if (c >= cols_) throw std::out_of_range("RowReducer: column index out of range");
      if (v.is_zero()) continue;
      touch(c);
      scratch_[c] += v;
      if (pivot_row_[c] != npos) pivot_hits.push_back(c);
    }
    std::sort(pivot_hits.begin(), pivot_hits.end());
    pivot_hits.erase(std::unique(pivot_hits.begin(), pivot_hits.end()), pivot_hits.end());
    for (std::size_t c : pivot_hits) {
      if (scratch_[c].is_zero()) continue;
      K factor = scratch_[c];
      for (const auto& [pc, pv] : rows_[pivot_row_[c]]) {
        touch(pc);
        scratch_[pc] -= factor * pv;
      }
    }
    std::sort(touched_.begin(), touched_.end());
    SparseRow<K> reduced;
    for (std::size_t c : touched_) {
      if (!scratch_[c].is_zero()) reduced.emplace_back(c, std::move(scratch_[c]));
      scratch_[c] = K(0);
      touched_mark_[c] = 0;
    }
    if (reduced.empty()) return false;
    K lead_inv = reduced.front().second.inverse();
    for (auto& e : reduced) e.second *= lead_inv;
    std::size_t pc = reduced.front().first;
    for (auto& existing : rows_) eliminate(existing, pc, reduced);
    pivot_row_[pc] = rows_.size();
    rows_.push_back(std::move(reduced));
    return true;
  }

  bool insert_dense(std::span<const K> row) { return insert(to_sparse(row)); }

  // Pivot rows ordered by pivot column.
  std::vector<SparseRow<K>> rref_rows() const {
    std::vector<SparseRow<K>> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] != npos) out.push_back(rows_[pivot_row_[c]]);
    return out;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> p;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] != npos) p.push_back(c);
    return p;
  }

  // Basis of {x : r·x = 0 for every inserted row r}, one vector per free column.
  std::vector<Vector<K>> nullspace() const {
    std::vector<Vector<K>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (pivot_row_[f] != npos) continue;
      Vector<K> x(cols_);
      x[f] = K(1);
      for (std::size_t c = 0; c < f; ++c) {
        if (pivot_row_[c] == npos) continue;
        const auto& r = rows_[pivot_row_[c]];
        auto it = std::lower_bound(r.begin(), r.end(), f, [](const auto& e, std::size_t col) { return e.first < col; });
        if (it != r.end() && it->first == f) x[c] = -it->second;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void touch(std::size_t c) {
    if (!touched_mark_[c]) {
      touched_mark_[c] = 1;
      touched_.push_back(c);
    }
  }

  static void eliminate(SparseRow<K>& target, std::size_t col, const SparseRow<K>& pivot) {
    auto it = std::lower_bound(target.begin(), target.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == target.end() || it->first != col) return;
    K factor = it->second;
    SparseRow<K> merged;
    merged.reserve(target.size() + pivot.size());
    auto a = target.begin();
    auto b = pivot.begin();
    while (a != target.end() || b != pivot.end()) {
      if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == target.end() || b->first < a->first) {
        merged.emplace_back(b->first, -(factor * b->second));
        ++b;
      } else {
        K v = a->second - factor * b->second;
        if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    target = std::move(merged);
  }

  std::size_t cols_;
  std::vector<SparseRow<K>> rows_;
  std::vector<std::size_t> pivot_row_;
  std::vector<K> scratch_;
  std::vector<char> touched_mark_;
  std::vector<std::size_t> touched_;
};

// A subspace of K^n stored by its unique reduced echelon basis: the basis
// vectors, read as rows, form a matrix in RREF. Equal subspaces therefore have
// identical bases.
template <class K>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<K>(ambient, 0);
    return s;
  }

  static Subspace full(std::size_t ambient) { return from_columns(Matrix<K>::identity(ambient)); }

  static Subspace from_reducer(const RowReducer<K>& red) {
    Subspace s;
    s.ambient_ = red.cols();
    auto rows = red.rref_rows();
    s.basis_ = Matrix<K>(s.ambient_, rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      s.pivots_.push_back(rows[j].front().first);
      for (const auto& [c, v] : rows[j]) s.basis_(c, j) = v;
    }
    return s;
  }

  static Subspace from_vectors(const std::vector<Vector<K>>& vs, std::size_t ambient) {
    RowReducer<K> red(ambient);
    for (const auto& v : vs) {
      if (v.size() != ambient) throw std::invalid_argument("Subspace: vector length mismatch");
      red.insert_dense(v);
    }
    return from_reducer(red);
  }

  static Subspace from_columns(const Matrix<K>& m) {
    RowReducer<K> red(m.rows());
    for (std::size_t c = 0; c < m.cols() && !red.full(); ++c) red.insert(to_sparse<K>(m.col(c)));
    return from_reducer(red);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector<K> basis_vector(std::size_t j) const { return basis_.col(j); }

  // Coordinates of v in the canonical basis; nullopt when v is not in the span.
  std::optional<Vector<K>> coordinates(const Vector<K>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("coordinates: length mismatch");
    Vector<K> c(dim());
    for (std::size_t j = 0; j < dim(); ++j) c[j] = v[pivots_[j]];
    if (basis_ * c != v) return std::nullopt;
    return c;
  }

  bool contains(const Vector<K>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& o) const {
    for (std::size_t j = 0; j < o.dim(); ++j)
      if (!contains(o.basis_vector(j))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    RowReducer<K> red(ambient_);
    for (std::size_t j = 0; j < dim(); ++j) red.insert_dense(basis_vector(j));
    for (std::size_t j = 0; j < o.dim(); ++j) red.insert_dense(o.basis_vector(j));
    return from_reducer(red);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

template <class K>
RowReducer<K> reduce_rows(const Matrix<K>& a) {
  RowReducer<K> red(a.cols());
  for (std::size_t r = 0; r < a.rows() && !red.full(); ++r) red.insert(to_sparse<K>(a.row_span(r)));
  return red;
}

template <class K>
RowReducer<K> reduce_rows(const std::vector<SparseRow<K>>& rows, std::size_t cols) {
  RowReducer<K> red(cols);
  for (const auto& r : rows) {
    if (red.full()) break;
    red.insert(r);
  }
  return red;
}

template <class K>
std::size_t rank(const Matrix<K>& a) {
  return reduce_rows(a).rank();
}

template <class K>
Subspace<K> kernel_basis(const Matrix<K>& a) {
  return Subspace<K>::from_vectors(reduce_rows(a).nullspace(), a.cols());
}

template <class K>
Subspace<K> kernel_basis(const std::vector<SparseRow<K>>& rows, std::size_t cols) {
  return Subspace<K>::from_vectors(reduce_rows(rows, cols).nullspace(), cols);
}

template <class K>
Subspace<K> image(const Matrix<K>& a) {
  return Subspace<K>::from_columns(a);
}

// Some x with a·x = b, or nullopt when the system is inconsistent.
template <class K>
std::optional<Vector<K>> solve(const Matrix<K>& a, const Vector<K>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch " + a.shape() + " vs " + std::to_string(b.size()));
  const std::size_t n = a.cols();
  RowReducer<K> red(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseRow<K> row = to_sparse<K>(a.row_span(r));
    if (!b[r].is_zero()) row.emplace_back(n, b[r]);
    red.insert(row);
  }
  Vector<K> x(n);
  for (const auto& row : red.rref_rows()) {
    std::size_t p = row.front().first;
    if (p == n) return std::nullopt;
    if (row.back().first == n) x[p] = row.back().second;
  }
  return x;
}

// Matrix solve for several right-hand sides at once: some X with a·X = b.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t n = a.cols(), m = b.cols();
  RowReducer<K> red(n + m);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseRow<K> row = to_sparse<K>(a.row_span(r));
    for (std::size_t j = 0; j < m; ++j)
      if (!b(r, j).is_zero()) row.emplace_back(n + j, b(r, j));
    red.insert(row);
  }
  Matrix<K> x(n, m);
  for (const auto& row : red.rref_rows()) {
    std::size_t p = row.front().first;
    if (p >= n) return std::nullopt;
    for (const auto& [c, v] : row)
      if (c >= n) x(p, c - n) = v;
  }
  return x;
}

template <class K>
struct InverseResult {
  bool invertible = false;
  Matrix<K> inverse;
};

template <class K>
InverseResult<K> is_invertible_matrix(const Matrix<K>& a) {
  if (!a.square()) throw std::invalid_argument("is_invertible_matrix: non-square input " + a.shape());
  const std::size_t n = a.rows();
  RowReducer<K> red(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseRow<K> row = to_sparse<K>(a.row_span(r));
    row.emplace_back(n + r, K(1));
    red.insert(row);
  }
  InverseResult<K> res;
  auto rows = red.rref_rows();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].front().first != i) return res;
  res.invertible = true;
  res.inverse = Matrix<K>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [c, v] : rows[i])
      if (c >= n) res.inverse(i, c - n) = v;
  return res;
}

template <class K>
K determinant(const Matrix<K>& a) {
  if (!a.square()) throw std::invalid_argument("determinant: non-square input");
  Matrix<K> m = a;
  const std::size_t n = m.rows();
  K det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return K(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    K inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      K f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Matrix of the map induced by `a` on an invariant subspace, in its canonical
// coordinates. Throws when the subspace is not invariant.
template <class K>
Matrix<K> restrict_to(const Matrix<K>& a, const Subspace<K>& s) {
  Matrix<K> ab = a * s.basis();
  Matrix<K> coords = select_rows<K>(ab, s.pivots());
  if (s.basis() * coords != ab) throw std::logic_error("restrict_to: subspace is not invariant");
  return coords;
}

// Coordinates (in `s`) of the columns of m, or nullopt when some column leaves s.
template <class K>
std::optional<Matrix<K>> try_coordinates_of(const Matrix<K>& m, const Subspace<K>& s) {
  Matrix<K> coords = select_rows<K>(m, s.pivots());
  if (s.basis() * coords != m) return std::nullopt;
  return coords;
}

// Coordinates (in `s`) of the columns of m, which must lie in s.
template <class K>
Matrix<K> coordinates_of(const Matrix<K>& m, const Subspace<K>& s) {
  auto c = try_coordinates_of(m, s);
  if (!c) throw std::logic_error("coordinates_of: columns leave the subspace");
  return std::move(*c);
}

// V / W presented on the coordinates complementary to W's pivots.
template <class K>
class Quotient {
 public:
  Quotient() = default;
  explicit Quotient(Subspace<K> relations) : rel_(std::move(relations)) {
    const std::size_t n = rel_.ambient_dim();
    std::vector<char> is_pivot(n, 0);
    for (auto p : rel_.pivots()) is_pivot[p] = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_pivot[i]) free_.push_back(i);
    proj_ = Matrix<K>(free_.size(), n);
    for (std::size_t c = 0; c < free_.size(); ++c) proj_(c, free_[c]) = K(1);
    for (std::size_t j = 0; j < rel_.dim(); ++j) {
      std::size_t p = rel_.pivots()[j];
      for (std::size_t c = 0; c < free_.size(); ++c) {
        const K& v = rel_.basis()(free_[c], j);
        if (!v.is_zero()) proj_(c, p) = -v;
      }
    }
    section_ = Matrix<K>(n, free_.size());
    for (std::size_t c = 0; c < free_.size(); ++c) section_(free_[c], c) = K(1);
  }

  std::size_t dim() const { return free_.size(); }
  const Subspace<K>& relations() const { return rel_; }
  const Matrix<K>& projection() const { return proj_; }
  const Matrix<K>& section() const { return section_; }

  // Induced map of `a` (which must preserve the relation subspace).
  Matrix<K> induced(const Matrix<K>& a) const {
    for (std::size_t j = 0; j < rel_.dim(); ++j)
      if (!rel_.contains(a * rel_.basis_vector(j))) throw std::logic_error("Quotient::induced: relations not preserved");
    return proj_ * a * section_;
  }

 private:
  Subspace<K> rel_;
  std::vector<std::size_t> free_;
  Matrix<K> proj_;
  Matrix<K> section_;
};

}  // namespace wha
