#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wha/scalar.hpp"

namespace wha {

template <class K>
using Vector = std::vector<K>;

// Dense row-major matrix over an exact field.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<K>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix column(std::span<const K> v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  static Matrix row(std::span<const K> v) {
    Matrix m(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<K> row_span(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const K> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector<K> col(std::size_t c) const {
    Vector<K> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_col(std::size_t c, std::span<const K> v) {
    if (v.size() != rows_) throw std::invalid_argument("set_col: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const K& s) {
    if (s.is_zero()) {
      for (auto& x : data_) x = K(0);
      return *this;
    }
    for (auto& x : data_)
      if (!x.is_zero()) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const K& s) { return a *= s; }
  friend Matrix operator*(const K& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch " + a.shape() + " * " + b.shape());
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto crow = c.row_span(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        auto brow = b.row_span(k);
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!brow[j].is_zero()) crow[j] += aik * brow[j];
      }
    }
    return c;
  }

  friend Vector<K> operator*(const Matrix& a, const Vector<K>& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector<K> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      K acc(0);
      auto arow = a.row_span(i);
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!arow[k].is_zero() && !x[k].is_zero()) acc += arow[k] * x[k];
      y[i] = std::move(acc);
    }
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

// (A ⊗ B)[(i*p + k), (j*q + l)] = A[i][j] * B[k][l]; the tensor index of b_i ⊗ b_k is i*dim(B) + k.
template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const K& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

template <class K>
Vector<K> kron(const Vector<K>& x, const Vector<K>& y) {
  Vector<K> r(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) r[i * y.size() + j] = x[i] * y[j];
  }
  return r;
}

// (A ⊗ B)·v without materializing the Kronecker product.
template <class K>
Vector<K> apply_kron(const Matrix<K>& a, const Matrix<K>& b, const Vector<K>& v) {
  if (v.size() != a.cols() * b.cols()) throw std::invalid_argument("apply_kron: length mismatch");
  // tmp[j][k] = Σ_l B[k][l] v[j*q + l]
  const std::size_t q = b.cols(), p = b.rows();
  std::vector<K> tmp(a.cols() * p);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t l = 0; l < q; ++l) {
      const K& x = v[j * q + l];
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < p; ++k)
        if (!b(k, l).is_zero()) tmp[j * p + k] += b(k, l) * x;
    }
  Vector<K> r(a.rows() * p);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const K& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < p; ++k)
        if (!tmp[j * p + k].is_zero()) r[i * p + k] += aij * tmp[j * p + k];
    }
  return r;
}

template <class K>
Matrix<K> hstack(const std::vector<Matrix<K>>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += b.cols();
  }
  Matrix<K> r(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, off + j) = b(i, j);
    off += b.cols();
  }
  return r;
}

template <class K>
Matrix<K> vstack(const std::vector<Matrix<K>>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix<K> r(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r(off + i, j) = b(i, j);
    off += b.rows();
  }
  return r;
}

template <class K>
Matrix<K> select_rows(const Matrix<K>& m, std::span<const std::size_t> rows) {
  Matrix<K> r(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(rows[i], j);
  return r;
}

template <class K>
bool is_zero_vector(const Vector<K>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class K>
Vector<K> axpy(const Vector<K>& x, const K& a, const Vector<K>& y) {
  Vector<K> r = x;
  if (a.is_zero()) return r;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!y[i].is_zero()) r[i] += a * y[i];
  return r;
}

template <class K>
std::string format_vector(const Vector<K>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace wha
