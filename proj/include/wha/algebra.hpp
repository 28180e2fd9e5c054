#pragma once

// Finite-dimensional algebras and weak Hopf algebras given by structure
// constants on a fixed basis b_0..b_{n-1}.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wha/linalg.hpp"

namespace wha {

// Bad user input (malformed files, invalid tables, unsupported options).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency cross-check failed.
struct EngineError : std::logic_error {
  using std::logic_error::logic_error;
};

template <class K>
Vector<K> unit_vector(std::size_t n, std::size_t i) {
  Vector<K> v(n);
  v[i] = K(1);
  return v;
}

// Unital associative algebra. mult is the n × n² matrix of m: A⊗A → A, so
// column i*n + j holds the coordinates of b_i·b_j.
template <class K>
class Algebra {
 public:
  Algebra() = default;
  Algebra(Matrix<K> mult, Vector<K> unit) : mult_(std::move(mult)), unit_(std::move(unit)) {
    n_ = unit_.size();
    if (n_ == 0) throw InputError("the zero algebra is not unital");
    if (mult_.rows() != n_ || mult_.cols() != n_ * n_)
      throw InputError("multiplication table has shape " + mult_.shape() + ", expected " + std::to_string(n_) + "x" + std::to_string(n_ * n_));
    if (is_zero_vector(unit_)) throw InputError("unit vector is zero");
    left_.assign(n_, Matrix<K>(n_, n_));
    right_.assign(n_, Matrix<K>(n_, n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          const K& c = mult_(k, i * n_ + j);
          if (c.is_zero()) continue;
          left_[i](k, j) = c;
          right_[j](k, i) = c;
        }
  }

  std::size_t dim() const { return n_; }
  const Matrix<K>& mult() const { return mult_; }
  const Vector<K>& unit() const { return unit_; }
  // Matrix of x ↦ b_i x.
  const Matrix<K>& L(std::size_t i) const { return left_[i]; }
  // Matrix of x ↦ x b_i.
  const Matrix<K>& R(std::size_t i) const { return right_[i]; }

  Matrix<K> left_mult(const Vector<K>& a) const { return combine(left_, a); }
  Matrix<K> right_mult(const Vector<K>& a) const { return combine(right_, a); }
  Vector<K> mul(const Vector<K>& a, const Vector<K>& b) const { return left_mult(a) * b; }
  Vector<K> basis_product(std::size_t i, std::size_t j) const { return mult_.col(i * n_ + j); }

  // A^op: b_i ∘ b_j = b_j b_i.
  Algebra opposite() const {
    Matrix<K> m(n_, n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) m(k, i * n_ + j) = mult_(k, j * n_ + i);
    return Algebra(std::move(m), unit_);
  }

  // A ⊗ B with (a⊗b)(a'⊗b') = aa' ⊗ bb'.
  friend Algebra tensor(const Algebra& a, const Algebra& b) {
    const std::size_t p = a.n_, q = b.n_, n = p * q;
    Matrix<K> m(n, n * n);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t j = 0; j < p; ++j)
          for (std::size_t l = 0; l < q; ++l) {
            Vector<K> prod = kron(a.basis_product(i, j), b.basis_product(k, l));
            std::size_t col = (i * q + k) * n + (j * q + l);
            for (std::size_t r = 0; r < n; ++r)
              if (!prod[r].is_zero()) m(r, col) = prod[r];
          }
    return Algebra(std::move(m), kron(a.unit_, b.unit_));
  }

 private:
  Matrix<K> combine(const std::vector<Matrix<K>>& ms, const Vector<K>& a) const {
    if (a.size() != n_) throw std::invalid_argument("algebra element has wrong length");
    Matrix<K> r(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!a[i].is_zero()) r += ms[i] * a[i];
    return r;
  }

  std::size_t n_ = 0;
  Matrix<K> mult_;
  Vector<K> unit_;
  std::vector<Matrix<K>> left_, right_;
};

// Structure-constant data of a (candidate) weak Hopf algebra. The axioms are
// not enforced here; see verify_weak_bialgebra / verify_antipode.
template <class K>
class WeakHopfAlgebra {
 public:
  WeakHopfAlgebra() = default;
  WeakHopfAlgebra(Field<K> field, std::vector<std::string> labels, Matrix<K> mult, Vector<K> unit, Matrix<K> comult,
                  Vector<K> counit, Matrix<K> antipode)
      : field_(std::move(field)), labels_(std::move(labels)), alg_(std::move(mult), std::move(unit)),
        comult_(std::move(comult)), counit_(std::move(counit)), antipode_(std::move(antipode)) {
    const std::size_t n = alg_.dim();
    if (labels_.size() != n) throw InputError("expected " + std::to_string(n) + " basis labels, got " + std::to_string(labels_.size()));
    if (comult_.rows() != n * n || comult_.cols() != n) throw InputError("comultiplication has shape " + comult_.shape());
    if (counit_.size() != n) throw InputError("counit has length " + std::to_string(counit_.size()));
    if (antipode_.rows() != n || antipode_.cols() != n) throw InputError("antipode has shape " + antipode_.shape());
    delta_one_ = comult_ * alg_.unit();
  }

  const Field<K>& field() const { return field_; }
  std::size_t dim() const { return alg_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Algebra<K>& algebra() const { return alg_; }
  const Matrix<K>& mult() const { return alg_.mult(); }
  const Vector<K>& unit() const { return alg_.unit(); }
  // n² × n; column i is Δ(b_i) with b_j⊗b_k at j*n + k.
  const Matrix<K>& comult() const { return comult_; }
  const Vector<K>& counit() const { return counit_; }
  // Column i is S(b_i).
  const Matrix<K>& antipode() const { return antipode_; }
  const Matrix<K>& L(std::size_t i) const { return alg_.L(i); }
  const Matrix<K>& R(std::size_t i) const { return alg_.R(i); }
  // Δ(1) as a vector of H⊗H.
  const Vector<K>& delta_one() const { return delta_one_; }

  Vector<K> delta(std::size_t i) const { return comult_.col(i); }
  Vector<K> delta(const Vector<K>& h) const { return comult_ * h; }
  K eps(const Vector<K>& h) const {
    K s(0);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (!h[i].is_zero() && !counit_[i].is_zero()) s += h[i] * counit_[i];
    return s;
  }
  Vector<K> S(const Vector<K>& h) const { return antipode_ * h; }

  // Multiplication of H⊗H: (a⊗b)(c⊗d) = ac⊗bd, as left multiplication by x.
  Matrix<K> tensor_left_mult(const Vector<K>& x) const {
    const std::size_t n = dim();
    Matrix<K> r(n * n, n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!x[j * n + k].is_zero()) r += kron(L(j), L(k)) * x[j * n + k];
    return r;
  }

  WeakHopfAlgebra with_labels(std::vector<std::string> labels) const {
    WeakHopfAlgebra h = *this;
    if (labels.size() != dim()) throw InputError("label count mismatch");
    h.labels_ = std::move(labels);
    return h;
  }

  friend bool operator==(const WeakHopfAlgebra& a, const WeakHopfAlgebra& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.mult() == b.mult() && a.unit() == b.unit() &&
           a.comult_ == b.comult_ && a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
  }

 private:
  Field<K> field_{};
  std::vector<std::string> labels_;
  Algebra<K> alg_;
  Matrix<K> comult_;
  Vector<K> counit_;
  Matrix<K> antipode_;
  Vector<K> delta_one_;
};

// Labels of the tensor basis b_i⊗b_j⊗... in lexicographic index order.
inline std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x + "⊗" + y);
  return r;
}

// "c*label + c*label", or "0".
template <class K>
std::string format_element(const Field<K>& f, const Vector<K>& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += f.format(v[i]) + "*" + (i < labels.size() ? labels[i] : "e" + std::to_string(i));
  }
  return s.empty() ? "0" : s;
}

}  // namespace wha
