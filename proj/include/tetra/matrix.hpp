#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "tetra/scalar.hpp"

namespace tetra {

/// Square dense matrix; used for truncations and brute-force oracles only.
template <Scalar T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    for (const auto& r : rows) {
      if (r.size() != n_) throw InputError("DenseMatrix rows must form a square array");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  std::size_t rows() const { return n_; }
  std::size_t cols() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Square submatrix on the given (sorted) row and column index sets.
  DenseMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    if (rows.size() != cols.size()) throw PreconditionViolation("submatrix must be square");
    DenseMatrix s(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  /// Determinant by Gaussian elimination (partial pivoting in float mode).
  T determinant() const {
    std::vector<T> a = data_;
    T det(1);
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t pivot = n_;
      if constexpr (scalar_traits<T>::exact) {
        for (std::size_t r = k; r < n_; ++r)
          if (a[r * n_ + k] != 0) {
            pivot = r;
            break;
          }
      } else {
        T best(0);
        for (std::size_t r = k; r < n_; ++r)
          if (scalar_traits<T>::abs(a[r * n_ + k]) > best) {
            best = scalar_traits<T>::abs(a[r * n_ + k]);
            pivot = r;
          }
      }
      if (pivot == n_) return T(0);
      if (pivot != k) {
        for (std::size_t c = 0; c < n_; ++c) std::swap(a[k * n_ + c], a[pivot * n_ + c]);
        det = -det;
      }
      const T p = a[k * n_ + k];
      det *= p;
      for (std::size_t r = k + 1; r < n_; ++r) {
        if (a[r * n_ + k] == 0) continue;
        const T f = a[r * n_ + k] / p;
        for (std::size_t c = k; c < n_; ++c) a[r * n_ + c] -= f * a[k * n_ + c];
      }
    }
    return det;
  }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_ != y.n_) throw PreconditionViolation("dimension mismatch in matrix product");
    DenseMatrix z(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

  friend DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_ != y.n_) throw PreconditionViolation("dimension mismatch in matrix difference");
    DenseMatrix z(x.n_);
    for (std::size_t i = 0; i < x.data_.size(); ++i) z.data_[i] = x.data_[i] - y.data_[i];
    return z;
  }

  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
    return x.n_ == y.n_ && x.data_ == y.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.n_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.n_; ++j) os << (j ? "," : "") << to_string(m(i, j));
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace tetra
