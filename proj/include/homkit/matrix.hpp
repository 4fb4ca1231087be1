#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "homkit/scalar.hpp"

namespace homkit {

/// Dense row-major matrix over an exact scalar type. Default-constructed
/// entries are zero for every supported scalar.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field = {})
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field, std::vector<K> data)
      : rows_(rows), cols_(cols), field_(field), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error("Matrix: entry count does not match shape");
  }

  static Matrix identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    const K one = from_int<K>(field, 1);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<std::vector<K>>& rows) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error("Matrix::from_rows: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  K one() const { return from_int<K>(field_, 1); }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<K> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const K> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<K> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  const std::vector<K>& data() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void append_row(std::span<const K> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  bool is_zero() const {
    for (const K& x : data_)
      if (!homkit::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix s(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("Matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (homkit::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const K& s, const Matrix& a) {
    Matrix r = a;
    for (K& x : r.data_) x *= s;
    return r;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<K> data_;
};

/// Square integer matrices (Cartan matrices live here).
using IntMatrix = Matrix<Integer>;

/// Row vector times matrix.
template <class K>
std::vector<K> row_times(std::span<const K> v, const Matrix<K>& m) {
  if (v.size() != m.rows()) throw Error("row_times: length mismatch");
  std::vector<K> r(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[k] * m(k, j);
  }
  return r;
}

template <class K>
bool is_zero_vector(std::span<const K> v) {
  for (const K& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace homkit
