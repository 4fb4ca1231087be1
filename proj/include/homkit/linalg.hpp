#pragma once

#include <optional>
#include <vector>

#include "homkit/matrix.hpp"

namespace homkit {

template <class K>
struct RrefResult {
  std::size_t rank = 0;
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Row elimination runs in parallel (OpenMP) once
/// the matrix is large enough to amortise the fork.
template <class K>
RrefResult<K> rref(Matrix<K> m);

namespace serial {
/// Single-threaded reference implementation of rref; kept for testing and
/// benchmarking the parallel kernel.
template <class K>
RrefResult<K> rref(Matrix<K> m);
}  // namespace serial

template <class K>
std::size_t rank(const Matrix<K>& m);

/// Basis of { x : m x = 0 } as column vectors; empty when m is injective.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m);

/// A subspace given by basis rows whose restriction to `coord_cols` is the
/// identity; the coordinates of a member vector are its entries there.
template <class K>
struct Subspace {
  Matrix<K> basis;
  std::vector<std::size_t> coord_cols;

  std::size_t dim() const { return basis.rows(); }
  std::vector<K> coordinates(std::span<const K> v) const {
    std::vector<K> c(coord_cols.size());
    for (std::size_t i = 0; i < coord_cols.size(); ++i) c[i] = v[coord_cols[i]];
    return c;
  }
};

/// { v : v m = 0 } for row vectors v.
template <class K>
Subspace<K> left_kernel(const Matrix<K>& m);

/// Row space of m in reduced form.
template <class K>
Subspace<K> row_space(const Matrix<K>& m);

template <class K>
struct Solution {
  Matrix<K> particular;  // cols(m) x cols(rhs)
  std::vector<std::vector<K>> kernel;
};

/// Solves m x = rhs; nullopt iff inconsistent.
template <class K>
std::optional<Solution<K>> solve(const Matrix<K>& m, const Matrix<K>& rhs);

template <class K>
K determinant(Matrix<K> m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_int(const IntMatrix& m);

/// Exact inverse over Q; nullopt when singular.
std::optional<Matrix<Rational>> invert_int(const IntMatrix& m);

template <class K>
std::optional<Matrix<K>> invert(const Matrix<K>& m);

/// Incrementally maintained reduced echelon basis. With `trailing_pivots`
/// each basis vector is normalised at its last nonzero coordinate, so the
/// complement of the pivot set consists of the smallest coordinates.
template <class K>
class Echelon {
 public:
  explicit Echelon(std::size_t width, bool trailing_pivots = false)
      : width_(width), trailing_(trailing_pivots), pivot_row_(width, kNone) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<K>>& rows() const { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] != kNone; }

  /// Reduces v modulo the span in place.
  void reduce(std::vector<K>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K c = v[pivots_[r]];
      if (is_zero(c)) continue;
      const auto& row = rows_[r];
      for (std::size_t j = 0; j < width_; ++j)
        if (!is_zero(row[j])) v[j] -= c * row[j];
    }
  }

  bool contains(std::vector<K> v) const {
    reduce(v);
    return is_zero_vector<K>(v);
  }

  /// Adds v to the span; returns false when it was already contained.
  bool add(std::vector<K> v) {
    if (v.size() != width_) throw Error("Echelon::add: width mismatch");
    reduce(v);
    std::size_t piv = kNone;
    if (trailing_) {
      for (std::size_t j = width_; j-- > 0;)
        if (!is_zero(v[j])) {
          piv = j;
          break;
        }
    } else {
      for (std::size_t j = 0; j < width_; ++j)
        if (!is_zero(v[j])) {
          piv = j;
          break;
        }
    }
    if (piv == kNone) return false;
    const K inv = inverse(v[piv]);
    for (K& x : v) x *= inv;
    for (auto& row : rows_) {
      const K c = row[piv];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (!is_zero(v[j])) row[j] -= c * v[j];
    }
    pivot_row_[piv] = rows_.size();
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t width_;
  bool trailing_;
  std::vector<std::vector<K>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace homkit
