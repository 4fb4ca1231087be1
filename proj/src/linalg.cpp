#include "homkit/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homkit {

namespace {

// Below this many entries the fork/join overhead dominates the row updates.
constexpr std::size_t kParallelThreshold = 1 << 14;

template <class K>
void eliminate_row(Matrix<K>& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  const K f = m(target, col);
  if (is_zero(f)) return;
  auto src = m.row(pivot_row);
  auto dst = m.row(target);
  for (std::size_t j = col; j < m.cols(); ++j)
    if (!is_zero(src[j])) dst[j] -= f * src[j];
}

template <class K, bool Parallel>
RrefResult<K> rref_impl(Matrix<K> m) {
  RrefResult<K> out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  [[maybe_unused]] const bool go_parallel = Parallel && rows * cols >= kParallelThreshold;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    const K inv = inverse(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    if constexpr (Parallel) {
      const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (go_parallel)
      for (std::ptrdiff_t i = 0; i < n; ++i)
        if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, c);
    } else {
      for (std::size_t i = 0; i < rows; ++i)
        if (i != r) eliminate_row(m, i, r, c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

}  // namespace

template <class K>
RrefResult<K> rref(Matrix<K> m) {
  return rref_impl<K, true>(std::move(m));
}

namespace serial {
template <class K>
RrefResult<K> rref(Matrix<K> m) {
  return rref_impl<K, false>(std::move(m));
}
}  // namespace serial

template <class K>
std::size_t rank(const Matrix<K>& m) {
  if (m.empty()) return 0;
  return rref(m).rank;
}

template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  const K one = m.one();
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(m.cols());
    v[f] = one;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
Subspace<K> left_kernel(const Matrix<K>& m) {
  const Matrix<K> t = m.transpose();
  const auto red = rref(t);
  std::vector<bool> is_pivot(t.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  Subspace<K> out;
  for (std::size_t f = 0; f < t.cols(); ++f)
    if (!is_pivot[f]) out.coord_cols.push_back(f);
  out.basis = Matrix<K>(out.coord_cols.size(), t.cols(), m.field());
  const K one = m.one();
  for (std::size_t k = 0; k < out.coord_cols.size(); ++k) {
    const std::size_t f = out.coord_cols[k];
    out.basis(k, f) = one;
    for (std::size_t i = 0; i < red.rank; ++i) out.basis(k, red.pivots[i]) = -red.reduced(i, f);
  }
  return out;
}

template <class K>
Subspace<K> row_space(const Matrix<K>& m) {
  auto red = rref(m);
  Subspace<K> out;
  out.basis = red.reduced.submatrix(0, 0, red.rank, m.cols());
  out.coord_cols = std::move(red.pivots);
  return out;
}

template <class K>
std::optional<Solution<K>> solve(const Matrix<K>& m, const Matrix<K>& rhs) {
  if (rhs.rows() != m.rows()) throw Error("solve: right-hand side has wrong row count");
  const std::size_t n = m.cols();
  Matrix<K> aug(m.rows(), n + rhs.cols(), m.field());
  aug.set_block(0, 0, m);
  aug.set_block(0, n, rhs);
  const auto red = rref(aug);
  Solution<K> sol;
  sol.particular = Matrix<K>(n, rhs.cols(), m.field());
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] >= n) return std::nullopt;
    for (std::size_t c = 0; c < rhs.cols(); ++c) sol.particular(red.pivots[i], c) = red.reduced(i, n + c);
  }
  sol.kernel = kernel_basis(m);
  return sol;
}

template <class K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
  const std::size_t n = m.rows();
  K det = m.one();
  if (n == 0) return det;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return K();
    if (piv != c) {
      m.swap_rows(piv, c);
      det = -det;
    }
    det *= m(c, c);
    const K inv = inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const K f = m(i, c) * inv;
      if (is_zero(f)) continue;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class K>
std::optional<Matrix<K>> invert(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw Error("invert: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n, m.field());
  aug.set_block(0, 0, m);
  const K one = m.one();
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = one;
  const auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  return red.reduced.submatrix(0, n, n, n);
}

Integer det_int(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw Error("det_int: matrix is not square");
  const std::size_t n = m0.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = m0;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return Integer(0);
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<Matrix<Rational>> invert_int(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("invert_int: matrix is not square");
  Matrix<Rational> q(m.rows(), m.cols(), FieldSpec::rationals());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return invert(q);
}

#define HOMKIT_INSTANTIATE_LINALG(K)                                                  \
  template RrefResult<K> rref<K>(Matrix<K>);                                          \
  template RrefResult<K> serial::rref<K>(Matrix<K>);                                  \
  template std::size_t rank<K>(const Matrix<K>&);                                     \
  template std::vector<std::vector<K>> kernel_basis<K>(const Matrix<K>&);             \
  template Subspace<K> left_kernel<K>(const Matrix<K>&);                              \
  template Subspace<K> row_space<K>(const Matrix<K>&);                                \
  template std::optional<Solution<K>> solve<K>(const Matrix<K>&, const Matrix<K>&);   \
  template K determinant<K>(Matrix<K>);                                               \
  template std::optional<Matrix<K>> invert<K>(const Matrix<K>&);

HOMKIT_INSTANTIATE_LINALG(Rational)
HOMKIT_INSTANTIATE_LINALG(Fp)

}  // namespace homkit
