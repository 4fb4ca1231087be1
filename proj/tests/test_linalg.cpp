#include <random>

#include "doctest.h"
#include "homkit/linalg.hpp"

using namespace homkit;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Matrix<Rational> qmat(std::size_t cols, const std::vector<std::vector<long>>& rows) {
  Matrix<Rational> m(rows.size(), cols, kQ);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix imat(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix random_int(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// Cofactor expansion; exponential, only for tiny matrices.
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    Integer term = m(0, c) * cofactor_det(minor);
    sum += (c % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

}  // namespace

TEST_CASE("rref basic cases") {
  auto id = rref(Matrix<Rational>::identity(3, kQ));
  CHECK(id.rank == 3);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(Matrix<Rational>(2, 4, kQ));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());

  auto p = rref(qmat(2, {{1, 2}, {2, 4}}));
  CHECK(p.rank == 1);
  CHECK(p.reduced == qmat(2, {{1, 2}, {0, 0}}));
}

TEST_CASE("solve and kernel_basis") {
  auto v = qmat(1, {{3}, {-1}, {5}});
  auto s = solve(Matrix<Rational>::identity(3, kQ), v);
  REQUIRE(s);
  CHECK(s->particular == v);
  CHECK(s->kernel.empty());

  auto s0 = solve(Matrix<Rational>(2, 2, kQ), Matrix<Rational>(2, 1, kQ));
  REQUIRE(s0);
  CHECK(s0->particular.is_zero());
  CHECK(s0->kernel.size() == 2);

  CHECK_FALSE(solve(qmat(2, {{1, 1}, {1, 1}}), qmat(1, {{1}, {2}})));
  CHECK_THROWS_AS(solve(qmat(2, {{1, 1}}), qmat(1, {{1}, {2}})), Error);
}

TEST_CASE("solve over F_3 agrees with enumeration of all vectors") {
  const FieldSpec f3 = FieldSpec::prime(3);
  Matrix<Fp> m(1, 2, f3);
  m(0, 0) = Fp(1, 3);
  m(0, 1) = Fp(1, 3);
  Matrix<Fp> rhs(1, 1, f3);
  rhs(0, 0) = Fp(2, 3);

  std::size_t solutions = 0, kernel = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Fp x(a, 3), y(b, 3);
      if (x + y == Fp(2, 3)) ++solutions;
      if (is_zero(x + y)) ++kernel;
    }
  CHECK(solutions == 3);
  CHECK(kernel == 3);

  auto s = solve(m, rhs);
  REQUIRE(s);
  // 3^dim(kernel) vectors in the null space and equally many solutions.
  CHECK(s->kernel.size() == 1);
  CHECK(m * s->particular == rhs);
  CHECK(kernel_basis(m).size() == 1);
}

TEST_CASE("rref is idempotent and serial matches parallel") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix<Rational> m(r, c, kQ);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng) * (trial % 3 == 0 ? 0 : 1) + (i == j ? 1 : 0);
    auto red = rref(m);
    CHECK(rref(red.reduced).reduced == red.reduced);
    CHECK(serial::rref(m).reduced == red.reduced);
  }
  // Large enough to take the parallel path.
  const FieldSpec f = FieldSpec::prime(101);
  Matrix<Fp> big(150, 140, f);
  for (std::size_t i = 0; i < big.rows(); ++i)
    for (std::size_t j = 0; j < big.cols(); ++j) big(i, j) = Fp(static_cast<std::int64_t>(rng() % 101), 101);
  auto a = rref(big);
  auto b = serial::rref(big);
  CHECK(a.reduced == b.reduced);
  CHECK(a.pivots == b.pivots);
}

TEST_CASE("solve consistency with kernel combinations") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix<Rational> m(r, c, kQ);
    Matrix<Rational> x(c, 1, kQ);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    for (std::size_t j = 0; j < c; ++j) x(j, 0) = d(rng);
    const auto rhs = m * x;
    auto s = solve(m, rhs);
    REQUIRE(s);
    Matrix<Rational> y = s->particular;
    for (const auto& k : s->kernel) {
      const Rational t = d(rng);
      for (std::size_t j = 0; j < c; ++j) y(j, 0) += t * k[j];
    }
    CHECK(m * y == rhs);
    CHECK(s->kernel.size() + rank(m) == c);
  }
}

TEST_CASE("det_int examples") {
  CHECK(det_int(imat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(det_int(imat({{1, 1}, {1, 1}})) == 0);
  CHECK(det_int(imat({{2, 2}, {2, 2}})) == 0);
  CHECK(det_int(IntMatrix(0, 0)) == 1);
  CHECK(det_int(imat({{0, 1}, {1, 0}})) == -1);
  CHECK_THROWS_AS(det_int(IntMatrix(2, 3)), Error);
}

TEST_CASE("det_int matches cofactor expansion, reduction mod p and multiplicativity") {
  std::mt19937_64 rng(2024);
  const std::uint32_t primes[] = {2, 3, 5, 7, 101, 65537, 2147483647u};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix a = random_int(rng, n, -9, 9);
    IntMatrix b = random_int(rng, n, -9, 9);
    const Integer da = det_int(a);
    CHECK(da == cofactor_det(a));
    CHECK(det_int(a * b) == da * det_int(b));

    const std::uint32_t p = primes[rng() % std::size(primes)];
    const FieldSpec f = FieldSpec::prime(p);
    Matrix<Fp> ap(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ap(i, j) = from_rational<Fp>(f, Rational(a(i, j)));
    CHECK(determinant(ap) == from_rational<Fp>(f, Rational(da)));
  }
}

TEST_CASE("invert_int") {
  auto id = invert_int(imat({{1, 0}, {0, 1}}));
  REQUIRE(id);
  CHECK(*id == Matrix<Rational>::identity(2, kQ));

  auto inv = invert_int(imat({{1, 0}, {1, 1}}));
  REQUIRE(inv);
  CHECK(*inv == qmat(2, {{1, 0}, {-1, 1}}));

  CHECK_FALSE(invert_int(imat({{1, 1}, {1, 1}})));
}

TEST_CASE("Echelon with trailing pivots keeps the smallest coordinates free") {
  Echelon<Rational> e(3, true);
  CHECK(e.add({Rational(1), Rational(0), Rational(1)}));
  CHECK_FALSE(e.add({Rational(2), Rational(0), Rational(2)}));
  CHECK(e.is_pivot(2));
  CHECK_FALSE(e.is_pivot(0));
  std::vector<Rational> v{Rational(0), Rational(0), Rational(1)};
  e.reduce(v);
  CHECK(v == std::vector<Rational>{Rational(-1), Rational(0), Rational(0)});
}
