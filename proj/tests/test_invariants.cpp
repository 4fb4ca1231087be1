#include "doctest.h"
#include "homkit/invariants.hpp"

using namespace homkit;

namespace {

template <class K>
AlgebraPtr<K> fixture(const std::string& name, FieldSpec f = FieldSpec::rationals()) {
  return from_quiver<K>(spec_of_fixture(name, f));
}

IntMatrix int_matrix(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

const char* kFixtures[] = {"FIX-A2", "FIX-TP1(1)", "FIX-TP1(2)", "FIX-TP1(3)", "FIX-TP2", "FIX-LOC", "FIX-TRI0"};

}  // namespace

TEST_CASE("Cartan matrices of the fixtures") {
  auto a2 = cartan(*fixture<Rational>("FIX-A2"));
  CHECK(a2.matrix == int_matrix({{1, 0}, {1, 1}}));
  CHECK(a2.det == 1);
  for (long n = 1; n <= 3; ++n) {
    auto c = cartan(*fixture<Rational>("FIX-TP1(" + std::to_string(n) + ")"));
    CHECK(c.matrix == int_matrix({{n, n}, {n, n}}));
    CHECK(c.det == 0);
  }
  auto tp2 = cartan(*fixture<Rational>("FIX-TP2"));
  CHECK(tp2.matrix == int_matrix({{2, 2}, {2, 2}}));
  CHECK(tp2.det == 0);
  CHECK(cartan(*ground_field<Rational>(FieldSpec::rationals())).det == 1);
}

TEST_CASE("Cartan structural invariants") {
  for (const char* name : kFixtures)
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
      if (f.is_rationals()) {
        auto a = fixture<Rational>(name, f);
        auto c = cartan(*a);
        CHECK(c.matrix == cartan_by_hom(a));
        CHECK(cartan(*opposite(*a)).matrix == c.matrix.transpose());
        Integer sum = 0;
        for (const auto& x : c.matrix.data()) sum += x;
        CHECK(sum == static_cast<unsigned long>(a->dim()));
        for (std::size_t i = 0; i < c.r; ++i) CHECK(c.matrix(i, i) >= 1);
      } else {
        auto a = fixture<Fp>(name, f);
        CHECK(cartan(*a).matrix == cartan_by_hom(a));
      }
    }
}

TEST_CASE("global dimension") {
  auto g = gldim(fixture<Rational>("FIX-A2"), 12);
  CHECK(g.gldim.is_finite());
  CHECK(g.gldim.degree == 1);
  CHECK(gldim(fixture<Rational>("FIX-TP1(1)"), 12).gldim.is_infinite());
  CHECK(gldim(fixture<Rational>("FIX-LOC"), 12).gldim.is_infinite());
  CHECK(gldim(ground_field<Rational>(FieldSpec::rationals()), 12).gldim.degree == 0);
  auto tp2 = gldim(fixture<Fp>("FIX-TP2", FieldSpec::prime(101)), 12);
  CHECK_FALSE(tp2.gldim.is_finite());
}

TEST_CASE("Gorenstein") {
  for (const char* name : {"FIX-LOC", "FIX-TP1(1)"}) {
    auto r = gorenstein(fixture<Rational>(name), 12);
    CHECK(r.verdict == Verdict3::Yes);
    CHECK(r.right_id.degree == 0);
    CHECK(r.left_id.degree == 0);
  }
  auto a2 = gorenstein(fixture<Rational>("FIX-A2"), 12);
  CHECK(a2.verdict == Verdict3::Yes);
  CHECK(a2.right_id.degree == 1);
  for (const char* name : kFixtures) {
    auto a = fixture<Rational>(name);
    auto r = gorenstein(a, 12);
    auto o = gorenstein(opposite(*a), 12);
    CHECK(r.verdict == o.verdict);
    CHECK(r.right_id.to_string() == o.left_id.to_string());
    CHECK(r.left_id.to_string() == o.right_id.to_string());
  }
}

TEST_CASE("smoothness with the enveloping cross-check") {
  auto s = smooth(fixture<Rational>("FIX-A2"), 12, true);
  CHECK(s.verdict == Verdict3::Yes);
  REQUIRE(s.bimodule_pd);
  CHECK(s.bimodule_pd->degree == 1);
  CHECK(s.cross_check_agrees);

  auto t = smooth(fixture<Rational>("FIX-TP1(1)"), 12, true);
  CHECK(t.verdict == Verdict3::No);
  REQUIRE(t.bimodule_pd);
  CHECK(t.bimodule_pd->is_infinite());
  CHECK(t.cross_check_agrees);

  auto k = smooth(ground_field<Rational>(FieldSpec::rationals()), 12, true);
  CHECK(k.verdict == Verdict3::Yes);
  CHECK(k.bimodule_pd->degree == 0);

  for (const char* name : {"FIX-LOC", "FIX-TP2", "FIX-TRI0"}) {
    auto r = smooth(fixture<Rational>(name), 12, true);
    CHECK(r.cross_check_agrees);
  }
}

TEST_CASE("Euler form inverts the transposed Cartan matrix") {
  auto e = euler_matrix(fixture<Rational>("FIX-A2"), 12);
  REQUIRE(e);
  CHECK(*e == int_matrix({{1, -1}, {0, 1}}));
  const auto c = cartan(*fixture<Rational>("FIX-A2")).matrix;
  CHECK(*e * c.transpose() == int_matrix({{1, 0}, {0, 1}}));
  CHECK_FALSE(*e * c == int_matrix({{1, 0}, {0, 1}}));
  CHECK_FALSE(euler_matrix(fixture<Rational>("FIX-TP1(1)"), 12));

  auto sq = from_quiver<Rational>(parse_spec(
      "field Q quiver { vertices: 1, 2, 3, 4 arrows: a: 1 -> 2, b: 2 -> 4, c: 1 -> 3, d: 3 -> 4 }"
      " relations { a*b - c*d }"));
  auto es = euler_matrix(sq, 12);
  REQUIRE(es);
  IntMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1;
  CHECK(*es * cartan(*sq).matrix.transpose() == id);
}

TEST_CASE("Eilenberg and two-point criteria") {
  auto a2 = eilenberg_check(fixture<Rational>("FIX-A2"), 12);
  CHECK(a2.applicable);
  CHECK(a2.unimodular);
  CHECK(a2.plus_one);
  auto tp = eilenberg_check(fixture<Rational>("FIX-TP1(1)"), 12);
  CHECK_FALSE(tp.applicable);

  for (const char* name : {"FIX-TP1(1)", "FIX-TP1(2)", "FIX-TP2"}) {
    auto r = two_point_criterion(*fixture<Rational>(name));
    CHECK(r.applicable);
    CHECK(r.det == 0);
    CHECK(r.flagged);
  }
  auto a = two_point_criterion(*fixture<Rational>("FIX-A2"));
  CHECK(a.applicable);
  CHECK_FALSE(a.flagged);
  CHECK_FALSE(two_point_criterion(*fixture<Rational>("FIX-LOC")).applicable);
}

TEST_CASE("Cartan matrix of a triangular algebra is block triangular") {
  auto b = fixture<Rational>("FIX-TP1(1)");
  auto c = fixture<Rational>("FIX-A2");
  auto ce = tensor(*opposite(*c), *b);
  for (std::size_t v = 0; v < ce->num_vertices(); ++v) {
    auto m = direct_sum(projective(ce, v), simple(ce, (v + 1) % ce->num_vertices()));
    auto t = triangular(b, c, m);
    auto ct = cartan(*t).matrix;
    auto cb = cartan(*b).matrix, cc = cartan(*c).matrix;
    const std::size_t rb = cb.rows(), rc = cc.rows();
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < rb; ++j) CHECK(ct(i, j) == cb(i, j));
    for (std::size_t i = 0; i < rc; ++i)
      for (std::size_t j = 0; j < rc; ++j) CHECK(ct(rb + i, rb + j) == cc(i, j));
    // e_B A e_C = 0, so c_{C-vertex, B-vertex} = dim e_B A e_C vanishes.
    for (std::size_t i = 0; i < rc; ++i)
      for (std::size_t j = 0; j < rb; ++j) CHECK(ct(rb + i, j) == 0);
    CHECK(cartan(*t).det == cartan(*b).det * cartan(*c).det);
  }
}
