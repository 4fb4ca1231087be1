#include <random>

#include "doctest.h"
#include "homkit/algebra.hpp"
#include "homkit/module.hpp"

using namespace homkit;

namespace {

template <class K>
AlgebraPtr<K> fixture(const std::string& name, FieldSpec f = FieldSpec::rationals()) {
  return from_quiver<K>(spec_of_fixture(name, f));
}

std::vector<std::string> labels(const Algebra<Rational>& a) {
  std::vector<std::string> out;
  for (const auto& b : a.basis()) out.push_back(b.label);
  return out;
}

bool contains_subpath(const Path& p, const Path& r) {
  if (r.arrows.size() > p.arrows.size()) return false;
  for (std::size_t s = 0; s + r.arrows.size() <= p.arrows.size(); ++s)
    if (std::equal(r.arrows.begin(), r.arrows.end(), p.arrows.begin() + static_cast<long>(s))) return true;
  return false;
}

// Random acyclic quiver with random monomial relations.
AlgebraSpec random_monomial(std::mt19937_64& rng) {
  AlgebraSpec s;
  const std::size_t n = 2 + rng() % 3;
  for (std::size_t v = 0; v < n; ++v) s.quiver.add_vertex(std::to_string(v + 1));
  const std::size_t arrows = 1 + rng() % 5;
  for (std::size_t k = 0; k < arrows; ++k) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    s.quiver.add_arrow("a" + std::to_string(k), a, b);
  }
  auto paths = enumerate_paths(s.quiver, 3);
  for (std::size_t len = 2; len < paths.size(); ++len)
    for (const auto& p : paths[len])
      if (rng() % 3 == 0) s.relations.push_back(Relation{{RelationTerm{Rational(1), p}}});
  return s;
}

}  // namespace

TEST_CASE("basis of small quiver algebras") {
  auto a2 = fixture<Rational>("FIX-A2");
  CHECK(labels(*a2) == std::vector<std::string>{"e1", "e2", "a"});
  CHECK(a2->basis(2).left == 0);
  CHECK(a2->basis(2).right == 1);

  auto tp1 = fixture<Rational>("FIX-TP1(1)");
  CHECK(labels(*tp1) == std::vector<std::string>{"e1", "e2", "alpha", "beta"});

  auto tp2 = fixture<Rational>("FIX-TP2");
  CHECK(labels(*tp2) ==
        std::vector<std::string>{"e1", "e2", "gamma", "delta", "alpha", "beta", "gamma*alpha", "delta*beta"});

  for (std::size_t n = 1; n <= 4; ++n) CHECK(fixture<Rational>("FIX-TP1(" + std::to_string(n) + ")")->dim() == 4 * n);
  CHECK(fixture<Rational>("FIX-LOC")->dim() == 2);
}

TEST_CASE("validation and nilpotency") {
  CHECK(validate(*fixture<Rational>("FIX-A2")).nilpotency_index == 2);
  auto tp2 = fixture<Rational>("FIX-TP2");
  auto rep = validate(*tp2);
  CHECK(rep.ok);
  CHECK(rep.nilpotency_index == 3);
  auto tp2p = fixture<Fp>("FIX-TP2", FieldSpec::prime(101));
  CHECK(validate(*tp2p).ok);
  CHECK(tp2p->dim() == 8);

  // Perturb one structure constant: associativity or a block check must fail.
  auto table = tp2->table();
  const std::size_t g = 2, al = 4;  // gamma * alpha
  table[g * tp2->dim() + al] = {{7, Rational(2)}};
  Algebra<Rational> broken(tp2->field(), "broken", tp2->basis(), tp2->idempotents(), tp2->radical(), table);
  CHECK_FALSE(validate(broken).ok);

  CHECK_THROWS_AS(Algebra<Rational>(tp2->field(), "bad", tp2->basis(), tp2->idempotents(), {}, tp2->table()), Error);
}

TEST_CASE("monomial algebras have the non-divisible paths as basis") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto spec = random_monomial(rng);
    auto a = from_quiver<Rational>(spec);
    REQUIRE(validate(*a).ok);
    std::size_t count = 0;
    for (const auto& group : enumerate_paths(spec.quiver, 8))
      for (const auto& p : group) {
        bool ok = true;
        for (const auto& r : spec.relations) ok = ok && !contains_subpath(p, r.terms[0].path);
        count += ok;
      }
    CHECK(a->dim() == count);
  }
}

TEST_CASE("commutative square") {
  auto s = parse_spec(
      "field Q quiver { vertices: 1, 2, 3, 4 arrows: a: 1 -> 2, b: 2 -> 4, c: 1 -> 3, d: 3 -> 4 }"
      " relations { a*b - c*d }");
  auto a = from_quiver<Rational>(s);
  CHECK(a->dim() == 9);
  CHECK(validate(*a).ok);
  CHECK(a->block(0, 3).size() == 1);
}

TEST_CASE("opposite, tensor, enveloping") {
  auto tp2 = fixture<Rational>("FIX-TP2");
  auto op = opposite(*tp2);
  CHECK(validate(*op).ok);
  CHECK(*opposite(*op) == *tp2);
  CHECK(opposite(*op)->name() == tp2->name());
  auto a2 = fixture<Rational>("FIX-A2");
  auto t = tensor(*a2, *tp2);
  CHECK(t->dim() == 24);
  CHECK(t->num_vertices() == 4);
  CHECK(validate(*t).ok);
  auto e = enveloping(*a2);
  CHECK(e->dim() == 9);
  CHECK(validate(*e).ok);
  // Products of pure tensors agree with componentwise products.
  for (std::size_t x1 = 0; x1 < a2->dim(); ++x1)
    for (std::size_t y1 = 0; y1 < tp2->dim(); ++y1)
      for (std::size_t x2 = 0; x2 < a2->dim(); ++x2)
        for (std::size_t y2 = 0; y2 < tp2->dim(); ++y2) {
          std::vector<Rational> expect(t->dim());
          for (const auto& [u, cu] : a2->product(x1, x2))
            for (const auto& [v, cv] : tp2->product(y1, y2)) expect[tensor_pair_index(*a2, *tp2, u, v)] += cu * cv;
          const auto got =
              t->multiply(t->unit_vector(tensor_pair_index(*a2, *tp2, x1, y1)),
                          t->unit_vector(tensor_pair_index(*a2, *tp2, x2, y2)));
          CHECK(got == expect);
        }
}

TEST_CASE("corner and quotient") {
  auto tp1 = fixture<Rational>("FIX-TP1(1)");
  CHECK(corner(*tp1, {0})->dim() == 1);
  CHECK(idempotent_ideal_dim(*tp1, {1}) == 3);
  auto q = quotient_by_idempotent_ideal(*tp1, {1});
  CHECK(q->dim() == 1);
  CHECK(validate(*q).ok);

  auto tp2 = fixture<Rational>("FIX-TP2");
  auto c = corner(*tp2, {0});
  CHECK(c->dim() == 2);  // e1, gamma*alpha
  CHECK(validate(*c).ok);
  CHECK(validate(*c).nilpotency_index == 2);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = from_quiver<Rational>(random_monomial(rng));
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      const VertexSet e{v};
      auto quo = quotient_by_idempotent_ideal(*a, e);
      CHECK(validate(*quo).ok);
      CHECK(quo->dim() + idempotent_ideal_dim(*a, e) == a->dim());
      CHECK(quo->num_vertices() == a->num_vertices() - 1);
      auto cor = corner(*a, e);
      CHECK(validate(*cor).ok);
      CHECK(cor->dim() == a->block(v, v).size());
    }
  }
  CHECK_THROWS_AS(check_vertex_set(3, {}, true), Error);
  CHECK_THROWS_AS(check_vertex_set(3, {0, 1, 2}, true), Error);
  CHECK_THROWS_AS(check_vertex_set(3, {1, 0}, false), Error);
  CHECK(complement(4, {1, 3}) == VertexSet{0, 2});
}

TEST_CASE("triangular algebra of k, k, k is the A2 path algebra") {
  const FieldSpec q = FieldSpec::rationals();
  auto k = ground_field<Rational>(q);
  auto ce = tensor(*opposite(*k), *k);
  Module<Rational> m(ce, {1}, {Matrix<Rational>::identity(1, q)});
  auto t = triangular(k, k, m);
  CHECK(validate(*t).ok);
  auto tri0 = fixture<Rational>("FIX-TRI0");
  REQUIRE(t->dim() == tri0->dim());
  CHECK(t->table() == tri0->table());
  for (std::size_t x = 0; x < t->dim(); ++x) {
    CHECK(t->basis(x).left == tri0->basis(x).left);
    CHECK(t->basis(x).right == tri0->basis(x).right);
  }
}

TEST_CASE("triangular algebra from a projective bimodule") {
  auto b = fixture<Rational>("FIX-TP1(1)");
  auto c = fixture<Rational>("FIX-A2");
  auto c_op = opposite(*c);
  auto ce = tensor(*c_op, *b);
  auto m = projective(ce, 1);
  auto t = triangular(b, c, m);
  auto rep = validate(*t);
  CHECK(rep.ok);
  CHECK(t->dim() == b->dim() + c->dim() + m.dim());
  CHECK(t->num_vertices() == 4);
  CHECK(corner(*t, {0, 1})->table() == b->table());
  CHECK(quotient_by_idempotent_ideal(*t, {0, 1})->dim() == c->dim());
}
