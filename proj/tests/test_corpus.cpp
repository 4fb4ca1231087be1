#include <omp.h>

#include <filesystem>

#include "doctest.h"
#include "homkit/corpus.hpp"

using namespace homkit;

namespace {

const std::filesystem::path kFixtures = HOMKIT_FIXTURES;

const char* kNames[] = {"FIX-A2", "FIX-TP1(1)", "FIX-TP1(2)", "FIX-TP2", "FIX-LOC", "FIX-TRI0"};

}  // namespace

TEST_CASE("matrices serialize as decimal strings") {
  const FieldSpec q = FieldSpec::rationals();
  Matrix<Rational> m(2, 2, q);
  m(0, 0) = Rational(1, 2);
  m(1, 1) = Rational(-7);
  m(0, 1) = Rational("123456789012345678901234567890");
  const Json j = matrix_to_json(m);
  CHECK(j[0][0] == "1/2");
  CHECK(j[1][1] == "-7");
  CHECK(j[0][1] == "123456789012345678901234567890");
  CHECK(matrix_from_json<Rational>(j, 2, 2, q) == m);
  CHECK_THROWS_AS(matrix_from_json<Rational>(j, 3, 2, q), Error);

  const FieldSpec f = FieldSpec::prime(101);
  Matrix<Fp> n(1, 2, f);
  n(0, 0) = Fp(100, 101);
  n(0, 1) = Fp(3, 101);
  CHECK(matrix_from_json<Fp>(matrix_to_json(n), 1, 2, f) == n);
  // Rational literals map into F_p.
  CHECK(matrix_from_json<Fp>(Json::parse(R"([["1/2"]])"), 1, 1, f)(0, 0) == Fp(51, 101));
}

TEST_CASE("algebra documents round-trip") {
  for (const char* name : kNames) {
    auto a = from_quiver<Rational>(spec_of_fixture(name));
    const Json j = algebra_to_json(*a);
    CHECK(j["format"] == kAlgebraFormat);
    auto b = algebra_from_json<Rational>(j);
    CHECK(*a == *b);
    CHECK(algebra_to_json(*b).dump(2) == j.dump(2));
    auto p = from_quiver<Fp>(spec_of_fixture(name, FieldSpec::prime(7)));
    CHECK(*algebra_from_json<Fp>(algebra_to_json(*p)) == *p);
  }
  auto b = from_quiver<Rational>(spec_of_fixture("FIX-A2"));
  auto c = from_quiver<Rational>(spec_of_fixture("FIX-TP1(1)"));
  auto ce = tensor(*opposite(*c), *b);
  auto t = triangular(b, c, direct_sum(projective(ce, 1), simple(ce, 2)));
  CHECK(*algebra_from_json<Rational>(algebra_to_json(*t)) == *t);
}

TEST_CASE("malformed algebra documents are rejected") {
  auto a = from_quiver<Rational>(spec_of_fixture("FIX-TP1(1)"));
  Json j = algebra_to_json(*a);
  Json wrong_format = j;
  wrong_format["format"] = "homkit-algebra/0";
  CHECK_THROWS_AS(algebra_from_json<Rational>(wrong_format), Error);
  Json broken = j;
  // alpha * beta = alpha breaks the vertex tags.
  broken["structure_constants"].push_back({2, 3, 2, "1"});
  CHECK_THROWS_AS(algebra_from_json<Rational>(broken), Error);
  Json missing = j;
  missing.erase("basis");
  CHECK_THROWS_AS(algebra_from_json<Rational>(missing), Error);
}

TEST_CASE("module documents round-trip") {
  for (const char* name : kNames) {
    auto a = from_quiver<Rational>(spec_of_fixture(name));
    for (std::size_t i = 0; i < a->num_vertices(); ++i)
      for (const auto& m : {projective(a, i), simple(a, i), injective(a, i)}) {
        const Json j = module_to_json(m, algebra_to_json(*a));
        CHECK(module_from_json<Rational>(j, a) == m);
      }
  }
  auto a = from_quiver<Rational>(spec_of_fixture("FIX-A2"));
  Json j = module_to_json(projective(a, 0), "FIX-A2.qa");
  Json bad = j;
  bad["actions"]["a"] = Json::parse(R"([["0","0"],["1","0"]])");  // maps a back to e1
  CHECK_THROWS_AS(module_from_json<Rational>(bad, a), Error);
  Json unknown = j;
  unknown["actions"]["zz"] = Json::parse(R"([["0","0"],["0","0"]])");
  CHECK_THROWS_AS(module_from_json<Rational>(unknown, a), Error);
  Json partial = j;
  partial["actions"].erase("a");
  CHECK_THROWS_AS(module_from_json<Rational>(partial, a), Error);
}

TEST_CASE("fixture files match the built-in fixtures") {
  const std::pair<const char*, const char*> files[] = {{"FIX-A2.qa", "FIX-A2"},         {"FIX-TP1-1.qa", "FIX-TP1(1)"},
                                                        {"FIX-TP1-2.qa", "FIX-TP1(2)"}, {"FIX-TP1-3.qa", "FIX-TP1(3)"},
                                                        {"FIX-TP2.qa", "FIX-TP2"},       {"FIX-LOC.qa", "FIX-LOC"},
                                                        {"FIX-TRI0.qa", "FIX-TRI0"}};
  for (const auto& [file, name] : files) {
    auto a = load_algebra<Rational>(kFixtures / file);
    auto b = from_quiver<Rational>(spec_of_fixture(name));
    CHECK(a->basis() == b->basis());
    CHECK(a->table() == b->table());
  }
  CHECK(field_of_file(kFixtures / "FIX-A2.qa") == FieldSpec::rationals());
  auto over_f5 = load_algebra<Fp>(kFixtures / "FIX-TP2.qa", FieldSpec::prime(5));
  CHECK(over_f5->field() == FieldSpec::prime(5));
}

TEST_CASE("bimodule files load over C^op (x) B") {
  auto m = load_module<Rational>(kFixtures / "M-loc-k-simple.mod");
  auto loc = load_algebra<Rational>(kFixtures / "FIX-LOC.qa");
  auto k = load_algebra<Rational>(kFixtures / "k.qa");
  auto ce = tensor(*opposite(*k), *loc);
  CHECK(same_algebra(m.algebra(), *ce));
  CHECK(m == Module<Rational>(ce, m.vertex_dims(), m.blocks()));
  CHECK(m.dim() == 1);
  for (const char* file : {"M-k-k.mod", "M-loc-regular.mod", "M-a2-mixed.mod"}) {
    auto x = load_module<Rational>(kFixtures / file);
    CHECK_FALSE(validate_module(x));
    auto y = load_module<Fp>(kFixtures / file, FieldSpec::prime(101));
    CHECK(y.dim() == x.dim());
  }
  CHECK(field_of_file(kFixtures / "M-k-k.mod") == FieldSpec::rationals());
}

TEST_CASE("report documents") {
  auto a = from_quiver<Rational>(spec_of_fixture("FIX-TP2"));
  const Json c = report_document("cartan", to_json(cartan(*a)));
  CHECK(c["format"] == kReportFormat);
  CHECK(c["kind"] == "cartan");
  CHECK(c["matrix"] == Json::parse(R"([["2","2"],["2","2"]])"));
  CHECK(c["det"] == "0");
  const Json p = to_json(PdResult::infinite(2, 2));
  CHECK(p["kind"] == "infinite");
  CHECK(p["period"] == 2);
  const Json tree = to_json(stratify_search(from_quiver<Rational>(spec_of_fixture("FIX-A2")), 12));
  CHECK(tree["children"].size() == 2);
  CHECK(tree["e"] == Json::parse("[0]"));
}

TEST_CASE("instance seeds") {
  CHECK(instance_seed(42, 0) == instance_seed(42, 0));
  CHECK(instance_seed(42, 0) != instance_seed(42, 1));
  CHECK(instance_seed(42, 0) != instance_seed(43, 0));
}

TEST_CASE("generated presentations respect the bounds") {
  CorpusSpec spec;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    for (const auto& s : {random_acyclic_spec(rng, spec), random_cyclic_spec(rng, spec)}) {
      CHECK(s.quiver.num_vertices() >= 1);
      CHECK(s.quiver.num_vertices() <= spec.max_vertices);
      CHECK(s.quiver.num_arrows() <= spec.max_arrows);
      CHECK(s.relations.size() <= spec.max_relations);
      auto a = from_quiver<Fp>(s);
      CHECK(validate(*a).ok);
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    auto t = random_triangular<Fp>(rng, spec);
    CHECK(t.a->dim() == t.b->dim() + t.c->dim() + t.m.dim());
    CHECK(t.a->dim() <= spec.max_dim);
    CHECK(t.a->num_vertices() <= spec.max_vertices);
    CHECK(validate(*t.a).ok);
    CHECK_FALSE(validate_module(t.m));
  }
}

TEST_CASE("corpus spec bounds") {
  CorpusSpec s;
  s.max_vertices = 7;
  CHECK_THROWS_AS(s.check(), Error);
  s = {};
  s.max_arrows = 11;
  CHECK_THROWS_AS(s.check(), Error);
  s = {};
  s.max_relations = 9;
  CHECK_THROWS_AS(s.check(), Error);
  s = {};
  s.max_dim = 61;
  CHECK_THROWS_AS(s.check(), Error);
  s = {};
  s.suite = CorpusSuite::Transfer;
  CHECK_THROWS_AS(s.check(), Error);
  CHECK(parse_shape("TriangularPair") == CorpusShape::TriangularPair);
  CHECK_THROWS_AS(parse_shape("square"), Error);
}

TEST_CASE("empty corpus") {
  CorpusSpec s;
  s.count = 0;
  const auto r = run_corpus(s);
  CHECK(r.instances.empty());
  CHECK(r.passed + r.failed + r.undetermined == 0);
  CHECK(r.to_json()["instances"].empty());
}

TEST_CASE("corpus reports are deterministic and independent of the thread count") {
  for (auto shape : {CorpusShape::AcyclicQuiver, CorpusShape::NilpotentCyclic, CorpusShape::TriangularPair}) {
    CorpusSpec s;
    s.shape = shape;
    s.count = 8;
    const int before = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto serial = run_corpus(s).to_json().dump();
    omp_set_num_threads(4);
    const auto parallel = run_corpus(s).to_json().dump();
    omp_set_num_threads(before);
    CHECK(serial == parallel);
    const auto r = run_corpus(s);
    CHECK(r.passed + r.failed + r.undetermined == s.count);
    CHECK(r.failed == 0);
    CHECK_FALSE(r.tripwire());
    CHECK(r.to_json(true).contains("timing"));
    CHECK_FALSE(r.to_json().contains("timing"));
  }
}

TEST_CASE("pd certificates are re-verified independently") {
  auto a2 = from_quiver<Rational>(spec_of_fixture("FIX-A2"));
  CHECK(verify_pd_certificate(simple(a2, 0), pd(simple(a2, 0), 12)));
  CHECK_FALSE(verify_pd_certificate(simple(a2, 0), PdResult::finite(0)));
  CHECK_FALSE(verify_pd_certificate(simple(a2, 0), PdResult::finite(2)));
  CHECK_FALSE(verify_pd_certificate(simple(a2, 0), PdResult::infinite(1, 1)));
  auto tp1 = from_quiver<Rational>(spec_of_fixture("FIX-TP1(1)"));
  const auto p = pd(simple(tp1, 0), 12);
  REQUIRE(p.is_infinite());
  CHECK(verify_pd_certificate(simple(tp1, 0), p));
  // Omega^2 S_1 = S_1 but Omega^1 S_1 = S_2: a period of 1 is wrong.
  CHECK_FALSE(verify_pd_certificate(simple(tp1, 0), PdResult::infinite(2, 1)));
  CHECK(verify_pd_certificate(simple(tp1, 0), PdResult::unknown(12)));
}
