#include <random>

#include "doctest.h"
#include "homkit/recollement.hpp"

using namespace homkit;

namespace {

template <class K>
AlgebraPtr<K> fixture(const std::string& name, FieldSpec f = FieldSpec::rationals()) {
  return from_quiver<K>(spec_of_fixture(name, f));
}

// Brute-force dimension of Ae (x)_{eAe} eA: the span of all a (x) b in the
// k-tensor product, modulo (a c) (x) b - a (x) (c b) for every c in eAe.
std::size_t tensor_oracle(const Algebra<Rational>& a, const VertexSet& e) {
  std::vector<std::size_t> ae, ea, eae;
  auto in = [&](std::size_t v) { return std::binary_search(e.begin(), e.end(), v); };
  for (std::size_t x = 0; x < a.dim(); ++x) {
    if (in(a.basis(x).right)) ae.push_back(x);
    if (in(a.basis(x).left)) ea.push_back(x);
    if (in(a.basis(x).left) && in(a.basis(x).right)) eae.push_back(x);
  }
  std::vector<std::size_t> pos(a.dim());
  for (std::size_t k = 0; k < ae.size(); ++k) pos[ae[k]] = k;
  std::vector<std::size_t> pos2(a.dim());
  for (std::size_t k = 0; k < ea.size(); ++k) pos2[ea[k]] = k;
  const std::size_t width = ae.size() * ea.size();
  Matrix<Rational> rels(0, width, a.field());
  for (std::size_t x : ae)
    for (std::size_t c : eae)
      for (std::size_t y : ea) {
        std::vector<Rational> row(width);
        for (const auto& [z, k] : a.product(x, c)) row[pos[z] * ea.size() + pos2[y]] += k;
        for (const auto& [z, k] : a.product(c, y)) row[pos[x] * ea.size() + pos2[z]] -= k;
        if (!is_zero_vector<Rational>(row)) rels.append_row(row);
      }
  return width - (rels.rows() ? rank(rels) : 0);
}

// Linear quiver 1 -> ... -> n, sometimes closed by an arrow n -> 1, with
// random zero relations of length 2 and every length-3 path through the
// closing arrow killed.
AlgebraSpec random_line(std::mt19937_64& rng) {
  AlgebraSpec s;
  s.field = FieldSpec::prime(101);
  const std::size_t n = 2 + rng() % 3;
  for (std::size_t v = 0; v < n; ++v) s.quiver.add_vertex(std::to_string(v + 1));
  for (std::size_t v = 0; v + 1 < n; ++v) s.quiver.add_arrow("a" + std::to_string(v + 1), v, v + 1);
  const bool closed = rng() % 2;
  if (closed) s.quiver.add_arrow("z", n - 1, 0);
  const auto paths = enumerate_paths(s.quiver, 3);
  auto through_z = [&](const Path& p) {
    return closed && std::find(p.arrows.begin(), p.arrows.end(), n - 1) != p.arrows.end();
  };
  if (paths.size() > 2)
    for (const auto& p : paths[2])
      if (rng() % 3 == 0 || (through_z(p) && rng() % 2))
        s.relations.push_back(Relation{{RelationTerm{Rational(1), p}}});
  if (paths.size() > 3)
    for (const auto& p : paths[3])
      if (through_z(p)) s.relations.push_back(Relation{{RelationTerm{Rational(1), p}}});
  return s;
}

}  // namespace

TEST_CASE("stratifying examples") {
  auto a2 = fixture<Rational>("FIX-A2");
  for (std::size_t v = 0; v < 2; ++v) {
    auto s = stratifying_check(a2, {v}, 12);
    CHECK(s.yes());
    CHECK(s.tensor_dim == 2);
    CHECK(s.ideal_dim == 2);
  }
  auto tp1 = fixture<Rational>("FIX-TP1(1)");
  auto s = stratifying_check(tp1, {0}, 12);
  CHECK(s.kind == StratVerdict::Kind::No);
  CHECK(s.witness_degree == 0);
  CHECK(s.tensor_dim == 4);
  CHECK(s.ideal_dim == 3);
  CHECK_THROWS_AS(stratifying_check(tp1, {}, 12), Error);
  CHECK_THROWS_AS(stratifying_check(tp1, {0, 1}, 12), Error);
}

TEST_CASE("tensor dimension against the brute-force span") {
  for (const char* name : {"FIX-A2", "FIX-TP1(1)", "FIX-TP1(2)", "FIX-TP2", "FIX-TRI0"}) {
    auto a = fixture<Rational>(name);
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      auto s = stratifying_check(a, {v}, 12);
      CHECK(s.tensor_dim == tensor_oracle(*a, {v}));
      CHECK(s.tensor_dim >= s.ideal_dim);
    }
  }
}

TEST_CASE("ladder estimates") {
  auto a2 = fixture<Rational>("FIX-A2");
  auto l = ladder_estimate(a2, {0}, 12);
  CHECK(l.down.degree == 0);
  CHECK(l.up.degree == 0);
  CHECK(l.text == "≥4");
  auto tri = fixture<Rational>("FIX-TRI0");
  CHECK(ladder_estimate(tri, {0}, 12).text == "≥4");
  CHECK(ladder_estimate(tri, {1}, 12).text == "≥4");
  CHECK_THROWS_AS(ladder_estimate(fixture<Rational>("FIX-TP1(1)"), {0}, 12), Error);

  // B = FIX-LOC, C = k, M = the simple B-module: e = C-vertex is stratifying
  // (the corner is C, Ae = C), but M_B has infinite projective dimension.
  auto loc = fixture<Rational>("FIX-LOC");
  auto k = ground_field<Rational>(FieldSpec::rationals());
  auto ce = tensor(*opposite(*k), *loc);
  auto t = triangular(loc, k, simple(ce, 0));
  CHECK(stratifying_check(t, {1}, 12).yes());
  CHECK(stratifying_check(t, {0}, 12).yes());
  auto blocked = ladder_estimate(t, {0}, 12);
  CHECK(blocked.down.is_infinite());
  CHECK(blocked.down_blocked);
  CHECK(blocked.text.find("down-blocked") != std::string::npos);
  // Larger cutoffs never lower the estimate.
  for (std::size_t cut : {2u, 6u, 12u}) CHECK(ladder_estimate(t, {1}, cut).height >= ladder_estimate(t, {1}, 2).height);
}

TEST_CASE("theorem I checks") {
  auto a2 = fixture<Rational>("FIX-A2");
  auto r = theorem1_check(a2, {0}, 12);
  CHECK(r.status == Theorem1Report::Status::Pass);
  CHECK(r.det_a == 1);
  CHECK(r.det_quotient == 1);
  CHECK(r.det_corner == 1);
  CHECK(r.r == r.r_quotient + r.r_corner);

  auto tp1 = theorem1_check(fixture<Rational>("FIX-TP1(1)"), {0}, 12);
  CHECK(tp1.status == Theorem1Report::Status::Inapplicable);
  CHECK(tp1.reason.find("not stratifying") != std::string::npos);
  auto diag = theorem1_check(fixture<Rational>("FIX-TP1(1)"), {0}, 12, true);
  CHECK(diag.diagnostic);
  CHECK(diag.status == Theorem1Report::Status::Inapplicable);
}

TEST_CASE("Gorenstein and smoothness transfer") {
  const FieldSpec q = FieldSpec::rationals();
  auto k = ground_field<Rational>(q);
  auto kk = tensor(*opposite(*k), *k);
  Module<Rational> m(kk, {1}, {Matrix<Rational>::identity(1, q)});
  auto g = gorenstein_transfer_check(k, k, m, 12);
  CHECK(g.a.verdict == Verdict3::Yes);
  CHECK(g.pd_b.degree == 0);
  CHECK(g.pd_c_op.degree == 0);
  for (const auto& row : g.rows) CHECK(row.outcome == Outcome::Pass);
  auto sm = smoothness_transfer_check(k, k, m, 12);
  for (const auto& row : sm.rows) CHECK(row.outcome == Outcome::Pass);

  auto loc = fixture<Rational>("FIX-LOC");
  auto loc_op = opposite(*loc);
  auto env = tensor(*loc_op, *loc);
  auto reg = regular_bimodule(loc, loc_op, env);
  auto gl = gorenstein_transfer_check(loc, loc, reg, 12);
  CHECK(gl.pd_b.degree == 0);
  CHECK(gl.pd_c_op.degree == 0);
  CHECK(gl.a.verdict == Verdict3::Yes);
  CHECK_FALSE(gl.certified_failure());

  auto ce = tensor(*opposite(*k), *loc);
  auto gs = gorenstein_transfer_check(loc, k, simple(ce, 0), 12);
  CHECK(gs.pd_b.is_infinite());
  CHECK(gs.a.verdict != Verdict3::Yes);
  CHECK_FALSE(gs.certified_failure());
  CHECK(gs.rows[0].outcome != Outcome::Fail);
  auto ss = smoothness_transfer_check(loc, k, simple(ce, 0), 12);
  CHECK(ss.a == Verdict3::No);
  CHECK_FALSE(ss.certified_failure());

  // Wrong algebra for the bimodule.
  CHECK_THROWS_AS(gorenstein_transfer_check(loc, k, m, 12), Error);
}

TEST_CASE("stratification search") {
  auto a2 = stratify_search(fixture<Rational>("FIX-A2"), 12);
  REQUIRE(a2.e);
  CHECK(*a2.e == VertexSet{0});
  REQUIRE(a2.children.size() == 2);
  CHECK(a2.children[0].leaf());
  CHECK(a2.children[1].leaf());
  CHECK(leaf_det_product(a2) == a2.det);
  CHECK(fully_extended(a2));

  auto loc = stratify_search(fixture<Rational>("FIX-LOC"), 12);
  CHECK(loc.leaf());
  CHECK(loc.label() == "derived-simple candidate (idempotent search only)");
  auto tp1 = stratify_search(fixture<Rational>("FIX-TP1(1)"), 12);
  CHECK(tp1.leaf());
  CHECK(tp1.undecided_subsets == 0);
}

TEST_CASE("stratification trees of random line algebras") {
  std::mt19937_64 rng(21);
  std::size_t splits = 0;
  for (int trial = 0; trial < 24; ++trial) {
    auto a = from_quiver<Fp>(random_line(rng));
    auto tree = stratify_search(a, 12);
    CHECK(leaf_rank_sum(tree) == a->num_vertices());
    std::vector<const StratNode*> stack{&tree};
    while (!stack.empty()) {
      const StratNode* n = stack.back();
      stack.pop_back();
      if (n->leaf()) continue;
      ++splits;
      REQUIRE(n->theorem1);
      CHECK(n->theorem1->r == n->theorem1->r_quotient + n->theorem1->r_corner);
      CHECK(n->theorem1->status != Theorem1Report::Status::Fail);
      for (const auto& c : n->children) stack.push_back(&c);
    }
    if (fully_extended(tree)) CHECK(leaf_det_product(tree) == tree.det);
  }
  CHECK(splits > 10);
}
