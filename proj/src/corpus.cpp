#include "homkit/corpus.hpp"

#include <algorithm>
#include <chrono>

#include "parallel.hpp"

namespace homkit {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct Bounds {
  std::size_t vertices, arrows, relations;
};

AlgebraSpec skeleton(std::string name, FieldSpec field, std::size_t n) {
  AlgebraSpec s;
  s.name = std::move(name);
  s.field = field;
  for (std::size_t v = 0; v < n; ++v) s.quiver.add_vertex(std::to_string(v + 1));
  return s;
}

void add_arrow(AlgebraSpec& s, std::size_t from, std::size_t to) {
  s.quiver.add_arrow("a" + std::to_string(s.quiver.num_arrows() + 1), from, to);
}

AlgebraSpec acyclic(std::mt19937_64& rng, const Bounds& b, FieldSpec field, std::string name) {
  const std::size_t n = uniform(rng, std::min<std::size_t>(2, b.vertices), b.vertices);
  AlgebraSpec s = skeleton(std::move(name), field, n);
  if (n > 1) {
    const std::size_t arrows = uniform(rng, std::min(n - 1, b.arrows), b.arrows);
    for (std::size_t k = 0; k < arrows; ++k) {
      std::size_t i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
      if (i == j) continue;
      add_arrow(s, std::min(i, j), std::max(i, j));
    }
  }
  const auto paths = enumerate_paths(s.quiver, 3);
  std::vector<Path> candidates;
  for (std::size_t len = 2; len < paths.size(); ++len) candidates.insert(candidates.end(), paths[len].begin(), paths[len].end());
  if (candidates.empty()) return s;
  const std::size_t rels = uniform(rng, 0, b.relations);
  for (std::size_t k = 0; k < rels; ++k) {
    const Path& p = candidates[uniform(rng, 0, candidates.size() - 1)];
    std::vector<Path> parallel;
    for (const Path& q : candidates)
      if (q.length() == p.length() && q.source == p.source && q.target == p.target) parallel.push_back(q);
    Relation rel;
    for (const Path& q : parallel) {
      if (!(q == p) && rng() % 2) continue;
      long c = static_cast<long>(uniform(rng, 1, 3));
      if (rng() % 2) c = -c;
      rel.terms.push_back({Rational(c), q});
    }
    std::sort(rel.terms.begin(), rel.terms.end(), [](const auto& x, const auto& y) { return x.path < y.path; });
    if (std::find(s.relations.begin(), s.relations.end(), rel) == s.relations.end()) s.relations.push_back(std::move(rel));
  }
  return s;
}

// nullopt when all length-L paths exceed the relation bound.
std::optional<AlgebraSpec> cyclic(std::mt19937_64& rng, const Bounds& b, FieldSpec field, std::string name) {
  const std::size_t n = uniform(rng, 1, std::min<std::size_t>(b.vertices, 4));
  const std::size_t tail = uniform(rng, 0, std::min<std::size_t>(b.vertices - n, 2));
  if (n + tail > b.arrows) return std::nullopt;
  AlgebraSpec s = skeleton(std::move(name), field, n + tail);
  for (std::size_t v = 0; v < n; ++v) add_arrow(s, v, (v + 1) % n);
  // Tail vertices hang off the cycle by a single arrow in either direction.
  for (std::size_t t = n; t < n + tail; ++t) {
    const std::size_t anchor = uniform(rng, 0, t - 1);
    rng() % 2 ? add_arrow(s, anchor, t) : add_arrow(s, t, anchor);
  }
  const std::size_t extra = std::min(uniform(rng, 0, 2), b.arrows - n - tail);
  for (std::size_t k = 0; k < extra; ++k) add_arrow(s, uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  const std::size_t len = uniform(rng, 2, 3);
  const auto paths = enumerate_paths(s.quiver, len);
  if (paths[len].size() > b.relations) return std::nullopt;
  for (const Path& p : paths[len]) s.relations.push_back(Relation{{RelationTerm{Rational(1), p}}});
  return s;
}

constexpr std::size_t kMaxAttempts = 1000;

template <class K>
AlgebraPtr<K> bounded(const AlgebraSpec& s, std::size_t max_dim) {
  auto a = from_quiver<K>(s);
  return a->dim() <= max_dim ? a : nullptr;
}

template <class K>
AlgebraPtr<K> small_factor(std::mt19937_64& rng, const CorpusSpec& spec, std::size_t vertices, std::string name) {
  const Bounds b{vertices, std::min<std::size_t>(spec.max_arrows, 4), std::min<std::size_t>(spec.max_relations, 4)};
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::optional<AlgebraSpec> s;
    if (rng() % 3 == 0)
      s = cyclic(rng, b, spec.field, name);
    else
      s = acyclic(rng, b, spec.field, name);
    if (!s) continue;
    if (auto a = bounded<K>(*s, 12)) return a;
  }
  throw Error("corpus: could not generate a triangular factor");
}

template <class K>
Module<K> random_piece(std::mt19937_64& rng, const AlgebraPtr<K>& ce) {
  const std::size_t v = uniform(rng, 0, ce->num_vertices() - 1);
  switch (uniform(rng, 0, 3)) {
    case 0:
      return projective(ce, v);
    case 1:
      return simple(ce, v);
    case 2:
      return injective(ce, v);
    default:
      return radical_submodule(projective(ce, v));
  }
}

// Named check helpers.
struct Recorder {
  InstanceResult& out;

  void pass(const std::string& name) { out.checks[name] = "pass"; }
  void undetermined(const std::string& name) {
    out.checks[name] = "undetermined";
    if (out.status == InstanceResult::Status::Pass) out.status = InstanceResult::Status::Undetermined;
  }
  void inapplicable(const std::string& name) { out.checks[name] = "inapplicable"; }
  // A failed consistency check.
  void violation(const std::string& name) {
    out.checks[name] = "FAIL";
    out.violation = true;
    out.status = InstanceResult::Status::Fail;
  }
  // A certified counterexample to a theorem.
  void tripwire(const std::string& name) {
    out.checks[name] = "FAIL";
    out.tripwire = true;
    out.status = InstanceResult::Status::Fail;
  }
  void expect(const std::string& name, bool ok) { ok ? pass(name) : violation(name); }
};

template <class K>
void structural_checks(const AlgebraPtr<K>& a, Recorder& rec, std::size_t cutoff, bool gorenstein_symmetry) {
  const auto c = cartan(*a);
  rec.out.values["det"] = to_string(c.det);
  rec.out.values["cartan"] = matrix_to_json(c.matrix);
  rec.expect("cartan_oracle", cartan_by_hom(a) == c.matrix);
  const auto a_op = opposite(*a);
  rec.expect("cartan_opposite", cartan(*a_op).matrix == c.matrix.transpose());
  Integer sum = 0;
  for (const auto& x : c.matrix.data()) sum += x;
  rec.expect("cartan_sum", sum == static_cast<unsigned long>(a->dim()));
  if (gorenstein_symmetry) {
    const auto g = gorenstein(a, cutoff);
    const auto o = gorenstein(a_op, cutoff);
    rec.out.values["gorenstein"] = to_string(g.verdict);
    rec.expect("gorenstein_opposite", g.verdict == o.verdict && g.right_id.to_string() == o.left_id.to_string() &&
                                          g.left_id.to_string() == o.right_id.to_string());
  }
}

// gldim with re-verified certificates and, when finite, the Euler form.
template <class K>
GldimReport homological_checks(const AlgebraPtr<K>& a, Recorder& rec, std::size_t cutoff) {
  auto g = gldim(a, cutoff);
  rec.out.values["gldim"] = g.gldim.to_string();
  bool certified = true;
  for (std::size_t i = 0; i < g.simples.size(); ++i) {
    if (g.simples[i].is_unknown()) continue;
    const bool ok = verify_pd_certificate(simple(a, i), g.simples[i]);
    certified = certified && ok;
    ++rec.out.tallies[ok ? "certificates_verified" : "certificates_rejected"];
  }
  rec.expect("certificates", certified);
  if (g.gldim.is_finite()) {
    const auto e = euler_matrix(a, cutoff);
    const auto c = cartan(*a).matrix;
    IntMatrix id(c.rows(), c.rows());
    for (std::size_t i = 0; i < c.rows(); ++i) id(i, i) = 1;
    rec.expect("euler_inverse", e && *e * c.transpose() == id);
    ++rec.out.tallies["euler_checked"];
  } else {
    rec.inapplicable("euler_inverse");
  }
  return g;
}

template <class K>
void acyclic_suite(const AlgebraPtr<K>& a, Recorder& rec, std::size_t cutoff) {
  structural_checks(a, rec, cutoff, true);
  const auto g = homological_checks(a, rec, cutoff);
  rec.expect("gldim_finite", g.gldim.is_finite());
  const auto e = eilenberg_check(a, cutoff);
  if (!e.applicable) return rec.violation("eilenberg");
  e.unimodular ? rec.pass("eilenberg") : rec.tripwire("eilenberg");
  e.plus_one ? rec.pass("det_plus_one") : rec.tripwire("det_plus_one");
  if (e.plus_one) ++rec.out.tallies["det_plus_one"];
}

void visit_splits(const StratNode& node, Recorder& rec) {
  if (node.leaf()) return;
  ++rec.out.tallies["splits"];
  const auto& t = *node.theorem1;
  if (t.r != t.r_quotient + t.r_corner) rec.violation("k0_additivity");
  if (t.status == Theorem1Report::Status::Fail) rec.tripwire("theorem1");
  if (t.status == Theorem1Report::Status::Pass) ++rec.out.tallies["splits_with_extension"];
  for (const auto& c : node.children) visit_splits(c, rec);
}

template <class K>
void cyclic_suite(const AlgebraPtr<K>& a, Recorder& rec, std::size_t cutoff) {
  structural_checks(a, rec, cutoff, true);
  homological_checks(a, rec, cutoff);
  const auto tree = stratify_search(a, cutoff);
  rec.out.values["stratification"] = to_json(tree);
  rec.pass("k0_additivity");
  rec.pass("theorem1");
  visit_splits(tree, rec);
  if (tree.undecided_subsets) rec.undetermined("stratification_complete");
  if (fully_extended(tree) && !tree.leaf()) {
    ++rec.out.tallies["fully_extended_trees"];
    leaf_det_product(tree) == tree.det ? rec.pass("leaf_determinants") : rec.tripwire("leaf_determinants");
  } else {
    rec.inapplicable("leaf_determinants");
  }
}

template <class K>
void triangular_suite(const TriangularInstance<K>& t, Recorder& rec, std::size_t cutoff) {
  structural_checks(t.a, rec, cutoff, true);
  const auto ca = cartan(*t.a), cb = cartan(*t.b), cc = cartan(*t.c);
  rec.out.values["det_b"] = to_string(cb.det);
  rec.out.values["det_c"] = to_string(cc.det);
  ca.det == cb.det * cc.det ? rec.pass("determinant_identity") : rec.tripwire("determinant_identity");
  const std::size_t rb = cb.r, rc = cc.r;
  bool blocks = ca.r == rb + rc;
  for (std::size_t i = 0; blocks && i < ca.r; ++i)
    for (std::size_t j = 0; j < ca.r; ++j) {
      Integer expect = 0;
      if (i < rb && j < rb) expect = cb.matrix(i, j);
      else if (i >= rb && j >= rb) expect = cc.matrix(i - rb, j - rb);
      else if (i >= rb) expect = 0;
      else continue;  // the M block
      if (ca.matrix(i, j) != expect) blocks = false;
    }
  rec.expect("block_structure", blocks);
  rec.expect("k0_additivity", k0_rank(*t.a) == k0_rank(*t.b) + k0_rank(*t.c));
  VertexSet eb, ec;
  for (std::size_t v = 0; v < rb; ++v) eb.push_back(v);
  for (std::size_t v = rb; v < rb + rc; ++v) ec.push_back(v);
  for (const auto& [name, e] : {std::pair{std::string("theorem1_b"), eb}, std::pair{std::string("theorem1_c"), ec}}) {
    const auto r = theorem1_check(t.a, e, cutoff);
    rec.out.values[name] = r.status == Theorem1Report::Status::Pass ? "pass" : r.reason;
    switch (r.status) {
      case Theorem1Report::Status::Pass:
        ++rec.out.tallies["theorem1_pass"];
        rec.pass(name);
        break;
      case Theorem1Report::Status::Fail:
        rec.tripwire(name);
        break;
      case Theorem1Report::Status::Inapplicable:
        ++rec.out.tallies["theorem1_inapplicable"];
        rec.inapplicable(name);
        break;
    }
  }
}

void record_rows(const TransferReport& t, const std::string& prefix, Recorder& rec) {
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const std::string name = prefix + "_" + std::to_string(k + 1);
    switch (t.rows[k].outcome) {
      case Outcome::Pass:
        ++rec.out.tallies[prefix + "_pass"];
        rec.pass(name);
        break;
      case Outcome::Fail:
        rec.tripwire(name);
        break;
      case Outcome::Undetermined:
        ++rec.out.tallies[prefix + "_undetermined"];
        rec.undetermined(name);
        break;
      case Outcome::Inapplicable:
        ++rec.out.tallies[prefix + "_inapplicable"];
        rec.inapplicable(name);
        break;
    }
  }
}

template <class K>
void transfer_suite(const TriangularInstance<K>& t, Recorder& rec, std::size_t cutoff) {
  structural_checks(t.a, rec, cutoff, false);
  const auto g = gorenstein_transfer_check(t.b, t.c, t.m, cutoff);
  rec.out.values["gorenstein_transfer"] = to_json(g);
  record_rows(g, "gorenstein", rec);
  const auto s = smoothness_transfer_check(t.b, t.c, t.m, cutoff);
  rec.out.values["smoothness_transfer"] = to_json(s);
  record_rows(s, "smoothness", rec);
}

template <class K>
InstanceResult run_instance(const CorpusSpec& spec, std::size_t index) {
  InstanceResult out;
  out.index = index;
  out.seed = instance_seed(spec.seed, index);
  Recorder rec{out};
  std::mt19937_64 rng(out.seed);
  const Bounds b{spec.max_vertices, spec.max_arrows, spec.max_relations};
  try {
    switch (spec.shape) {
      case CorpusShape::AcyclicQuiver:
      case CorpusShape::NilpotentCyclic: {
        AlgebraPtr<K> a;
        for (std::size_t attempt = 0; !a && attempt < kMaxAttempts; ++attempt) {
          const std::string name = to_string(spec.shape) + "-" + std::to_string(index);
          std::optional<AlgebraSpec> s;
          if (spec.shape == CorpusShape::AcyclicQuiver)
            s = acyclic(rng, b, spec.field, name);
          else
            s = cyclic(rng, b, spec.field, name);
          if (s) a = bounded<K>(*s, spec.max_dim);
        }
        if (!a) throw Error("corpus: no instance within the bounds");
        out.name = a->name();
        out.dim = a->dim();
        out.r = a->num_vertices();
        if (spec.suite == CorpusSuite::Transfer) throw Error("corpus: the transfer suite needs triangular pairs");
        if (spec.shape == CorpusShape::AcyclicQuiver)
          acyclic_suite(a, rec, spec.cutoff);
        else
          cyclic_suite(a, rec, spec.cutoff);
        break;
      }
      case CorpusShape::TriangularPair: {
        const auto t = random_triangular<K>(rng, spec);
        out.name = "triangular-" + std::to_string(index);
        out.dim = t.a->dim();
        out.r = t.a->num_vertices();
        out.values["dims"] = {{"b", t.b->dim()}, {"c", t.c->dim()}, {"m", t.m.dim()}};
        if (spec.suite == CorpusSuite::Transfer)
          transfer_suite(t, rec, spec.cutoff);
        else
          triangular_suite(t, rec, spec.cutoff);
        break;
      }
    }
  } catch (const BudgetExceeded& e) {
    out.values["budget"] = e.what();
    rec.undetermined("budget");
  } catch (const std::exception& e) {
    out.values["error"] = e.what();
    rec.violation("error");
  }
  return out;
}

template <class K>
RunReport run_with(const CorpusSpec& spec) {
  RunReport report;
  report.spec = spec;
  report.instances.resize(spec.count);
  const auto start = std::chrono::steady_clock::now();
  detail::parallel_for(spec.count, [&](std::size_t i) { report.instances[i] = run_instance<K>(spec, i); });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& inst : report.instances) {
    switch (inst.status) {
      case InstanceResult::Status::Pass:
        ++report.passed;
        break;
      case InstanceResult::Status::Fail:
        ++report.failed;
        break;
      case InstanceResult::Status::Undetermined:
        ++report.undetermined;
        break;
    }
    for (const auto& [k, v] : inst.tallies) report.tallies[k] += v;
  }
  return report;
}

}  // namespace

std::string to_string(CorpusShape s) {
  switch (s) {
    case CorpusShape::AcyclicQuiver:
      return "acyclic";
    case CorpusShape::NilpotentCyclic:
      return "cyclic";
    case CorpusShape::TriangularPair:
      break;
  }
  return "triangular";
}

CorpusShape parse_shape(std::string_view text) {
  if (text == "acyclic" || text == "AcyclicQuiver") return CorpusShape::AcyclicQuiver;
  if (text == "cyclic" || text == "NilpotentCyclic") return CorpusShape::NilpotentCyclic;
  if (text == "triangular" || text == "TriangularPair") return CorpusShape::TriangularPair;
  throw Error("unknown corpus shape '" + std::string(text) + "' (acyclic, cyclic, triangular)");
}

std::string to_string(CorpusSuite s) { return s == CorpusSuite::Transfer ? "transfer" : "default"; }

CorpusSuite parse_suite(std::string_view text) {
  if (text == "default") return CorpusSuite::Default;
  if (text == "transfer") return CorpusSuite::Transfer;
  throw Error("unknown corpus suite '" + std::string(text) + "' (default, transfer)");
}

void CorpusSpec::check() const {
  if (max_vertices < 1 || max_vertices > 6) throw Error("corpus: max vertices must be in 1..6");
  if (max_arrows > 10) throw Error("corpus: max arrows must be at most 10");
  if (max_relations > 8) throw Error("corpus: max relations must be at most 8");
  if (max_dim < 1 || max_dim > 60) throw Error("corpus: dimension bound must be in 1..60");
  if (shape == CorpusShape::TriangularPair && max_vertices < 2)
    throw Error("corpus: triangular pairs need at least two vertices");
  if (suite == CorpusSuite::Transfer && shape != CorpusShape::TriangularPair)
    throw Error("corpus: the transfer suite needs triangular pairs");
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + (static_cast<std::uint64_t>(index) + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

AlgebraSpec random_acyclic_spec(std::mt19937_64& rng, const CorpusSpec& spec) {
  return acyclic(rng, {spec.max_vertices, spec.max_arrows, spec.max_relations}, spec.field, "acyclic");
}

AlgebraSpec random_cyclic_spec(std::mt19937_64& rng, const CorpusSpec& spec) {
  const Bounds b{spec.max_vertices, spec.max_arrows, spec.max_relations};
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt)
    if (auto s = cyclic(rng, b, spec.field, "cyclic")) return *s;
  throw Error("corpus: could not generate a cyclic instance");
}

template <class K>
TriangularInstance<K> random_triangular(std::mt19937_64& rng, const CorpusSpec& spec) {
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::size_t vb = uniform(rng, 1, std::min<std::size_t>(3, spec.max_vertices - 1));
    const std::size_t vc = uniform(rng, 1, std::min<std::size_t>(3, spec.max_vertices - vb));
    TriangularInstance<K> t;
    t.b = small_factor<K>(rng, spec, vb, "B");
    t.c = small_factor<K>(rng, spec, vc, "C");
    const auto ce = tensor(*opposite(*t.c), *t.b);
    t.m = random_piece(rng, ce);
    if (rng() % 2) t.m = direct_sum(t.m, random_piece(rng, ce));
    if (t.b->dim() + t.c->dim() + t.m.dim() > spec.max_dim) continue;
    t.a = triangular(t.b, t.c, t.m);
    return t;
  }
  throw Error("corpus: could not generate a triangular instance within the bounds");
}

template <class K>
bool verify_pd_certificate(const Module<K>& m, const PdResult& p) {
  if (p.is_unknown()) return true;
  if (p.is_finite()) {
    if (m.is_zero()) return p.degree == 0;
    const auto res = min_resolution(m, p.degree);
    return res.syzygies.size() > p.degree + 1 && res.syzygies[p.degree + 1].is_zero() &&
           !res.syzygies[p.degree].is_zero();
  }
  if (p.period == 0 || p.period > p.first_repeat) return false;
  const auto res = min_resolution(m, p.first_repeat);
  if (res.syzygies.size() <= p.first_repeat) return false;
  const auto& late = res.syzygies[p.first_repeat];
  const auto& early = res.syzygies[p.first_repeat - p.period];
  if (late.is_zero() || early.dim() != late.dim()) return false;
  const auto v = is_iso(early, late);
  if (v.kind != IsoVerdict<K>::Kind::Iso || !invert(v.witness)) return false;
  for (std::size_t x = 0; x < m.algebra().dim(); ++x)
    if (!(early.action(x) * v.witness == v.witness * late.action(x))) return false;
  return true;
}

std::string to_string(InstanceResult::Status s) {
  switch (s) {
    case InstanceResult::Status::Pass:
      return "pass";
    case InstanceResult::Status::Fail:
      return "FAIL";
    case InstanceResult::Status::Undetermined:
      break;
  }
  return "undetermined";
}

bool RunReport::tripwire() const {
  return std::any_of(instances.begin(), instances.end(), [](const InstanceResult& i) { return i.tripwire; });
}

bool RunReport::violation() const {
  return std::any_of(instances.begin(), instances.end(), [](const InstanceResult& i) { return i.violation; });
}

Json RunReport::to_json(bool with_timing) const {
  Json insts = Json::array();
  for (const auto& i : instances) {
    Json j = {{"index", i.index}, {"seed", i.seed},     {"name", i.name},     {"dim", i.dim},
              {"r", i.r},         {"status", homkit::to_string(i.status)}, {"checks", i.checks}, {"values", i.values}};
    if (i.tripwire) j["tripwire"] = true;
    if (i.violation) j["violation"] = true;
    insts.push_back(std::move(j));
  }
  Json body = {{"spec",
                {{"seed", spec.seed},
                 {"count", spec.count},
                 {"shape", homkit::to_string(spec.shape)},
                 {"suite", homkit::to_string(spec.suite)},
                 {"field", spec.field.name()},
                 {"max_vertices", spec.max_vertices},
                 {"max_arrows", spec.max_arrows},
                 {"max_relations", spec.max_relations},
                 {"max_dim", spec.max_dim},
                 {"cutoff", spec.cutoff}}},
               {"counts", {{"pass", passed}, {"fail", failed}, {"undetermined", undetermined}}},
               {"tallies", tallies},
               {"instances", std::move(insts)}};
  if (with_timing) body["timing"] = {{"seconds", seconds}};
  return report_document("corpus", std::move(body));
}

RunReport run_corpus(const CorpusSpec& spec) {
  spec.check();
  return spec.field.is_rationals() ? run_with<Rational>(spec) : run_with<Fp>(spec);
}

template TriangularInstance<Rational> random_triangular<Rational>(std::mt19937_64&, const CorpusSpec&);
template TriangularInstance<Fp> random_triangular<Fp>(std::mt19937_64&, const CorpusSpec&);
template bool verify_pd_certificate<Rational>(const Module<Rational>&, const PdResult&);
template bool verify_pd_certificate<Fp>(const Module<Fp>&, const PdResult&);

}  // namespace homkit
