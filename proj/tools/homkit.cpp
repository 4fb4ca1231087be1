// homkit: invariants of finite-dimensional split basic algebras given by
// quivers with relations.
//
// Exit codes: 0 computed (possibly unknown), 1 input error, 2 internal
// consistency violation, 3 certified counterexample to a theorem.

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homkit/corpus.hpp"

namespace fs = std::filesystem;
using namespace homkit;

namespace {

constexpr int kComputed = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;
constexpr int kTripwire = 3;

struct Options {
  std::size_t cutoff = 12;
  bool json = false;
  std::uint64_t seed = 42;
  std::string field;
  std::size_t jobs = 0;
};

std::optional<FieldSpec> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return FieldSpec::parse(o.field);
}

// A file path, or a fixture name such as FIX-TP1-1 (with or without .qa)
// when no such file exists.
std::optional<std::string> fixture_of(const std::string& arg) {
  if (fs::exists(arg)) return std::nullopt;
  std::string name = fs::path(arg).filename().string();
  if (name.ends_with(".qa")) name.resize(name.size() - 3);
  if (is_fixture_name(name)) return name;
  throw Error("no such file: '" + arg + "'");
}

FieldSpec field_of_arg(const std::string& arg, const Options& o) {
  if (auto f = field_override(o)) return *f;
  if (fixture_of(arg)) return FieldSpec::rationals();
  return field_of_file(arg);
}

template <class K>
AlgebraPtr<K> load(const std::string& arg, const Options& o) {
  const auto f = field_override(o);
  if (auto name = fixture_of(arg)) return from_quiver<K>(spec_of_fixture(*name, f.value_or(FieldSpec::rationals())));
  return load_algebra<K>(arg, f);
}

// Runs body.template operator()<K>() with K chosen by the field.
template <class F>
int with_field(const FieldSpec& field, F&& body) {
  if (field.is_rationals()) return body.template operator()<Rational>();
  return body.template operator()<Fp>();
}

void emit(const Options& o, const std::string& kind, Json body, const std::string& text) {
  if (o.json)
    std::cout << report_document(kind, std::move(body)).dump(2) << "\n";
  else
    std::cout << text;
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) s << (j ? "," : "") << to_string(m(i, j));
    s << "]";
  }
  s << "]";
  return s.str();
}

template <class K>
std::string vertex_name(const Algebra<K>& a, std::size_t v) {
  std::string label = a.basis(a.idempotents()[v]).label;
  const auto colon = label.rfind(':');
  const std::string prefix = colon == std::string::npos ? "" : label.substr(0, colon + 1);
  std::string rest = colon == std::string::npos ? label : label.substr(colon + 1);
  if (rest.starts_with("e")) rest.erase(0, 1);
  return prefix + rest;
}

// "1,3" -> vertex indices, matching vertex names ("1", "b:2") or the
// idempotent labels themselves ("e1").
template <class K>
VertexSet parse_vertices(const Algebra<K>& a, const std::string& text) {
  VertexSet out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    std::optional<std::size_t> hit;
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
      if (vertex_name(a, v) == item || a.basis(a.idempotents()[v]).label == item) hit = v;
    if (!hit) throw Error("no vertex named '" + item + "'");
    out.push_back(*hit);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class K>
std::string vertices_text(const Algebra<K>& a, const VertexSet& e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + vertex_name(a, e[k]);
  return s + "}";
}

std::string gorenstein_text(const GorensteinReport& g) {
  switch (g.verdict) {
    case Verdict3::Yes:
      return "Gorenstein(" + g.right_id.to_string() + "," + g.left_id.to_string() + ")";
    case Verdict3::No:
      return "not Gorenstein (id A_A = " + g.right_id.to_string() + ", id _AA = " + g.left_id.to_string() + ")";
    case Verdict3::Unknown:
      break;
  }
  return "unknown (id A_A = " + g.right_id.to_string() + ", id _AA = " + g.left_id.to_string() + ")";
}

std::string pd_text(const PdResult& p) {
  switch (p.kind) {
    case PdResult::Kind::Finite:
      return "Finite(" + std::to_string(p.degree) + ")";
    case PdResult::Kind::InfiniteCertified:
      return "Infinite (syzygy " + std::to_string(p.first_repeat) + " repeats with period " +
             std::to_string(p.period) + ")";
    case PdResult::Kind::Unknown:
      break;
  }
  return std::string("Unknown(>") + std::to_string(p.cutoff) + (p.budget_exceeded ? ", budget" : "") + ")";
}

template <class K>
int cmd_basis(const AlgebraPtr<K>& a, const Options& o) {
  std::ostringstream s;
  s << "field " << a->field().name() << ", dim " << a->dim() << ", vertices " << a->num_vertices() << "\n";
  Json basis = Json::array();
  for (const auto& b : a->basis()) {
    s << "  " << b.label << "  in e" << vertex_name(*a, b.left) << " A e" << vertex_name(*a, b.right) << "\n";
    basis.push_back({{"label", b.label}, {"left", b.left}, {"right", b.right}});
  }
  emit(o, "basis", {{"field", a->field().name()}, {"dim", a->dim()}, {"r", a->num_vertices()}, {"basis", basis}},
       s.str());
  return kComputed;
}

template <class K>
int cmd_cartan(const AlgebraPtr<K>& a, const Options& o) {
  const auto c = cartan(*a);
  const bool agrees = cartan_by_hom(a) == c.matrix;
  Json body = to_json(c);
  body["hom_cross_check"] = agrees;
  emit(o, "cartan", body,
       "C = " + matrix_text(c.matrix) + "\ndet " + to_string(c.det) + "\nr " + std::to_string(c.r) + "\n");
  if (!agrees) {
    std::cerr << "error: Cartan matrix disagrees with Hom dimensions\n";
    return kViolation;
  }
  return kComputed;
}

template <class K>
int cmd_gldim(const AlgebraPtr<K>& a, const Options& o) {
  const auto g = gldim(a, o.cutoff);
  std::ostringstream s;
  s << "gldim " << pd_text(g.gldim) << "\n";
  bool certified = true;
  for (std::size_t i = 0; i < g.simples.size(); ++i) {
    s << "  pd S_" << vertex_name(*a, i) << " = " << g.simples[i].to_string() << "\n";
    certified = certified && verify_pd_certificate(simple(a, i), g.simples[i]);
  }
  emit(o, "gldim", to_json(g), s.str());
  if (!certified) {
    std::cerr << "error: a projective dimension certificate did not re-verify\n";
    return kViolation;
  }
  return kComputed;
}

template <class K>
int cmd_gorenstein(const AlgebraPtr<K>& a, const Options& o) {
  const auto g = gorenstein(a, o.cutoff);
  emit(o, "gorenstein", to_json(g), gorenstein_text(g) + "\n");
  return kComputed;
}

template <class K>
int cmd_smooth(const AlgebraPtr<K>& a, const Options& o, bool cross_check) {
  const auto s = smooth(a, o.cutoff, cross_check);
  std::string text = "smooth: " + to_string(s.verdict) + " (gldim " + s.gldim.gldim.to_string() + ")\n";
  if (s.bimodule_pd)
    text += "pd of A over A^e: " + s.bimodule_pd->to_string() + (s.cross_check_agrees ? " (agrees)" : " (DISAGREES)") + "\n";
  else if (cross_check)
    text += "cross-check skipped: dim A > " + std::to_string(kSmoothCrossCheckMaxDim) + "\n";
  emit(o, "smooth", to_json(s), text);
  return s.cross_check_agrees ? kComputed : kViolation;
}

void tree_text(const StratNode& n, const std::string& indent, bool last, bool root, std::ostringstream& s) {
  s << indent << (root ? "" : last ? "`-- " : "|-- ") << n.name << " (dim " << n.dim << ", r " << n.r << ", det C "
    << to_string(n.det) << ")";
  if (n.leaf()) {
    s << "  " << n.label();
  } else {
    s << "  " << n.label();
    if (n.theorem1) {
      s << ", theorem1 ";
      switch (n.theorem1->status) {
        case Theorem1Report::Status::Pass:
          s << "pass";
          break;
        case Theorem1Report::Status::Fail:
          s << "FAIL";
          break;
        case Theorem1Report::Status::Inapplicable:
          s << "inapplicable";
          break;
      }
      if (n.theorem1->ladder) s << ", ladder " << n.theorem1->ladder->text;
    }
  }
  if (n.undecided_subsets) s << "  [" << n.undecided_subsets << " undecided subsets]";
  s << "\n";
  const std::string child_indent = root ? indent : indent + (last ? "    " : "|   ");
  for (std::size_t k = 0; k < n.children.size(); ++k)
    tree_text(n.children[k], child_indent, k + 1 == n.children.size(), false, s);
}

bool tree_has_failure(const StratNode& n) {
  if (n.theorem1 && n.theorem1->status == Theorem1Report::Status::Fail) return true;
  return std::any_of(n.children.begin(), n.children.end(), tree_has_failure);
}

template <class K>
int cmd_stratify(const AlgebraPtr<K>& a, const Options& o) {
  const auto tree = stratify_search(a, o.cutoff);
  std::ostringstream s;
  tree_text(tree, "", true, true, s);
  if (fully_extended(tree) && !tree.leaf())
    s << "leaf determinant product " << to_string(leaf_det_product(tree)) << " (root " << to_string(tree.det) << ")\n";
  Json body = to_json(tree);
  body["fully_extended"] = fully_extended(tree);
  emit(o, "stratify", {{"tree", body}}, s.str());
  const bool leaf_ok = !fully_extended(tree) || tree.leaf() || leaf_det_product(tree) == tree.det;
  return tree_has_failure(tree) || !leaf_ok ? kTripwire : kComputed;
}

template <class K>
int cmd_theorem1(const AlgebraPtr<K>& a, const Options& o, const std::string& e_text, bool diagnostic) {
  const VertexSet e = parse_vertices(*a, e_text);
  const auto r = theorem1_check(a, e, o.cutoff, diagnostic);
  std::ostringstream s;
  s << "e = " << vertices_text(*a, e) << ", stratifying: " << r.stratifying.to_string() << "\n";
  if (r.ladder) s << "ladder " << r.ladder->text << " (down " << r.ladder->down.to_string() << ", up "
                  << r.ladder->up.to_string() << ")\n";
  const std::string identity = to_string(r.det_a) + "=" + to_string(r.det_quotient) + "·" + to_string(r.det_corner);
  switch (r.status) {
    case Theorem1Report::Status::Pass:
      s << "pass " << identity << "\n";
      break;
    case Theorem1Report::Status::Fail:
      s << "FAIL " << identity << "\n";
      break;
    case Theorem1Report::Status::Inapplicable:
      s << "inapplicable: " << r.reason << "\n";
      if (diagnostic)
        s << "diagnostic: " << identity << (r.identity_holds ? " holds" : " does not hold") << "\n";
      break;
  }
  s << "r = " << r.r << " = " << r.r_quotient << " + " << r.r_corner << "\n";
  emit(o, "theorem1", to_json(r), s.str());
  if (r.status == Theorem1Report::Status::Fail) return kTripwire;
  return r.r == r.r_quotient + r.r_corner ? kComputed : kViolation;
}

template <class K>
int cmd_two_point(const AlgebraPtr<K>& a, const Options& o) {
  const auto t = two_point_criterion(*a);
  std::string text;
  if (!t.applicable)
    text = "inapplicable: the criterion needs exactly two vertices\n";
  else
    text = "det " + to_string(t.det) + (t.flagged ? ", flagged 2-derived-simple" : ", not flagged") + "\n";
  emit(o, "two-point", to_json(t), text);
  return kComputed;
}

template <class K>
int cmd_eilenberg(const AlgebraPtr<K>& a, const Options& o) {
  const auto e = eilenberg_check(a, o.cutoff);
  std::string text;
  if (!e.applicable)
    text = "inapplicable: gldim " + e.gldim.to_string() + " is not certified finite\n";
  else
    text = "gldim " + e.gldim.to_string() + ", det " + to_string(e.det) + (e.unimodular ? " (unimodular" : " (NOT unimodular") +
           (e.plus_one ? ", +1)" : ")") + "\n";
  emit(o, "eilenberg", to_json(e), text);
  return e.applicable && !(e.unimodular && e.plus_one) ? kTripwire : kComputed;
}

// M over C^op (x) B; a module file without an algebra reference is read
// over that algebra directly.
template <class K>
Module<K> load_bimodule(const std::string& path, const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Options& o) {
  const auto ce = tensor(*opposite(*c), *b);
  const Json j = read_json_file(path);
  if (!j.contains("algebra")) {
    Json body = j;
    if (field_override(o)) body.erase("field");
    return module_from_json<K>(body, ce);
  }
  auto m = load_module<K>(path, field_override(o));
  if (!same_algebra(m.algebra(), *ce)) throw Error(path + ": not a module over C^op (x) B for the given B and C");
  return Module<K>(ce, m.vertex_dims(), m.blocks());
}

std::string rows_text(const TransferReport& t) {
  std::ostringstream s;
  s << "pd_B M = " << t.pd_b.to_string() << ", pd_{C^op} M = " << t.pd_c_op.to_string() << ", dim A = " << t.dim_a
    << "\n";
  for (const auto& r : t.rows)
    s << "  " << r.statement << "\n      " << r.lhs << " | " << r.rhs << "  ->  " << to_string(r.outcome) << "\n";
  return s.str();
}

template <class K>
int cmd_transfer(const std::vector<std::string>& files, const Options& o, bool gorenstein_kind) {
  const auto b = load<K>(files[0], o);
  const auto c = load<K>(files[1], o);
  const auto m = load_bimodule<K>(files[2], b, c, o);
  if (gorenstein_kind) {
    const auto g = gorenstein_transfer_check(b, c, m, o.cutoff);
    const std::string head = "B: " + gorenstein_text(g.b) + "\nC: " + gorenstein_text(g.c) + "\nA: " +
                             gorenstein_text(g.a) + "\n";
    emit(o, "gorenstein-transfer", to_json(g), head + rows_text(g));
    return g.certified_failure() ? kTripwire : kComputed;
  }
  const auto s = smoothness_transfer_check(b, c, m, o.cutoff);
  const std::string head =
      "B smooth: " + to_string(s.b) + ", C smooth: " + to_string(s.c) + ", A smooth: " + to_string(s.a) + "\n";
  emit(o, "smoothness-transfer", to_json(s), head + rows_text(s));
  return s.certified_failure() ? kTripwire : kComputed;
}

template <class K>
int cmd_triangular(const std::vector<std::string>& files, const Options& o, const std::string& out) {
  const auto b = load<K>(files[0], o);
  const auto c = load<K>(files[1], o);
  const auto m = load_bimodule<K>(files[2], b, c, o);
  const auto a = triangular(b, c, m);
  const auto report = validate(*a);
  if (!report.ok) {
    std::cerr << "error: triangular algebra fails validation: " << report.failure << "\n";
    return kViolation;
  }
  const Json doc = algebra_to_json(*a);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error("cannot write '" + out + "'");
    f << doc.dump(2) << "\n";
  }
  const auto ca = cartan(*a), cb = cartan(*b), cc = cartan(*c);
  std::ostringstream s;
  s << "dim A = " << a->dim() << " = " << b->dim() << " + " << c->dim() << " + " << m.dim() << ", r = " << a->num_vertices()
    << "\n";
  s << "C(A) = " << matrix_text(ca.matrix) << "\n";
  s << "det C(A) = " << to_string(ca.det) << " = " << to_string(cb.det) << "·" << to_string(cc.det) << "\n";
  if (o.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << s.str();
  return ca.det == cb.det * cc.det ? kComputed : kTripwire;
}

template <class K>
int cmd_dump_module(const std::string& path, const Options& o) {
  const Json j = read_json_file(path);
  const auto m = load_module<K>(path, field_override(o));
  std::cout << module_to_json(m, j.value("algebra", Json())).dump(2) << "\n";
  return kComputed;
}

int cmd_corpus(CorpusSpec spec, const Options& o, const std::string& out, bool timing) {
  spec.seed = o.seed;
  spec.cutoff = o.cutoff;
  if (!o.field.empty()) spec.field = FieldSpec::parse(o.field);
  const auto report = run_corpus(spec);
  const Json doc = report.to_json(timing);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error("cannot write '" + out + "'");
    f << doc.dump(2) << "\n";
  }
  if (o.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "corpus " << to_string(spec.shape) << " (" << to_string(spec.suite) << " suite), seed " << spec.seed
              << ", field " << spec.field.name() << ": " << report.instances.size() << " instances\n";
    std::cout << "pass " << report.passed << ", fail " << report.failed << ", undetermined " << report.undetermined
              << "\n";
    for (const auto& [k, v] : report.tallies) std::cout << "  " << k << " " << v << "\n";
    for (const auto& i : report.instances)
      if (i.status != InstanceResult::Status::Pass) std::cout << "  " << i.name << ": " << to_string(i.status) << "\n";
    std::cout << "time " << report.seconds << " s\n";
  }
  if (report.tripwire()) return kTripwire;
  if (report.violation()) return kViolation;
  return kComputed;
}

void set_jobs(const Options& o) {
  std::size_t jobs = o.jobs;
  if (const char* env = std::getenv("HOMKIT_JOBS")) {
    try {
      jobs = std::stoul(env);
    } catch (const std::exception&) {
      throw Error("HOMKIT_JOBS must be a positive integer");
    }
  }
  if (jobs > 0) omp_set_num_threads(static_cast<int>(jobs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homkit: homological invariants of quiver algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cutoff", o.cutoff, "Resolution length cutoff")->capture_default_str();
  app.add_flag("--json", o.json, "Emit the JSON report");
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--field", o.field, "Field override: Q, F<p> or Fp (= F101)");
  app.add_option("--jobs", o.jobs, "Worker threads (HOMKIT_JOBS overrides)");

  std::string file;
  auto single = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Algebra (.qa or algebra .json) or fixture name")->required();
    return sub;
  };
  auto* basis_cmd = single("basis", "List the basis with vertex tags");
  auto* cartan_cmd = single("cartan", "Cartan matrix and determinant");
  auto* gldim_cmd = single("gldim", "Global dimension");
  auto* gor_cmd = single("gorenstein", "Self-injective dimensions on both sides");
  bool cross_check = false;
  auto* smooth_cmd = single("smooth", "Smoothness (finite global dimension)");
  smooth_cmd->add_flag("--cross-check", cross_check, "Also resolve A over its enveloping algebra");
  auto* strat_cmd = single("stratify", "Search for stratifying idempotents recursively");

  auto* check_cmd = app.add_subcommand("check", "Theorem checks");
  check_cmd->require_subcommand(1);
  std::string e_text;
  bool diagnostic = false;
  auto* t1_cmd = check_cmd->add_subcommand("theorem1", "Determinant identity for a stratifying idempotent");
  t1_cmd->add_option("file", file)->required();
  t1_cmd->add_option("--e", e_text, "Vertices of the idempotent, comma separated")->required();
  t1_cmd->add_flag("--diagnostic", diagnostic, "Evaluate the identity even without a downward extension");
  std::vector<std::string> triple;
  auto* gt_cmd = check_cmd->add_subcommand("gorenstein-transfer", "Gorenstein property of a triangular algebra");
  gt_cmd->add_option("files", triple, "B.qa C.qa M.mod")->required()->expected(3);
  auto* st_cmd = check_cmd->add_subcommand("smoothness-transfer", "Smoothness of a triangular algebra");
  st_cmd->add_option("files", triple, "B.qa C.qa M.mod")->required()->expected(3);
  auto* tp_cmd = check_cmd->add_subcommand("two-point", "Cartan determinant criterion for two vertices");
  tp_cmd->add_option("file", file)->required();
  auto* eil_cmd = check_cmd->add_subcommand("eilenberg", "det C = +-1 for finite global dimension");
  eil_cmd->add_option("file", file)->required();

  CorpusSpec corpus;
  std::string shape = "acyclic", suite = "default", out;
  bool timing = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "Seeded random instances checked against a property suite");
  corpus_cmd->add_option("--shape", shape, "acyclic, cyclic or triangular")->capture_default_str();
  corpus_cmd->add_option("--suite", suite, "default or transfer")->capture_default_str();
  corpus_cmd->add_option("--count", corpus.count, "Number of instances")->capture_default_str();
  corpus_cmd->add_option("--max-vertices", corpus.max_vertices)->capture_default_str();
  corpus_cmd->add_option("--max-arrows", corpus.max_arrows)->capture_default_str();
  corpus_cmd->add_option("--max-relations", corpus.max_relations)->capture_default_str();
  corpus_cmd->add_option("--max-dim", corpus.max_dim)->capture_default_str();
  corpus_cmd->add_option("--out", out, "Write the JSON report to this file");
  corpus_cmd->add_flag("--timing", timing, "Include wall time in the JSON report");

  bool dump_algebra = false, dump_module = false;
  auto* dump_cmd = app.add_subcommand("dump", "Canonical JSON of an algebra or module");
  dump_cmd->add_option("file", file)->required();
  auto* da = dump_cmd->add_flag("--dump-algebra", dump_algebra, "Algebra document");
  auto* dm = dump_cmd->add_flag("--dump-module", dump_module, "Module document (file is a .mod)");
  da->excludes(dm);

  auto* tri_cmd = app.add_subcommand("triangular", "Build the triangular matrix algebra of B, C and a C-B-bimodule M");
  tri_cmd->add_option("files", triple, "B.qa C.qa M.mod")->required()->expected(3);
  tri_cmd->add_option("--out", out, "Write the algebra document to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kComputed : kInputError;
  }

  try {
    set_jobs(o);
    auto on_algebra = [&](auto&& body) {
      return with_field(field_of_arg(file, o), [&]<class K>() { return body(load<K>(file, o)); });
    };
    if (basis_cmd->parsed()) return on_algebra([&](auto a) { return cmd_basis(a, o); });
    if (cartan_cmd->parsed()) return on_algebra([&](auto a) { return cmd_cartan(a, o); });
    if (gldim_cmd->parsed()) return on_algebra([&](auto a) { return cmd_gldim(a, o); });
    if (gor_cmd->parsed()) return on_algebra([&](auto a) { return cmd_gorenstein(a, o); });
    if (smooth_cmd->parsed()) return on_algebra([&](auto a) { return cmd_smooth(a, o, cross_check); });
    if (strat_cmd->parsed()) return on_algebra([&](auto a) { return cmd_stratify(a, o); });
    if (t1_cmd->parsed()) return on_algebra([&](auto a) { return cmd_theorem1(a, o, e_text, diagnostic); });
    if (tp_cmd->parsed()) return on_algebra([&](auto a) { return cmd_two_point(a, o); });
    if (eil_cmd->parsed()) return on_algebra([&](auto a) { return cmd_eilenberg(a, o); });
    if (gt_cmd->parsed() || st_cmd->parsed() || tri_cmd->parsed()) {
      const FieldSpec f = field_of_arg(triple[0], o);
      return with_field(f, [&]<class K>() {
        if (tri_cmd->parsed()) return cmd_triangular<K>(triple, o, out);
        return cmd_transfer<K>(triple, o, gt_cmd->parsed());
      });
    }
    if (corpus_cmd->parsed()) {
      corpus.shape = parse_shape(shape);
      corpus.suite = parse_suite(suite);
      return cmd_corpus(corpus, o, out, timing);
    }
    if (dump_cmd->parsed()) {
      if (dump_module) {
        return with_field(field_of_arg(file, o), [&]<class K>() { return cmd_dump_module<K>(file, o); });
      }
      return on_algebra([&](auto a) {
        std::cout << algebra_to_json(*a).dump(2) << "\n";
        return kComputed;
      });
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "unknown: " << e.what() << "\n";
    return kComputed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kInputError;
}
