#include "homkit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace homkit {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_json_path(const std::filesystem::path& path) { return path.extension() == ".json" || path.extension() == ".mod"; }

void expect_format(const Json& j, const char* format) {
  if (!j.is_object() || !j.contains("format") || j["format"] != format)
    throw Error(std::string("expected a document with \"format\": \"") + format + "\"");
}

template <class K>
K scalar_from_json(const Json& j, const FieldSpec& field) {
  if (j.is_string()) return from_rational<K>(field, parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return from_int<K>(field, j.get<std::int64_t>());
  throw Error("expected a number or a decimal string");
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& ref) {
  const std::filesystem::path p(ref);
  return p.is_absolute() ? p : base / p;
}

Json pd_list(const std::vector<PdResult>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(to_json(p));
  return out;
}

std::string status_name(Theorem1Report::Status s) {
  switch (s) {
    case Theorem1Report::Status::Pass:
      return "pass";
    case Theorem1Report::Status::Fail:
      return "FAIL";
    case Theorem1Report::Status::Inapplicable:
      break;
  }
  return "inapplicable";
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
Matrix<K> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const FieldSpec& field) {
  if (!j.is_array() || j.size() != rows) throw Error("matrix: expected " + std::to_string(rows) + " rows");
  Matrix<K> m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error("matrix: expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json<K>(j[i][c], field);
  }
  return m;
}

template <class K>
Json algebra_to_json(const Algebra<K>& a) {
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back({{"label", b.label}, {"left", b.left}, {"right", b.right}});
  Json constants = Json::array();
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y)
      for (const auto& [z, c] : a.product(x, y)) constants.push_back({x, y, z, to_string(c)});
  return {{"format", kAlgebraFormat},
          {"name", a.name()},
          {"field", a.field().name()},
          {"vertices", a.num_vertices()},
          {"basis", std::move(basis)},
          {"idempotents", a.idempotents()},
          {"radical", a.radical()},
          {"structure_constants", std::move(constants)}};
}

FieldSpec field_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j["field"].is_string()) throw Error("document has no field");
  return FieldSpec::parse(j["field"].get<std::string>());
}

template <class K>
AlgebraPtr<K> algebra_from_json(const Json& j) {
  expect_format(j, kAlgebraFormat);
  try {
    const FieldSpec field = field_of_json(j);
    std::vector<BasisElement> basis;
    for (const auto& b : j.at("basis"))
      basis.push_back({b.at("label").get<std::string>(), b.at("left").get<std::size_t>(), b.at("right").get<std::size_t>()});
    const auto idem = j.at("idempotents").get<std::vector<std::size_t>>();
    const auto rad = j.at("radical").get<std::vector<std::size_t>>();
    if (j.contains("vertices") && j["vertices"].get<std::size_t>() != idem.size())
      throw Error("algebra: vertex count disagrees with the idempotents");
    const std::size_t n = basis.size();
    std::vector<std::map<std::size_t, K>> acc(n * n);
    for (const auto& t : j.at("structure_constants")) {
      if (!t.is_array() || t.size() != 4) throw Error("algebra: structure constants are [x, y, z, c] entries");
      const auto x = t[0].get<std::size_t>(), y = t[1].get<std::size_t>(), z = t[2].get<std::size_t>();
      if (x >= n || y >= n || z >= n) throw Error("algebra: structure constant index out of range");
      acc[x * n + y][z] += scalar_from_json<K>(t[3], field);
    }
    std::vector<SparseVector<K>> table(n * n);
    for (std::size_t k = 0; k < n * n; ++k)
      for (const auto& [z, c] : acc[k])
        if (!is_zero(c)) table[k].emplace_back(z, c);
    auto a = std::make_shared<const Algebra<K>>(field, j.value("name", std::string()), std::move(basis), idem, rad,
                                                std::move(table));
    const auto report = validate(*a);
    if (!report.ok) throw Error("algebra: " + report.failure);
    return a;
  } catch (const Json::exception& e) {
    throw Error(std::string("algebra document: ") + e.what());
  }
}

template <class K>
Json module_to_json(const Module<K>& m, Json algebra_ref) {
  Json actions = Json::object();
  for (std::size_t x = 0; x < m.algebra().dim(); ++x) actions[m.algebra().basis(x).label] = matrix_to_json(m.action(x));
  return {{"format", kModuleFormat},
          {"algebra", std::move(algebra_ref)},
          {"field", m.field().name()},
          {"dimension", m.dim()},
          {"actions", std::move(actions)}};
}

template <class K>
Module<K> module_from_json(const Json& j, const AlgebraPtr<K>& algebra) {
  expect_format(j, kModuleFormat);
  try {
    const FieldSpec field = algebra->field();
    if (j.contains("field") && FieldSpec::parse(j["field"].get<std::string>()) != field)
      throw Error("module: field differs from the algebra's");
    const auto n = j.at("dimension").get<std::size_t>();
    const Json& acts = j.at("actions");
    if (!acts.is_object()) throw Error("module: actions must be keyed by basis label");
    for (const auto& [label, value] : acts.items()) {
      (void)value;
      const auto& b = algebra->basis();
      if (std::none_of(b.begin(), b.end(), [&](const BasisElement& e) { return e.label == label; }))
        throw Error("module: '" + label + "' is not a basis label of the algebra");
    }
    if (n == 0) return Module<K>::zero(algebra);
    std::vector<Matrix<K>> actions;
    for (const auto& b : algebra->basis()) {
      if (!acts.contains(b.label)) throw Error("module: no action given for '" + b.label + "'");
      actions.push_back(matrix_from_json<K>(acts[b.label], n, n, field));
    }
    auto m = Module<K>::from_full_actions(algebra, actions);
    if (auto bad = validate_module(m)) throw Error("module: " + *bad);
    return m;
  } catch (const Json::exception& e) {
    throw Error(std::string("module document: ") + e.what());
  }
}

FieldSpec field_of_file(const std::filesystem::path& path) {
  if (!is_json_path(path)) return parse_spec(read_file(path), path.stem().string()).field;
  const Json j = read_json_file(path);
  if (j.contains("field")) return field_of_json(j);
  if (j.contains("algebra")) {
    const Json& ref = j["algebra"];
    const auto base = path.parent_path();
    if (ref.is_string()) return field_of_file(resolve(base, ref.get<std::string>()));
    if (ref.contains("bimodule")) return field_of_file(resolve(base, ref["bimodule"].at("right").get<std::string>()));
    return field_of_json(ref);
  }
  throw Error(path.string() + ": cannot determine the field");
}

template <class K>
AlgebraPtr<K> load_algebra(const std::filesystem::path& path, std::optional<FieldSpec> field_override) {
  if (is_json_path(path)) {
    auto a = algebra_from_json<K>(read_json_file(path));
    if (field_override && *field_override != a->field())
      throw Error(path.string() + ": algebra documents cannot change field");
    return a;
  }
  AlgebraSpec spec = parse_spec(read_file(path), path.stem().string());
  if (field_override) spec.field = *field_override;
  return from_quiver<K>(spec);
}

template <class K>
Module<K> load_module(const std::filesystem::path& path, std::optional<FieldSpec> field_override) {
  const Json j = read_json_file(path);
  expect_format(j, kModuleFormat);
  if (!j.contains("algebra")) throw Error(path.string() + ": module has no algebra reference");
  const Json& ref = j["algebra"];
  const auto base = path.parent_path();
  AlgebraPtr<K> algebra;
  if (ref.is_string()) {
    algebra = load_algebra<K>(resolve(base, ref.get<std::string>()), field_override);
  } else if (ref.is_object() && ref.contains("bimodule")) {
    const auto& bm = ref["bimodule"];
    auto c = load_algebra<K>(resolve(base, bm.at("left").get<std::string>()), field_override);
    auto b = load_algebra<K>(resolve(base, bm.at("right").get<std::string>()), field_override);
    algebra = tensor(*opposite(*c), *b);
  } else {
    algebra = algebra_from_json<K>(ref);
  }
  Json body = j;
  if (field_override) body.erase("field");
  return module_from_json<K>(body, algebra);
}

Json to_json(const PdResult& p) {
  Json j = {{"value", p.to_string()}};
  switch (p.kind) {
    case PdResult::Kind::Finite:
      j["kind"] = "finite";
      j["degree"] = p.degree;
      break;
    case PdResult::Kind::InfiniteCertified:
      j["kind"] = "infinite";
      j["first_repeat"] = p.first_repeat;
      j["period"] = p.period;
      break;
    case PdResult::Kind::Unknown:
      j["kind"] = "unknown";
      j["cutoff"] = p.cutoff;
      j["budget_exceeded"] = p.budget_exceeded;
      break;
  }
  if (!p.certificate.empty()) j["certificate"] = p.certificate;
  return j;
}

Json to_json(const CartanReport& c) {
  return {{"r", c.r}, {"matrix", matrix_to_json(c.matrix)}, {"det", to_string(c.det)}};
}

Json to_json(const GldimReport& g) { return {{"simples", pd_list(g.simples)}, {"gldim", to_json(g.gldim)}}; }

Json to_json(const GorensteinReport& g) {
  return {{"right_id", to_json(g.right_id)}, {"left_id", to_json(g.left_id)}, {"verdict", to_string(g.verdict)}};
}

Json to_json(const SmoothReport& s) {
  Json j = {{"gldim", to_json(s.gldim)}, {"verdict", to_string(s.verdict)}};
  if (s.bimodule_pd) {
    j["bimodule_pd"] = to_json(*s.bimodule_pd);
    j["cross_check_agrees"] = s.cross_check_agrees;
  }
  return j;
}

Json to_json(const EilenbergReport& e) {
  return {{"applicable", e.applicable}, {"det", to_string(e.det)}, {"unimodular", e.unimodular},
          {"plus_one", e.plus_one},     {"gldim", to_json(e.gldim)}};
}

Json to_json(const TwoPointReport& t) {
  return {{"applicable", t.applicable}, {"det", to_string(t.det)}, {"flagged", t.flagged}};
}

Json to_json(const StratVerdict& s) {
  Json j = {{"verdict", s.to_string()}, {"tensor_dim", s.tensor_dim}, {"ideal_dim", s.ideal_dim},
            {"tor", s.tor},             {"cutoff", s.cutoff}};
  if (s.kind == StratVerdict::Kind::No) j["witness_degree"] = s.witness_degree;
  if (!s.certified_by.empty()) j["certified_by"] = s.certified_by;
  return j;
}

Json to_json(const LadderReport& l) {
  return {{"down", to_json(l.down)},         {"up", to_json(l.up)},
          {"down_steps", l.down_steps},      {"up_steps", l.up_steps},
          {"down_blocked", l.down_blocked},  {"up_blocked", l.up_blocked},
          {"height", l.height},              {"text", l.text}};
}

Json to_json(const Theorem1Report& t) {
  Json j = {{"status", status_name(t.status)},
            {"stratifying", to_json(t.stratifying)},
            {"det_a", to_string(t.det_a)},
            {"det_quotient", to_string(t.det_quotient)},
            {"det_corner", to_string(t.det_corner)},
            {"r", t.r},
            {"r_quotient", t.r_quotient},
            {"r_corner", t.r_corner},
            {"identity_holds", t.identity_holds},
            {"diagnostic", t.diagnostic}};
  if (t.ladder) j["ladder"] = to_json(*t.ladder);
  if (!t.reason.empty()) j["reason"] = t.reason;
  return j;
}

Json to_json(const TransferReport& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"statement", r.statement}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"outcome", to_string(r.outcome)}});
  return {{"pd_b", to_json(t.pd_b)},
          {"pd_c_op", to_json(t.pd_c_op)},
          {"dim_a", t.dim_a},
          {"rows", std::move(rows)},
          {"certified_failure", t.certified_failure()}};
}

Json to_json(const GorensteinTransfer& g) {
  Json j = to_json(static_cast<const TransferReport&>(g));
  j["b"] = to_json(g.b);
  j["c"] = to_json(g.c);
  j["a"] = to_json(g.a);
  return j;
}

Json to_json(const SmoothnessTransfer& s) {
  Json j = to_json(static_cast<const TransferReport&>(s));
  j["b"] = to_string(s.b);
  j["c"] = to_string(s.c);
  j["a"] = to_string(s.a);
  return j;
}

Json to_json(const StratNode& n) {
  Json j = {{"name", n.name}, {"dim", n.dim}, {"r", n.r}, {"det", to_string(n.det)}, {"label", n.label()}};
  if (n.e) j["e"] = *n.e;
  if (n.theorem1) j["theorem1"] = to_json(*n.theorem1);
  if (n.undecided_subsets) j["undecided_subsets"] = n.undecided_subsets;
  Json children = Json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  if (!children.empty()) j["children"] = std::move(children);
  return j;
}

Json report_document(const std::string& kind, Json body) {
  Json j = {{"format", kReportFormat}, {"kind", kind}};
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j;
}

#define HOMKIT_INSTANTIATE_JSON(K)                                                                      \
  template Json matrix_to_json<K>(const Matrix<K>&);                                                    \
  template Matrix<K> matrix_from_json<K>(const Json&, std::size_t, std::size_t, const FieldSpec&);     \
  template Json algebra_to_json<K>(const Algebra<K>&);                                                  \
  template AlgebraPtr<K> algebra_from_json<K>(const Json&);                                             \
  template Json module_to_json<K>(const Module<K>&, Json);                                              \
  template Module<K> module_from_json<K>(const Json&, const AlgebraPtr<K>&);                            \
  template AlgebraPtr<K> load_algebra<K>(const std::filesystem::path&, std::optional<FieldSpec>);       \
  template Module<K> load_module<K>(const std::filesystem::path&, std::optional<FieldSpec>);

HOMKIT_INSTANTIATE_JSON(Rational)
HOMKIT_INSTANTIATE_JSON(Fp)

}  // namespace homkit
