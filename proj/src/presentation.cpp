#include "homkit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace homkit {

std::size_t Quiver::add_vertex(std::string label) {
  if (label.empty()) throw Error("empty vertex label");
  if (label_taken(label)) throw Error("duplicate label '" + label + "'");
  vertices_.push_back(std::move(label));
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string label, std::size_t source, std::size_t target) {
  if (label.empty()) throw Error("empty arrow label");
  if (label_taken(label)) throw Error("duplicate label '" + label + "'");
  if (source >= vertices_.size() || target >= vertices_.size()) throw Error("arrow '" + label + "': vertex out of range");
  arrows_.push_back({std::move(label), source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

bool Quiver::label_taken(std::string_view label) const {
  return find_vertex(label).has_value() || find_arrow(label).has_value();
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = length() <=> o.length(); c != 0) return c;
  if (arrows.empty()) return source <=> o.source;
  if (auto c = arrows <=> o.arrows; c != 0) return c;
  if (auto c = source <=> o.source; c != 0) return c;
  return target <=> o.target;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertex_label(p.source);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += '*';
    s += q.arrow(p.arrows[k]).label;
  }
  return s;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, std::size_t max_length) {
  std::vector<std::vector<Path>> out(1);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) out[0].push_back(Path::vertex(v));
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Path> next;
    if (len == 1) {
      for (std::size_t a = 0; a < q.num_arrows(); ++a) next.push_back(Path::arrow(q, a));
    } else {
      for (const Path& p : out.back())
        for (std::size_t a = 0; a < q.num_arrows(); ++a)
          if (q.arrow(a).source == p.target) next.push_back(*compose(p, Path::arrow(q, a)));
    }
    if (next.empty()) break;
    out.push_back(std::move(next));
  }
  return out;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

bool ident_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (s.substr(i, 2) == "->") {
      t.kind = Tok::Symbol;
      t.text = "->";
      advance(2);
    } else if (std::string_view("{}:,*+-()^/").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = Tok::Symbol;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else if (ident_byte(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_byte(static_cast<unsigned char>(s[j]))) ++j;
      t.text = std::string(s.substr(i, j - i));
      t.kind = std::all_of(t.text.begin(), t.text.end(), [](unsigned char d) { return std::isdigit(d); }) ? Tok::Number
                                                                                                         : Tok::Ident;
      advance(j - i);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::string name) : toks_(tokenize(text)) { spec_.name = std::move(name); }

  AlgebraSpec run() {
    parse_field();
    parse_quiver();
    if (is_word("relations")) parse_relations();
    if (peek().kind != Tok::End) fail(peek(), "expected end of input");
    return std::move(spec_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
  }
  bool is_word(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg + (t.kind == Tok::End ? " (at end of input)" : " (at '" + t.text + "')"));
  }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) fail(peek(), "expected '" + std::string(s) + "'");
    next();
  }
  void expect_word(std::string_view s) {
    if (!is_word(s)) fail(peek(), "expected '" + std::string(s) + "'");
    next();
  }
  std::string expect_id() {
    if (peek().kind != Tok::Ident && peek().kind != Tok::Number) fail(peek(), "expected identifier");
    return next().text;
  }
  std::uint64_t expect_count() {
    if (peek().kind != Tok::Number) fail(peek(), "expected integer");
    const Token& t = next();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) fail(t, "integer out of range");
    return v;
  }

  void parse_field() {
    expect_word("field");
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t, "expected field name");
    std::string name = next().text;
    if (name == "F" && peek().kind == Tok::Number) name += next().text;
    try {
      spec_.field = FieldSpec::parse(name);
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  void parse_quiver() {
    expect_word("quiver");
    expect_symbol("{");
    expect_word("vertices");
    expect_symbol(":");
    while (true) {
      const Token& t = peek();
      std::string v = expect_id();
      add_label(t, [&] { spec_.quiver.add_vertex(v); });
      if (!is_symbol(",")) break;
      next();
    }
    if (is_word("arrows")) {
      next();
      expect_symbol(":");
      while (!is_symbol("}")) {
        const Token& t = peek();
        std::string label = expect_id();
        expect_symbol(":");
        std::size_t s = resolve_vertex();
        expect_symbol("->");
        std::size_t d = resolve_vertex();
        add_label(t, [&] { spec_.quiver.add_arrow(label, s, d); });
        if (!is_symbol(",")) break;
        next();
      }
    }
    expect_symbol("}");
  }

  template <class F>
  void add_label(const Token& t, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  std::size_t resolve_vertex() {
    const Token& t = peek();
    std::string v = expect_id();
    auto idx = spec_.quiver.find_vertex(v);
    if (!idx) fail(t, "unknown vertex");
    return *idx;
  }

  void parse_relations() {
    expect_word("relations");
    expect_symbol("{");
    while (!is_symbol("}")) {
      const Token& start = peek();
      Relation r = parse_relation(start);
      if (!r.terms.empty()) spec_.relations.push_back(std::move(r));
      if (!is_symbol(",")) break;
      next();
    }
    expect_symbol("}");
  }

  Relation parse_relation(const Token& start) {
    std::vector<RelationTerm> raw;
    bool negate = false;
    if (is_symbol("-") || is_symbol("+")) negate = next().text == "-";
    while (true) {
      const Token& t = peek();
      RelationTerm term = parse_term();
      if (negate) term.coefficient = -term.coefficient;
      if (term.path.length() < 2)
        fail(t, "relation term '" + path_label(spec_.quiver, term.path) + "' has length < 2 (relations must lie in the square of the arrow ideal)");
      raw.push_back(std::move(term));
      if (is_symbol("+") || is_symbol("-")) {
        negate = next().text == "-";
        continue;
      }
      break;
    }
    for (const auto& term : raw)
      if (term.path.source != raw.front().path.source || term.path.target != raw.front().path.target)
        fail(start, "relation mixes non-parallel paths");
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
    Relation r;
    for (auto& term : raw) {
      if (!r.terms.empty() && r.terms.back().path == term.path)
        r.terms.back().coefficient += term.coefficient;
      else
        r.terms.push_back(std::move(term));
    }
    for (auto& term : r.terms) term.coefficient = normalise(start, term.coefficient);
    std::erase_if(r.terms, [](const RelationTerm& term) { return is_zero(term.coefficient); });
    return r;
  }

  // Coefficients over F_p are stored as representatives in [0, p).
  Rational normalise(const Token& t, const Rational& q) const {
    if (spec_.field.is_rationals()) return q;
    try {
      return Rational(static_cast<long>(from_rational<Fp>(spec_.field, q).value()));
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  RelationTerm parse_term() {
    RelationTerm term;
    term.coefficient = 1;
    if (peek().kind == Tok::Number && (is_symbol("/", 1) || is_symbol("*", 1))) {
      std::string lit = next().text;
      if (is_symbol("/")) {
        next();
        if (peek().kind != Tok::Number) fail(peek(), "expected denominator");
        lit += "/" + next().text;
      }
      try {
        term.coefficient = parse_rational(lit);
      } catch (const Error& e) {
        fail(peek(), e.what());
      }
      expect_symbol("*");
    }
    term.path = parse_path();
    return term;
  }

  Path parse_path() {
    Path p = parse_factor();
    while (is_symbol("*")) {
      const Token& t = next();
      Path q = parse_factor();
      auto c = compose(p, q);
      if (!c) fail(t, "paths do not compose");
      p = std::move(*c);
    }
    return p;
  }

  Path parse_factor() {
    Path base;
    if (is_symbol("(")) {
      next();
      base = parse_path();
      expect_symbol(")");
    } else {
      base = resolve_path_atom();
    }
    if (!is_symbol("^")) return base;
    const Token& t = next();
    const std::uint64_t n = expect_count();
    if (n == 0) fail(t, "zero exponent");
    Path p = base;
    for (std::uint64_t k = 1; k < n; ++k) {
      auto c = compose(p, base);
      if (!c) fail(t, "power of a non-cyclic path");
      p = std::move(*c);
    }
    return p;
  }

  Path resolve_path_atom() {
    const Token& t = peek();
    std::string id = expect_id();
    const Quiver& q = spec_.quiver;
    if (auto a = q.find_arrow(id)) return Path::arrow(q, *a);
    if (auto v = q.find_vertex(id)) return Path::vertex(*v);
    if (id.size() > 1 && id[0] == 'e')
      if (auto v = q.find_vertex(std::string_view(id).substr(1))) return Path::vertex(*v);
    fail(t, "unknown identifier");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  AlgebraSpec spec_;
};

}  // namespace

AlgebraSpec parse_spec(std::string_view text, std::string name) { return Parser(text, std::move(name)).run(); }

std::string print_spec(const AlgebraSpec& spec) {
  const Quiver& q = spec.quiver;
  std::ostringstream out;
  out << "field " << spec.field.name() << "\n";
  out << "quiver {\n  vertices: ";
  for (std::size_t v = 0; v < q.num_vertices(); ++v) out << (v ? ", " : "") << q.vertex_label(v);
  out << "\n";
  if (q.num_arrows() > 0) {
    out << "  arrows: ";
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      out << (a ? ", " : "") << ar.label << ": " << q.vertex_label(ar.source) << " -> " << q.vertex_label(ar.target);
    }
    out << "\n";
  }
  out << "}\n";
  if (!spec.relations.empty()) {
    out << "relations {\n";
    for (std::size_t r = 0; r < spec.relations.size(); ++r) {
      out << "  ";
      const auto& terms = spec.relations[r].terms;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        Rational c = terms[k].coefficient;
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (k == 0)
          out << (neg ? "-" : "");
        else
          out << (neg ? " - " : " + ");
        if (c != 1) out << c.get_str() << "*";
        out << path_label(q, terms[k].path);
      }
      out << (r + 1 < spec.relations.size() ? ",\n" : "\n");
    }
    out << "}\n";
  }
  return out.str();
}

namespace {

std::optional<std::size_t> tp1_exponent(std::string_view name) {
  std::string_view rest;
  if (name.starts_with("FIX-TP1(") && name.ends_with(")"))
    rest = name.substr(8, name.size() - 9);
  else if (name.starts_with("FIX-TP1-"))
    rest = name.substr(8);
  else
    return std::nullopt;
  std::size_t n = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || p != rest.data() + rest.size() || n == 0) return std::nullopt;
  return n;
}

std::string fixture_text(std::string_view name) {
  if (name == "FIX-A2") return "quiver { vertices: 1, 2  arrows: a: 1 -> 2 }";
  if (auto n = tp1_exponent(name)) {
    const std::string e = std::to_string(*n);
    return "quiver { vertices: 1, 2  arrows: alpha: 1 -> 2, beta: 2 -> 1 }\n"
           "relations { (alpha*beta)^" + e + ", (beta*alpha)^" + e + " }";
  }
  // Arrows are declared loops first so that the normal forms of the two
  // commutativity relations are gamma*alpha and delta*beta.
  if (name == "FIX-TP2")
    return "quiver { vertices: 1, 2\n"
           "  arrows: gamma: 1 -> 1, delta: 2 -> 2, alpha: 1 -> 2, beta: 2 -> 1 }\n"
           "relations { alpha*beta, beta*alpha, gamma*gamma, delta*delta,\n"
           "  gamma*alpha - alpha*delta, delta*beta - beta*gamma }";
  if (name == "FIX-LOC") return "quiver { vertices: 1  arrows: x: 1 -> 1 }\nrelations { x*x }";
  if (name == "FIX-TRI0") return "quiver { vertices: B, C  arrows: m: C -> B }";
  return {};
}

}  // namespace

bool is_fixture_name(std::string_view name) { return !fixture_text(name).empty(); }

AlgebraSpec spec_of_fixture(std::string_view name, FieldSpec field) {
  const std::string body = fixture_text(name);
  if (body.empty()) throw Error("unknown fixture '" + std::string(name) + "'");
  return parse_spec("field " + field.name() + "\n" + body, std::string(name));
}

}  // namespace homkit
