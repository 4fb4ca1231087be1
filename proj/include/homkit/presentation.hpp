#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homkit/scalar.hpp"

namespace homkit {

struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const Arrow&) const = default;
};

/// Finite directed graph with labelled vertices and arrows. Labels are unique
/// across both kinds.
class Quiver {
 public:
  std::size_t add_vertex(std::string label);
  std::size_t add_arrow(std::string label, std::size_t source, std::size_t target);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_label(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_vertex(std::string_view label) const;
  std::optional<std::size_t> find_arrow(std::string_view label) const;

  bool operator==(const Quiver&) const = default;

 private:
  bool label_taken(std::string_view label) const;

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path composed left to right: arrows[0] is traversed first. Length-0
/// paths are the vertex idempotents.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  static Path vertex(std::size_t v) { return {v, v, {}}; }
  static Path arrow(const Quiver& q, std::size_t a) { return {q.arrow(a).source, q.arrow(a).target, {a}}; }

  std::size_t length() const { return arrows.size(); }

  bool operator==(const Path&) const = default;
  /// Length first, then lexicographic in arrow indices (vertex index for
  /// length 0).
  std::strong_ordering operator<=>(const Path& other) const;
};

std::string path_label(const Quiver& q, const Path& p);

/// Concatenation p then q; nullopt when target(p) != source(q).
std::optional<Path> compose(const Path& p, const Path& q);

/// All paths of length <= max_length grouped by length, in the deterministic
/// order used for bases.
std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, std::size_t max_length);

struct RelationTerm {
  Rational coefficient;
  Path path;

  bool operator==(const RelationTerm&) const = default;
};

/// Linear combination of parallel paths of length >= 2, terms sorted by path.
struct Relation {
  std::vector<RelationTerm> terms;

  bool operator==(const Relation&) const = default;
};

struct AlgebraSpec {
  std::string name;
  FieldSpec field;
  Quiver quiver;
  std::vector<Relation> relations;
  std::size_t degree_cutoff = 30;

  bool operator==(const AlgebraSpec& o) const {
    return field == o.field && quiver == o.quiver && relations == o.relations;
  }
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the `.qa` text format:
///
///     field Q
///     quiver { vertices: 1, 2  arrows: alpha: 1 -> 2, beta: 2 -> 1 }
///     relations { alpha*beta, beta*alpha }
///
/// `#` starts a comment. Relation terms are `[coefficient *] path` where a
/// path is `x*y*...` with `(p)^n` and `x^n` as power sugar.
AlgebraSpec parse_spec(std::string_view text, std::string name = {});

std::string print_spec(const AlgebraSpec& spec);

/// FIX-A2, FIX-TP1(n) (also spelled FIX-TP1-n), FIX-TP2, FIX-LOC, FIX-TRI0.
AlgebraSpec spec_of_fixture(std::string_view name, FieldSpec field = FieldSpec::rationals());

bool is_fixture_name(std::string_view name);

}  // namespace homkit
