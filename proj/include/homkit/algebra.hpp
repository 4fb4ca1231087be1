#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homkit/matrix.hpp"
#include "homkit/presentation.hpp"

namespace homkit {

template <class K>
using SparseVector = std::vector<std::pair<std::size_t, K>>;

/// A basis element b with e_left * b * e_right = b.
struct BasisElement {
  std::string label;
  std::size_t left = 0;
  std::size_t right = 0;

  bool operator==(const BasisElement&) const = default;
};

/// Sorted set of vertex indices; e = sum of the corresponding e_i.
using VertexSet = std::vector<std::size_t>;

/// Finite-dimensional split basic algebra as a structure-constant table.
/// Vertex v corresponds to the basis element idempotents()[v].
template <class K>
class Algebra {
 public:
  Algebra(FieldSpec field, std::string name, std::vector<BasisElement> basis, std::vector<std::size_t> idempotents,
          std::vector<std::size_t> radical, std::vector<SparseVector<K>> table);

  const FieldSpec& field() const { return field_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t num_vertices() const { return idempotents_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& basis(std::size_t x) const { return basis_.at(x); }
  const std::vector<std::size_t>& idempotents() const { return idempotents_; }
  const std::vector<std::size_t>& radical() const { return radical_; }
  bool is_idempotent_index(std::size_t x) const { return vertex_of_[x] != kNoVertex; }
  std::optional<std::size_t> vertex_of(std::size_t x) const {
    return vertex_of_[x] == kNoVertex ? std::nullopt : std::optional<std::size_t>(vertex_of_[x]);
  }

  /// Structure constants of basis(x) * basis(y).
  const SparseVector<K>& product(std::size_t x, std::size_t y) const { return table_[x * dim() + y]; }
  const std::vector<SparseVector<K>>& table() const { return table_; }

  /// Basis elements lying in e_i A e_j, in basis order.
  const std::vector<std::size_t>& block(std::size_t i, std::size_t j) const { return blocks_[i * num_vertices() + j]; }
  /// Basis of e_i A (left tag i), in basis order.
  std::vector<std::size_t> with_left(std::size_t i) const;
  /// Basis of A e_j (right tag j), in basis order.
  std::vector<std::size_t> with_right(std::size_t j) const;

  /// Radical basis elements that are linearly independent modulo rad^2; with
  /// the idempotents they generate the algebra.
  const std::vector<std::size_t>& radical_generators() const { return radical_generators_; }

  std::vector<K> unit_vector(std::size_t x) const;
  std::vector<K> multiply(std::span<const K> a, std::span<const K> b) const;
  K one() const { return from_int<K>(field_, 1); }

  std::shared_ptr<const Algebra> renamed(std::string name) const;

  bool operator==(const Algebra& o) const {
    return field_ == o.field_ && basis_ == o.basis_ && idempotents_ == o.idempotents_ && radical_ == o.radical_ &&
           table_ == o.table_;
  }

 private:
  static constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);

  FieldSpec field_;
  std::string name_;
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::size_t> radical_;
  std::vector<SparseVector<K>> table_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> radical_generators_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

/// Pointer identity or structural equality.
template <class K>
bool same_algebra(const Algebra<K>& a, const Algebra<K>& b) {
  return &a == &b || a == b;
}

struct ValidationReport {
  bool ok = true;
  std::string failure;
  /// Smallest n with rad^n = 0.
  std::size_t nilpotency_index = 0;
};

template <class K>
ValidationReport validate(const Algebra<K>& a);

/// Realises kQ/I by closing the relations under multiplication by arrows in
/// kQ/J^N for growing N, stopping once every path of length N-1 is in the
/// ideal. Basis elements are the paths not used as pivots (the smallest
/// paths in path order).
template <class K>
AlgebraPtr<K> from_quiver(const AlgebraSpec& spec);

/// One vertex, no arrows.
template <class K>
AlgebraPtr<K> ground_field(const FieldSpec& field);

template <class K>
AlgebraPtr<K> opposite(const Algebra<K>& a);

/// Basis: pairs of idempotents first (vertex (i, j) has index i * r_b + j),
/// then the remaining pairs in lexicographic order. Labels are "x|y".
template <class K>
AlgebraPtr<K> tensor(const Algebra<K>& a, const Algebra<K>& b);

/// Index in tensor(a, b) of the basis element x (x) y.
std::size_t tensor_pair_index(std::size_t dim_a, std::size_t dim_b, std::span<const std::size_t> idempotents_a,
                              std::span<const std::size_t> idempotents_b, std::size_t x, std::size_t y);

template <class K>
std::size_t tensor_pair_index(const Algebra<K>& a, const Algebra<K>& b, std::size_t x, std::size_t y) {
  return tensor_pair_index(a.dim(), b.dim(), a.idempotents(), b.idempotents(), x, y);
}

/// tensor(opposite(a), a).
template <class K>
AlgebraPtr<K> enveloping(const Algebra<K>& a);

/// eAe; vertices are renumbered in the order of e.
template <class K>
AlgebraPtr<K> corner(const Algebra<K>& a, const VertexSet& e);

/// Dimension of AeA.
template <class K>
std::size_t idempotent_ideal_dim(const Algebra<K>& a, const VertexSet& e);

/// A/AeA on the basis elements that are not pivots of AeA (pivoting on the
/// largest coordinate); surviving vertices keep their relative order.
template <class K>
AlgebraPtr<K> quotient_by_idempotent_ideal(const Algebra<K>& a, const VertexSet& e);

/// Complement of e in the vertex set of a.
VertexSet complement(std::size_t num_vertices, const VertexSet& e);

/// Checks that e is a sorted, duplicate-free subset of the vertices; with
/// `proper` it must also be nonempty and not everything.
void check_vertex_set(std::size_t num_vertices, const VertexSet& e, bool proper);

template <class K>
class Module;

/// The algebra [[B, 0], [M, C]] for a C-B-bimodule M given as a module over
/// tensor(opposite(c), b). Basis: idempotents of b, idempotents of c, rad b,
/// M, rad c. Vertices of b come first.
template <class K>
AlgebraPtr<K> triangular(const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Module<K>& m);

}  // namespace homkit
