#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homkit/algebra.hpp"
#include "homkit/linalg.hpp"

namespace homkit {

/// Right module over an algebra in a basis adapted to the vertex
/// idempotents: M = (+)_i M e_i with the M e_i blocks contiguous in vertex
/// order. Row-vector convention, m * x = m X. For a basis element x in
/// e_i A e_j only the block M e_i -> M e_j of X can be nonzero and that
/// d_i x d_j block is all that is stored.
template <class K>
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr<K> algebra, std::vector<std::size_t> vertex_dims, std::vector<Matrix<K>> blocks);

  /// Adapts arbitrary dim x dim action matrices (one per algebra basis
  /// element) to the vertex decomposition. Throws when the idempotents do
  /// not act as a complete family of orthogonal projections compatible with
  /// the basis tags; associativity is left to validate_module.
  static Module from_full_actions(AlgebraPtr<K> algebra, const std::vector<Matrix<K>>& actions);

  static Module zero(AlgebraPtr<K> algebra);

  const Algebra<K>& algebra() const { return *algebra_; }
  const AlgebraPtr<K>& algebra_ptr() const { return algebra_; }
  const FieldSpec& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const std::vector<std::size_t>& vertex_dims() const { return vertex_dims_; }
  std::size_t vertex_dim(std::size_t i) const { return vertex_dims_[i]; }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  const Matrix<K>& block(std::size_t x) const { return blocks_[x]; }
  const std::vector<Matrix<K>>& blocks() const { return blocks_; }

  /// Full dim x dim matrix of the action of basis element x.
  Matrix<K> action(std::size_t x) const;

  /// Structural equality (same algebra, same blocks).
  bool operator==(const Module& o) const {
    return same_algebra(*algebra_, *o.algebra_) && vertex_dims_ == o.vertex_dims_ && blocks_ == o.blocks_;
  }

 private:
  AlgebraPtr<K> algebra_;
  std::vector<std::size_t> vertex_dims_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
  std::vector<Matrix<K>> blocks_;
};

/// action(1) = identity and action(x) action(y) = action(xy) for all pairs.
template <class K>
std::optional<std::string> validate_module(const Module<K>& m);

template <class K>
Module<K> projective(const AlgebraPtr<K>& a, std::size_t i);

template <class K>
Module<K> simple(const AlgebraPtr<K>& a, std::size_t i);

template <class K>
Module<K> regular(const AlgebraPtr<K>& a);

/// D(M) = Hom_k(M, k) as a right module over the opposite algebra; the
/// action of x is the transpose of its action on M. `target` (which must
/// equal opposite(algebra of m)) is attached when given.
template <class K>
Module<K> dual(const Module<K>& m, AlgebraPtr<K> target = nullptr);

/// I_i = D(e_i A^op), attached to a.
template <class K>
Module<K> injective(const AlgebraPtr<K>& a, std::size_t i);

/// Direct sum, vertex blocks interleaved.
template <class K>
Module<K> direct_sum(const Module<K>& m, const Module<K>& n);

/// Submodule spanned per vertex by the rows of `subspaces[i]` (given in the
/// local coordinates of M e_i). The rows must span a submodule.
template <class K>
Module<K> submodule(const Module<K>& m, const std::vector<Subspace<K>>& subspaces);

template <class K>
struct HomSpace {
  std::size_t dim = 0;
  /// dim(m) x dim(n) matrices f with (x * v) f = (v f) * x.
  std::vector<Matrix<K>> basis;
};

/// Solves the intertwining equations for the generators of the algebra
/// (idempotents through the block structure, plus the radical generators).
template <class K>
HomSpace<K> hom_space(const Module<K>& m, const Module<K>& n);

/// rad M = M rad A, per vertex, in local coordinates of M e_i.
template <class K>
std::vector<Subspace<K>> radical_subspaces(const Module<K>& m);

template <class K>
Module<K> radical_submodule(const Module<K>& m);

/// Multiplicity of each simple in top(M) = M / rad M.
template <class K>
std::vector<std::size_t> top(const Module<K>& m);

/// Minimal projective cover F = (+)_g P_{vertex(g)} -> M.
template <class K>
struct ProjectiveCover {
  std::vector<std::size_t> multiplicities;
  /// Vertex of each generator, grouped by vertex in ascending order.
  std::vector<std::size_t> generator_vertices;
  /// Image of each generator in M (full coordinates).
  Matrix<K> generator_images;
  /// F in the layout of free_module(a, generator_vertices).
  Module<K> cover;
  /// dim F x dim M matrix of the cover map.
  Matrix<K> map;
  /// Kernel of the map per vertex, rows in local coordinates of F e_j.
  std::vector<Subspace<K>> kernel;
};

/// (+)_g P_{vertices[g]}; F e_j lists, for each generator g in order, the
/// basis of e_{vertices[g]} A e_j.
template <class K>
Module<K> free_module(const AlgebraPtr<K>& a, const std::vector<std::size_t>& vertices);

template <class K>
ProjectiveCover<K> projective_cover(const Module<K>& m);

template <class K>
Module<K> syzygy(const Module<K>& m);

/// Algebra homomorphism B -> A given by the images of the basis of B.
template <class K>
struct AlgebraMap {
  AlgebraPtr<K> source;
  AlgebraPtr<K> target;
  std::vector<std::vector<K>> images;
};

/// Throws when f is not multiplicative and unital.
template <class K>
void check_algebra_map(const AlgebraMap<K>& f);

/// b -> sum_s e_s (x) b, from b into tensor(opposite(c), b) = ce.
template <class K>
AlgebraMap<K> right_factor_map(const AlgebraPtr<K>& c_op, const AlgebraPtr<K>& b, const AlgebraPtr<K>& ce);

/// c -> c (x) sum_t e_t, from opposite(c) into tensor(opposite(c), b) = ce.
template <class K>
AlgebraMap<K> left_factor_map(const AlgebraPtr<K>& c_op, const AlgebraPtr<K>& b, const AlgebraPtr<K>& ce);

template <class K>
Module<K> restrict_along(const AlgebraMap<K>& f, const Module<K>& m);

/// A C-B-bimodule M as a right module over tensor(opposite(c), b), from
/// right actions R_b (m * b = m R_b) and left actions L_c (c * m = m L_c).
template <class K>
Module<K> bimodule_from_actions(const AlgebraPtr<K>& c, const AlgebraPtr<K>& b, const AlgebraPtr<K>& ce,
                                const std::vector<Matrix<K>>& left, const std::vector<Matrix<K>>& right);

/// Right action matrices of b on a bimodule over ce = tensor(opposite(c), b).
template <class K>
std::vector<Matrix<K>> bimodule_right_actions(const Module<K>& m, const Algebra<K>& c_op, const Algebra<K>& b);
template <class K>
std::vector<Matrix<K>> bimodule_left_actions(const Module<K>& m, const Algebra<K>& c_op, const Algebra<K>& b);

/// A e as a right module over eAe (= corner(a, e), passed in).
template <class K>
Module<K> corner_right_module(const Algebra<K>& a, const VertexSet& e, const AlgebraPtr<K>& corner_algebra);

/// e A as a right module over opposite(eAe) (passed in), i.e. the left
/// eAe-module eA.
template <class K>
Module<K> corner_left_module(const Algebra<K>& a, const VertexSet& e, const AlgebraPtr<K>& corner_op);

}  // namespace homkit
