#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homkit/homological.hpp"

namespace homkit {

/// c_ij = dim e_j A e_i, the multiplicity of S_i in P_j.
struct CartanReport {
  std::size_t r = 0;
  IntMatrix matrix;
  /// 1 for the zero algebra.
  Integer det = 1;
};

template <class K>
CartanReport cartan(const Algebra<K>& a);

/// Same matrix from Hom dimensions: c_ij = dim Hom(P_i, P_j).
template <class K>
IntMatrix cartan_by_hom(const AlgebraPtr<K>& a);

template <class K>
std::size_t k0_rank(const Algebra<K>& a) {
  return a.num_vertices();
}

/// Finite(max) if all parts are finite; InfiniteCertified if any part is;
/// Unknown otherwise.
PdResult max_of(const std::vector<PdResult>& parts, std::size_t cutoff);

struct GldimReport {
  std::vector<PdResult> simples;
  PdResult gldim;
};

template <class K>
GldimReport gldim(const AlgebraPtr<K>& a, std::size_t cutoff);

enum class Verdict3 { Yes, No, Unknown };
std::string to_string(Verdict3 v);

struct GorensteinReport {
  /// id A_A.
  PdResult right_id;
  /// id of A as a left module.
  PdResult left_id;
  /// Yes: both finite. No: one is certified infinite.
  Verdict3 verdict = Verdict3::Unknown;
};

/// id A_A is the maximum of id P_i = pd_{A^op} D(P_i); the left side is
/// the maximum of pd_A I_i.
template <class K>
GorensteinReport gorenstein(const AlgebraPtr<K>& a, std::size_t cutoff);

struct SmoothReport {
  GldimReport gldim;
  Verdict3 verdict = Verdict3::Unknown;
  /// With the cross-check: pd of A over its enveloping algebra.
  std::optional<PdResult> bimodule_pd;
  /// The two finiteness verdicts agree (or one of them is unknown).
  bool cross_check_agrees = true;
};

/// Largest algebra dimension for which the enveloping cross-check runs.
inline constexpr std::size_t kSmoothCrossCheckMaxDim = 8;

template <class K>
SmoothReport smooth(const AlgebraPtr<K>& a, std::size_t cutoff, bool cross_check = false);

/// A as a right module over enveloping(a): m * (c (x) b) = c m b.
template <class K>
Module<K> regular_bimodule(const AlgebraPtr<K>& a, const AlgebraPtr<K>& a_op, const AlgebraPtr<K>& env);

/// E_ij = sum_l (-1)^l dim Ext^l(S_i, S_j); nullopt unless gldim is finite.
template <class K>
std::optional<IntMatrix> euler_matrix(const AlgebraPtr<K>& a, std::size_t cutoff);

struct EilenbergReport {
  bool applicable = false;  // gldim certified finite
  Integer det;
  /// |det| = 1 (always expected when applicable).
  bool unimodular = false;
  /// det = +1.
  bool plus_one = false;
  PdResult gldim;
};

template <class K>
EilenbergReport eilenberg_check(const AlgebraPtr<K>& a, std::size_t cutoff);

struct TwoPointReport {
  bool applicable = false;  // exactly two vertices
  Integer det;
  /// det C(A) <= 0: the algebra is 2-derived-simple.
  bool flagged = false;
};

template <class K>
TwoPointReport two_point_criterion(const Algebra<K>& a);

}  // namespace homkit
