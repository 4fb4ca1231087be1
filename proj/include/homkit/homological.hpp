#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homkit/module.hpp"

namespace homkit {

/// Resolutions stop growing once a projective term would exceed this total
/// dimension; the result is then reported as unknown rather than guessed.
inline constexpr std::size_t kDefaultDimensionBudget = 1024;

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0.
template <class K>
struct Resolution {
  /// P_n = (+)_g P_{generator_vertices[n][g]} in free_module layout.
  std::vector<std::vector<std::size_t>> generator_vertices;
  std::vector<std::vector<std::size_t>> multiplicities;
  std::vector<Module<K>> terms;
  /// differentials[n - 1] = d_n : P_n -> P_{n-1}, a dim P_n x dim P_{n-1} matrix.
  std::vector<Matrix<K>> differentials;
  /// P_0 -> M.
  Matrix<K> augmentation;
  /// syzygies[n] = Omega^n M (Omega^0 = M), as submodules of P_{n-1}.
  std::vector<Module<K>> syzygies;
  /// Some syzygy became zero.
  bool terminated = false;
  /// Growth stopped by the dimension budget before the cutoff was reached.
  bool budget_exceeded = false;

  /// Index of the last projective term.
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

/// Terms P_0 .. P_cutoff (fewer when a syzygy vanishes) and the syzygies up
/// to Omega^{cutoff+1}.
template <class K>
Resolution<K> min_resolution(const Module<K>& m, std::size_t cutoff,
                             std::size_t budget = kDefaultDimensionBudget);

struct PdResult {
  enum class Kind { Finite, InfiniteCertified, Unknown };
  Kind kind = Kind::Unknown;
  /// Finite: the projective dimension.
  std::size_t degree = 0;
  /// InfiniteCertified: Omega^first_repeat is isomorphic to
  /// Omega^(first_repeat - period).
  std::size_t first_repeat = 0;
  std::size_t period = 0;
  /// Unknown: the cutoff that was used.
  std::size_t cutoff = 0;
  /// Unknown because the dimension budget ran out.
  bool budget_exceeded = false;
  /// Human readable justification.
  std::string certificate;

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::InfiniteCertified; }
  bool is_unknown() const { return kind == Kind::Unknown; }
  /// "3", "inf", "unknown(>12)".
  std::string to_string() const;

  static PdResult finite(std::size_t d, std::string certificate = {});
  static PdResult infinite(std::size_t first_repeat, std::size_t period, std::string certificate = {});
  static PdResult unknown(std::size_t cutoff, bool budget_exceeded = false);
};

/// Finite(d) when Omega^{d+1} = 0 with d <= cutoff; InfiniteCertified when a
/// nonzero syzygy is isomorphic (with a verified witness) to an earlier one;
/// Unknown otherwise. The zero module gets Finite(0).
template <class K>
PdResult pd(const Module<K>& m, std::size_t cutoff, std::size_t budget = kDefaultDimensionBudget);

/// Injective dimension: pd over the opposite algebra of D(m).
template <class K>
PdResult id(const Module<K>& m, std::size_t cutoff, std::size_t budget = kDefaultDimensionBudget);

template <class K>
struct IsoVerdict {
  enum class Kind { Iso, NotIso, Undetermined };
  Kind kind = Kind::Undetermined;
  /// Iso: invertible intertwiner dim m x dim n.
  Matrix<K> witness;
  /// NotIso: why.
  std::string reason;
};

/// One-sided search: NotIso only when it is proven (different vertex
/// dimensions or tops, Hom = 0, or an exhaustive search over a small F_p
/// Hom space); Undetermined when random trials find nothing.
template <class K>
IsoVerdict<K> is_iso(const Module<K>& m, const Module<K>& n, std::uint64_t seed = 0x5eed);

/// Hom_A(m, n) computed from a presentation of m: unknowns are the images of
/// the generators of m, equations the relations. Same space as hom_space.
template <class K>
HomSpace<K> hom_by_presentation(const Module<K>& m, const Module<K>& n);

/// dim Ext^l(m, n) for l = 0 .. cutoff. Throws BudgetExceeded when the
/// resolution of m is cut short by the dimension budget.
template <class K>
std::vector<std::size_t> ext_dims(const Module<K>& m, const Module<K>& n, std::size_t cutoff,
                                  std::size_t budget = kDefaultDimensionBudget);

/// Same from a precomputed resolution, which must reach degree cutoff + 1 or
/// terminate earlier.
template <class K>
std::vector<std::size_t> ext_dims(const Resolution<K>& res, const Module<K>& n, std::size_t cutoff);

/// dim (m (x)_R n) for a right R-module m and a left R-module n, the latter
/// given as a right module over opposite(R). Direct quotient of m (x)_k n.
template <class K>
std::size_t tensor_over(const Module<K>& m, const Module<K>& n_op);

/// dim Tor_l^R(m, n) for l = 0 .. cutoff (n as for tensor_over).
template <class K>
std::vector<std::size_t> tor_dims(const Module<K>& m, const Module<K>& n_op, std::size_t cutoff,
                                  std::size_t budget = kDefaultDimensionBudget);

template <class K>
std::vector<std::size_t> tor_dims(const Resolution<K>& res, const Module<K>& n_op, std::size_t cutoff);

}  // namespace homkit
