#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homkit/invariants.hpp"

namespace homkit {

/// Is AeA a stratifying ideal: Ae (x)_{eAe} eA -> AeA bijective and the
/// higher Tor vanishing?
struct StratVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  /// No: 0 for a dimension mismatch, otherwise the first nonzero Tor degree.
  std::size_t witness_degree = 0;
  std::size_t tensor_dim = 0;
  std::size_t ideal_dim = 0;
  /// Tor dimensions from the side whose resolution was used.
  std::vector<std::size_t> tor;
  /// Which corner module had a terminating resolution ("Ae" or "eA").
  std::string certified_by;
  std::size_t cutoff = 0;

  bool yes() const { return kind == Kind::Yes; }
  std::string to_string() const;
};

template <class K>
StratVerdict stratifying_check(const AlgebraPtr<K>& a, const VertexSet& e, std::size_t cutoff);

/// Ladder extension criteria. The downward step for idempotent g needs
/// pd_{gAg}(Ag) finite; the upward step needs pd_{(gAg)^op}(gA) finite. A
/// further step in the same direction is evaluated on the complementary
/// idempotent when the adjacent recollement is again idempotent-induced by
/// it (fAg = 0 going down, gAf = 0 going up).
struct LadderReport {
  PdResult down;  // first downward criterion, for e
  PdResult up;    // first upward criterion, for e
  std::size_t down_steps = 0;
  std::size_t up_steps = 0;
  bool down_blocked = false;  // a downward criterion is certified to fail
  bool up_blocked = false;
  std::size_t height = 1;     // capped at 4
  std::string text;
};

inline constexpr std::size_t kLadderCap = 4;

/// Throws unless the stratifying verdict is Yes.
template <class K>
LadderReport ladder_estimate(const AlgebraPtr<K>& a, const VertexSet& e, std::size_t cutoff);

/// Ladder without re-running the stratifying check.
template <class K>
LadderReport ladder_unchecked(const AlgebraPtr<K>& a, const VertexSet& e, std::size_t cutoff);

struct Theorem1Report {
  enum class Status { Pass, Fail, Inapplicable };
  Status status = Status::Inapplicable;
  StratVerdict stratifying;
  std::optional<LadderReport> ladder;
  Integer det_a, det_quotient, det_corner;
  std::size_t r = 0, r_quotient = 0, r_corner = 0;
  /// det C(A) = det C(A/AeA) det C(eAe), evaluated whenever computed.
  bool identity_holds = false;
  /// In diagnostic mode the identity is evaluated even without a
  /// certified downward extension; status stays Inapplicable then.
  bool diagnostic = false;
  std::string reason;
};

template <class K>
Theorem1Report theorem1_check(const AlgebraPtr<K>& a, const VertexSet& e, std::size_t cutoff,
                              bool diagnostic = false);

enum class Outcome { Pass, Fail, Undetermined, Inapplicable };
std::string to_string(Outcome o);

struct TransferRow {
  std::string statement;
  std::string lhs, rhs;
  Outcome outcome = Outcome::Undetermined;
};

struct TransferReport {
  PdResult pd_b;      // pd of M_B
  PdResult pd_c_op;   // pd of M as a left C-module
  std::vector<TransferRow> rows;
  std::size_t dim_a = 0;
  bool certified_failure() const;
};

struct GorensteinTransfer : TransferReport {
  GorensteinReport b, c, a;
};

struct SmoothnessTransfer : TransferReport {
  Verdict3 b = Verdict3::Unknown, c = Verdict3::Unknown, a = Verdict3::Unknown;
};

/// pd_B M and pd_{C^op} M for a C-B-bimodule over tensor(opposite(c), b).
template <class K>
std::pair<PdResult, PdResult> bimodule_side_pds(const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Module<K>& m,
                                                std::size_t cutoff);

template <class K>
GorensteinTransfer gorenstein_transfer_check(const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Module<K>& m,
                                             std::size_t cutoff);

template <class K>
SmoothnessTransfer smoothness_transfer_check(const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Module<K>& m,
                                             std::size_t cutoff);

struct StratNode {
  std::string name;
  std::size_t dim = 0;
  std::size_t r = 0;
  Integer det;
  /// The split used, if any (vertices of this node's algebra).
  std::optional<VertexSet> e;
  std::optional<Theorem1Report> theorem1;
  /// children[0] = A/AeA, children[1] = eAe.
  std::vector<StratNode> children;
  /// Subsets that could not be decided at the cutoff.
  std::size_t undecided_subsets = 0;

  bool leaf() const { return children.empty(); }
  /// "derived-simple candidate (idempotent search only)" at leaves.
  std::string label() const;
};

/// Depth-first: the first subset (by size, then lexicographically) with a
/// Yes verdict splits the algebra.
template <class K>
StratNode stratify_search(const AlgebraPtr<K>& a, std::size_t cutoff);

/// Every split in the tree has a certified downward extension.
bool fully_extended(const StratNode& node);
/// Product of the leaf determinants.
Integer leaf_det_product(const StratNode& node);
std::size_t leaf_rank_sum(const StratNode& node);

}  // namespace homkit
