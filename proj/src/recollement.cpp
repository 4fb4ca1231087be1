#include "homkit/recollement.hpp"

#include <algorithm>

namespace homkit {

namespace {

std::string set_text(const VertexSet& e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k] + 1);
  return s + "}";
}

// x A y = 0 for vertex sets x, y.
template <class K>
bool vanishes_between(const Algebra<K>& a, const VertexSet& x, const VertexSet& y) {
  for (std::size_t i : x)
    for (std::size_t j : y)
      if (!a.block(i, j).empty()) return false;
  return true;
}

Verdict3 from_pd(const PdResult& p) {
  return p.is_finite() ? Verdict3::Yes : p.is_infinite() ? Verdict3::No : Verdict3::Unknown;
}

Verdict3 both(Verdict3 x, Verdict3 y) {
  if (x == Verdict3::No || y == Verdict3::No) return Verdict3::No;
  if (x == Verdict3::Yes && y == Verdict3::Yes) return Verdict3::Yes;
  return Verdict3::Unknown;
}

Verdict3 either(Verdict3 x, Verdict3 y) {
  if (x == Verdict3::Yes || y == Verdict3::Yes) return Verdict3::Yes;
  if (x == Verdict3::No && y == Verdict3::No) return Verdict3::No;
  return Verdict3::Unknown;
}

// A biconditional that is only asserted when its precondition holds.
Outcome biconditional(Verdict3 pre, Verdict3 lhs, Verdict3 rhs) {
  if (pre == Verdict3::No) return Outcome::Inapplicable;
  if (pre == Verdict3::Unknown || lhs == Verdict3::Unknown || rhs == Verdict3::Unknown) return Outcome::Undetermined;
  return lhs == rhs ? Outcome::Pass : Outcome::Fail;
}

Outcome implication(Verdict3 hyp, Verdict3 concl) {
  if (hyp == Verdict3::No) return Outcome::Inapplicable;
  if (hyp == Verdict3::Unknown || concl == Verdict3::Unknown) return Outcome::Undetermined;
  return concl == Verdict3::Yes ? Outcome::Pass : Outcome::Fail;
}

// One side of the Tor computation; nullopt when it cannot decide.
template <class K>
std::optional<StratVerdict> tor_side(StratVerdict v, const Module<K>& m, const Module<K>& n, std::size_t cutoff,
                                     const char* name) {
  const auto res = min_resolution(m, cutoff + 1);
  if (res.budget_exceeded) return std::nullopt;
  const std::size_t top_degree = res.terminated ? std::max(cutoff, res.length()) : cutoff;
  v.tor = tor_dims(res, n, top_degree);
  for (std::size_t l = 1; l < v.tor.size(); ++l)
    if (v.tor[l] != 0) {
      v.kind = StratVerdict::Kind::No;
      v.witness_degree = l;
      return v;
    }
  if (!res.terminated) return std::nullopt;
  v.kind = StratVerdict::Kind::Yes;
  v.certified_by = name;
  return v;
}

template <class K>
Theorem1Report theorem1_with(const AlgebraPtr<K>& a, const VertexSet& e, const StratVerdict& strat,
                             std::size_t cutoff, bool diagnostic) {
  Theorem1Report rep;
  rep.stratifying = strat;
  rep.diagnostic = diagnostic;
  const auto q = quotient_by_idempotent_ideal(*a, e);
  const auto c = corner(*a, e);
  rep.det_a = cartan(*a).det;
  rep.det_quotient = cartan(*q).det;
  rep.det_corner = cartan(*c).det;
  rep.r = a->num_vertices();
  rep.r_quotient = q->num_vertices();
  rep.r_corner = c->num_vertices();
  rep.identity_holds = rep.det_a == rep.det_quotient * rep.det_corner;
  if (!strat.yes()) {
    rep.reason = "inapplicable (not stratifying: " + strat.to_string() + ")";
    return rep;
  }
  rep.ladder = ladder_unchecked(a, e, cutoff);
  if (!rep.ladder->down.is_finite()) {
    rep.reason = "inapplicable (n >= 2 not established: downward criterion " + rep.ladder->down.to_string() + ")";
    return rep;
  }
  rep.status = rep.identity_holds ? Theorem1Report::Status::Pass : Theorem1Report::Status::Fail;
  return rep;
}

template <class K>
StratNode search(const AlgebraPtr<K>& a, std::size_t cutoff) {
  StratNode node;
  node.name = a->name();
  node.dim = a->dim();
  node.r = a->num_vertices();
  node.det = cartan(*a).det;
  const std::size_t r = node.r;
  for (std::size_t size = 1; size < r; ++size) {
    // Lexicographic combinations of the given size.
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      VertexSet e;
      for (std::size_t v = 0; v < r; ++v)
        if (pick[v]) e.push_back(v);
      const auto verdict = stratifying_check(a, e, cutoff);
      if (verdict.kind == StratVerdict::Kind::Unknown) ++node.undecided_subsets;
      if (!verdict.yes()) continue;
      node.e = e;
      node.theorem1 = theorem1_with(a, e, verdict, cutoff, false);
      node.children.push_back(search(quotient_by_idempotent_ideal(*a, e), cutoff));
      node.children.push_back(search(corner(*a, e), cutoff));
      return node;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return node;
}

}  // namespace

std::string StratVerdict::to_string() const {
  switch (kind) {
    case Kind::Yes:
      return "yes";
    case Kind::No:
      return witness_degree == 0 ? "no (dimension mismatch " + std::to_string(tensor_dim) + " vs " +
                                       std::to_string(ideal_dim) + ")"
                                 : "no (Tor_" + std::to_string(witness_degree) + " != 0)";
    case Kind::Unknown:
      break;
  }
  return "unknown(>" + std::to_string(cutoff) + ")";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "FAIL";
    case Outcome::Undetermined:
      return "undetermined";
    case Outcome::Inapplicable:
      break;
  }
  return "inapplicable";
}

bool TransferReport::certified_failure() const {
  return std::any_of(rows.begin(), rows.end(), [](const TransferRow& r) { return r.outcome == Outcome::Fail; });
}

std::string StratNode::label() const {
  if (leaf()) return "derived-simple candidate (idempotent search only)";
  return "split at e = " + set_text(*e);
}

template <class K>
StratVerdict stratifying_check(const AlgebraPtr<K>& a, const VertexSet& e, std::size_t cutoff) {
  check_vertex_set(a->num_vertices(), e, true);
  StratVerdict v;
  v.cutoff = cutoff;
  const auto cor = corner(*a, e);
  const auto cor_op = opposite(*cor);
  const auto ae = corner_right_module(*a, e, cor);
  const auto ea = corner_left_module(*a, e, cor_op);
  v.tensor_dim = tensor_over(ae, ea);
  v.ideal_dim = idempotent_ideal_dim(*a, e);
  if (v.tensor_dim != v.ideal_dim) {
    v.kind = StratVerdict::Kind::No;
    v.witness_degree = 0;
    v.tor = {v.tensor_dim};
    return v;
  }
  // Tor^{eAe}(Ae, eA) = Tor^{(eAe)^op}(eA, Ae): either resolution certifies.
  if (auto d = tor_side(v, ae, ea, cutoff, "Ae")) return *d;
  if (auto d = tor_side(v, ea, ae, cutoff, "eA")) return *d;
  v.tor.clear();
  return v;
}

template <class K>
LadderReport ladder_unchecked(const AlgebraPtr<K>& a, const VertexSet& e, std::size_t cutoff) {
  const VertexSet f = complement(a->num_vertices(), e);
  auto down_criterion = [&](const VertexSet& g) {
    const auto cor = corner(*a, g);
    return pd(corner_right_module(*a, g, cor), cutoff);
  };
  auto up_criterion = [&](const VertexSet& g) {
    const auto cor_op = opposite(*corner(*a, g));
    return pd(corner_left_module(*a, g, cor_op), cutoff);
  };
  LadderReport rep;
  rep.down = down_criterion(e);
  rep.up = up_criterion(e);

  auto climb = [&](PdResult first, bool downward, std::size_t& steps, bool& blocked) {
    VertexSet g = e, h = f;
    PdResult cur = std::move(first);
    while (1 + rep.down_steps + rep.up_steps < kLadderCap) {
      if (cur.is_infinite()) blocked = true;
      if (!cur.is_finite()) return;
      ++steps;
      // The next recollement in this direction is induced by h when the
      // off-diagonal corner vanishes.
      const bool next_idempotent = downward ? vanishes_between(*a, h, g) : vanishes_between(*a, g, h);
      if (!next_idempotent) return;
      std::swap(g, h);
      cur = downward ? down_criterion(g) : up_criterion(g);
    }
  };
  climb(rep.down, true, rep.down_steps, rep.down_blocked);
  climb(rep.up, false, rep.up_steps, rep.up_blocked);

  rep.height = std::min(kLadderCap, 1 + rep.down_steps + rep.up_steps);
  const bool exact = rep.down_blocked && rep.up_blocked && rep.height < kLadderCap;
  rep.text = (exact ? "" : "≥") + std::to_string(rep.height);
  std::vector<std::string> notes;
  if (rep.up_steps > 0 && rep.down_steps == 0) notes.push_back("up");
  if (rep.down_blocked) notes.push_back("down-blocked");
  if (rep.up_blocked) notes.push_back("up-blocked");
  if (!notes.empty()) {
    rep.text += " (";
    for (std::size_t k = 0; k < notes.size(); ++k) rep.text += (k ? ", " : "") + notes[k];
    rep.text += ")";
  }
  return rep;
}

template <class K>
LadderReport ladder_estimate(const AlgebraPtr<K>& a, const VertexSet& e, std::size_t cutoff) {
  const auto v = stratifying_check(a, e, cutoff);
  if (!v.yes()) throw Error("ladder_estimate: e = " + set_text(e) + " is not stratifying (" + v.to_string() + ")");
  return ladder_unchecked(a, e, cutoff);
}

template <class K>
Theorem1Report theorem1_check(const AlgebraPtr<K>& a, const VertexSet& e, std::size_t cutoff, bool diagnostic) {
  return theorem1_with(a, e, stratifying_check(a, e, cutoff), cutoff, diagnostic);
}

template <class K>
std::pair<PdResult, PdResult> bimodule_side_pds(const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Module<K>& m,
                                                std::size_t cutoff) {
  const auto c_op = opposite(*c);
  const auto ce = tensor(*c_op, *b);
  if (!same_algebra(*ce, m.algebra())) throw Error("bimodule is not over C^op (x) B");
  const auto mb = restrict_along(right_factor_map(c_op, b, ce), m);
  const auto mc = restrict_along(left_factor_map(c_op, b, ce), m);
  return {pd(mb, cutoff), pd(mc, cutoff)};
}

template <class K>
GorensteinTransfer gorenstein_transfer_check(const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Module<K>& m,
                                             std::size_t cutoff) {
  GorensteinTransfer rep;
  std::tie(rep.pd_b, rep.pd_c_op) = bimodule_side_pds(b, c, m, cutoff);
  const auto a = triangular(b, c, m);
  rep.dim_a = a->dim();
  rep.b = gorenstein(b, cutoff);
  rep.c = gorenstein(c, cutoff);
  rep.a = gorenstein(a, cutoff);
  const Verdict3 pds = both(from_pd(rep.pd_c_op), from_pd(rep.pd_b));
  const Verdict3 bc = both(rep.b.verdict, rep.c.verdict);
  const std::string a_text = "A Gorenstein: " + to_string(rep.a.verdict);
  rep.rows.push_back({"B, C Gorenstein => (A Gorenstein <=> pd_{C^op} M < inf and pd_B M < inf)", a_text,
                      "pd_{C^op} M = " + rep.pd_c_op.to_string() + ", pd_B M = " + rep.pd_b.to_string(),
                      biconditional(bc, rep.a.verdict, pds)});
  rep.rows.push_back({"pd_{C^op} M, pd_B M < inf => (A Gorenstein <=> B and C Gorenstein)", a_text,
                      "B: " + to_string(rep.b.verdict) + ", C: " + to_string(rep.c.verdict),
                      biconditional(pds, rep.a.verdict, bc)});
  return rep;
}

template <class K>
SmoothnessTransfer smoothness_transfer_check(const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Module<K>& m,
                                             std::size_t cutoff) {
  SmoothnessTransfer rep;
  std::tie(rep.pd_b, rep.pd_c_op) = bimodule_side_pds(b, c, m, cutoff);
  const auto a = triangular(b, c, m);
  rep.dim_a = a->dim();
  rep.b = smooth(b, cutoff).verdict;
  rep.c = smooth(c, cutoff).verdict;
  rep.a = smooth(a, cutoff).verdict;
  const Verdict3 bc = both(rep.b, rep.c);
  const Verdict3 side = either(from_pd(rep.pd_c_op), from_pd(rep.pd_b));
  rep.rows.push_back({"A smooth => B and C smooth", "A smooth: " + to_string(rep.a),
                      "B: " + to_string(rep.b) + ", C: " + to_string(rep.c), implication(rep.a, bc)});
  rep.rows.push_back({"B, C smooth and (pd_{C^op} M < inf or pd_B M < inf) => A smooth",
                      "B: " + to_string(rep.b) + ", C: " + to_string(rep.c) + ", pd_{C^op} M = " +
                          rep.pd_c_op.to_string() + ", pd_B M = " + rep.pd_b.to_string(),
                      "A smooth: " + to_string(rep.a), implication(both(bc, side), rep.a)});
  return rep;
}

template <class K>
StratNode stratify_search(const AlgebraPtr<K>& a, std::size_t cutoff) {
  return search(a, cutoff);
}

bool fully_extended(const StratNode& node) {
  if (node.leaf()) return true;
  if (!node.theorem1 || !node.theorem1->ladder || !node.theorem1->ladder->down.is_finite()) return false;
  return std::all_of(node.children.begin(), node.children.end(), fully_extended);
}

Integer leaf_det_product(const StratNode& node) {
  if (node.leaf()) return node.det;
  Integer p = 1;
  for (const auto& c : node.children) p *= leaf_det_product(c);
  return p;
}

std::size_t leaf_rank_sum(const StratNode& node) {
  if (node.leaf()) return node.r;
  std::size_t s = 0;
  for (const auto& c : node.children) s += leaf_rank_sum(c);
  return s;
}

#define HOMKIT_INSTANTIATE_RECOLLEMENT(K)                                                                         \
  template StratVerdict stratifying_check<K>(const AlgebraPtr<K>&, const VertexSet&, std::size_t);                \
  template LadderReport ladder_estimate<K>(const AlgebraPtr<K>&, const VertexSet&, std::size_t);                  \
  template LadderReport ladder_unchecked<K>(const AlgebraPtr<K>&, const VertexSet&, std::size_t);                 \
  template Theorem1Report theorem1_check<K>(const AlgebraPtr<K>&, const VertexSet&, std::size_t, bool);           \
  template std::pair<PdResult, PdResult> bimodule_side_pds<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&,         \
                                                              const Module<K>&, std::size_t);                     \
  template GorensteinTransfer gorenstein_transfer_check<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&,            \
                                                           const Module<K>&, std::size_t);                        \
  template SmoothnessTransfer smoothness_transfer_check<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&,            \
                                                           const Module<K>&, std::size_t);                        \
  template StratNode stratify_search<K>(const AlgebraPtr<K>&, std::size_t);

HOMKIT_INSTANTIATE_RECOLLEMENT(Rational)
HOMKIT_INSTANTIATE_RECOLLEMENT(Fp)

}  // namespace homkit
