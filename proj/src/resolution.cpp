#include "homkit/homological.hpp"

#include <random>

namespace homkit {

namespace {

struct FreeCoord {
  std::size_t generator;
  std::size_t element;  // basis element p of e_{v(g)} A e_j
};

// Coordinates of free_module(a, vertices), in its layout.
template <class K>
std::vector<FreeCoord> free_coords(const Algebra<K>& a, const std::vector<std::size_t>& vertices) {
  std::vector<FreeCoord> out;
  for (std::size_t j = 0; j < a.num_vertices(); ++j)
    for (std::size_t g = 0; g < vertices.size(); ++g)
      for (std::size_t p : a.block(vertices[g], j)) out.push_back({g, p});
  return out;
}

// Coordinate of the generator x_g = (g, e_{v(g)}) in the same layout.
template <class K>
std::vector<std::size_t> generator_coords(const Algebra<K>& a, const std::vector<std::size_t>& vertices) {
  const auto coords = free_coords(a, vertices);
  std::vector<std::size_t> out(vertices.size());
  for (std::size_t c = 0; c < coords.size(); ++c)
    if (coords[c].element == a.idempotents()[vertices[coords[c].generator]]) out[coords[c].generator] = c;
  return out;
}

// Offsets of the generator slots (g -> dim N e_{v(g)}) in a flat vector.
template <class K>
std::vector<std::size_t> slot_offsets(const Module<K>& n, const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> off(vertices.size() + 1, 0);
  for (std::size_t g = 0; g < vertices.size(); ++g) off[g + 1] = off[g] + n.vertex_dim(vertices[g]);
  return off;
}

template <class K>
class ResolutionBuilder {
 public:
  ResolutionBuilder(const Module<K>& m, std::size_t budget) : budget_(budget) {
    res_.syzygies.push_back(m);
    res_.terminated = m.is_zero();
  }

  // Adds the next projective term and syzygy; false when nothing was added.
  bool step() {
    if (res_.terminated || res_.budget_exceeded) return false;
    const Module<K>& omega = res_.syzygies.back();
    auto pc = projective_cover(omega);
    if (pc.cover.dim() > budget_) {
      res_.budget_exceeded = true;
      return false;
    }
    if (res_.terms.empty())
      res_.augmentation = pc.map;
    else
      res_.differentials.push_back(pc.map * inclusion_);

    Module<K> next = submodule(pc.cover, pc.kernel);
    inclusion_ = Matrix<K>(next.dim(), pc.cover.dim(), omega.field());
    for (std::size_t j = 0; j < next.algebra().num_vertices(); ++j)
      inclusion_.set_block(next.offset(j), pc.cover.offset(j), pc.kernel[j].basis);

    res_.generator_vertices.push_back(std::move(pc.generator_vertices));
    res_.multiplicities.push_back(std::move(pc.multiplicities));
    res_.terms.push_back(std::move(pc.cover));
    res_.terminated = next.is_zero();
    res_.syzygies.push_back(std::move(next));
    return true;
  }

  const Resolution<K>& get() const { return res_; }
  Resolution<K> take() { return std::move(res_); }

 private:
  std::size_t budget_;
  Resolution<K> res_;
  Matrix<K> inclusion_;  // Omega^n -> P_{n-1}
};

template <class K>
bool invertible_blocks(const Module<K>& m, const Matrix<K>& f) {
  for (std::size_t v = 0; v < m.algebra().num_vertices(); ++v) {
    const std::size_t d = m.vertex_dim(v);
    if (d == 0) continue;
    if (is_zero(determinant(f.submatrix(m.offset(v), m.offset(v), d, d)))) return false;
  }
  return true;
}

template <class K>
bool intertwines(const Module<K>& m, const Module<K>& n, const Matrix<K>& f) {
  const Algebra<K>& a = m.algebra();
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const auto& b = a.basis(x);
    const Matrix<K> fi = f.submatrix(m.offset(b.left), n.offset(b.left), m.vertex_dim(b.left), n.vertex_dim(b.left));
    const Matrix<K> fj =
        f.submatrix(m.offset(b.right), n.offset(b.right), m.vertex_dim(b.right), n.vertex_dim(b.right));
    if (!(m.block(x) * fj == fi * n.block(x))) return false;
  }
  return true;
}

template <class K>
Matrix<K> combination(const HomSpace<K>& h, const std::vector<K>& c, const Module<K>& m, const Module<K>& n) {
  Matrix<K> f(m.dim(), n.dim(), m.field());
  for (std::size_t k = 0; k < h.dim; ++k)
    if (!is_zero(c[k])) f = f + c[k] * h.basis[k];
  return f;
}

}  // namespace

std::string PdResult::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(degree);
    case Kind::InfiniteCertified:
      return "inf";
    case Kind::Unknown:
      break;
  }
  return "unknown(>" + std::to_string(cutoff) + ")";
}

PdResult PdResult::finite(std::size_t d, std::string certificate) {
  PdResult r;
  r.kind = Kind::Finite;
  r.degree = d;
  r.certificate = std::move(certificate);
  return r;
}

PdResult PdResult::infinite(std::size_t first_repeat, std::size_t period, std::string certificate) {
  PdResult r;
  r.kind = Kind::InfiniteCertified;
  r.first_repeat = first_repeat;
  r.period = period;
  r.certificate = std::move(certificate);
  return r;
}

PdResult PdResult::unknown(std::size_t cutoff, bool budget_exceeded) {
  PdResult r;
  r.kind = Kind::Unknown;
  r.cutoff = cutoff;
  r.budget_exceeded = budget_exceeded;
  r.certificate = budget_exceeded ? "dimension budget exhausted" : "no vanishing or repeating syzygy within cutoff";
  return r;
}

template <class K>
Resolution<K> min_resolution(const Module<K>& m, std::size_t cutoff, std::size_t budget) {
  ResolutionBuilder<K> b(m, budget);
  for (std::size_t n = 0; n <= cutoff && b.step(); ++n) {
  }
  return b.take();
}

template <class K>
PdResult pd(const Module<K>& m, std::size_t cutoff, std::size_t budget) {
  if (m.is_zero()) return PdResult::finite(0, "zero module");
  ResolutionBuilder<K> b(m, budget);
  for (std::size_t n = 0; n <= cutoff; ++n) {
    if (!b.step()) return PdResult::unknown(cutoff, true);
    const auto& syz = b.get().syzygies;
    const std::size_t j = n + 1;
    if (syz[j].is_zero()) return PdResult::finite(n, "Omega^" + std::to_string(j) + " = 0");
    for (std::size_t i = 0; i < j; ++i) {
      if (syz[i].vertex_dims() != syz[j].vertex_dims()) continue;
      const auto v = is_iso(syz[j], syz[i]);
      if (v.kind == IsoVerdict<K>::Kind::Iso)
        return PdResult::infinite(j, j - i,
                                  "Omega^" + std::to_string(j) + " ~ Omega^" + std::to_string(i) + " (witness verified)");
    }
  }
  return PdResult::unknown(cutoff);
}

template <class K>
PdResult id(const Module<K>& m, std::size_t cutoff, std::size_t budget) {
  return pd(dual(m), cutoff, budget);
}

template <class K>
HomSpace<K> hom_by_presentation(const Module<K>& m, const Module<K>& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw Error("hom: algebra mismatch");
  HomSpace<K> out;
  if (m.is_zero() || n.is_zero()) return out;
  const Algebra<K>& a = m.algebra();
  const std::size_t r = a.num_vertices();
  const auto pc = projective_cover(m);
  const auto& gv = pc.generator_vertices;
  const auto slot = slot_offsets(n, gv);
  const std::size_t unknowns = slot.back();
  if (unknowns == 0) return out;

  // Local layout of F e_j: (g, p) pairs.
  std::vector<std::vector<FreeCoord>> local(r);
  for (const auto& c : free_coords(a, gv)) local[a.basis(c.element).right].push_back(c);

  Matrix<K> eqs(0, unknowns, a.field());
  for (std::size_t j = 0; j < r; ++j) {
    const auto& ker = pc.kernel[j];
    for (std::size_t k = 0; k < ker.dim(); ++k)
      for (std::size_t b = 0; b < n.vertex_dim(j); ++b) {
        std::vector<K> row(unknowns);
        for (std::size_t idx = 0; idx < local[j].size(); ++idx) {
          const K& c = ker.basis(k, idx);
          if (is_zero(c)) continue;
          const auto [g, p] = local[j][idx];
          const Matrix<K>& np = n.block(p);
          for (std::size_t s = 0; s < np.rows(); ++s)
            if (!is_zero(np(s, b))) row[slot[g] + s] += c * np(s, b);
        }
        if (!is_zero_vector<K>(row)) eqs.append_row(row);
      }
  }
  std::vector<std::vector<K>> sols;
  if (eqs.rows() == 0) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      std::vector<K> v(unknowns);
      v[u] = a.one();
      sols.push_back(std::move(v));
    }
  } else {
    sols = kernel_basis(eqs);
  }

  // Sections of the cover map per vertex: M e_j -> F e_j.
  std::vector<Matrix<K>> section(r);
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t dm = m.vertex_dim(j), df = pc.cover.vertex_dim(j);
    if (dm == 0) continue;
    const Matrix<K> l = pc.map.submatrix(pc.cover.offset(j), m.offset(j), df, dm);
    auto s = solve(l.transpose(), Matrix<K>::identity(dm, a.field()));
    if (!s) throw Error("hom: projective cover is not surjective");
    section[j] = s->particular.transpose();
  }

  out.dim = sols.size();
  for (const auto& sol : sols) {
    Matrix<K> f(m.dim(), n.dim(), a.field());
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t dm = m.vertex_dim(j), dn = n.vertex_dim(j);
      if (dm == 0 || dn == 0) continue;
      // Image of each (g, p) in N e_j.
      Matrix<K> images(local[j].size(), dn, a.field());
      for (std::size_t idx = 0; idx < local[j].size(); ++idx) {
        const auto [g, p] = local[j][idx];
        const Matrix<K>& np = n.block(p);
        for (std::size_t s = 0; s < np.rows(); ++s) {
          const K& c = sol[slot[g] + s];
          if (is_zero(c)) continue;
          for (std::size_t b = 0; b < dn; ++b) images(idx, b) += c * np(s, b);
        }
      }
      f.set_block(m.offset(j), n.offset(j), section[j] * images);
    }
    out.basis.push_back(std::move(f));
  }
  return out;
}

template <class K>
IsoVerdict<K> is_iso(const Module<K>& m, const Module<K>& n, std::uint64_t seed) {
  using V = IsoVerdict<K>;
  if (!same_algebra(m.algebra(), n.algebra())) throw Error("is_iso: algebra mismatch");
  V out;
  auto not_iso = [&](std::string why) {
    out.kind = V::Kind::NotIso;
    out.reason = std::move(why);
    return out;
  };
  auto iso = [&](Matrix<K> f) {
    if (!intertwines(m, n, f) || !invertible_blocks(m, f)) throw Error("is_iso: witness failed verification");
    out.kind = V::Kind::Iso;
    out.witness = std::move(f);
    return out;
  };
  if (m.vertex_dims() != n.vertex_dims()) return not_iso("vertex dimensions differ");
  if (m.is_zero()) return iso(Matrix<K>(0, 0, m.field()));
  if (top(m) != top(n)) return not_iso("tops differ");
  if (m == n) return iso(Matrix<K>::identity(m.dim(), m.field()));

  const auto h = hom_by_presentation(m, n);
  if (h.dim == 0) return not_iso("Hom(m, n) = 0");
  const FieldSpec& field = m.field();

  if (!field.is_rationals()) {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < h.dim && total <= 4096; ++k) total *= field.p;
    if (total <= 4096) {
      std::vector<K> c(h.dim, from_int<K>(field, 0));
      for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t k = 0; k < h.dim; ++k) {
          c[k] = from_int<K>(field, static_cast<std::int64_t>(rest % field.p));
          rest /= field.p;
        }
        const auto f = combination(h, c, m, n);
        if (invertible_blocks(m, f)) return iso(f);
      }
      return not_iso("no invertible homomorphism (exhaustive search)");
    }
  }
  std::mt19937_64 rng(seed);
  const std::int64_t range = field.is_rationals() ? 1000 : static_cast<std::int64_t>(field.p) - 1;
  std::uniform_int_distribution<std::int64_t> dist(field.is_rationals() ? -range : 0, range);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<K> c(h.dim);
    for (auto& x : c) x = from_int<K>(field, dist(rng));
    const auto f = combination(h, c, m, n);
    if (invertible_blocks(m, f)) return iso(f);
  }
  out.kind = V::Kind::Undetermined;
  return out;
}

template <class K>
std::vector<std::size_t> ext_dims(const Resolution<K>& res, const Module<K>& n, std::size_t cutoff) {
  if (!res.terminated && res.terms.size() < cutoff + 2)
    throw BudgetExceeded("ext: resolution too short for the requested cutoff");
  const Module<K>& m = res.syzygies.front();
  if (!same_algebra(m.algebra(), n.algebra())) throw Error("ext: algebra mismatch");
  const Algebra<K>& a = m.algebra();
  auto degree_dim = [&](std::size_t k) -> std::size_t {
    if (k >= res.terms.size()) return 0;
    return slot_offsets(n, res.generator_vertices[k]).back();
  };
  // rank of delta_k : Hom(P_{k-1}, N) -> Hom(P_k, N), k >= 1.
  auto delta_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k >= res.terms.size()) return 0;
    const auto& gv = res.generator_vertices[k];
    const auto& prev = res.generator_vertices[k - 1];
    const auto slot = slot_offsets(n, gv), prev_slot = slot_offsets(n, prev);
    if (slot.back() == 0 || prev_slot.back() == 0) return 0;
    const auto coords = free_coords(a, prev);
    const auto gens = generator_coords(a, gv);
    const Matrix<K>& d = res.differentials[k - 1];
    Matrix<K> delta(prev_slot.back(), slot.back(), a.field());
    for (std::size_t g = 0; g < gv.size(); ++g)
      for (std::size_t c = 0; c < coords.size(); ++c) {
        const K& coef = d(gens[g], c);
        if (is_zero(coef)) continue;
        const auto [h, p] = coords[c];
        const Matrix<K>& np = n.block(p);
        for (std::size_t s = 0; s < np.rows(); ++s)
          for (std::size_t t = 0; t < np.cols(); ++t)
            if (!is_zero(np(s, t))) delta(prev_slot[h] + s, slot[g] + t) += coef * np(s, t);
      }
    return rank(delta);
  };
  std::vector<std::size_t> out;
  std::size_t lower = 0;  // rank delta_l
  for (std::size_t l = 0; l <= cutoff; ++l) {
    const std::size_t upper = delta_rank(l + 1);
    out.push_back(degree_dim(l) - upper - lower);
    lower = upper;
  }
  return out;
}

template <class K>
std::vector<std::size_t> ext_dims(const Module<K>& m, const Module<K>& n, std::size_t cutoff, std::size_t budget) {
  return ext_dims(min_resolution(m, cutoff + 1, budget), n, cutoff);
}

template <class K>
std::size_t tensor_over(const Module<K>& m, const Module<K>& n_op) {
  const Algebra<K>& a = m.algebra();
  if (!same_algebra(*opposite(a), n_op.algebra())) throw Error("tensor_over: second module is not over the opposite");
  const std::size_t r = a.num_vertices();
  // m e_i (x) n_op e_j vanishes for i != j, so only the diagonal pieces are
  // kept; the remaining relations come from the radical generators.
  std::vector<std::size_t> col(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) col[i + 1] = col[i] + m.vertex_dim(i) * n_op.vertex_dim(i);
  const std::size_t width = col[r];
  if (width == 0) return 0;
  auto idx = [&](std::size_t i, std::size_t s, std::size_t t) { return col[i] + s * n_op.vertex_dim(i) + t; };
  Matrix<K> rels(0, width, a.field());
  for (std::size_t x : a.radical_generators()) {
    const std::size_t i = a.basis(x).left, j = a.basis(x).right;
    const Matrix<K>& mx = m.block(x);      // M e_i -> M e_j
    const Matrix<K>& nx = n_op.block(x);   // N e_j -> N e_i
    for (std::size_t s = 0; s < m.vertex_dim(i); ++s)
      for (std::size_t t = 0; t < n_op.vertex_dim(j); ++t) {
        std::vector<K> row(width);
        for (std::size_t c = 0; c < m.vertex_dim(j); ++c)
          if (!is_zero(mx(s, c))) row[idx(j, c, t)] += mx(s, c);
        for (std::size_t d = 0; d < n_op.vertex_dim(i); ++d)
          if (!is_zero(nx(t, d))) row[idx(i, s, d)] -= nx(t, d);
        if (!is_zero_vector<K>(row)) rels.append_row(row);
      }
  }
  return width - (rels.rows() == 0 ? 0 : rank(rels));
}

template <class K>
std::vector<std::size_t> tor_dims(const Resolution<K>& res, const Module<K>& n_op, std::size_t cutoff) {
  if (!res.terminated && res.terms.size() < cutoff + 2)
    throw BudgetExceeded("tor: resolution too short for the requested cutoff");
  const Module<K>& m = res.syzygies.front();
  const Algebra<K>& a = m.algebra();
  if (!same_algebra(*opposite(a), n_op.algebra())) throw Error("tor: second module is not over the opposite");
  auto degree_dim = [&](std::size_t k) -> std::size_t {
    if (k >= res.terms.size()) return 0;
    return slot_offsets(n_op, res.generator_vertices[k]).back();
  };
  // rank of d_k (x) N : P_k (x) N -> P_{k-1} (x) N, with P_k (x) N = (+)_g e_{v(g)} N.
  auto boundary_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k >= res.terms.size()) return 0;
    const auto& gv = res.generator_vertices[k];
    const auto& prev = res.generator_vertices[k - 1];
    const auto slot = slot_offsets(n_op, gv), prev_slot = slot_offsets(n_op, prev);
    if (slot.back() == 0 || prev_slot.back() == 0) return 0;
    const auto coords = free_coords(a, prev);
    const auto gens = generator_coords(a, gv);
    const Matrix<K>& d = res.differentials[k - 1];
    Matrix<K> bd(slot.back(), prev_slot.back(), a.field());
    for (std::size_t g = 0; g < gv.size(); ++g)
      for (std::size_t c = 0; c < coords.size(); ++c) {
        const K& coef = d(gens[g], c);
        if (is_zero(coef)) continue;
        const auto [h, p] = coords[c];
        // x_h p (x) n = x_h (x) p n, and p n is n times the opposite action of p.
        const Matrix<K>& np = n_op.block(p);
        for (std::size_t s = 0; s < np.rows(); ++s)
          for (std::size_t t = 0; t < np.cols(); ++t)
            if (!is_zero(np(s, t))) bd(slot[g] + s, prev_slot[h] + t) += coef * np(s, t);
      }
    return rank(bd);
  };
  std::vector<std::size_t> out;
  std::size_t lower = 0;  // rank d_l
  for (std::size_t l = 0; l <= cutoff; ++l) {
    const std::size_t upper = boundary_rank(l + 1);
    out.push_back(degree_dim(l) - upper - lower);
    lower = upper;
  }
  return out;
}

template <class K>
std::vector<std::size_t> tor_dims(const Module<K>& m, const Module<K>& n_op, std::size_t cutoff, std::size_t budget) {
  return tor_dims(min_resolution(m, cutoff + 1, budget), n_op, cutoff);
}

#define HOMKIT_INSTANTIATE_HOMOLOGICAL(K)                                                                        \
  template Resolution<K> min_resolution<K>(const Module<K>&, std::size_t, std::size_t);                          \
  template PdResult pd<K>(const Module<K>&, std::size_t, std::size_t);                                           \
  template PdResult id<K>(const Module<K>&, std::size_t, std::size_t);                                           \
  template IsoVerdict<K> is_iso<K>(const Module<K>&, const Module<K>&, std::uint64_t);                           \
  template HomSpace<K> hom_by_presentation<K>(const Module<K>&, const Module<K>&);                               \
  template std::vector<std::size_t> ext_dims<K>(const Module<K>&, const Module<K>&, std::size_t, std::size_t);   \
  template std::vector<std::size_t> ext_dims<K>(const Resolution<K>&, const Module<K>&, std::size_t);            \
  template std::size_t tensor_over<K>(const Module<K>&, const Module<K>&);                                       \
  template std::vector<std::size_t> tor_dims<K>(const Module<K>&, const Module<K>&, std::size_t, std::size_t);   \
  template std::vector<std::size_t> tor_dims<K>(const Resolution<K>&, const Module<K>&, std::size_t);

HOMKIT_INSTANTIATE_HOMOLOGICAL(Rational)
HOMKIT_INSTANTIATE_HOMOLOGICAL(Fp)

}  // namespace homkit
