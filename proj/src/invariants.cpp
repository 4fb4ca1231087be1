#include "homkit/invariants.hpp"

#include "homkit/linalg.hpp"
#include "parallel.hpp"

namespace homkit {

template <class K>
CartanReport cartan(const Algebra<K>& a) {
  CartanReport rep;
  rep.r = a.num_vertices();
  rep.matrix = IntMatrix(rep.r, rep.r);
  for (std::size_t i = 0; i < rep.r; ++i)
    for (std::size_t j = 0; j < rep.r; ++j) rep.matrix(i, j) = static_cast<unsigned long>(a.block(j, i).size());
  rep.det = rep.r == 0 ? Integer(1) : det_int(rep.matrix);
  return rep;
}

template <class K>
IntMatrix cartan_by_hom(const AlgebraPtr<K>& a) {
  const std::size_t r = a->num_vertices();
  std::vector<Module<K>> proj;
  for (std::size_t i = 0; i < r; ++i) proj.push_back(projective(a, i));
  IntMatrix c(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c(i, j) = static_cast<unsigned long>(hom_space(proj[i], proj[j]).dim);
  return c;
}

PdResult max_of(const std::vector<PdResult>& parts, std::size_t cutoff) {
  for (const auto& p : parts)
    if (p.is_infinite()) return p;
  bool budget = false, unknown = false;
  for (const auto& p : parts) {
    unknown = unknown || p.is_unknown();
    budget = budget || p.budget_exceeded;
  }
  if (unknown) return PdResult::unknown(cutoff, budget);
  std::size_t d = 0;
  for (const auto& p : parts) d = std::max(d, p.degree);
  return PdResult::finite(d, "maximum over " + std::to_string(parts.size()) + " finite parts");
}

std::string to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::Yes:
      return "yes";
    case Verdict3::No:
      return "no";
    case Verdict3::Unknown:
      break;
  }
  return "unknown";
}

template <class K>
GldimReport gldim(const AlgebraPtr<K>& a, std::size_t cutoff) {
  GldimReport rep;
  rep.simples.resize(a->num_vertices());
  detail::parallel_for(a->num_vertices(), [&](std::size_t i) { rep.simples[i] = pd(simple(a, i), cutoff); });
  rep.gldim = max_of(rep.simples, cutoff);
  return rep;
}

template <class K>
GorensteinReport gorenstein(const AlgebraPtr<K>& a, std::size_t cutoff) {
  const std::size_t r = a->num_vertices();
  const auto a_op = opposite(*a);
  std::vector<PdResult> right(r), left(r);
  detail::parallel_for(2 * r, [&](std::size_t k) {
    const std::size_t i = k % r;
    if (k < r)
      right[i] = pd(dual(projective(a, i), a_op), cutoff);
    else
      left[i] = pd(dual(projective(a_op, i), a), cutoff);
  });
  GorensteinReport rep;
  rep.right_id = max_of(right, cutoff);
  rep.left_id = max_of(left, cutoff);
  if (rep.right_id.is_finite() && rep.left_id.is_finite())
    rep.verdict = Verdict3::Yes;
  else if (rep.right_id.is_infinite() || rep.left_id.is_infinite())
    rep.verdict = Verdict3::No;
  return rep;
}

template <class K>
Module<K> regular_bimodule(const AlgebraPtr<K>& a, const AlgebraPtr<K>& a_op, const AlgebraPtr<K>& env) {
  const std::size_t n = a->dim();
  std::vector<Matrix<K>> left, right;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix<K> l(n, n, a->field()), r(n, n, a->field());
    for (std::size_t m = 0; m < n; ++m) {
      for (const auto& [z, c] : a->product(x, m)) l(m, z) += c;
      for (const auto& [z, c] : a->product(m, x)) r(m, z) += c;
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return bimodule_from_actions(a_op, a, env, left, right);
}

template <class K>
SmoothReport smooth(const AlgebraPtr<K>& a, std::size_t cutoff, bool cross_check) {
  SmoothReport rep;
  rep.gldim = gldim(a, cutoff);
  const PdResult& g = rep.gldim.gldim;
  rep.verdict = g.is_finite() ? Verdict3::Yes : g.is_infinite() ? Verdict3::No : Verdict3::Unknown;
  if (cross_check && a->dim() <= kSmoothCrossCheckMaxDim) {
    const auto a_op = opposite(*a);
    const auto env = enveloping(*a);
    rep.bimodule_pd = pd(regular_bimodule(a, a_op, env), cutoff);
    if (!rep.bimodule_pd->is_unknown() && !g.is_unknown())
      rep.cross_check_agrees = rep.bimodule_pd->is_finite() == g.is_finite();
  }
  return rep;
}

template <class K>
std::optional<IntMatrix> euler_matrix(const AlgebraPtr<K>& a, std::size_t cutoff) {
  const auto g = gldim(a, cutoff).gldim;
  if (!g.is_finite()) return std::nullopt;
  const std::size_t r = a->num_vertices(), d = g.degree;
  std::vector<Module<K>> simples;
  for (std::size_t i = 0; i < r; ++i) simples.push_back(simple(a, i));
  IntMatrix e(r, r);
  detail::parallel_for(r, [&](std::size_t i) {
    const auto res = min_resolution(simples[i], d + 1);
    for (std::size_t j = 0; j < r; ++j) {
      const auto ext = ext_dims(res, simples[j], d);
      Integer sum = 0;
      for (std::size_t l = 0; l < ext.size(); ++l) {
        const Integer v = static_cast<unsigned long>(ext[l]);
        sum += (l % 2 == 0) ? v : Integer(-v);
      }
      e(i, j) = sum;
    }
  });
  return e;
}

template <class K>
EilenbergReport eilenberg_check(const AlgebraPtr<K>& a, std::size_t cutoff) {
  EilenbergReport rep;
  rep.gldim = gldim(a, cutoff).gldim;
  rep.det = cartan(*a).det;
  rep.applicable = rep.gldim.is_finite();
  rep.unimodular = abs(rep.det) == 1;
  rep.plus_one = rep.det == 1;
  return rep;
}

template <class K>
TwoPointReport two_point_criterion(const Algebra<K>& a) {
  TwoPointReport rep;
  rep.det = cartan(a).det;
  rep.applicable = a.num_vertices() == 2;
  rep.flagged = rep.applicable && rep.det <= 0;
  return rep;
}

#define HOMKIT_INSTANTIATE_INVARIANTS(K)                                                                     \
  template CartanReport cartan<K>(const Algebra<K>&);                                                        \
  template IntMatrix cartan_by_hom<K>(const AlgebraPtr<K>&);                                                 \
  template GldimReport gldim<K>(const AlgebraPtr<K>&, std::size_t);                                          \
  template GorensteinReport gorenstein<K>(const AlgebraPtr<K>&, std::size_t);                                \
  template Module<K> regular_bimodule<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&, const AlgebraPtr<K>&);  \
  template SmoothReport smooth<K>(const AlgebraPtr<K>&, std::size_t, bool);                                  \
  template std::optional<IntMatrix> euler_matrix<K>(const AlgebraPtr<K>&, std::size_t);                     \
  template EilenbergReport eilenberg_check<K>(const AlgebraPtr<K>&, std::size_t);                            \
  template TwoPointReport two_point_criterion<K>(const Algebra<K>&);

HOMKIT_INSTANTIATE_INVARIANTS(Rational)
HOMKIT_INSTANTIATE_INVARIANTS(Fp)

}  // namespace homkit
