#include "homkit/module.hpp"

#include <algorithm>

namespace homkit {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

template <class K>
std::vector<std::size_t> prefix_offsets(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> off(dims.size());
  std::size_t acc = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    off[i] = acc;
    acc += dims[i];
  }
  return off;
}

// Module whose basis at target vertex j is groups[j], a list of elements of
// `ambient`; act(p, x) is p * x expressed in the ambient basis and must land
// in groups[right(x)].
template <class K, class Act>
Module<K> module_on_elements(const AlgebraPtr<K>& target, std::size_t ambient_dim,
                             const std::vector<std::vector<std::size_t>>& groups, Act act) {
  const Algebra<K>& t = *target;
  std::vector<std::size_t> local(ambient_dim, kNone), group_of(ambient_dim, kNone);
  std::vector<std::size_t> dims(groups.size());
  for (std::size_t j = 0; j < groups.size(); ++j) {
    dims[j] = groups[j].size();
    for (std::size_t k = 0; k < groups[j].size(); ++k) {
      local[groups[j][k]] = k;
      group_of[groups[j][k]] = j;
    }
  }
  std::vector<Matrix<K>> blocks;
  blocks.reserve(t.dim());
  for (std::size_t x = 0; x < t.dim(); ++x) {
    const std::size_t i = t.basis(x).left, j = t.basis(x).right;
    Matrix<K> blk(dims[i], dims[j], t.field());
    for (std::size_t row = 0; row < dims[i]; ++row)
      for (const auto& [z, c] : act(groups[i][row], x)) {
        if (group_of[z] != j) throw Error("module construction: product leaves the expected vertex block");
        blk(row, local[z]) += c;
      }
    blocks.push_back(std::move(blk));
  }
  return Module<K>(target, std::move(dims), std::move(blocks));
}

template <class K>
std::vector<std::size_t> corner_keep(const Algebra<K>& a, const VertexSet& e) {
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < a.dim(); ++x)
    if (std::binary_search(e.begin(), e.end(), a.basis(x).left) &&
        std::binary_search(e.begin(), e.end(), a.basis(x).right))
      keep.push_back(x);
  return keep;
}

}  // namespace

template <class K>
Module<K>::Module(AlgebraPtr<K> algebra, std::vector<std::size_t> vertex_dims, std::vector<Matrix<K>> blocks)
    : algebra_(std::move(algebra)), vertex_dims_(std::move(vertex_dims)), blocks_(std::move(blocks)) {
  const Algebra<K>& a = *algebra_;
  if (vertex_dims_.size() != a.num_vertices()) throw Error("module: vertex dimension count mismatch");
  if (blocks_.size() != a.dim()) throw Error("module: one action block per basis element required");
  offsets_ = prefix_offsets<K>(vertex_dims_);
  for (std::size_t d : vertex_dims_) dim_ += d;
  for (std::size_t x = 0; x < a.dim(); ++x)
    if (blocks_[x].rows() != vertex_dims_[a.basis(x).left] || blocks_[x].cols() != vertex_dims_[a.basis(x).right])
      throw Error("module: action block of '" + a.basis(x).label + "' has the wrong shape");
}

template <class K>
Module<K> Module<K>::zero(AlgebraPtr<K> algebra) {
  const Algebra<K>& a = *algebra;
  std::vector<Matrix<K>> blocks(a.dim(), Matrix<K>(0, 0, a.field()));
  return Module(std::move(algebra), std::vector<std::size_t>(a.num_vertices(), 0), std::move(blocks));
}

template <class K>
Module<K> Module<K>::from_full_actions(AlgebraPtr<K> algebra, const std::vector<Matrix<K>>& actions) {
  const Algebra<K>& a = *algebra;
  if (actions.size() != a.dim()) throw Error("module: one action matrix per basis element required");
  const std::size_t n = actions.empty() ? 0 : actions[0].rows();
  for (const auto& m : actions)
    if (m.rows() != n || m.cols() != n) throw Error("module: action matrices must be square of equal size");
  if (n == 0) return zero(std::move(algebra));

  std::vector<std::size_t> dims(a.num_vertices());
  Matrix<K> change(0, n, a.field());
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    const auto img = row_space(actions[a.idempotents()[v]]);
    dims[v] = img.dim();
    for (std::size_t k = 0; k < img.dim(); ++k) change.append_row(img.basis.row(k));
  }
  if (change.rows() != n) throw Error("module: vertex idempotents do not decompose the module");
  const auto inv = invert(change);
  if (!inv) throw Error("module: vertex idempotents do not decompose the module");
  const auto off = prefix_offsets<K>(dims);
  std::vector<Matrix<K>> blocks;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const Matrix<K> y = change * actions[x] * *inv;
    const std::size_t i = a.basis(x).left, j = a.basis(x).right;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const bool inside = r >= off[i] && r < off[i] + dims[i] && c >= off[j] && c < off[j] + dims[j];
        if (!inside && !homkit::is_zero(y(r, c)))
          throw Error("module: action of '" + a.basis(x).label + "' is incompatible with its vertex tags");
      }
    blocks.push_back(y.submatrix(off[i], off[j], dims[i], dims[j]));
  }
  return Module(std::move(algebra), std::move(dims), std::move(blocks));
}

template <class K>
Matrix<K> Module<K>::action(std::size_t x) const {
  Matrix<K> full(dim_, dim_, field());
  const auto& b = algebra_->basis(x);
  full.set_block(offsets_[b.left], offsets_[b.right], blocks_[x]);
  return full;
}

template <class K>
std::optional<std::string> validate_module(const Module<K>& m) {
  const Algebra<K>& a = m.algebra();
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    if (!(m.block(a.idempotents()[v]) == Matrix<K>::identity(m.vertex_dim(v), a.field())))
      return "vertex idempotent e" + std::to_string(v + 1) + " does not act as the identity on M e" +
             std::to_string(v + 1);
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y : a.with_left(a.basis(x).right)) {
      const Matrix<K> lhs = m.block(x) * m.block(y);
      Matrix<K> rhs(lhs.rows(), lhs.cols(), a.field());
      for (const auto& [z, c] : a.product(x, y)) rhs = rhs + c * m.block(z);
      if (!(lhs == rhs)) return "action is not associative at (" + a.basis(x).label + ", " + a.basis(y).label + ")";
    }
  return std::nullopt;
}

template <class K>
Module<K> projective(const AlgebraPtr<K>& a, std::size_t i) {
  if (i >= a->num_vertices()) throw Error("projective: vertex out of range");
  std::vector<std::vector<std::size_t>> groups(a->num_vertices());
  for (std::size_t j = 0; j < a->num_vertices(); ++j) groups[j] = a->block(i, j);
  return module_on_elements<K>(a, a->dim(), groups, [&](std::size_t p, std::size_t x) { return a->product(p, x); });
}

template <class K>
Module<K> regular(const AlgebraPtr<K>& a) {
  std::vector<std::vector<std::size_t>> groups(a->num_vertices());
  for (std::size_t j = 0; j < a->num_vertices(); ++j) groups[j] = a->with_right(j);
  return module_on_elements<K>(a, a->dim(), groups, [&](std::size_t p, std::size_t x) { return a->product(p, x); });
}

template <class K>
Module<K> simple(const AlgebraPtr<K>& a, std::size_t i) {
  if (i >= a->num_vertices()) throw Error("simple: vertex out of range");
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  dims[i] = 1;
  std::vector<Matrix<K>> blocks;
  for (std::size_t x = 0; x < a->dim(); ++x) {
    Matrix<K> blk(dims[a->basis(x).left], dims[a->basis(x).right], a->field());
    if (x == a->idempotents()[i]) blk(0, 0) = a->one();
    blocks.push_back(std::move(blk));
  }
  return Module<K>(a, std::move(dims), std::move(blocks));
}

template <class K>
Module<K> dual(const Module<K>& m, AlgebraPtr<K> target) {
  if (!target) {
    target = opposite(m.algebra());
  } else if (!same_algebra(*target, *opposite(m.algebra()))) {
    throw Error("dual: target is not the opposite algebra");
  }
  std::vector<Matrix<K>> blocks;
  for (const auto& b : m.blocks()) blocks.push_back(b.transpose());
  return Module<K>(target, m.vertex_dims(), std::move(blocks));
}

template <class K>
Module<K> injective(const AlgebraPtr<K>& a, std::size_t i) {
  return dual(projective(opposite(*a), i), a);
}

template <class K>
Module<K> direct_sum(const Module<K>& m, const Module<K>& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw Error("direct_sum: algebra mismatch");
  const Algebra<K>& a = m.algebra();
  std::vector<std::size_t> dims(a.num_vertices());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = m.vertex_dim(v) + n.vertex_dim(v);
  std::vector<Matrix<K>> blocks;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const std::size_t i = a.basis(x).left, j = a.basis(x).right;
    Matrix<K> blk(dims[i], dims[j], a.field());
    blk.set_block(0, 0, m.block(x));
    blk.set_block(m.vertex_dim(i), m.vertex_dim(j), n.block(x));
    blocks.push_back(std::move(blk));
  }
  return Module<K>(m.algebra_ptr(), std::move(dims), std::move(blocks));
}

template <class K>
Module<K> submodule(const Module<K>& m, const std::vector<Subspace<K>>& subspaces) {
  const Algebra<K>& a = m.algebra();
  std::vector<std::size_t> dims(a.num_vertices());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = subspaces[v].dim();
  std::vector<Matrix<K>> blocks;
  blocks.reserve(a.dim());
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const std::size_t i = a.basis(x).left, j = a.basis(x).right;
    Matrix<K> blk(dims[i], dims[j], a.field());
    if (dims[i] > 0 && dims[j] > 0) {
      const Matrix<K> image = subspaces[i].basis * m.block(x);
      for (std::size_t r = 0; r < dims[i]; ++r) {
        const auto c = subspaces[j].coordinates(image.row(r));
        const auto back = row_times<K>(c, subspaces[j].basis);
        if (!std::equal(back.begin(), back.end(), image.row(r).begin()))
          throw Error("submodule: subspace is not closed under the action");
        std::copy(c.begin(), c.end(), blk.row(r).begin());
      }
    } else if (dims[i] > 0 && m.vertex_dim(j) > 0) {
      if (!(subspaces[i].basis * m.block(x)).is_zero()) throw Error("submodule: subspace is not closed under the action");
    }
    blocks.push_back(std::move(blk));
  }
  return Module<K>(m.algebra_ptr(), std::move(dims), std::move(blocks));
}

template <class K>
HomSpace<K> hom_space(const Module<K>& m, const Module<K>& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw Error("hom_space: algebra mismatch");
  const Algebra<K>& a = m.algebra();
  const std::size_t r = a.num_vertices();
  std::vector<std::size_t> uoff(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) uoff[i + 1] = uoff[i] + m.vertex_dim(i) * n.vertex_dim(i);
  const std::size_t unknowns = uoff[r];
  // Row of the equation system for entry (p, q) of F_i.
  auto var = [&](std::size_t i, std::size_t p, std::size_t q) { return uoff[i] + p * n.vertex_dim(i) + q; };

  Matrix<K> eqs(0, unknowns, a.field());
  for (std::size_t g : a.radical_generators()) {
    const std::size_t i = a.basis(g).left, j = a.basis(g).right;
    const Matrix<K>& mg = m.block(g);
    const Matrix<K>& ng = n.block(g);
    // (M_g F_j - F_i N_g)[p][q] = 0.
    for (std::size_t p = 0; p < m.vertex_dim(i); ++p)
      for (std::size_t q = 0; q < n.vertex_dim(j); ++q) {
        std::vector<K> row(unknowns);
        for (std::size_t c = 0; c < m.vertex_dim(j); ++c)
          if (!is_zero(mg(p, c))) row[var(j, c, q)] += mg(p, c);
        for (std::size_t c = 0; c < n.vertex_dim(i); ++c)
          if (!is_zero(ng(c, q))) row[var(i, p, c)] -= ng(c, q);
        if (!is_zero_vector<K>(row)) eqs.append_row(row);
      }
  }
  std::vector<std::vector<K>> kernel;
  if (eqs.rows() == 0) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      std::vector<K> v(unknowns);
      v[u] = a.one();
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = kernel_basis(eqs);
  }
  HomSpace<K> out;
  out.dim = kernel.size();
  for (const auto& v : kernel) {
    Matrix<K> f(m.dim(), n.dim(), a.field());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t p = 0; p < m.vertex_dim(i); ++p)
        for (std::size_t q = 0; q < n.vertex_dim(i); ++q) f(m.offset(i) + p, n.offset(i) + q) = v[var(i, p, q)];
    out.basis.push_back(std::move(f));
  }
  return out;
}

template <class K>
std::vector<Subspace<K>> radical_subspaces(const Module<K>& m) {
  const Algebra<K>& a = m.algebra();
  std::vector<Subspace<K>> out;
  for (std::size_t j = 0; j < a.num_vertices(); ++j) {
    Matrix<K> images(0, m.vertex_dim(j), a.field());
    for (std::size_t g : a.radical_generators()) {
      if (a.basis(g).right != j) continue;
      const Matrix<K>& blk = m.block(g);
      for (std::size_t r = 0; r < blk.rows(); ++r)
        if (!is_zero_vector<K>(blk.row(r))) images.append_row(blk.row(r));
    }
    if (images.rows() == 0) {
      Subspace<K> s;
      s.basis = Matrix<K>(0, m.vertex_dim(j), a.field());
      out.push_back(std::move(s));
    } else {
      out.push_back(row_space(images));
    }
  }
  return out;
}

template <class K>
Module<K> radical_submodule(const Module<K>& m) {
  return submodule(m, radical_subspaces(m));
}

template <class K>
std::vector<std::size_t> top(const Module<K>& m) {
  const auto rad = radical_subspaces(m);
  std::vector<std::size_t> t(rad.size());
  for (std::size_t j = 0; j < rad.size(); ++j) t[j] = m.vertex_dim(j) - rad[j].dim();
  return t;
}

template <class K>
Module<K> free_module(const AlgebraPtr<K>& a, const std::vector<std::size_t>& vertices) {
  const std::size_t r = a->num_vertices();
  std::vector<std::size_t> dims(r, 0);
  // local[g][p]: position of (g, p) inside F e_{right(p)}.
  std::vector<std::vector<std::size_t>> start(vertices.size(), std::vector<std::size_t>(r, 0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t g = 0; g < vertices.size(); ++g) {
      start[g][j] = dims[j];
      dims[j] += a->block(vertices[g], j).size();
    }
  std::vector<std::size_t> pos(a->dim(), 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto& blk = a->block(i, j);
      for (std::size_t k = 0; k < blk.size(); ++k) pos[blk[k]] = k;
    }
  std::vector<Matrix<K>> blocks;
  blocks.reserve(a->dim());
  for (std::size_t x = 0; x < a->dim(); ++x) {
    const std::size_t j = a->basis(x).left, k = a->basis(x).right;
    Matrix<K> blk(dims[j], dims[k], a->field());
    for (std::size_t g = 0; g < vertices.size(); ++g) {
      const auto& src = a->block(vertices[g], j);
      for (std::size_t s = 0; s < src.size(); ++s)
        for (const auto& [z, c] : a->product(src[s], x)) blk(start[g][j] + s, start[g][k] + pos[z]) += c;
    }
    blocks.push_back(std::move(blk));
  }
  return Module<K>(a, std::move(dims), std::move(blocks));
}

template <class K>
ProjectiveCover<K> projective_cover(const Module<K>& m) {
  if (m.is_zero()) throw Error("projective_cover: zero module");
  const Algebra<K>& a = m.algebra();
  const std::size_t r = a.num_vertices();
  const auto rad = radical_subspaces(m);
  ProjectiveCover<K> pc;
  pc.multiplicities.assign(r, 0);
  std::vector<std::size_t> gen_local;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<bool> pivot(m.vertex_dim(j), false);
    for (std::size_t c : rad[j].coord_cols) pivot[c] = true;
    for (std::size_t c = 0; c < m.vertex_dim(j); ++c)
      if (!pivot[c]) {
        pc.generator_vertices.push_back(j);
        gen_local.push_back(c);
        ++pc.multiplicities[j];
      }
  }
  const std::size_t ng = pc.generator_vertices.size();
  pc.generator_images = Matrix<K>(ng, m.dim(), a.field());
  for (std::size_t g = 0; g < ng; ++g) pc.generator_images(g, m.offset(pc.generator_vertices[g]) + gen_local[g]) = a.one();
  pc.cover = free_module(m.algebra_ptr(), pc.generator_vertices);
  const Module<K>& F = pc.cover;

  pc.map = Matrix<K>(F.dim(), m.dim(), a.field());
  for (std::size_t j = 0; j < r; ++j) {
    Matrix<K> local(F.vertex_dim(j), m.vertex_dim(j), a.field());
    std::size_t row = 0;
    for (std::size_t g = 0; g < ng; ++g) {
      const std::size_t v = pc.generator_vertices[g];
      for (std::size_t p : a.block(v, j)) {
        // x_g * p, with x_g the unit vector gen_local[g] of M e_v.
        const Matrix<K>& blk = m.block(p);
        for (std::size_t c = 0; c < m.vertex_dim(j); ++c) local(row, c) = blk(gen_local[g], c);
        ++row;
      }
    }
    pc.map.set_block(F.offset(j), m.offset(j), local);
    if (local.rows() == 0) {
      Subspace<K> s;
      s.basis = Matrix<K>(0, 0, a.field());
      pc.kernel.push_back(std::move(s));
    } else if (local.cols() == 0) {
      Subspace<K> s;
      s.basis = Matrix<K>::identity(local.rows(), a.field());
      for (std::size_t c = 0; c < local.rows(); ++c) s.coord_cols.push_back(c);
      pc.kernel.push_back(std::move(s));
    } else {
      pc.kernel.push_back(left_kernel(local));
    }
  }
  return pc;
}

template <class K>
Module<K> syzygy(const Module<K>& m) {
  if (m.is_zero()) return Module<K>::zero(m.algebra_ptr());
  const auto pc = projective_cover(m);
  return submodule(pc.cover, pc.kernel);
}

template <class K>
void check_algebra_map(const AlgebraMap<K>& f) {
  const Algebra<K>& s = *f.source;
  const Algebra<K>& t = *f.target;
  if (!(s.field() == t.field())) throw Error("algebra map: field mismatch");
  if (f.images.size() != s.dim()) throw Error("algebra map: one image per basis element required");
  for (const auto& v : f.images)
    if (v.size() != t.dim()) throw Error("algebra map: image has wrong length");
  std::vector<K> unit(t.dim());
  for (std::size_t v = 0; v < s.num_vertices(); ++v)
    for (std::size_t z = 0; z < t.dim(); ++z) unit[z] += f.images[s.idempotents()[v]][z];
  std::vector<K> one(t.dim());
  for (std::size_t e : t.idempotents()) one[e] = t.one();
  if (unit != one) throw Error("algebra map is not unital");
  for (std::size_t x = 0; x < s.dim(); ++x)
    for (std::size_t y = 0; y < s.dim(); ++y) {
      const auto lhs = t.multiply(f.images[x], f.images[y]);
      std::vector<K> rhs(t.dim());
      for (const auto& [z, c] : s.product(x, y))
        for (std::size_t w = 0; w < t.dim(); ++w) rhs[w] += c * f.images[z][w];
      if (lhs != rhs)
        throw Error("algebra map is not multiplicative at (" + s.basis(x).label + ", " + s.basis(y).label + ")");
    }
}

template <class K>
AlgebraMap<K> right_factor_map(const AlgebraPtr<K>& c_op, const AlgebraPtr<K>& b, const AlgebraPtr<K>& ce) {
  AlgebraMap<K> f{b, ce, {}};
  for (std::size_t y = 0; y < b->dim(); ++y) {
    std::vector<K> v(ce->dim());
    for (std::size_t e : c_op->idempotents()) v[tensor_pair_index(*c_op, *b, e, y)] = ce->one();
    f.images.push_back(std::move(v));
  }
  return f;
}

template <class K>
AlgebraMap<K> left_factor_map(const AlgebraPtr<K>& c_op, const AlgebraPtr<K>& b, const AlgebraPtr<K>& ce) {
  AlgebraMap<K> f{c_op, ce, {}};
  for (std::size_t x = 0; x < c_op->dim(); ++x) {
    std::vector<K> v(ce->dim());
    for (std::size_t e : b->idempotents()) v[tensor_pair_index(*c_op, *b, x, e)] = ce->one();
    f.images.push_back(std::move(v));
  }
  return f;
}

template <class K>
Module<K> restrict_along(const AlgebraMap<K>& f, const Module<K>& m) {
  if (!same_algebra(*f.target, m.algebra())) throw Error("restrict_along: module is not over the target algebra");
  check_algebra_map(f);
  std::vector<Matrix<K>> actions;
  for (std::size_t x = 0; x < f.source->dim(); ++x) {
    Matrix<K> act(m.dim(), m.dim(), m.field());
    for (std::size_t z = 0; z < f.target->dim(); ++z) {
      const K& c = f.images[x][z];
      if (is_zero(c)) continue;
      const auto& bz = f.target->basis(z);
      const Matrix<K>& blk = m.block(z);
      for (std::size_t p = 0; p < blk.rows(); ++p)
        for (std::size_t q = 0; q < blk.cols(); ++q)
          if (!is_zero(blk(p, q))) act(m.offset(bz.left) + p, m.offset(bz.right) + q) += c * blk(p, q);
    }
    actions.push_back(std::move(act));
  }
  return Module<K>::from_full_actions(f.source, actions);
}

template <class K>
Module<K> bimodule_from_actions(const AlgebraPtr<K>& c_op, const AlgebraPtr<K>& b, const AlgebraPtr<K>& ce,
                                const std::vector<Matrix<K>>& left, const std::vector<Matrix<K>>& right) {
  if (left.size() != c_op->dim() || right.size() != b->dim()) throw Error("bimodule: wrong number of action matrices");
  std::vector<Matrix<K>> actions(ce->dim());
  for (std::size_t x = 0; x < c_op->dim(); ++x)
    for (std::size_t y = 0; y < b->dim(); ++y) {
      if (left[x].rows() != left[x].cols() || right[y].rows() != left[x].rows() || right[y].cols() != left[x].rows())
        throw Error("bimodule: action matrices must be square of equal size");
      actions[tensor_pair_index(*c_op, *b, x, y)] = left[x] * right[y];
    }
  for (std::size_t x = 0; x < c_op->dim(); ++x)
    for (std::size_t y = 0; y < b->dim(); ++y)
      if (!(left[x] * right[y] == right[y] * left[x])) throw Error("bimodule: left and right actions do not commute");
  auto m = Module<K>::from_full_actions(ce, actions);
  if (auto err = validate_module(m)) throw Error("bimodule: " + *err);
  return m;
}

template <class K>
std::vector<Matrix<K>> bimodule_right_actions(const Module<K>& m, const Algebra<K>& c_op, const Algebra<K>& b) {
  std::vector<Matrix<K>> out;
  for (std::size_t y = 0; y < b.dim(); ++y) {
    Matrix<K> act(m.dim(), m.dim(), m.field());
    for (std::size_t e : c_op.idempotents()) act = act + m.action(tensor_pair_index(c_op, b, e, y));
    out.push_back(std::move(act));
  }
  return out;
}

template <class K>
std::vector<Matrix<K>> bimodule_left_actions(const Module<K>& m, const Algebra<K>& c_op, const Algebra<K>& b) {
  std::vector<Matrix<K>> out;
  for (std::size_t x = 0; x < c_op.dim(); ++x) {
    Matrix<K> act(m.dim(), m.dim(), m.field());
    for (std::size_t e : b.idempotents()) act = act + m.action(tensor_pair_index(c_op, b, x, e));
    out.push_back(std::move(act));
  }
  return out;
}

template <class K>
Module<K> corner_right_module(const Algebra<K>& a, const VertexSet& e, const AlgebraPtr<K>& corner_algebra) {
  const auto keep = corner_keep(a, e);
  if (keep.size() != corner_algebra->dim()) throw Error("corner module: corner algebra does not match");
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t v : e) groups.push_back(a.with_right(v));
  return module_on_elements<K>(corner_algebra, a.dim(), groups,
                               [&](std::size_t p, std::size_t x) { return a.product(p, keep[x]); });
}

template <class K>
Module<K> corner_left_module(const Algebra<K>& a, const VertexSet& e, const AlgebraPtr<K>& corner_op) {
  const auto keep = corner_keep(a, e);
  if (keep.size() != corner_op->dim()) throw Error("corner module: corner algebra does not match");
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t v : e) groups.push_back(a.with_left(v));
  return module_on_elements<K>(corner_op, a.dim(), groups,
                               [&](std::size_t p, std::size_t x) { return a.product(keep[x], p); });
}

#define HOMKIT_INSTANTIATE_MODULE(K)                                                                              \
  template class Module<K>;                                                                                       \
  template std::optional<std::string> validate_module<K>(const Module<K>&);                                       \
  template Module<K> projective<K>(const AlgebraPtr<K>&, std::size_t);                                            \
  template Module<K> simple<K>(const AlgebraPtr<K>&, std::size_t);                                               \
  template Module<K> regular<K>(const AlgebraPtr<K>&);                                                            \
  template Module<K> dual<K>(const Module<K>&, AlgebraPtr<K>);                                                    \
  template Module<K> injective<K>(const AlgebraPtr<K>&, std::size_t);                                             \
  template Module<K> direct_sum<K>(const Module<K>&, const Module<K>&);                                           \
  template Module<K> submodule<K>(const Module<K>&, const std::vector<Subspace<K>>&);                             \
  template HomSpace<K> hom_space<K>(const Module<K>&, const Module<K>&);                                          \
  template std::vector<Subspace<K>> radical_subspaces<K>(const Module<K>&);                                       \
  template Module<K> radical_submodule<K>(const Module<K>&);                                                      \
  template std::vector<std::size_t> top<K>(const Module<K>&);                                                     \
  template Module<K> free_module<K>(const AlgebraPtr<K>&, const std::vector<std::size_t>&);                       \
  template ProjectiveCover<K> projective_cover<K>(const Module<K>&);                                              \
  template Module<K> syzygy<K>(const Module<K>&);                                                                 \
  template void check_algebra_map<K>(const AlgebraMap<K>&);                                                       \
  template AlgebraMap<K> right_factor_map<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&, const AlgebraPtr<K>&);   \
  template AlgebraMap<K> left_factor_map<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&, const AlgebraPtr<K>&);    \
  template Module<K> restrict_along<K>(const AlgebraMap<K>&, const Module<K>&);                                   \
  template Module<K> bimodule_from_actions<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&, const AlgebraPtr<K>&,   \
                                              const std::vector<Matrix<K>>&, const std::vector<Matrix<K>>&);      \
  template std::vector<Matrix<K>> bimodule_right_actions<K>(const Module<K>&, const Algebra<K>&,                  \
                                                            const Algebra<K>&);                                   \
  template std::vector<Matrix<K>> bimodule_left_actions<K>(const Module<K>&, const Algebra<K>&, const Algebra<K>&); \
  template Module<K> corner_right_module<K>(const Algebra<K>&, const VertexSet&, const AlgebraPtr<K>&);           \
  template Module<K> corner_left_module<K>(const Algebra<K>&, const VertexSet&, const AlgebraPtr<K>&);

HOMKIT_INSTANTIATE_MODULE(Rational)
HOMKIT_INSTANTIATE_MODULE(Fp)

}  // namespace homkit
