#include "homkit/algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

#include "homkit/linalg.hpp"
#include "homkit/module.hpp"

namespace homkit {

namespace {

template <class K>
void axpy(std::vector<K>& acc, const K& c, const SparseVector<K>& v) {
  for (const auto& [z, coef] : v) acc[z] += c * coef;
}

template <class K>
SparseVector<K> to_sparse(const std::vector<K>& v) {
  SparseVector<K> s;
  for (std::size_t z = 0; z < v.size(); ++z)
    if (!is_zero(v[z])) s.emplace_back(z, v[z]);
  return s;
}

// Radical elements independent modulo rad^2, computed block by block (every
// product of tagged basis elements stays inside one block).
template <class K>
std::vector<std::size_t> compute_radical_generators(const Algebra<K>& a) {
  const std::size_t r = a.num_vertices();
  std::vector<std::size_t> local(a.dim());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto& blk = a.block(i, j);
      for (std::size_t k = 0; k < blk.size(); ++k) local[blk[k]] = k;
    }
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto& blk = a.block(i, j);
      if (blk.empty()) continue;
      Echelon<K> sq(blk.size());
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t x : a.block(i, k)) {
          if (a.is_idempotent_index(x)) continue;
          for (std::size_t y : a.block(k, j)) {
            if (a.is_idempotent_index(y)) continue;
            const auto& p = a.product(x, y);
            if (p.empty()) continue;
            std::vector<K> v(blk.size());
            for (const auto& [z, c] : p) v[local[z]] = c;
            sq.add(std::move(v));
          }
        }
      for (std::size_t x : blk) {
        if (a.is_idempotent_index(x)) continue;
        std::vector<K> v(blk.size());
        v[local[x]] = a.one();
        if (sq.add(std::move(v))) gens.push_back(x);
      }
    }
  std::sort(gens.begin(), gens.end());
  return gens;
}

}  // namespace

template <class K>
Algebra<K>::Algebra(FieldSpec field, std::string name, std::vector<BasisElement> basis,
                    std::vector<std::size_t> idempotents, std::vector<std::size_t> radical,
                    std::vector<SparseVector<K>> table)
    : field_(field),
      name_(std::move(name)),
      basis_(std::move(basis)),
      idempotents_(std::move(idempotents)),
      radical_(std::move(radical)),
      table_(std::move(table)) {
  require_field_kind<K>(field_);
  const std::size_t n = basis_.size();
  const std::size_t r = idempotents_.size();
  if (table_.size() != n * n) throw Error("algebra: structure table has wrong size");
  if (idempotents_.size() + radical_.size() != n)
    throw Error("algebra: idempotents and radical basis do not partition the basis");
  vertex_of_.assign(n, kNoVertex);
  std::vector<bool> seen(n, false);
  for (std::size_t v = 0; v < r; ++v) {
    const std::size_t x = idempotents_[v];
    if (x >= n || seen[x]) throw Error("algebra: bad idempotent index");
    seen[x] = true;
    vertex_of_[x] = v;
    if (basis_[x].left != v || basis_[x].right != v) throw Error("algebra: idempotent e" + std::to_string(v) + " has wrong tags");
  }
  for (std::size_t x : radical_) {
    if (x >= n || seen[x]) throw Error("algebra: bad radical index");
    seen[x] = true;
  }
  std::unordered_set<std::string> labels;
  for (const auto& b : basis_) {
    if (b.left >= r || b.right >= r) throw Error("algebra: vertex tag out of range for '" + b.label + "'");
    if (!labels.insert(b.label).second) throw Error("algebra: duplicate basis label '" + b.label + "'");
  }
  for (const auto& p : table_)
    for (const auto& [z, c] : p) {
      if (z >= n) throw Error("algebra: structure constant index out of range");
      (void)c;
    }
  blocks_.assign(r * r, {});
  for (std::size_t x = 0; x < n; ++x) blocks_[basis_[x].left * r + basis_[x].right].push_back(x);
  radical_generators_ = compute_radical_generators(*this);
}

template <class K>
std::vector<std::size_t> Algebra<K>::with_left(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < dim(); ++x)
    if (basis_[x].left == i) out.push_back(x);
  return out;
}

template <class K>
std::vector<std::size_t> Algebra<K>::with_right(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < dim(); ++x)
    if (basis_[x].right == j) out.push_back(x);
  return out;
}

template <class K>
std::vector<K> Algebra<K>::unit_vector(std::size_t x) const {
  std::vector<K> v(dim());
  v[x] = one();
  return v;
}

template <class K>
std::vector<K> Algebra<K>::multiply(std::span<const K> a, std::span<const K> b) const {
  std::vector<K> out(dim());
  for (std::size_t x = 0; x < dim(); ++x) {
    if (is_zero(a[x])) continue;
    for (std::size_t y = 0; y < dim(); ++y) {
      if (is_zero(b[y])) continue;
      axpy(out, K(a[x] * b[y]), product(x, y));
    }
  }
  return out;
}

template <class K>
std::shared_ptr<const Algebra<K>> Algebra<K>::renamed(std::string name) const {
  return std::make_shared<const Algebra<K>>(field_, std::move(name), basis_, idempotents_, radical_, table_);
}

template <class K>
ValidationReport validate(const Algebra<K>& a) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  const std::size_t r = a.num_vertices();
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failure = std::move(msg);
    return rep;
  };
  const auto& B = a.basis();

  // Tags and the idempotent axioms.
  for (std::size_t v = 0; v < r; ++v) {
    const std::size_t e = a.idempotents()[v];
    for (std::size_t x = 0; x < n; ++x) {
      const SparseVector<K> unit{{x, a.one()}};
      const auto& left = a.product(e, x);
      const auto& right = a.product(x, e);
      if (left != (B[x].left == v ? unit : SparseVector<K>{}))
        return fail("e" + std::to_string(v) + " * " + B[x].label + " disagrees with the vertex tags");
      if (right != (B[x].right == v ? unit : SparseVector<K>{}))
        return fail(B[x].label + " * e" + std::to_string(v) + " disagrees with the vertex tags");
    }
  }

  // Products vanish across mismatched tags and land in the expected block.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& p = a.product(x, y);
      if (p.empty()) continue;
      if (B[x].right != B[y].left) return fail(B[x].label + " * " + B[y].label + " is nonzero across vertices");
      for (const auto& [z, c] : p)
        if (B[z].left != B[x].left || B[z].right != B[y].right)
          return fail(B[x].label + " * " + B[y].label + " leaves its vertex block");
    }

  // Associativity over all composable triples.
  std::vector<K> lhs(n), rhs(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : a.with_left(B[x].right))
      for (std::size_t z : a.with_left(B[y].right)) {
        std::fill(lhs.begin(), lhs.end(), K());
        std::fill(rhs.begin(), rhs.end(), K());
        for (const auto& [u, c] : a.product(x, y)) axpy(lhs, c, a.product(u, z));
        for (const auto& [u, c] : a.product(y, z)) axpy(rhs, c, a.product(x, u));
        if (lhs != rhs) return fail("associativity fails at (" + B[x].label + ", " + B[y].label + ", " + B[z].label + ")");
      }

  // The radical is a two-sided ideal.
  for (std::size_t rr : a.radical())
    for (std::size_t x = 0; x < n; ++x)
      for (const auto* p : {&a.product(rr, x), &a.product(x, rr)})
        for (const auto& [z, c] : *p)
          if (a.is_idempotent_index(z))
            return fail("radical is not an ideal (" + B[rr].label + " times " + B[x].label + ")");

  // Nilpotency: rad^k as spans until zero.
  std::vector<std::vector<K>> power;
  for (std::size_t rr : a.radical()) power.push_back(a.unit_vector(rr));
  std::size_t k = 1;
  while (!power.empty()) {
    if (k > n + 1) return fail("radical is not nilpotent");
    Echelon<K> next(n);
    for (const auto& v : power)
      for (std::size_t rr : a.radical()) {
        std::vector<K> w(n);
        for (std::size_t x = 0; x < n; ++x)
          if (!is_zero(v[x])) axpy(w, v[x], a.product(x, rr));
        next.add(std::move(w));
      }
    power = next.rows();
    ++k;
  }
  rep.nilpotency_index = k;
  return rep;
}

namespace {

// Sparse echelon form whose rows are normalised at their largest
// coordinate. Reduction sweeps the coordinates from the top down.
template <class K>
class TrailingEchelon {
 public:
  void reduce(std::map<std::size_t, K>& v) const {
    std::size_t bound = std::numeric_limits<std::size_t>::max();
    while (true) {
      auto it = v.lower_bound(bound);
      if (it == v.begin()) return;
      --it;
      const std::size_t key = it->first;
      bound = key;
      auto pr = pivot_row_.find(key);
      if (pr == pivot_row_.end()) continue;
      const K c = it->second;
      for (const auto& [col, val] : rows_[pr->second]) {
        auto [slot, inserted] = v.try_emplace(col);
        slot->second -= c * val;
        if (is_zero(slot->second)) v.erase(slot);
      }
    }
  }

  bool add(std::map<std::size_t, K> v) {
    reduce(v);
    if (v.empty()) return false;
    auto last = std::prev(v.end());
    const K inv = inverse(last->second);
    SparseVector<K> row;
    for (const auto& [col, val] : v) row.emplace_back(col, val * inv);
    pivot_row_.emplace(last->first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  const std::vector<SparseVector<K>>& rows() const { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_row_.count(col) > 0; }

 private:
  std::vector<SparseVector<K>> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

}  // namespace

template <class K>
AlgebraPtr<K> from_quiver(const AlgebraSpec& spec) {
  require_field_kind<K>(spec.field);
  const Quiver& q = spec.quiver;
  if (q.num_vertices() == 0) throw Error("quiver has no vertices");
  for (std::size_t N = 2; N <= spec.degree_cutoff + 1; ++N) {
    // Work in kQ / J^N: paths of length < N.
    const auto by_length = enumerate_paths(q, N - 1);
    std::vector<Path> paths;
    for (const auto& g : by_length) paths.insert(paths.end(), g.begin(), g.end());
    std::map<Path, std::size_t> index;
    for (std::size_t k = 0; k < paths.size(); ++k) index.emplace(paths[k], k);

    auto lookup = [&](const std::optional<Path>& p) -> std::optional<std::size_t> {
      if (!p || p->length() >= N) return std::nullopt;
      return index.at(*p);
    };
    auto multiply_by_arrow = [&](const SparseVector<K>& v, std::size_t arrow, bool on_left) {
      std::map<std::size_t, K> out;
      const Path ap = Path::arrow(q, arrow);
      for (const auto& [col, val] : v) {
        auto k = lookup(on_left ? compose(ap, paths[col]) : compose(paths[col], ap));
        if (!k) continue;
        auto [slot, inserted] = out.try_emplace(*k);
        slot->second += val;
        if (is_zero(slot->second)) out.erase(slot);
      }
      return out;
    };

    TrailingEchelon<K> ideal;
    std::vector<std::map<std::size_t, K>> queue;
    for (const auto& rel : spec.relations) {
      std::map<std::size_t, K> v;
      for (const auto& term : rel.terms) {
        if (term.path.length() >= N) continue;
        const K c = from_rational<K>(spec.field, term.coefficient);
        if (!is_zero(c)) v[index.at(term.path)] += c;
      }
      std::erase_if(v, [](const auto& kv) { return is_zero(kv.second); });
      if (!v.empty()) queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
      auto v = std::move(queue.back());
      queue.pop_back();
      if (!ideal.add(std::move(v))) continue;
      const SparseVector<K> row = ideal.rows().back();
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        for (bool left : {true, false}) {
          auto w = multiply_by_arrow(row, a, left);
          if (!w.empty()) queue.push_back(std::move(w));
        }
    }

    bool vanished = true;
    if (by_length.size() == N) {
      for (const Path& p : by_length[N - 1]) {
        std::map<std::size_t, K> v{{index.at(p), from_int<K>(spec.field, 1)}};
        ideal.reduce(v);
        if (!v.empty()) {
          vanished = false;
          break;
        }
      }
    }
    if (!vanished) continue;

    // Normal forms: the paths of length < N - 1 that are not pivots.
    std::vector<std::size_t> basis_paths;
    std::vector<std::size_t> basis_of(paths.size(), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < paths.size(); ++k) {
      if (paths[k].length() + 1 >= N || ideal.is_pivot(k)) continue;
      basis_of[k] = basis_paths.size();
      basis_paths.push_back(k);
    }
    const std::size_t n = basis_paths.size();
    std::vector<BasisElement> basis;
    std::vector<std::size_t> idempotents, radical, arrows;
    for (std::size_t b = 0; b < n; ++b) {
      const Path& p = paths[basis_paths[b]];
      basis.push_back({path_label(q, p), p.source, p.target});
      if (p.length() == 0)
        idempotents.push_back(b);
      else
        radical.push_back(b);
    }
    std::vector<SparseVector<K>> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        auto k = lookup(compose(paths[basis_paths[x]], paths[basis_paths[y]]));
        if (!k) continue;
        std::map<std::size_t, K> v{{*k, from_int<K>(spec.field, 1)}};
        ideal.reduce(v);
        auto& out = table[x * n + y];
        for (const auto& [col, val] : v) {
          if (basis_of[col] == static_cast<std::size_t>(-1))
            throw Error("from_quiver: normal form outside the truncated basis");
          out.emplace_back(basis_of[col], val);
        }
        std::sort(out.begin(), out.end(), [](const auto& s, const auto& t) { return s.first < t.first; });
      }
    return std::make_shared<const Algebra<K>>(spec.field, spec.name.empty() ? "A" : spec.name, std::move(basis),
                                              std::move(idempotents), std::move(radical), std::move(table));
  }
  throw Error("not visibly finite-dimensional within degree_cutoff " + std::to_string(spec.degree_cutoff));
}

template <class K>
AlgebraPtr<K> ground_field(const FieldSpec& field) {
  std::vector<SparseVector<K>> table{{{0, from_int<K>(field, 1)}}};
  return std::make_shared<const Algebra<K>>(field, "k", std::vector<BasisElement>{{"e1", 0, 0}},
                                            std::vector<std::size_t>{0}, std::vector<std::size_t>{}, std::move(table));
}

template <class K>
AlgebraPtr<K> opposite(const Algebra<K>& a) {
  const std::size_t n = a.dim();
  std::vector<BasisElement> basis = a.basis();
  for (auto& b : basis) std::swap(b.left, b.right);
  std::vector<SparseVector<K>> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = a.product(y, x);
  std::string name = a.name();
  if (name.ends_with("^op"))
    name.resize(name.size() - 3);
  else
    name += "^op";
  return std::make_shared<const Algebra<K>>(a.field(), std::move(name), std::move(basis), a.idempotents(), a.radical(),
                                            std::move(table));
}

std::size_t tensor_pair_index(std::size_t dim_a, std::size_t dim_b, std::span<const std::size_t> idempotents_a,
                              std::span<const std::size_t> idempotents_b, std::size_t x, std::size_t y) {
  (void)dim_a;
  auto rank_below = [](std::span<const std::size_t> idem, std::size_t x) {
    std::size_t c = 0;
    for (std::size_t e : idem) c += e < x;
    return c;
  };
  auto vertex = [](std::span<const std::size_t> idem, std::size_t x) -> std::optional<std::size_t> {
    for (std::size_t v = 0; v < idem.size(); ++v)
      if (idem[v] == x) return v;
    return std::nullopt;
  };
  const std::size_t ra = idempotents_a.size(), rb = idempotents_b.size();
  const auto vx = vertex(idempotents_a, x);
  const auto vy = vertex(idempotents_b, y);
  if (vx && vy) return *vx * rb + *vy;
  std::size_t idx = ra * rb + x * dim_b - rank_below(idempotents_a, x) * rb;
  idx += vx ? y - rank_below(idempotents_b, y) : y;
  return idx;
}

template <class K>
AlgebraPtr<K> tensor(const Algebra<K>& a, const Algebra<K>& b) {
  if (!(a.field() == b.field())) throw Error("tensor: field mismatch");
  const std::size_t na = a.dim(), nb = b.dim(), rb = b.num_vertices();
  const std::size_t n = na * nb;
  std::vector<std::size_t> idx(n);
  std::vector<BasisElement> basis(n);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t k = tensor_pair_index(a, b, x, y);
      idx[x * nb + y] = k;
      basis[k] = {a.basis(x).label + "|" + b.basis(y).label, a.basis(x).left * rb + b.basis(y).left,
                  a.basis(x).right * rb + b.basis(y).right};
    }
  std::vector<std::size_t> idempotents, radical;
  for (std::size_t i = 0; i < a.num_vertices(); ++i)
    for (std::size_t j = 0; j < rb; ++j) idempotents.push_back(i * rb + j);
  for (std::size_t k = idempotents.size(); k < n; ++k) radical.push_back(k);

  std::vector<SparseVector<K>> table(n * n);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t x2 = 0; x2 < na; ++x2) {
      const auto& pa = a.product(x, x2);
      if (pa.empty()) continue;
      for (std::size_t y = 0; y < nb; ++y)
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          const auto& pb = b.product(y, y2);
          if (pb.empty()) continue;
          auto& out = table[idx[x * nb + y] * n + idx[x2 * nb + y2]];
          for (const auto& [u, cu] : pa)
            for (const auto& [w, cw] : pb) out.emplace_back(idx[u * nb + w], cu * cw);
          std::sort(out.begin(), out.end(), [](const auto& s, const auto& t) { return s.first < t.first; });
        }
    }
  return std::make_shared<const Algebra<K>>(a.field(), a.name() + "(x)" + b.name(), std::move(basis),
                                            std::move(idempotents), std::move(radical), std::move(table));
}

template <class K>
AlgebraPtr<K> enveloping(const Algebra<K>& a) {
  return tensor(*opposite(a), a)->renamed(a.name() + "^e");
}

VertexSet complement(std::size_t num_vertices, const VertexSet& e) {
  VertexSet out;
  for (std::size_t v = 0; v < num_vertices; ++v)
    if (!std::binary_search(e.begin(), e.end(), v)) out.push_back(v);
  return out;
}

void check_vertex_set(std::size_t num_vertices, const VertexSet& e, bool proper) {
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] >= num_vertices) throw Error("idempotent: vertex " + std::to_string(e[k] + 1) + " out of range");
    if (k > 0 && e[k] <= e[k - 1]) throw Error("idempotent: vertex list must be strictly increasing");
  }
  if (e.empty()) throw Error("idempotent: empty vertex set");
  if (proper && e.size() == num_vertices) throw Error("idempotent: vertex set must be proper");
}

namespace {

std::string set_text(const VertexSet& e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k] + 1);
  return s + "}";
}

}  // namespace

template <class K>
AlgebraPtr<K> corner(const Algebra<K>& a, const VertexSet& e) {
  check_vertex_set(a.num_vertices(), e, false);
  std::vector<std::size_t> new_vertex(a.num_vertices(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < e.size(); ++k) new_vertex[e[k]] = k;
  std::vector<std::size_t> keep, new_index(a.dim(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < a.dim(); ++x)
    if (new_vertex[a.basis(x).left] != static_cast<std::size_t>(-1) &&
        new_vertex[a.basis(x).right] != static_cast<std::size_t>(-1)) {
      new_index[x] = keep.size();
      keep.push_back(x);
    }
  const std::size_t n = keep.size();
  std::vector<BasisElement> basis;
  std::vector<std::size_t> idempotents(e.size()), radical;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& b = a.basis(keep[k]);
    basis.push_back({b.label, new_vertex[b.left], new_vertex[b.right]});
    if (auto v = a.vertex_of(keep[k]))
      idempotents[new_vertex[*v]] = k;
    else
      radical.push_back(k);
  }
  std::vector<SparseVector<K>> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [z, c] : a.product(keep[x], keep[y])) table[x * n + y].emplace_back(new_index[z], c);
  return std::make_shared<const Algebra<K>>(a.field(), "corner(" + a.name() + "," + set_text(e) + ")",
                                            std::move(basis), std::move(idempotents), std::move(radical),
                                            std::move(table));
}

namespace {

template <class K>
Echelon<K> idempotent_ideal(const Algebra<K>& a, const VertexSet& e) {
  Echelon<K> ideal(a.dim(), true);
  for (std::size_t s : e)
    for (std::size_t x : a.with_right(s))
      for (std::size_t y : a.with_left(s)) {
        const auto& p = a.product(x, y);
        if (p.empty()) continue;
        std::vector<K> v(a.dim());
        for (const auto& [z, c] : p) v[z] = c;
        ideal.add(std::move(v));
      }
  return ideal;
}

}  // namespace

template <class K>
std::size_t idempotent_ideal_dim(const Algebra<K>& a, const VertexSet& e) {
  check_vertex_set(a.num_vertices(), e, false);
  return idempotent_ideal(a, e).rank();
}

template <class K>
AlgebraPtr<K> quotient_by_idempotent_ideal(const Algebra<K>& a, const VertexSet& e) {
  check_vertex_set(a.num_vertices(), e, false);
  const Echelon<K> ideal = idempotent_ideal(a, e);
  std::vector<std::size_t> keep, new_index(a.dim(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < a.dim(); ++x)
    if (!ideal.is_pivot(x)) {
      new_index[x] = keep.size();
      keep.push_back(x);
    }
  const VertexSet surviving = complement(a.num_vertices(), e);
  std::vector<std::size_t> new_vertex(a.num_vertices(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < surviving.size(); ++k) new_vertex[surviving[k]] = k;
  const std::size_t n = keep.size();
  std::vector<BasisElement> basis;
  std::vector<std::size_t> idempotents(surviving.size(), static_cast<std::size_t>(-1)), radical;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& b = a.basis(keep[k]);
    if (new_vertex[b.left] == static_cast<std::size_t>(-1) || new_vertex[b.right] == static_cast<std::size_t>(-1))
      throw Error("quotient: surviving element at a removed vertex");
    basis.push_back({b.label, new_vertex[b.left], new_vertex[b.right]});
    if (auto v = a.vertex_of(keep[k]))
      idempotents[new_vertex[*v]] = k;
    else
      radical.push_back(k);
  }
  for (std::size_t x : idempotents)
    if (x == static_cast<std::size_t>(-1)) throw Error("quotient: a surviving vertex idempotent lies in AeA");
  std::vector<SparseVector<K>> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& p = a.product(keep[x], keep[y]);
      if (p.empty()) continue;
      std::vector<K> v(a.dim());
      for (const auto& [z, c] : p) v[z] = c;
      ideal.reduce(v);
      for (std::size_t z = 0; z < a.dim(); ++z)
        if (!is_zero(v[z])) table[x * n + y].emplace_back(new_index[z], v[z]);
    }
  return std::make_shared<const Algebra<K>>(a.field(), "quotient(" + a.name() + "," + set_text(e) + ")",
                                            std::move(basis), std::move(idempotents), std::move(radical),
                                            std::move(table));
}

template <class K>
AlgebraPtr<K> triangular(const AlgebraPtr<K>& b, const AlgebraPtr<K>& c, const Module<K>& m) {
  if (!(b->field() == c->field()) || !(m.field() == b->field())) throw Error("triangular: field mismatch");
  const auto c_op = opposite(*c);
  const Algebra<K>& ce = m.algebra();
  if (ce.dim() != c->dim() * b->dim() || ce.num_vertices() != c->num_vertices() * b->num_vertices())
    throw Error("triangular: bimodule is not over C^op (x) B");
  if (auto err = validate_module(m)) throw Error("triangular: invalid bimodule: " + *err);

  const std::size_t rb = b->num_vertices(), rc = c->num_vertices();
  const std::size_t n = b->dim() + c->dim() + m.dim();
  std::vector<std::size_t> bmap(b->dim()), cmap(c->dim()), mmap(m.dim());
  std::vector<BasisElement> basis(n);
  std::vector<std::size_t> idempotents, radical;
  std::size_t next = 0;
  for (std::size_t v = 0; v < rb; ++v) {
    bmap[b->idempotents()[v]] = next;
    idempotents.push_back(next++);
  }
  for (std::size_t v = 0; v < rc; ++v) {
    cmap[c->idempotents()[v]] = next;
    idempotents.push_back(next++);
  }
  for (std::size_t x : b->radical()) {
    bmap[x] = next;
    radical.push_back(next++);
  }
  std::vector<std::size_t> m_s(m.dim()), m_t(m.dim()), m_local(m.dim());
  for (std::size_t s = 0; s < rc; ++s)
    for (std::size_t t = 0; t < rb; ++t) {
      const std::size_t v = s * rb + t;
      for (std::size_t k = 0; k < m.vertex_dim(v); ++k) {
        const std::size_t g = m.offset(v) + k;
        m_s[g] = s;
        m_t[g] = t;
        m_local[g] = k;
      }
    }
  for (std::size_t k = 0; k < m.dim(); ++k) {
    mmap[k] = next;
    radical.push_back(next++);
  }
  for (std::size_t x : c->radical()) {
    cmap[x] = next;
    radical.push_back(next++);
  }
  for (std::size_t x = 0; x < b->dim(); ++x)
    basis[bmap[x]] = {"b:" + b->basis(x).label, b->basis(x).left, b->basis(x).right};
  for (std::size_t x = 0; x < c->dim(); ++x)
    basis[cmap[x]] = {"c:" + c->basis(x).label, rb + c->basis(x).left, rb + c->basis(x).right};
  for (std::size_t k = 0; k < m.dim(); ++k) basis[mmap[k]] = {"m" + std::to_string(k), rb + m_s[k], m_t[k]};

  std::vector<SparseVector<K>> table(n * n);
  auto sorted = [](SparseVector<K> v) {
    std::sort(v.begin(), v.end(), [](const auto& s, const auto& t) { return s.first < t.first; });
    return v;
  };
  for (std::size_t x = 0; x < b->dim(); ++x)
    for (std::size_t y = 0; y < b->dim(); ++y) {
      SparseVector<K> v;
      for (const auto& [z, cz] : b->product(x, y)) v.emplace_back(bmap[z], cz);
      table[bmap[x] * n + bmap[y]] = sorted(std::move(v));
    }
  for (std::size_t x = 0; x < c->dim(); ++x)
    for (std::size_t y = 0; y < c->dim(); ++y) {
      SparseVector<K> v;
      for (const auto& [z, cz] : c->product(x, y)) v.emplace_back(cmap[z], cz);
      table[cmap[x] * n + cmap[y]] = sorted(std::move(v));
    }
  // c * m: the action of c (x) e_t on the row of m.
  for (std::size_t x = 0; x < c->dim(); ++x)
    for (std::size_t k = 0; k < m.dim(); ++k) {
      if (c->basis(x).right != m_s[k]) continue;
      const std::size_t t = m_t[k];
      const std::size_t u = tensor_pair_index(*c_op, *b, x, b->idempotents()[t]);
      const Matrix<K>& blk = m.block(u);
      const std::size_t target_vertex = c->basis(x).left * rb + t;
      SparseVector<K> v;
      for (std::size_t j = 0; j < blk.cols(); ++j)
        if (!is_zero(blk(m_local[k], j))) v.emplace_back(mmap[m.offset(target_vertex) + j], blk(m_local[k], j));
      table[cmap[x] * n + mmap[k]] = sorted(std::move(v));
    }
  // m * b: the action of e_s (x) b.
  for (std::size_t k = 0; k < m.dim(); ++k)
    for (std::size_t y = 0; y < b->dim(); ++y) {
      if (b->basis(y).left != m_t[k]) continue;
      const std::size_t s = m_s[k];
      const std::size_t u = tensor_pair_index(*c_op, *b, c->idempotents()[s], y);
      const Matrix<K>& blk = m.block(u);
      const std::size_t target_vertex = s * rb + b->basis(y).right;
      SparseVector<K> v;
      for (std::size_t j = 0; j < blk.cols(); ++j)
        if (!is_zero(blk(m_local[k], j))) v.emplace_back(mmap[m.offset(target_vertex) + j], blk(m_local[k], j));
      table[mmap[k] * n + bmap[y]] = sorted(std::move(v));
    }
  return std::make_shared<const Algebra<K>>(b->field(), "triangular(" + b->name() + "," + c->name() + ")",
                                            std::move(basis), std::move(idempotents), std::move(radical),
                                            std::move(table));
}

#define HOMKIT_INSTANTIATE_ALGEBRA(K)                                                          \
  template class Algebra<K>;                                                                   \
  template ValidationReport validate<K>(const Algebra<K>&);                                    \
  template AlgebraPtr<K> from_quiver<K>(const AlgebraSpec&);                                   \
  template AlgebraPtr<K> ground_field<K>(const FieldSpec&);                                    \
  template AlgebraPtr<K> opposite<K>(const Algebra<K>&);                                       \
  template AlgebraPtr<K> tensor<K>(const Algebra<K>&, const Algebra<K>&);                      \
  template AlgebraPtr<K> enveloping<K>(const Algebra<K>&);                                     \
  template AlgebraPtr<K> corner<K>(const Algebra<K>&, const VertexSet&);                       \
  template std::size_t idempotent_ideal_dim<K>(const Algebra<K>&, const VertexSet&);          \
  template AlgebraPtr<K> quotient_by_idempotent_ideal<K>(const Algebra<K>&, const VertexSet&); \
  template AlgebraPtr<K> triangular<K>(const AlgebraPtr<K>&, const AlgebraPtr<K>&, const Module<K>&);

HOMKIT_INSTANTIATE_ALGEBRA(Rational)
HOMKIT_INSTANTIATE_ALGEBRA(Fp)

}  // namespace homkit
