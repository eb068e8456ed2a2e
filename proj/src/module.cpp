#include "periplectic/module.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace peri {

namespace {

std::vector<std::uint32_t> weight_key(const Field& f, const Weight& w) {
  std::vector<std::uint32_t> k(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) k[i] = f.packed(w[i]);
  return k;
}

std::vector<std::size_t> pivots_of(const Matrix& rr) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < rr.rows(); ++i) {
    std::size_t j = 0;
    while (j < rr.cols() && rr(i, j).v == 0) ++j;
    piv.push_back(j);
  }
  return piv;
}

Subspace from_echelon(const Field& f, const std::vector<EchelonBasis>& eb) {
  Subspace s;
  for (const auto& e : eb) {
    s.rows.push_back(e.to_rref(f));
    s.pivots.push_back(pivots_of(s.rows.back()));
  }
  return s;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Fe x) { return x.v == 0; });
}

Matrix select(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& piv) {
  std::vector<char> is_piv(n, 0);
  for (auto p : piv) is_piv[p] = 1;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) out.push_back(j);
  return out;
}

std::vector<std::size_t> iota_sz(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

WeightModule::WeightModule(std::shared_ptr<const Field> field, std::shared_ptr<const Algebra> alg, std::vector<int> acting)
    : field_(std::move(field)), alg_(std::move(alg)), acting_(std::move(acting)) {
  std::sort(acting_.begin(), acting_.end());
  acting_.erase(std::unique(acting_.begin(), acting_.end()), acting_.end());
  acts_.assign(alg_->dim(), 0);
  for (int a : acting_) acts_.at(a) = 1;
}

int WeightModule::find_weight(const Weight& mu) const {
  auto it = index_.find(weight_key(*field_, mu));
  return it == index_.end() ? -1 : it->second;
}

const Block& WeightModule::block(int a, int w) const {
  static const Block empty{};
  if (!acts(a)) return empty;
  return blocks_[a][w];
}

int WeightModule::shift(int a, int w) const { return shift_[a][w]; }

void WeightModule::set_basis(const std::vector<Weight>& natural_weights) {
  const Field& f = *field_;
  std::vector<Weight> distinct = natural_weights;
  std::sort(distinct.begin(), distinct.end(), [&f](const Weight& a, const Weight& b) { return weight_less(f, a, b); });
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  weights_ = distinct;
  index_.clear();
  for (std::size_t w = 0; w < weights_.size(); ++w) index_[weight_key(f, weights_[w])] = static_cast<int>(w);
  members_.assign(weights_.size(), {});
  position_.resize(natural_weights.size());
  for (std::size_t i = 0; i < natural_weights.size(); ++i) {
    const int w = find_weight(natural_weights[i]);
    position_[i] = {w, static_cast<int>(members_[w].size())};
    members_[w].push_back(static_cast<int>(i));
  }
  const int d = alg_->dim();
  shift_.assign(d, std::vector<int>(weights_.size(), -1));
  blocks_.assign(d, {});
  for (int a = 0; a < d; ++a) {
    const auto root = alg_->root_coords(a);
    for (std::size_t w = 0; w < weights_.size(); ++w) shift_[a][w] = find_weight(weight_shift(f, weights_[w], root));
    if (!acts(a)) continue;
    blocks_[a].resize(weights_.size());
    for (std::size_t w = 0; w < weights_.size(); ++w) {
      const int t = shift_[a][w];
      blocks_[a][w].target = t;
      if (t >= 0) blocks_[a][w].m = Matrix(members_[t].size(), members_[w].size());
    }
  }
}

void WeightModule::add_entry(int a, int i, int j, Fe c) {
  if (c.v == 0) return;
  if (!acts(a)) throw std::logic_error("add_entry: element does not act");
  const auto [wi, li] = position_.at(i);
  const auto [wj, lj] = position_.at(j);
  Block& b = blocks_[a][wj];
  if (b.target != wi)
    throw std::logic_error("action of " + alg_->basis[a].name + " does not respect weights");
  b.m(li, lj) = field_->add(b.m(li, lj), c);
}

void WeightModule::set_block(int a, int w, Matrix m) {
  Block& b = blocks_.at(a).at(w);
  if (b.target < 0 ? !m.empty() : (m.rows() != members_[b.target].size() || m.cols() != members_[w].size()))
    throw std::logic_error("set_block: shape mismatch");
  if (b.target >= 0) b.m = std::move(m);
}

Matrix WeightModule::dense(int a) const {
  Matrix out(dim(), dim());
  if (!acts(a)) return out;
  for (int w = 0; w < num_weights(); ++w) {
    const Block& b = blocks_[a][w];
    if (b.target < 0) continue;
    for (std::size_t i = 0; i < b.m.rows(); ++i)
      for (std::size_t j = 0; j < b.m.cols(); ++j) out(members_[b.target][i], members_[w][j]) = b.m(i, j);
  }
  return out;
}

Vec WeightModule::to_natural(int w, const Vec& local) const {
  Vec out(dim());
  for (std::size_t j = 0; j < local.size(); ++j) out[members_[w][j]] = local[j];
  return out;
}

std::vector<Weight> WeightModule::natural_weights() const {
  std::vector<Weight> out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = weights_[position_[i].first];
  return out;
}

std::vector<std::pair<Weight, int>> WeightModule::character() const {
  std::vector<std::pair<Weight, int>> out;
  for (int w = 0; w < num_weights(); ++w) out.emplace_back(weights_[w], weight_dim(w));
  return out;
}

WeightModule module_from_dense(std::shared_ptr<const Field> field, std::shared_ptr<const Algebra> alg,
                               const std::vector<Weight>& natural_weights, const std::map<int, Matrix>& actions) {
  std::vector<int> acting;
  for (const auto& [a, m] : actions) acting.push_back(a);
  WeightModule mod(field, alg, acting);
  mod.set_basis(natural_weights);
  for (const auto& [a, m] : actions) {
    if (m.rows() != natural_weights.size() || m.cols() != natural_weights.size())
      throw std::invalid_argument("module_from_dense: matrix size mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) mod.add_entry(a, static_cast<int>(i), static_cast<int>(j), m(i, j));
  }
  return mod;
}

// ---------------------------------------------------------------------------

namespace {

// rho(z) restricted to source weight w as a dim(target) x dim(w) matrix, where
// target is given; zero when z does not reach it.
Matrix restricted(const WeightModule& m, int z, int w, int target) {
  const Block& b = m.block(z, w);
  if (b.target == target && target >= 0) return b.m;
  return Matrix(m.weight_dim(target), m.weight_dim(w));
}

Matrix path_product(const WeightModule& m, int a, int b, int w, int target) {
  const Block& bb = m.block(b, w);
  if (bb.target < 0) return Matrix(m.weight_dim(target), m.weight_dim(w));
  const Block& ba = m.block(a, bb.target);
  if (ba.target != target) return Matrix(m.weight_dim(target), m.weight_dim(w));
  return multiply(m.field(), ba.m, bb.m);
}

}  // namespace

ModuleReport verify_homomorphism(const WeightModule& m) {
  ModuleReport rep;
  const Field& f = m.field();
  const Algebra& alg = m.algebra();
  for (int a : m.acting())
    for (int b : m.acting()) {
      const Combo& br = alg.bracket(a, b);
      if (std::any_of(br.begin(), br.end(), [&m](const Term& t) { return !m.acts(t.index); })) continue;
      const bool plus = alg.parity(a) & alg.parity(b);
      auto offset = alg.root_coords(a);
      const auto rb = alg.root_coords(b);
      for (std::size_t k = 0; k < offset.size(); ++k) offset[k] += rb[k];
      for (int w = 0; w < m.num_weights(); ++w) {
        const int target = m.find_weight(weight_shift(f, m.weight(w), offset));
        if (target < 0) continue;
        ++rep.checks;
        const Matrix ab = path_product(m, a, b, w, target);
        const Matrix ba = path_product(m, b, a, w, target);
        Matrix lhs = plus ? add(f, ab, ba) : sub(f, ab, ba);
        for (const auto& t : br) lhs = sub(f, lhs, scale(f, f.from_int(t.coeff), restricted(m, t.index, w, target)));
        if (!lhs.is_zero())
          rep.violations.push_back("bracket [" + alg.basis[a].name + ", " + alg.basis[b].name + "] fails at weight " +
                                   weight_to_string(f, m.weight(w)));
      }
    }
  return rep;
}

ModuleReport verify_pchar(const WeightModule& m, const PChar& chi) {
  ModuleReport rep;
  const Field& f = m.field();
  const Algebra& alg = m.algebra();
  for (int a : m.acting()) {
    if (alg.parity(a)) continue;
    const Combo& pp = alg.p_power[a];
    for (int w = 0; w < m.num_weights(); ++w) {
      ++rep.checks;
      const int d = m.weight_dim(w);
      Matrix acc = Matrix::identity(d);
      int cur = w;
      for (int k = 0; k < f.p() && cur >= 0; ++k) {
        const Block& b = m.block(a, cur);
        if (b.target < 0) {
          cur = -1;
          break;
        }
        acc = multiply(f, b.m, acc);
        cur = b.target;
      }
      if (cur < 0) acc = Matrix(d, d);
      else if (cur != w) {
        rep.violations.push_back("p-th power of " + alg.basis[a].name + " changes weight");
        continue;
      }
      for (const auto& t : pp) {
        if (!m.acts(t.index)) {
          rep.violations.push_back("p-map of " + alg.basis[a].name + " leaves the acting set");
          continue;
        }
        acc = sub(f, acc, scale(f, f.from_int(t.coeff), restricted(m, t.index, w, w)));
      }
      acc = sub(f, acc, scale(f, f.from_int(chi.value(a)), Matrix::identity(d)));
      if (!acc.is_zero())
        rep.violations.push_back("p-character fails for " + alg.basis[a].name + " at weight " +
                                 weight_to_string(f, m.weight(w)));
    }
  }
  return rep;
}

ModuleReport verify_weights(const WeightModule& m) {
  ModuleReport rep;
  const Field& f = m.field();
  const Algebra& alg = m.algebra();
  for (int k = 1; k < alg.n; ++k) {
    const int h = alg.cartan(k);
    if (!m.acts(h)) {
      rep.violations.push_back("Cartan element " + alg.basis[h].name + " does not act");
      continue;
    }
    for (int w = 0; w < m.num_weights(); ++w) {
      ++rep.checks;
      const Matrix expect = scale(f, m.weight(w)[k - 1], Matrix::identity(m.weight_dim(w)));
      if (!(restricted(m, h, w, w) == expect))
        rep.violations.push_back(alg.basis[h].name + " is not the weight scalar at " + weight_to_string(f, m.weight(w)));
    }
  }
  return rep;
}

ModuleReport verify_grading(const WeightModule& m) {
  ModuleReport rep;
  if (!m.graded()) return rep;
  const Algebra& alg = m.algebra();
  for (int a : m.acting())
    for (int w = 0; w < m.num_weights(); ++w) {
      const Block& b = m.block(a, w);
      if (b.target < 0) continue;
      ++rep.checks;
      for (std::size_t i = 0; i < b.m.rows(); ++i)
        for (std::size_t j = 0; j < b.m.cols(); ++j) {
          if (b.m(i, j).v == 0) continue;
          const int gi = m.grades()[m.members(b.target)[i]];
          const int gj = m.grades()[m.members(w)[j]];
          if (gi != gj + alg.degree(a)) {
            rep.violations.push_back(alg.basis[a].name + " breaks the grading");
            i = b.m.rows();
            break;
          }
        }
    }
  return rep;
}

// ---------------------------------------------------------------------------

int Subspace::dim() const {
  int d = 0;
  for (const auto& r : rows) d += static_cast<int>(r.rows());
  return d;
}

Subspace zero_subspace(const WeightModule& m) {
  Subspace s;
  for (int w = 0; w < m.num_weights(); ++w) {
    s.rows.emplace_back(0, m.weight_dim(w));
    s.pivots.emplace_back();
  }
  return s;
}

Subspace full_subspace(const WeightModule& m) {
  Subspace s;
  for (int w = 0; w < m.num_weights(); ++w) {
    s.rows.push_back(Matrix::identity(m.weight_dim(w)));
    s.pivots.push_back(iota_sz(m.weight_dim(w)));
  }
  return s;
}

bool is_full(const WeightModule& m, const Subspace& s) { return s.dim() == m.dim(); }

bool contains(const WeightModule& m, const Subspace& s, const WeightVector& v) {
  const Field& f = m.field();
  Vec r = v.v;
  const Matrix& rows = s.rows[v.weight];
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    const Fe c = r[s.pivots[v.weight][k]];
    if (c.v) axpy(f, r, f.neg(c), rows.row_span(k));
  }
  return is_zero_vec(r);
}

Subspace subspace_sum(const WeightModule& m, const Subspace& a, const Subspace& b) {
  const Field& f = m.field();
  std::vector<EchelonBasis> eb;
  for (int w = 0; w < m.num_weights(); ++w) {
    eb.emplace_back(m.weight_dim(w));
    for (const Subspace* s : {&a, &b})
      for (std::size_t k = 0; k < s->rows[w].rows(); ++k) {
        const auto r = s->rows[w].row_span(k);
        eb.back().insert(f, Vec(r.begin(), r.end()));
      }
  }
  return from_echelon(f, eb);
}

WeightVector apply(const WeightModule& m, int a, const WeightVector& v) {
  const Block& b = m.block(a, v.weight);
  if (b.target < 0) return {-1, {}};
  return {b.target, peri::apply(m.field(), b.m, v.v)};
}

std::vector<WeightVector> weight_components(const WeightModule& m, const Vec& natural) {
  std::vector<WeightVector> out;
  for (int w = 0; w < m.num_weights(); ++w) {
    Vec local(m.weight_dim(w));
    for (int j = 0; j < m.weight_dim(w); ++j) local[j] = natural[m.members(w)[j]];
    if (!is_zero_vec(local)) out.push_back({w, std::move(local)});
  }
  return out;
}

namespace {

template <class Step>
Subspace spin_impl(const WeightModule& m, const std::vector<WeightVector>& seeds, Step step) {
  const Field& f = m.field();
  const Algebra& alg = m.algebra();
  std::vector<int> gens;
  for (int a : m.acting())
    if (alg.basis[a].kind != BasisKind::Cartan) gens.push_back(a);
  std::vector<EchelonBasis> eb;
  for (int w = 0; w < m.num_weights(); ++w) eb.emplace_back(m.weight_dim(w));
  std::deque<WeightVector> queue;
  int total = 0;
  auto push = [&](WeightVector v) {
    if (v.weight < 0 || total == m.dim()) return;
    if (eb[v.weight].insert(f, std::move(v.v))) {
      ++total;
      queue.push_back({v.weight, eb[v.weight].rows().back()});
    }
  };
  for (const auto& s : seeds) push(s);
  while (!queue.empty() && total < m.dim()) {
    const WeightVector v = std::move(queue.front());
    queue.pop_front();
    for (int a : gens) push(step(a, v));
  }
  if (total == m.dim()) return full_subspace(m);
  return from_echelon(f, eb);
}

}  // namespace

Subspace spin(const WeightModule& m, const std::vector<WeightVector>& seeds) {
  return spin_impl(m, seeds, [&m](int a, const WeightVector& v) { return apply(m, a, v); });
}

Subspace spin_dual(const WeightModule& m, const std::vector<WeightVector>& seeds) {
  // Row vector t at weight w maps under a to t * rho(a) restricted to the
  // source weight u with u + alpha = w.
  const Field& f = m.field();
  std::vector<std::vector<int>> preimage(m.algebra().dim(), std::vector<int>(m.num_weights(), -1));
  for (int a : m.acting())
    for (int u = 0; u < m.num_weights(); ++u) {
      const int t = m.block(a, u).target;
      if (t >= 0) preimage[a][t] = u;
    }
  return spin_impl(m, seeds, [&](int a, const WeightVector& t) -> WeightVector {
    const int u = preimage[a][t.weight];
    if (u < 0) return {-1, {}};
    const Matrix& b = m.block(a, u).m;
    Vec out(b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
      if (t.v[i].v) axpy(f, out, t.v[i], b.row_span(i));
    return {u, std::move(out)};
  });
}

Subspace annihilator(const WeightModule& m, const Subspace& dual) {
  const Field& f = m.field();
  Subspace s;
  for (int w = 0; w < m.num_weights(); ++w) {
    Matrix k = kernel_rows(f, dual.rows[w]);
    auto rr = rref(f, k);
    Matrix rows(rr.rank, m.weight_dim(w));
    for (std::size_t i = 0; i < rr.rank; ++i)
      std::copy(rr.reduced.row(i), rr.reduced.row(i) + m.weight_dim(w), rows.row(i));
    s.pivots.push_back(pivots_of(rows));
    s.rows.push_back(std::move(rows));
  }
  return s;
}

namespace {

std::optional<std::vector<std::vector<int>>> row_grades(const WeightModule& m, const Subspace& s) {
  if (!m.graded()) return std::nullopt;
  std::vector<std::vector<int>> out(m.num_weights());
  for (int w = 0; w < m.num_weights(); ++w)
    for (int k = 0; k < s.dim(w); ++k) {
      std::optional<int> g;
      for (int j = 0; j < m.weight_dim(w); ++j) {
        if (!s.rows[w](k, j).v) continue;
        const int gj = m.grades()[m.members(w)[j]];
        if (g && *g != gj) return std::nullopt;
        g = gj;
      }
      out[w].push_back(*g);
    }
  return out;
}

}  // namespace

WeightModule submodule(const WeightModule& m, const Subspace& s) {
  const Field& f = m.field();
  WeightModule out(m.field_ptr(), m.algebra_ptr(), m.acting());
  std::vector<Weight> nat;
  std::vector<int> grades;
  const auto rg = row_grades(m, s);
  for (int w = 0; w < m.num_weights(); ++w)
    for (int k = 0; k < s.dim(w); ++k) {
      nat.push_back(m.weight(w));
      if (rg) grades.push_back((*rg)[w][k]);
    }
  out.set_basis(nat);
  out.set_grades(std::move(grades));
  std::vector<int> new_index(m.num_weights(), -1);
  for (int w = 0; w < m.num_weights(); ++w)
    if (s.dim(w)) new_index[w] = out.find_weight(m.weight(w));
  for (int a : m.acting())
    for (int w = 0; w < m.num_weights(); ++w) {
      if (!s.dim(w)) continue;
      const Block& b = m.block(a, w);
      if (b.target < 0 || !s.dim(b.target)) {
        if (b.target >= 0 && !multiply(f, b.m, transpose(s.rows[w])).is_zero())
          throw std::logic_error("submodule: subspace is not invariant");
        continue;
      }
      const Matrix image = multiply(f, b.m, transpose(s.rows[w]));  // d_t x k_w
      const Matrix coords = select(image, s.pivots[b.target], iota_sz(s.dim(w)));
      if (!(multiply(f, transpose(s.rows[b.target]), coords) == image))
        throw std::logic_error("submodule: subspace is not invariant");
      out.set_block(a, new_index[w], coords);
    }
  return out;
}

WeightModule quotient(const WeightModule& m, const Subspace& s) {
  const Field& f = m.field();
  WeightModule out(m.field_ptr(), m.algebra_ptr(), m.acting());
  std::vector<std::vector<std::size_t>> keep(m.num_weights());
  std::vector<Weight> nat;
  std::vector<std::string> labels;
  std::vector<int> grades;
  // natural order of the quotient follows the natural order of the parent
  std::vector<std::pair<int, int>> order;
  for (int w = 0; w < m.num_weights(); ++w) {
    keep[w] = complement(m.weight_dim(w), s.pivots[w]);
    for (auto j : keep[w]) order.emplace_back(m.members(w)[j], w);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [natural, w] : order) {
    nat.push_back(m.weight(w));
    if (!m.labels().empty()) labels.push_back(m.labels()[natural]);
    grades.push_back(m.graded() ? m.grades()[natural] : 0);
  }
  if (!row_grades(m, s)) grades.clear();
  out.set_basis(nat);
  out.set_labels(std::move(labels));
  out.set_grades(std::move(grades));
  for (int a : m.acting())
    for (int w = 0; w < m.num_weights(); ++w) {
      if (keep[w].empty()) continue;
      const Block& b = m.block(a, w);
      if (b.target < 0 || keep[b.target].empty()) continue;
      const int t = b.target;
      Matrix q = select(b.m, keep[t], keep[w]);
      if (s.dim(t)) {
        const Matrix rn = select(s.rows[t], iota_sz(s.dim(t)), keep[t]);  // k_t x |keep_t|
        const Matrix bp = select(b.m, s.pivots[t], keep[w]);               // k_t x |keep_w|
        q = sub(f, q, multiply(f, transpose(rn), bp));
      }
      out.set_block(a, out.find_weight(m.weight(w)), std::move(q));
    }
  return out;
}

WeightModule direct_sum(const WeightModule& a, const WeightModule& b) {
  if (a.acting() != b.acting()) throw std::invalid_argument("direct_sum: acting sets differ");
  const Field& f = a.field();
  std::map<int, Matrix> actions;
  const int n = a.dim() + b.dim();
  std::vector<Weight> nat = a.natural_weights();
  for (const auto& w : b.natural_weights()) nat.push_back(w);
  for (int x : a.acting()) {
    Matrix m(n, n);
    const Matrix da = a.dense(x), db = b.dense(x);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) m(i, j) = da(i, j);
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = db(i, j);
    actions[x] = std::move(m);
  }
  (void)f;
  return module_from_dense(a.field_ptr(), a.algebra_ptr(), nat, actions);
}

void normalize(const Field& f, Vec& v) {
  for (const Fe x : v)
    if (x.v) {
      const Fe s = f.inv(x);
      for (auto& y : v) y = f.mul(y, s);
      return;
    }
}

std::vector<MaxVectorSpace> maximal_vector_spaces(const WeightModule& m) {
  const Field& f = m.field();
  std::vector<int> pos;
  for (int a : m.algebra().positive_indices())
    if (m.acts(a)) pos.push_back(a);
  std::vector<MaxVectorSpace> out;
  for (int w = 0; w < m.num_weights(); ++w) {
    std::vector<std::optional<int>> grades;
    if (m.graded()) {
      std::vector<int> g;
      for (int i : m.members(w)) g.push_back(m.grades()[i]);
      std::sort(g.begin(), g.end(), std::greater<>());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      for (int x : g) grades.emplace_back(x);
    } else {
      grades.emplace_back(std::nullopt);
    }
    for (const auto& grade : grades) {
      std::vector<std::size_t> cols;
      for (int j = 0; j < m.weight_dim(w); ++j)
        if (!grade || m.grades()[m.members(w)[j]] == *grade) cols.push_back(j);
      std::size_t rows = 0;
      for (int a : pos)
        if (m.block(a, w).target >= 0) rows += m.block(a, w).m.rows();
      Matrix stacked(rows, cols.size());
      std::size_t r0 = 0;
      for (int a : pos) {
        const Block& b = m.block(a, w);
        if (b.target < 0) continue;
        for (std::size_t i = 0; i < b.m.rows(); ++i)
          for (std::size_t j = 0; j < cols.size(); ++j) stacked(r0 + i, j) = b.m(i, cols[j]);
        r0 += b.m.rows();
      }
      const Matrix ns = nullspace(f, stacked);
      if (ns.cols() == 0) continue;
      // Re-embed into the weight space and bring to a canonical echelon basis.
      Matrix full(ns.cols(), m.weight_dim(w));
      for (std::size_t k = 0; k < ns.cols(); ++k)
        for (std::size_t j = 0; j < cols.size(); ++j) full(k, cols[j]) = ns(j, k);
      auto rr = rref(f, full);
      Matrix basis(m.weight_dim(w), rr.rank);
      for (std::size_t k = 0; k < rr.rank; ++k)
        for (int j = 0; j < m.weight_dim(w); ++j) basis(j, k) = rr.reduced(k, j);
      out.push_back({w, grade, std::move(basis)});
    }
  }
  return out;
}

}  // namespace peri
