#include "periplectic/irreducible.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace peri {

std::string certificate_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::Trivial: return "trivial";
    case CertificateKind::MaximalVectors: return "maximal-vectors";
    case CertificateKind::Norton: return "norton";
    case CertificateKind::Submodule: return "submodule";
  }
  return "?";
}

namespace {

using Word = std::vector<int>;

std::vector<int> generators(const WeightModule& m) {
  std::vector<int> g;
  for (int a : m.acting())
    if (m.algebra().basis[a].kind != BasisKind::Cartan) g.push_back(a);
  return g;
}

// Products of two or three generators whose roots add up to zero (as integers).
std::vector<Word> zero_words(const WeightModule& m) {
  const Algebra& alg = m.algebra();
  const auto g = generators(m);
  std::vector<std::vector<int>> r;
  for (int a : g) r.push_back(alg.root_coords(a));
  const std::size_t k = r.empty() ? 0 : r[0].size();
  auto sum_zero = [&](std::initializer_list<std::size_t> idx) {
    for (std::size_t c = 0; c < k; ++c) {
      int s = 0;
      for (auto i : idx) s += r[i][c];
      if (s) return false;
    }
    return true;
  };
  std::vector<Word> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (sum_zero({i, j})) out.push_back({g[i], g[j]});
      for (std::size_t l = 0; l < g.size(); ++l)
        if (sum_zero({i, j, l})) out.push_back({g[i], g[j], g[l]});
    }
  return out;
}

// Matrix of a word on weight space w (rightmost letter acts first); nullopt when it vanishes.
std::optional<Matrix> word_matrix(const WeightModule& m, const Word& word, int w) {
  const Field& f = m.field();
  Matrix acc = Matrix::identity(m.weight_dim(w));
  int cur = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Block& b = m.block(*it, cur);
    if (b.target < 0) return std::nullopt;
    acc = multiply(f, b.m, acc);
    cur = b.target;
  }
  if (cur != w) return std::nullopt;
  return acc;
}

Fe random_fe(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  return f.from_packed(d(rng));
}

Vec column(const Matrix& m, std::size_t c) {
  Vec v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, c);
  return v;
}

bool norton(const WeightModule& m, std::mt19937_64& rng, IrreducibilityResult& r) {
  const Field& f = m.field();
  int mu = -1;
  for (int w = 0; w < m.num_weights(); ++w)
    if (mu < 0 || m.weight_dim(w) < m.weight_dim(mu)) mu = w;
  const int d = m.weight_dim(mu);
  std::vector<Matrix> pool;
  if (d > 1)
    for (const auto& word : zero_words(m))
      if (auto wm = word_matrix(m, word, mu); wm && !wm->is_zero()) pool.push_back(std::move(*wm));
  std::uniform_int_distribution<std::size_t> pick(0, pool.empty() ? 0 : pool.size() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix a(d, d);
    for (int t = 0; t < 4 && !pool.empty(); ++t) a = add(f, a, scale(f, random_fe(f, rng), pool[pick(rng)]));
    const auto poly = charpoly(f, a);
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const Fe c = f.from_packed(x);
      if (eval_poly(f, poly, c).v) continue;
      Matrix t = a;
      for (int i = 0; i < d; ++i) t(i, i) = f.sub(t(i, i), c);
      const Matrix ker = nullspace(f, t);
      if (ker.cols() == 0) continue;
      if (ker.cols() > 1) {
        // no verdict from this element, but a random kernel vector may still split M
        Vec v(d);
        for (std::size_t c = 0; c < ker.cols(); ++c) axpy(f, v, random_fe(f, rng), column(ker, c));
        const Subspace s = spin(m, {{mu, v}});
        if (s.dim() > 0 && !is_full(m, s)) {
          r.kind = CertificateKind::Submodule;
          r.submodule = s;
          return true;
        }
        continue;
      }
      r.norton_weight = mu;
      r.norton_dim = d;
      r.norton_eigenvalue = c;
      const Subspace s = spin(m, {{mu, column(ker, 0)}});
      if (!is_full(m, s)) {
        r.kind = CertificateKind::Submodule;
        r.submodule = s;
        return true;
      }
      const Matrix dk = nullspace(f, transpose(t));
      const Subspace ts = spin_dual(m, {{mu, column(dk, 0)}});
      if (!is_full(m, ts)) {
        r.kind = CertificateKind::Submodule;
        r.submodule = annihilator(m, ts);
        return true;
      }
      r.kind = CertificateKind::Norton;
      r.irreducible = true;
      return true;
    }
  }
  return false;
}

}  // namespace

IrreducibilityResult norton_test(const WeightModule& m, std::mt19937_64& rng) {
  IrreducibilityResult r;
  if (!norton(m, rng, r)) throw std::runtime_error("Norton test inconclusive after 64 attempts");
  return r;
}

IrreducibilityResult is_irreducible(const WeightModule& m, std::mt19937_64& rng) {
  if (m.dim() == 0) throw std::invalid_argument("is_irreducible: zero module");
  const Field& f = m.field();
  IrreducibilityResult r;
  r.max_spaces = maximal_vector_spaces(m);
  if (m.dim() == 1) {
    r.irreducible = true;
    r.kind = CertificateKind::Trivial;
    return r;
  }
  auto found = [&](Subspace s) {
    r.kind = CertificateKind::Submodule;
    r.submodule = std::move(s);
    return r;
  };
  // Lowest degree first: those vectors usually generate the small submodules.
  std::vector<const MaxVectorSpace*> order;
  for (const auto& sp : r.max_spaces) order.push_back(&sp);
  std::stable_sort(order.begin(), order.end(), [](const MaxVectorSpace* a, const MaxVectorSpace* b) {
    return a->grade.value_or(0) < b->grade.value_or(0);
  });
  std::map<int, int> per_weight;
  for (const auto* sp : order)
    for (std::size_t c = 0; c < sp->basis.cols(); ++c) {
      ++per_weight[sp->weight];
      Subspace s = spin(m, {{sp->weight, column(sp->basis, c)}});
      if (!is_full(m, s)) return found(std::move(s));
    }
  const bool single = !per_weight.empty() &&
                      std::all_of(per_weight.begin(), per_weight.end(), [](const auto& kv) { return kv.second <= 1; });
  if (single) {
    r.irreducible = true;
    r.kind = CertificateKind::MaximalVectors;
    return r;
  }
  for (const auto& [w, count] : per_weight) {
    if (count < 2) continue;
    std::vector<Vec> cols;
    for (const auto& sp : r.max_spaces)
      if (sp.weight == w)
        for (std::size_t c = 0; c < sp.basis.cols(); ++c) cols.push_back(column(sp.basis, c));
    for (int t = 0; t < 8; ++t) {
      Vec v(m.weight_dim(w));
      for (const auto& c : cols) axpy(f, v, random_fe(f, rng), c);
      if (std::all_of(v.begin(), v.end(), [](Fe x) { return x.v == 0; })) continue;
      Subspace s = spin(m, {{w, v}});
      if (!is_full(m, s)) return found(std::move(s));
    }
  }
  if (!norton(m, rng, r)) throw std::runtime_error("irreducibility test inconclusive after 64 Norton attempts");
  return r;
}

Weight canonical_label(const WeightModule& m, const std::vector<MaxVectorSpace>& spaces) {
  if (spaces.empty()) throw std::logic_error("module without maximal vectors");
  int best = spaces.front().weight;
  for (const auto& sp : spaces)
    if (weight_less(m.field(), m.weight(sp.weight), m.weight(best))) best = sp.weight;
  return m.weight(best);
}

Weight canonical_label(const WeightModule& m) { return canonical_label(m, maximal_vector_spaces(m)); }

WeightModule simple_top(WeightModule m, std::mt19937_64& rng, const Subspace* first) {
  if (first && first->dim() > 0) m = quotient(m, *first);
  for (;;) {
    const auto r = is_irreducible(m, rng);
    if (r.irreducible) return m;
    m = quotient(m, *r.submodule);
  }
}

}  // namespace peri
