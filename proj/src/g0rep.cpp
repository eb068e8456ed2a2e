#include "periplectic/g0rep.hpp"

#include <stdexcept>

#include "periplectic/irreducible.hpp"
#include "periplectic/pbw.hpp"

namespace peri {

Setting Setting::make(int p, ChiKind kind, std::vector<int> params) {
  auto alg = std::make_shared<const Algebra>(build_algebra(3, p));
  PChar chi = make_chi(*alg, kind, std::move(params));
  return make(alg, std::move(chi));
}

Setting Setting::make(std::shared_ptr<const Algebra> alg, PChar chi) {
  Setting s;
  s.field = Field::get(alg->p, chi.field_ext(*alg));
  s.alg = std::move(alg);
  s.chi = std::move(chi);
  return s;
}

void Setting::require_lambda(const Weight& lambda) const {
  if (!in_lambda(*field, *alg, chi, lambda))
    throw std::invalid_argument("weight " + weight_to_string(*field, lambda) + " is not in Lambda_chi for " +
                                chi.to_string());
}

std::vector<int> g0_indices(const Algebra& alg) { return alg.indices_of_degree(0); }

std::vector<int> baby_verma_negs(const Algebra& alg) {
  return {alg.even_root(3, 1), alg.even_root(3, 2), alg.even_root(2, 1)};
}

std::vector<int> odd_negs(const Algebra& alg) { return {alg.odd_neg(1, 2), alg.odd_neg(1, 3), alg.odd_neg(2, 3)}; }

namespace {

WeightModule one_dimensional(const Setting& s, const Weight& lambda, const std::vector<int>& acting) {
  std::map<int, Matrix> actions;
  for (int a : acting) {
    Matrix m(1, 1);
    if (s.alg->basis[a].kind == BasisKind::Cartan) m(0, 0) = lambda[s.alg->basis[a].i - 1];
    actions[a] = m;
  }
  auto mod = module_from_dense(s.field, s.alg, {lambda}, actions);
  mod.set_labels({"v"});
  return mod;
}

std::vector<int> parabolic_b(const Algebra& a) {
  return {a.cartan(1), a.cartan(2), a.even_root(1, 2), a.even_root(2, 1), a.even_root(1, 3), a.even_root(2, 3)};
}

}  // namespace

WeightModule baby_verma(const Setting& s, const Weight& lambda) {
  s.require_lambda(lambda);
  const Algebra& a = *s.alg;
  for (int x : a.positive_indices())
    if (s.chi.value(x)) throw std::invalid_argument("baby Verma modules need chi(n0) = 0");
  const WeightModule k = one_dimensional(s, lambda, {a.cartan(1), a.cartan(2)});
  InducedOptions opts;
  opts.negs = baby_verma_negs(a);
  opts.b = {a.cartan(1), a.cartan(2), a.even_root(1, 2), a.even_root(1, 3), a.even_root(2, 3)};
  return induce(k, s.chi, opts);
}

Subspace contravariant_radical(const Setting& s, const WeightModule& z) {
  const Algebra& a = *s.alg;
  const Field& f = *s.field;
  for (int x : g0_indices(a))
    if (s.chi.value(x)) throw std::invalid_argument("the contravariant form is only used for chi = 0");
  const int p = a.p;
  if (z.dim() != p * p * p) throw std::invalid_argument("contravariant_radical expects a baby Verma module");
  // Row vector times rho(e): from weight nu back to the weight u with u + alpha = nu.
  auto step = [&](int e, const WeightVector& row) -> WeightVector {
    const auto root = a.root_coords(e);
    std::vector<int> neg(root.size());
    for (std::size_t k = 0; k < root.size(); ++k) neg[k] = -root[k];
    const int u = z.find_weight(weight_shift(f, z.weight(row.weight), neg));
    if (u < 0) return {-1, {}};
    const Block& b = z.block(e, u);
    Vec out(b.m.cols());
    if (b.target != row.weight) return {u, out};
    for (std::size_t i = 0; i < b.m.rows(); ++i)
      if (row.v[i].v) axpy(f, out, row.v[i], b.m.row_span(i));
    return {u, out};
  };
  const int e13 = a.even_root(1, 3), e23 = a.even_root(2, 3), e12 = a.even_root(1, 2);
  std::vector<Matrix> gram(z.num_weights());
  for (int w = 0; w < z.num_weights(); ++w) gram[w] = Matrix(z.weight_dim(w), z.weight_dim(w));
  const auto [tw, tl] = z.position(0);
  WeightVector ra{tw, Vec(z.weight_dim(tw))};
  ra.v[tl] = f.one();
  // basis index = c + b p + a p^2 for X_{-e1+e3}^c X_{-e2+e3}^b X_{-e1+e2}^a v
  for (int ea = 0; ea < p; ++ea) {
    WeightVector rb = ra;
    for (int eb = 0; eb < p; ++eb) {
      WeightVector rc = rb;
      for (int ec = 0; ec < p; ++ec) {
        const int natural = ec + eb * p + ea * p * p;
        const auto [w, l] = z.position(natural);
        if (rc.weight == w)
          for (int j = 0; j < z.weight_dim(w); ++j) gram[w](l, j) = rc.v[j];
        if (rc.weight >= 0) rc = step(e13, rc);
      }
      if (rb.weight >= 0) rb = step(e23, rb);
    }
    if (ra.weight >= 0) ra = step(e12, ra);
  }
  Subspace rad;
  for (int w = 0; w < z.num_weights(); ++w) {
    const Matrix k = kernel_rows(f, gram[w]);
    auto rr = rref(f, k);
    Matrix rows(rr.rank, z.weight_dim(w));
    std::vector<std::size_t> piv = rr.pivots;
    for (std::size_t i = 0; i < rr.rank; ++i) std::copy(rr.reduced.row(i), rr.reduced.row(i) + z.weight_dim(w), rows.row(i));
    rad.rows.push_back(std::move(rows));
    rad.pivots.push_back(std::move(piv));
  }
  return rad;
}

WeightModule gl2_simple(const Setting& s, Gl2Kind kind, const Weight& lambda) {
  const Algebra& a = *s.alg;
  const Field& f = *s.field;
  const int p = a.p;
  if (!f.in_prime_field(lambda[0])) throw std::invalid_argument("gl2_simple: the sl2 coordinate must lie in GF(p)");
  const int r = f.to_int(lambda[0]);
  const int d = kind == Gl2Kind::Restricted ? r + 1 : p;
  const int h1 = a.cartan(1), h2 = a.cartan(2), e = a.even_root(1, 2), fm = a.even_root(2, 1);
  std::vector<Weight> nat;
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) {
    nat.push_back(weight_shift(f, lambda, std::vector<int>{-2 * i, i}));
    labels.push_back(i == 0 ? "v" : (i == 1 ? a.basis[fm].name + " v" : a.basis[fm].name + "^" + std::to_string(i) + " v"));
  }
  std::map<int, Matrix> act;
  for (int x : {h1, h2, e, fm}) act[x] = Matrix(d, d);
  for (int i = 0; i < d; ++i) {
    act[h1](i, i) = nat[i][0];
    act[h2](i, i) = nat[i][1];
    if (i > 0) act[e](i - 1, i) = f.from_int(static_cast<long long>(i) * (r - i + 1));
    if (i + 1 < d) act[fm](i + 1, i) = f.one();
  }
  if (kind == Gl2Kind::RegularNilpotent) act[fm](0, d - 1) = f.from_int(s.chi.value(fm));
  auto mod = module_from_dense(s.field, s.alg, nat, act);
  mod.set_labels(labels);
  return mod;
}

WeightModule levi_induced(const Setting& s, const Weight& lambda) {
  s.require_lambda(lambda);
  const Algebra& a = *s.alg;
  Gl2Kind kind;
  switch (s.chi.kind) {
    case ChiKind::Chi2:
    case ChiKind::Chi5:
      kind = Gl2Kind::Restricted;
      break;
    case ChiKind::Chi4:
      kind = Gl2Kind::RegularNilpotent;
      break;
    default:
      throw std::invalid_argument("levi_induced: only chi2, chi4 and chi5 have a Levi construction");
  }
  const WeightModule v = gl2_simple(s, kind, lambda);
  InducedOptions opts;
  opts.negs = {a.even_root(3, 1), a.even_root(3, 2)};
  opts.b = parabolic_b(a);
  return induce(v, s.chi, opts);
}

WeightModule simple_g0(const Setting& s, const Weight& lambda) {
  s.require_lambda(lambda);
  switch (s.chi.kind) {
    case ChiKind::Chi1:
    case ChiKind::Chi6:
      return baby_verma(s, lambda);
    case ChiKind::Chi3: {
      const WeightModule z = baby_verma(s, lambda);
      return quotient(z, contravariant_radical(s, z));
    }
    case ChiKind::Chi2:
    case ChiKind::Chi4:
      return levi_induced(s, lambda);
    case ChiKind::Chi5: {
      // the induced module is reducible once r >= 1 and r + s >= p - 1; keep its head
      std::mt19937_64 rng(1);
      return simple_top(levi_induced(s, lambda), rng);
    }
    case ChiKind::Custom:
      break;
  }
  throw std::invalid_argument("simple g0-modules are only available for the catalog characters");
}

}  // namespace peri
