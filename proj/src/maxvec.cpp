#include "periplectic/maxvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace peri {

std::vector<std::pair<Weight, std::vector<int>>> weight_spaces(const WeightModule& m) {
  std::vector<std::pair<Weight, std::vector<int>>> out;
  for (int w = 0; w < m.num_weights(); ++w) out.emplace_back(m.weight(w), m.members(w));
  return out;
}

std::vector<MaximalVector> maximal_vectors(const KacModule& k) {
  const WeightModule& m = k.rep;
  std::vector<MaximalVector> out;
  for (const auto& sp : maximal_vector_spaces(m))
    for (std::size_t c = 0; c < sp.basis.cols(); ++c) {
      Vec local(sp.basis.rows());
      for (std::size_t j = 0; j < sp.basis.rows(); ++j) local[j] = sp.basis(j, c);
      MaximalVector mv{m.weight(sp.weight), sp.grade.value_or(0), m.to_natural(sp.weight, local)};
      normalize(m.field(), mv.coords);
      out.push_back(std::move(mv));
    }
  return out;
}

Vec act(const WeightModule& m, int a, const Vec& v) {
  Vec out(m.dim());
  for (const auto& c : weight_components(m, v)) {
    const WeightVector img = apply(m, a, c);
    if (img.weight < 0) continue;
    const auto& mem = m.members(img.weight);
    for (std::size_t j = 0; j < mem.size(); ++j) out[mem[j]] = m.field().add(out[mem[j]], img.v[j]);
  }
  return out;
}

Vec pbw_vector(const KacModule& k, const std::vector<PbwTerm>& terms) {
  const Field& f = k.rep.field();
  Vec out(k.dim());
  for (const auto& t : terms) {
    Vec v(k.dim());
    v[k.top()] = f.one();
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) v = act(k.rep, *it, v);
    axpy(f, out, t.coeff, v);
  }
  return out;
}

bool is_maximal(const WeightModule& m, const Vec& v, const Weight& mu) {
  const Field& f = m.field();
  const Algebra& alg = m.algebra();
  for (int i = 1; i < alg.n; ++i) {
    Vec hv = act(m, alg.cartan(i), v);
    axpy(f, hv, f.neg(mu[i - 1]), v);
    if (std::any_of(hv.begin(), hv.end(), [](Fe x) { return x.v != 0; })) return false;
  }
  for (int a : alg.positive_indices()) {
    if (!m.acts(a)) continue;
    const Vec av = act(m, a, v);
    if (std::any_of(av.begin(), av.end(), [](Fe x) { return x.v != 0; })) return false;
  }
  return true;
}

namespace {

// Masks over (y12, y13, y23) = bits (0, 1, 2) for the written monomials.
const std::vector<unsigned>& written_masks(int degree) {
  static const std::vector<unsigned> d1{1u, 2u, 4u}, d2{3u, 5u, 6u}, d3{7u};
  switch (degree) {
    case -1: return d1;
    case -2: return d2;
    case -3: return d3;
    default: throw std::invalid_argument("candidate degree must be -1, -2 or -3");
  }
}

}  // namespace

int written_sign(int degree, int position) {
  // y13 y12 = -y12 y13, y23 y12 = -y12 y23, y13 y23 y12 = +y12 y13 y23
  if (degree == -2) return position == 2 ? 1 : -1;
  written_masks(degree);
  return 1;
}

std::vector<Vec> written_components(const KacModule& k, const Vec& v, int degree) {
  const Field& f = k.rep.field();
  const auto& masks = written_masks(degree);
  const int d0 = k.base.dim();
  if (static_cast<int>(v.size()) != k.dim()) throw std::invalid_argument("vector has the wrong length");
  for (int i = 0; i < k.dim(); ++i)
    if (v[i].v && k.rep.grades()[i] != degree) throw std::invalid_argument("vector is not homogeneous of the stated degree");
  std::vector<Vec> w;
  for (std::size_t pos = 0; pos < masks.size(); ++pos) {
    Vec c(d0);
    const bool flip = written_sign(degree, static_cast<int>(pos)) < 0;
    for (int j = 0; j < d0; ++j) {
      const Fe x = v[k.index(masks[pos], j)];
      c[j] = flip ? f.neg(x) : x;
    }
    w.push_back(std::move(c));
  }
  return w;
}

Vec from_written_components(const KacModule& k, const std::vector<Vec>& w, int degree) {
  const Field& f = k.rep.field();
  const auto& masks = written_masks(degree);
  const int d0 = k.base.dim();
  if (w.size() != masks.size()) throw std::invalid_argument("wrong number of components for this degree");
  Vec out(k.dim());
  for (std::size_t pos = 0; pos < masks.size(); ++pos) {
    if (static_cast<int>(w[pos].size()) != d0) throw std::invalid_argument("component has the wrong length");
    const bool flip = written_sign(degree, static_cast<int>(pos)) < 0;
    for (int j = 0; j < d0; ++j) out[k.index(masks[pos], j)] = flip ? f.neg(w[pos][j]) : w[pos][j];
  }
  return out;
}

bool ConditionReport::all_hold() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.holds; });
}

ConditionReport check_m_conditions(const KacModule& k, const std::vector<Vec>& w, int degree, const Weight& mu) {
  const auto& masks = written_masks(degree);
  if (w.size() != masks.size()) throw std::invalid_argument("wrong number of components for this degree");
  const WeightModule& b = k.base;
  const Field& f = b.field();
  const Algebra& a = b.algebra();
  for (const auto& c : w)
    if (static_cast<int>(c.size()) != b.dim()) throw std::invalid_argument("component has the wrong length");

  const int h1 = a.cartan(1), h2 = a.cartan(2);
  const int e12 = a.even_root(1, 2), e23 = a.even_root(2, 3);
  const int f13 = a.even_root(3, 1), f23 = a.even_root(3, 2);
  const Vec zero(b.dim());
  auto X = [&](int x, const Vec& v) { return act(b, x, v); };
  auto lin = [&](std::initializer_list<std::pair<Fe, Vec>> terms) {
    Vec out(b.dim());
    for (const auto& [c, v] : terms) axpy(f, out, c, v);
    return out;
  };
  const Fe one = f.one(), m1 = f.neg(one);
  auto shifted = [&](int i, int d) { return f.add(mu[i], f.from_int(d)); };
  // H w = c w  <=>  H w - c w = 0
  auto eig = [&](int h, const Vec& v, Fe c) { return lin({{one, X(h, v)}, {f.neg(c), v}}); };

  ConditionReport rep;
  auto add = [&](std::string label, const Vec& v) {
    rep.conditions.push_back({std::move(label), v == zero});
  };
  if (degree == -1) {
    const Vec &w1 = w[0], &w2 = w[1], &w3 = w[2];
    add("H_{e1-e2} w1 = mu1 w1", eig(h1, w1, mu[0]));
    add("H_{e1-e2} w2 = (mu1+1) w2", eig(h1, w2, shifted(0, 1)));
    add("H_{e1-e2} w3 = (mu1-1) w3", eig(h1, w3, shifted(0, -1)));
    add("H_{e2-e3} w1 = (mu2+1) w1", eig(h2, w1, shifted(1, 1)));
    add("H_{e2-e3} w2 = (mu2-1) w2", eig(h2, w2, shifted(1, -1)));
    add("H_{e2-e3} w3 = mu2 w3", eig(h2, w3, mu[1]));
    add("X_{-e1+e3} w2 + X_{-e2+e3} w3 = 0", lin({{one, X(f13, w2)}, {one, X(f23, w3)}}));
    add("X_{e1-e2} w1 = 0", X(e12, w1));
    add("X_{e1-e2} w2 = 0", X(e12, w2));
    add("-w2 + X_{e1-e2} w3 = 0", lin({{m1, w2}, {one, X(e12, w3)}}));
    add("X_{e2-e3} w1 = 0", X(e23, w1));
    add("-w1 + X_{e2-e3} w2 = 0", lin({{m1, w1}, {one, X(e23, w2)}}));
    add("X_{e2-e3} w3 = 0", X(e23, w3));
  } else if (degree == -2) {
    const Vec &w1 = w[0], &w2 = w[1], &w3 = w[2];
    add("H_{e1-e2} w1 = (mu1+1) w1", eig(h1, w1, shifted(0, 1)));
    add("H_{e1-e2} w2 = (mu1-1) w2", eig(h1, w2, shifted(0, -1)));
    add("H_{e1-e2} w3 = mu1 w3", eig(h1, w3, mu[0]));
    add("H_{e2-e3} w1 = mu2 w1", eig(h2, w1, mu[1]));
    add("H_{e2-e3} w2 = (mu2+1) w2", eig(h2, w2, shifted(1, 1)));
    add("H_{e2-e3} w3 = (mu2-1) w3", eig(h2, w3, shifted(1, -1)));
    add("X_{-e2+e3} w2 + X_{-e1+e3} w1 + w3 = 0", lin({{one, X(f23, w2)}, {one, X(f13, w1)}, {one, w3}}));
    add("X_{-e1+e3} w3 = 0", X(f13, w3));
    add("X_{-e2+e3} w3 = 0", X(f23, w3));
    add("X_{e1-e2} w1 = 0", X(e12, w1));
    add("X_{e1-e2} w2 - w1 = 0", lin({{one, X(e12, w2)}, {m1, w1}}));
    add("X_{e1-e2} w3 = 0", X(e12, w3));
    add("X_{e2-e3} w1 = 0", X(e23, w1));
    add("X_{e2-e3} w2 = 0", X(e23, w2));
    add("w2 + X_{e2-e3} w3 = 0", lin({{one, w2}, {one, X(e23, w3)}}));
  } else {
    const Vec& x = w[0];
    add("H_{e1-e2} w = mu1 w", eig(h1, x, mu[0]));
    add("H_{e2-e3} w = mu2 w", eig(h2, x, mu[1]));
    add("X_{-e2+e3} w = 0", X(f23, x));
    add("X_{-e1+e3} w = 0", X(f13, x));
    add("X_{e1-e2} w = 0", X(e12, x));
    add("X_{e2-e3} w = 0", X(e23, x));
  }
  return rep;
}

}  // namespace peri
