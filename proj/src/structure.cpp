#include "periplectic/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace peri {

namespace {

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

std::string root_name(const std::vector<int>& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (int rep = 0; rep < std::abs(w[k]); ++rep) {
      s += (w[k] < 0 ? "-" : (s.empty() ? "" : "+"));
      s += "e" + std::to_string(k + 1);
    }
  }
  return s;
}

// E_{r,c} with 1-based indices into a 2n x 2n matrix.
void put(const Field& f, Matrix& m, int r, int c, int v) { m(r - 1, c - 1) = f.add(m(r - 1, c - 1), f.from_int(v)); }

}  // namespace

int Algebra::find(BasisKind kind, int i, int j) const {
  for (int a = 0; a < dim(); ++a)
    if (basis[a].kind == kind && basis[a].i == i && basis[a].j == j) return a;
  throw std::out_of_range("no such basis element");
}

int Algebra::cartan(int i) const { return find(BasisKind::Cartan, i, i + 1); }
int Algebra::even_root(int i, int j) const { return find(BasisKind::EvenRoot, i, j); }
int Algebra::odd_neg(int i, int j) const { return find(BasisKind::OddNeg, std::min(i, j), std::max(i, j)); }
int Algebra::odd_pos(int i, int j) const { return find(BasisKind::OddPos, std::min(i, j), std::max(i, j)); }

std::vector<int> Algebra::even_indices() const {
  std::vector<int> out;
  for (int a = 0; a < dim(); ++a)
    if (basis[a].parity == 0) out.push_back(a);
  return out;
}

std::vector<int> Algebra::indices_of_degree(int d) const {
  std::vector<int> out;
  for (int a = 0; a < dim(); ++a)
    if (basis[a].degree == d) out.push_back(a);
  return out;
}

std::vector<int> Algebra::positive_indices() const {
  std::vector<int> out;
  for (int a = 0; a < dim(); ++a) {
    const auto& b = basis[a];
    if ((b.kind == BasisKind::EvenRoot && b.i < b.j) || b.kind == BasisKind::OddPos) out.push_back(a);
  }
  return out;
}

std::vector<int> Algebra::root_coords(int a) const {
  const auto& w = basis[a].weight;
  std::vector<int> c(n - 1);
  for (int k = 0; k + 1 < n; ++k) c[k] = w[k] - w[k + 1];
  return c;
}

Algebra build_algebra(int n, int p) {
  if (n < 3) throw std::invalid_argument("p(n) requires n >= 3");
  FieldParams{p, 1}.validate();
  if (p <= n) throw std::invalid_argument("the restricted structure requires p > n");

  Algebra alg;
  alg.n = n;
  alg.p = p;
  auto e = [n](int k) {
    std::vector<int> w(n, 0);
    w[k - 1] = 1;
    return w;
  };
  auto lin = [](std::vector<int> a, const std::vector<int>& b, int s) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
  };
  for (int i = 1; i < n; ++i)
    alg.basis.push_back({BasisKind::Cartan, i, i + 1, 0, 0, std::vector<int>(n, 0),
                         "H_{e" + std::to_string(i) + "-e" + std::to_string(i + 1) + "}"});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto w = lin(e(i), e(j), -1);
      alg.basis.push_back({BasisKind::EvenRoot, i, j, 0, 0, w, "X_{" + root_name(w) + "}"});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto w = lin(lin(std::vector<int>(n, 0), e(i), -1), e(j), -1);
      alg.basis.push_back({BasisKind::OddNeg, i, j, 1, -1, w, "X_{" + root_name(w) + "}"});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      auto w = lin(e(i), e(j), 1);
      alg.basis.push_back({BasisKind::OddPos, i, j, 1, 1, w, "X_{" + root_name(w) + "}"});
    }

  const auto field = Field::get(p, 1);
  const Field& f = *field;
  const int d = alg.dim();
  std::vector<Matrix> mats;
  mats.reserve(d);
  for (int a = 0; a < d; ++a) mats.push_back(supermatrix(alg, a));

  alg.bracket_table.resize(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Matrix c = super_commutator(f, mats[a], mats[b], alg.basis[a].parity, alg.basis[b].parity);
      alg.bracket_table[static_cast<std::size_t>(a) * d + b] = decompose(alg, c);
    }
  alg.p_power.resize(d);
  for (int a = 0; a < d; ++a)
    if (alg.basis[a].parity == 0) alg.p_power[a] = decompose(alg, power(f, mats[a], static_cast<std::uint64_t>(p)));
  return alg;
}

Matrix supermatrix(const Algebra& alg, int a) {
  const auto field = Field::get(alg.p, 1);
  const Field& f = *field;
  const int n = alg.n;
  const auto& b = alg.basis.at(a);
  Matrix m(2 * n, 2 * n);
  const int i = b.i;
  const int j = b.j;
  switch (b.kind) {
    case BasisKind::Cartan:
      put(f, m, i, i, 1);
      put(f, m, j, j, -1);
      put(f, m, n + i, n + i, -1);
      put(f, m, n + j, n + j, 1);
      break;
    case BasisKind::EvenRoot:
      put(f, m, i, j, 1);
      put(f, m, n + j, n + i, -1);
      break;
    case BasisKind::OddNeg:
      put(f, m, n + i, j, 1);
      put(f, m, n + j, i, -1);
      break;
    case BasisKind::OddPos:
      put(f, m, i, n + j, 1);
      put(f, m, j, n + i, 1);
      break;
  }
  return m;
}

Matrix super_commutator(const Field& f, const Matrix& a, const Matrix& b, int parity_a, int parity_b) {
  const Matrix ab = multiply(f, a, b);
  const Matrix ba = multiply(f, b, a);
  return (parity_a & parity_b) ? add(f, ab, ba) : sub(f, ab, ba);
}

Combo decompose(const Algebra& alg, const Matrix& m) {
  const auto field = Field::get(alg.p, 1);
  const Field& f = *field;
  const int n = alg.n;
  const int p = alg.p;
  if (m.rows() != static_cast<std::size_t>(2 * n) || m.cols() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("decompose: wrong matrix size");
  auto at = [&](int r, int c) { return f.to_int(m(r - 1, c - 1)); };
  Combo out;
  int running = 0;
  for (int k = 1; k < n; ++k) {
    running = mod(running + at(k, k), p);
    if (running) out.push_back({alg.cartan(k), running});
  }
  for (int a = 0; a < alg.dim(); ++a) {
    const auto& b = alg.basis[a];
    int c = 0;
    if (b.kind == BasisKind::EvenRoot) c = at(b.i, b.j);
    if (b.kind == BasisKind::OddNeg) c = at(n + b.i, b.j);
    if (b.kind == BasisKind::OddPos) c = b.i == b.j ? mod(static_cast<long long>(at(b.i, n + b.i)) * f.to_int(f.inv(f.from_int(2))), p) : at(b.i, n + b.j);
    if (c) out.push_back({a, c});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  // Reconstruct and compare: anything outside the span of the basis is rejected.
  Matrix back(2 * n, 2 * n);
  for (const auto& t : out) back = add(f, back, scale(f, f.from_int(t.coeff), supermatrix(alg, t.index)));
  if (!(back == m)) throw std::domain_error("decompose: matrix is not in p(n)");
  return out;
}

Combo single(int index) { return {{index, 1}}; }

Combo combo_add(const Combo& a, const Combo& b, int p) {
  std::map<int, long long> acc;
  for (const auto& t : a) acc[t.index] += t.coeff;
  for (const auto& t : b) acc[t.index] += t.coeff;
  Combo out;
  for (auto [i, c] : acc)
    if (mod(c, p)) out.push_back({i, mod(c, p)});
  return out;
}

Combo combo_scale(const Combo& a, int c, int p) {
  Combo out;
  for (const auto& t : a) {
    const int v = mod(static_cast<long long>(t.coeff) * c, p);
    if (v) out.push_back({t.index, v});
  }
  return out;
}

Combo bracket(const Algebra& alg, const Combo& a, const Combo& b) {
  Combo out;
  for (const auto& x : a)
    for (const auto& y : b)
      out = combo_add(out, combo_scale(alg.bracket(x.index, y.index), x.coeff * y.coeff % alg.p, alg.p), alg.p);
  return out;
}

StructureReport verify_restricted(const Algebra& alg) {
  StructureReport rep;
  for (int x : alg.even_indices()) {
    for (int y = 0; y < alg.dim(); ++y) {
      const Combo lhs = bracket(alg, alg.p_power[x], single(y));
      Combo rhs = single(y);
      for (int k = 0; k < alg.p; ++k) rhs = bracket(alg, single(x), rhs);
      if (!(lhs == rhs))
        rep.violations.push_back({"[x^[p], y] != (ad x)^p y for x=" + alg.basis[x].name + ", y=" + alg.basis[y].name, x, y});
    }
  }
  return rep;
}

StructureReport verify_axioms(const Algebra& alg) {
  StructureReport rep;
  const int p = alg.p;
  const int d = alg.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int sign = (alg.parity(a) & alg.parity(b)) ? 1 : -1;
      if (!(alg.bracket(a, b) == combo_scale(alg.bracket(b, a), sign, p)))
        rep.violations.push_back({"super-antisymmetry", a, b});
      const int deg = alg.degree(a) + alg.degree(b);
      for (const auto& t : alg.bracket(a, b))
        if (alg.degree(t.index) != deg) rep.violations.push_back({"degree", a, b});
      for (const auto& t : alg.bracket(a, b))
        if (alg.parity(t.index) != (alg.parity(a) ^ alg.parity(b))) rep.violations.push_back({"parity", a, b});
    }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        const int pa = alg.parity(a), pb = alg.parity(b), pc = alg.parity(c);
        // (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]] = 0
        Combo sum = combo_scale(bracket(alg, single(a), alg.bracket(b, c)), (pa & pc) ? -1 : 1, p);
        sum = combo_add(sum, combo_scale(bracket(alg, single(b), alg.bracket(c, a)), (pb & pa) ? -1 : 1, p), p);
        sum = combo_add(sum, combo_scale(bracket(alg, single(c), alg.bracket(a, b)), (pc & pb) ? -1 : 1, p), p);
        if (!sum.empty()) rep.violations.push_back({"super-Jacobi", a, b, c});
      }
  return rep;
}

StructureReport verify_against_realization(const Algebra& alg) {
  StructureReport rep;
  const auto field = Field::get(alg.p, 1);
  const Field& f = *field;
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b) {
      const Matrix c = super_commutator(f, supermatrix(alg, a), supermatrix(alg, b), alg.parity(a), alg.parity(b));
      Matrix t(c.rows(), c.cols());
      for (const auto& term : alg.bracket(a, b))
        t = add(f, t, scale(f, f.from_int(term.coeff), supermatrix(alg, term.index)));
      if (!(t == c)) rep.violations.push_back({"table differs from realization", a, b});
    }
  return rep;
}

}  // namespace peri
