#include "periplectic/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peri {

namespace {

// e-coordinates x_1..x_n with x_n = 0.
std::vector<Fe> eps_coords(const Field& f, const Weight& lambda) {
  const std::size_t n = lambda.size() + 1;
  std::vector<Fe> x(n, f.zero());
  for (std::size_t i = n - 1; i-- > 0;) x[i] = f.add(x[i + 1], lambda[i]);
  return x;
}

}  // namespace

Weight weight_from_ints(const Field& f, std::span<const int> coords) {
  Weight w;
  for (int c : coords) w.push_back(f.from_int(c));
  return w;
}

std::string weight_to_string(const Field& f, const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + f.to_string(w[i]);
  return s + ")";
}

bool weight_less(const Field& f, const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&f](Fe x, Fe y) { return f.less(x, y); });
}

Weight weight_add(const Field& f, const Weight& a, const Weight& b) {
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = f.add(a[i], b[i]);
  return w;
}

Weight weight_shift(const Field& f, const Weight& a, std::span<const int> offset) {
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = f.add(a[i], f.from_int(offset[i]));
  return w;
}

std::vector<int> eps_to_coords(std::span<const int> eps) {
  std::vector<int> c;
  for (std::size_t i = 0; i + 1 < eps.size(); ++i) c.push_back(eps[i] - eps[i + 1]);
  return c;
}

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylElement WeylElement::simple(int n, int k) {
  WeylElement w = identity(n);
  std::swap(w.perm.at(k), w.perm.at(k + 1));
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& u) const {
  WeylElement c;
  c.perm.resize(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) c.perm[k] = u.perm[perm[k]];
  return c;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  w.perm.resize(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) w.perm[perm[k]] = static_cast<int>(k);
  return w;
}

std::string WeylElement::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < perm.size(); ++k) s += (k ? "," : "") + std::to_string(perm[k] + 1);
  return s + "]";
}

std::vector<WeylElement> weyl_group(int n) {
  std::vector<WeylElement> out;
  WeylElement w = WeylElement::identity(n);
  do out.push_back(w);
  while (std::next_permutation(w.perm.begin(), w.perm.end()));
  return out;
}

Fe delta(const Field& f, const Weight& lambda) {
  const auto x = eps_coords(f, lambda);
  const int n = static_cast<int>(x.size());
  Fe d = f.one();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d = f.mul(d, f.add(f.sub(x[i], x[j]), f.from_int(j - i - 1)));
  return d;
}

Weight dot_action(const Field& f, const WeylElement& w, const Weight& lambda) {
  const std::size_t n = lambda.size() + 1;
  std::vector<Fe> y(n, f.zero());
  for (std::size_t i = n - 1; i-- > 0;) y[i] = f.add(y[i + 1], f.add(lambda[i], f.one()));
  Weight out(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k)
    out[k] = f.sub(f.sub(y[w.perm[k]], y[w.perm[k + 1]]), f.one());
  return out;
}

Fe delta_permuted(const Field& f, const WeylElement& w, const Weight& lambda) {
  const auto x = eps_coords(f, lambda);
  const int n = static_cast<int>(x.size());
  Fe d = f.one();
  for (int k = 0; k < n; ++k)
    for (int s = k + 1; s < n; ++s) {
      const int ik = w.perm[k], is = w.perm[s];
      d = f.mul(d, f.add(f.sub(x[ik], x[is]), f.from_int(is - ik - 1)));
    }
  return d;
}

Fe typicality_factor(const Field& f, int k, const Weight& lambda) {
  const auto x = eps_coords(f, lambda);
  Fe d = f.one();
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (i != k) d = f.mul(d, f.add(f.sub(x[i], x[k]), f.from_int(k - i - 1)));
  return d;
}

std::string chi_kind_name(ChiKind k) {
  switch (k) {
    case ChiKind::Chi1: return "chi1";
    case ChiKind::Chi2: return "chi2";
    case ChiKind::Chi3: return "chi3";
    case ChiKind::Chi4: return "chi4";
    case ChiKind::Chi5: return "chi5";
    case ChiKind::Chi6: return "chi6";
    case ChiKind::Custom: return "custom";
  }
  return "custom";
}

ChiKind parse_chi_kind(const std::string& s) {
  for (auto k : {ChiKind::Chi1, ChiKind::Chi2, ChiKind::Chi3, ChiKind::Chi4, ChiKind::Chi5, ChiKind::Chi6,
                 ChiKind::Custom})
    if (chi_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown chi kind '" + s + "' (expected chi1..chi6)");
}

bool PChar::semisimple_part_zero(const Algebra& alg) const {
  for (int i = 1; i < alg.n; ++i)
    if (values[alg.cartan(i)]) return false;
  return true;
}

int PChar::field_ext(const Algebra& alg) const { return semisimple_part_zero(alg) ? 1 : p; }

std::string PChar::to_string() const {
  std::string s = chi_kind_name(kind);
  if (!params.empty()) {
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    s += ")";
  }
  return s;
}

PChar make_chi(const Algebra& alg, ChiKind kind, std::vector<int> params) {
  if (alg.n != 3) throw std::invalid_argument("the chi catalog is defined for p(3) only");
  const int p = alg.p;
  auto norm = [p](int v) { return ((v % p) + p) % p; };
  PChar chi;
  chi.kind = kind;
  chi.p = p;
  chi.values.assign(alg.dim(), 0);
  auto need = [&](std::size_t count) {
    if (params.size() > count) throw std::invalid_argument(chi_kind_name(kind) + " takes at most " + std::to_string(count) + " parameters");
    params.resize(count, 1);
    for (auto& v : params) v = norm(v);
  };
  const int h1 = alg.cartan(1), h2 = alg.cartan(2);
  const int f12 = alg.even_root(2, 1), f23 = alg.even_root(3, 2);
  switch (kind) {
    case ChiKind::Chi1:
      need(2);
      if (params[0] * params[1] % p == 0 || norm(params[0] + params[1]) == 0)
        throw std::invalid_argument("chi1 needs a*b*(a+b) != 0 mod p");
      chi.values[h1] = params[0];
      chi.values[h2] = params[1];
      break;
    case ChiKind::Chi2:
      need(1);
      if (params[0] == 0) throw std::invalid_argument("chi2 needs b != 0 mod p");
      chi.values[h2] = params[0];
      break;
    case ChiKind::Chi3:
      need(0);
      break;
    case ChiKind::Chi4:
      need(1);
      if (params[0] == 0) throw std::invalid_argument("chi4 needs b != 0 mod p");
      chi.values[h2] = params[0];
      chi.values[f12] = 1;
      break;
    case ChiKind::Chi5:
      need(0);
      chi.values[f23] = 1;
      break;
    case ChiKind::Chi6:
      need(0);
      chi.values[f12] = 1;
      chi.values[f23] = 1;
      break;
    case ChiKind::Custom:
      throw std::invalid_argument("use make_custom_chi for custom characters");
  }
  chi.params = params;
  return chi;
}

PChar make_custom_chi(const Algebra& alg, std::vector<int> values) {
  if (static_cast<int>(values.size()) != alg.dim()) throw std::invalid_argument("custom chi needs one value per basis element");
  PChar chi;
  chi.kind = ChiKind::Custom;
  chi.p = alg.p;
  for (int a = 0; a < alg.dim(); ++a) {
    values[a] = ((values[a] % alg.p) + alg.p) % alg.p;
    if (alg.parity(a) && values[a]) throw std::invalid_argument("chi must vanish on odd elements");
  }
  chi.values = std::move(values);
  return chi;
}

bool in_lambda(const Field& f, const Algebra& alg, const PChar& chi, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != alg.n - 1) return false;
  for (int i = 1; i < alg.n; ++i) {
    const Fe x = lambda[i - 1];
    if (f.sub(f.pow(x, static_cast<std::uint64_t>(f.p())), x) != f.from_int(chi.value(alg.cartan(i)))) return false;
  }
  return true;
}

std::vector<Weight> enumerate_lambda(const Field& f, const Algebra& alg, const PChar& chi) {
  const int m = alg.n - 1;
  std::vector<Fe> base(m);
  for (int i = 0; i < m; ++i) {
    const int c = chi.value(alg.cartan(i + 1));
    if (c && f.ext() == 1) throw FieldError("chi has a nonzero semisimple part; weights need the extension field");
    base[i] = c ? f.mul(f.from_int(c), f.theta()) : f.zero();
  }
  std::vector<Weight> out;
  std::vector<int> t(m, 0);
  while (true) {
    Weight w(m);
    for (int i = 0; i < m; ++i) w[i] = f.add(base[i], f.from_int(t[i]));
    out.push_back(std::move(w));
    int k = m - 1;
    while (k >= 0 && ++t[k] == f.p()) t[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

TypicalityScan weyl_typicality_scan(int n, int p) {
  if (n < 3 || n > 5) throw std::invalid_argument("typicality scan supports 3 <= n <= 5");
  if (p < n + 1) throw std::invalid_argument("typicality scan requires p >= n + 1");
  const auto field = Field::get(p, 1);
  const Field& f = *field;
  const auto group = weyl_group(n);
  TypicalityScan scan;
  scan.n = n;
  scan.p = p;
  scan.weyl_size = static_cast<long long>(group.size());
  std::vector<int> t(n - 1, 0);
  while (true) {
    const Weight lambda = weight_from_ints(f, t);
    ++scan.weights;
    if (delta(f, lambda) == f.zero()) ++scan.delta_zero;
    const WeylElement* witness = nullptr;
    for (const auto& w : group) {
      const Fe a = delta(f, dot_action(f, w, lambda));
      const Fe b = delta_permuted(f, w, lambda);
      if (a != b) ++scan.route_mismatches;
      if (!witness && a != f.zero()) witness = &w;
    }
    bool all_l_zero = true;
    for (int k = 0; k < n; ++k)
      if (typicality_factor(f, k, lambda) != f.zero()) all_l_zero = false;
    if (!witness) scan.counterexamples.push_back({t, "no Weyl translate is typical"});
    if ((witness == nullptr) != all_l_zero)
      scan.counterexamples.push_back({t, "all-delta-zero system and L_k system disagree"});
    if (witness && delta(f, lambda) == f.zero()) scan.witnesses.emplace_back(t, *witness);
    int k = n - 2;
    while (k >= 0 && ++t[k] == p) t[k--] = 0;
    if (k < 0) break;
  }
  return scan;
}

}  // namespace peri
