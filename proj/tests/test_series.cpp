#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periplectic/maxvec.hpp"
#include "periplectic/series.hpp"

using namespace peri;

namespace {

Weight ints(const Setting& s, int r, int t) { return weight_from_ints(*s.field, std::vector{r, t}); }

// lambda + sum of eps offsets, in (r, s) coordinates
Weight eps_shift(const Setting& s, const Weight& l, std::vector<int> eps) {
  return weight_shift(*s.field, l, eps_to_coords(eps));
}

std::vector<std::pair<Weight, int>> labels(const CompositionReport& r) {
  std::vector<std::pair<Weight, int>> out;
  for (const auto& f : r.factors) out.emplace_back(f.label, f.mult);
  return out;
}

std::vector<std::pair<Weight, int>> expect(const Setting& s, std::vector<std::pair<Weight, int>> e) {
  std::sort(e.begin(), e.end(), [&](const auto& a, const auto& b) { return weight_less(*s.field, a.first, b.first); });
  return e;
}

void check_report(const CompositionReport& r) {
  CHECK(r.dims_ok);
  CHECK(r.character_ok);
  CHECK(r.cross_check_ok);
  CHECK(r.unique_max_ok);
  CHECK(r.head_confirmed);
  for (const auto& n : r.notes) MESSAGE(n);
  int total = 0;
  for (const auto& f : r.factors) total += f.mult * f.dim;
  CHECK(total == r.dim);
}

}  // namespace

TEST_CASE("spin basics") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const KacModule k = build_kac(s, ints(s, 0, 2));
  const auto [w, l] = k.rep.position(k.top());
  Vec v(k.rep.weight_dim(w));
  v[l] = s.field->one();
  CHECK(is_full(k.rep, spin(k.rep, {{w, v}})));
  CHECK(spin(k.rep, {{w, Vec(v.size())}}).dim() == 0);
  // spin of m1 is proper
  const Algebra& a = *s.alg;
  const Field& f = *s.field;
  const Fe inv_s = f.inv(k.lambda[1]);
  const Vec m1 = pbw_vector(k, {{f.one(), {a.odd_neg(1, 2)}},
                                {inv_s, {a.odd_neg(1, 3), a.even_root(3, 2)}},
                                {f.neg(inv_s), {a.odd_neg(2, 3), a.even_root(3, 1)}}});
  REQUIRE(is_maximal(k.rep, m1, ints(s, 0, 1)));
  const auto comps = weight_components(k.rep, m1);
  REQUIRE(comps.size() == 1);
  const Subspace sub = spin(k.rep, comps);
  CHECK(sub.dim() > 0);
  CHECK(!is_full(k.rep, sub));
}

TEST_CASE("irreducibility certificates") {
  std::mt19937_64 rng(3);
  const Setting s6 = Setting::make(5, ChiKind::Chi6);
  const KacModule k6 = build_kac(s6, s6.lambdas()[7]);
  const auto r6 = is_irreducible(k6.rep, rng);
  CHECK(r6.irreducible);
  CHECK(r6.kind == CertificateKind::MaximalVectors);
  const auto n6 = norton_test(k6.rep, rng);
  CHECK(n6.irreducible);
  CHECK(n6.kind == CertificateKind::Norton);

  const Setting s3 = Setting::make(5, ChiKind::Chi3);
  const KacModule triv = build_kac(s3, ints(s3, 0, 0));
  const WeightModule one = quotient(triv.rep, unique_max_submodule_check(triv.rep).sum);
  REQUIRE(one.dim() == 1);
  CHECK(is_irreducible(one, rng).kind == CertificateKind::Trivial);

  // L0 modules of every kind are simple
  for (auto kind : {ChiKind::Chi1, ChiKind::Chi2, ChiKind::Chi3, ChiKind::Chi4, ChiKind::Chi5, ChiKind::Chi6}) {
    const Setting s = Setting::make(5, kind);
    const auto ls = s.lambdas();
    for (std::size_t i = 0; i < ls.size(); i += 3) {
      const WeightModule l0 = simple_g0(s, ls[i]);
      CHECK_MESSAGE(is_irreducible(l0, rng).irreducible, chi_kind_name(kind) << " " << weight_to_string(*s.field, ls[i]));
    }
  }
}

TEST_CASE("direct sums are caught") {
  std::mt19937_64 rng(5);
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const KacModule k = build_kac(s, ints(s, 2, 2));
  const WeightModule a = k.rep;
  const WeightModule b = build_kac(s, ints(s, 1, 1)).rep;
  const WeightModule sum = direct_sum(a, b);
  const auto r = is_irreducible(sum, rng);
  CHECK(!r.irreducible);
  REQUIRE(r.submodule);
  CHECK(r.submodule->dim() > 0);
  CHECK(r.submodule->dim() < sum.dim());
  CHECK(!unique_max_submodule_check(sum).proper);
  // the same module twice: every weight with a maximal vector has two of them
  const WeightModule twice = direct_sum(a, a);
  CHECK(!is_irreducible(twice, rng).irreducible);
  CHECK(!norton_test(twice, rng).irreducible);
  CHECK(!unique_max_submodule_check(twice).proper);
}

TEST_CASE("chi2 at (0,s): two factors") {
  const Setting s = Setting::make(5, ChiKind::Chi2);
  for (const auto& l : s.lambdas()) {
    if (l[0].v) continue;
    const auto r = composition_series(s, l);
    check_report(r);
    CHECK(!r.typical);
    CHECK(labels(r) == expect(s, {{l, 1}, {eps_shift(s, l, {-1, -1, 0}), 1}}));
  }
}

TEST_CASE("chi3 spot cases") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  struct Case {
    int r, t;
    std::vector<std::vector<int>> eps;  // expected factors as eps offsets from lambda
  };
  const std::vector<Case> cases = {
      {2, 2, {{0, 0, 0}}},
      {0, 2, {{0, 0, 0}, {-1, -1, 0}}},
      {0, 4, {{0, 0, 0}, {-1, -1, 0}}},
      {0, 1, {{0, 0, 0}, {-1, -1, 0}, {0, -1, 0}}},
      {2, 0, {{0, 0, 0}, {0, -1, -1}}},
      {1, 0, {{0, 0, 0}, {0, -1, -1}, {-1, 0, 0}}},
      {0, 0, {{0, 0, 0}, {0, -1, -1}, {-2, -2, -2}}},
  };
  for (const auto& c : cases) {
    const Weight l = ints(s, c.r, c.t);
    const auto r = composition_series(s, l);
    check_report(r);
    std::vector<std::pair<Weight, int>> e;
    for (const auto& off : c.eps) {
      const Weight mu = eps_shift(s, l, off);
      auto it = std::find_if(e.begin(), e.end(), [&](const auto& x) { return x.first == mu; });
      if (it != e.end()) ++it->second;
      else e.emplace_back(mu, 1);
    }
    CHECK_MESSAGE(labels(r) == expect(s, e), "lambda " << weight_to_string(*s.field, l));
    CHECK(r.length == static_cast<int>(c.eps.size()));
  }
}

TEST_CASE("chi3 with r+s=p-1 has a maximal vector of weight lambda-e1-e3") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const Field& f = *s.field;
  const Algebra& a = *s.alg;
  for (int r = 1; r <= 3; ++r) {
    const KacModule k = build_kac(s, ints(s, r, 4 - r));
    // relation in L0: f23 f12 v = -r f13 v
    const Vec rel = pbw_vector(k, {{f.one(), {a.even_root(3, 2), a.even_root(2, 1)}},
                                   {f.from_int(r), {a.even_root(3, 1)}}});
    CHECK(std::all_of(rel.begin(), rel.end(), [](Fe x) { return x.v == 0; }));
    const Vec m = pbw_vector(k, {{f.one(), {a.odd_neg(1, 3)}},
                                 {f.inv(f.from_int(r)), {a.odd_neg(2, 3), a.even_root(2, 1)}}});
    const Weight mu = eps_shift(s, k.lambda, {-1, 0, -1});
    CHECK(is_maximal(k.rep, m, mu));
    CHECK(check_m_conditions(k, written_components(k, m, -1), -1, mu).all_hold());
    const auto comps = weight_components(k.rep, m);
    REQUIRE(comps.size() == 1);
    const Subspace sub = spin(k.rep, comps);
    CHECK(sub.dim() > 0);
    CHECK(!is_full(k.rep, sub));
  }
}

TEST_CASE("chi5 at (0,p-1): both degree -1 maximal vectors generate one simple submodule") {
  const Setting s = Setting::make(5, ChiKind::Chi5);
  const KacModule k = build_kac(s, ints(s, 0, 4));
  std::vector<Subspace> spins;
  for (const auto& mv : maximal_vectors(k))
    if (mv.degree == -1) spins.push_back(spin(k.rep, weight_components(k.rep, mv.coords)));
  REQUIRE(spins.size() == 2);
  CHECK(spins[0].dim() == k.dim() / 2);
  CHECK(subspace_sum(k.rep, spins[0], spins[1]).dim() == spins[0].dim());
  std::mt19937_64 rng(2);
  const HeadInfo h12 = kac_head(s, eps_shift(s, k.lambda, {-1, -1, 0}), rng);
  const HeadInfo h13 = kac_head(s, eps_shift(s, k.lambda, {-1, 0, -1}), rng);
  CHECK(h12.label == h13.label);
  CHECK(h12.dim == h13.dim);
  CHECK(h12.character == h13.character);
  CHECK(kac_head(s, k.lambda, rng).dim + 2 * h12.dim > k.dim());
}

TEST_CASE("trivial factor of chi3") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const auto r = composition_series(s, ints(s, 0, 0));
  const auto it = std::find_if(r.factors.begin(), r.factors.end(), [](const FactorEntry& f) { return f.dim == 1; });
  REQUIRE(it != r.factors.end());
  CHECK(it->label == ints(s, 0, 0));
}

TEST_CASE("chi4 heads agree for s1-dot partners") {
  const Setting s = Setting::make(5, ChiKind::Chi4);
  const Field& f = *s.field;
  const Algebra& a = *s.alg;
  std::mt19937_64 rng(9);
  HeadCache cache;
  const WeylElement s1 = WeylElement::simple(3, 0);
  for (std::size_t i = 0; i < s.lambdas().size(); i += 6) {
    const Weight l = s.lambdas()[i];
    const Weight lp = dot_action(f, s1, l);
    REQUIRE(in_lambda(f, a, s.chi, lp));
    const HeadInfo h1 = kac_head(s, l, rng, &cache);
    const HeadInfo h2 = kac_head(s, lp, rng, &cache);
    CHECK(h1.label == h2.label);
    CHECK(h1.dim == h2.dim);
    CHECK(h1.character == h2.character);
  }
}

TEST_CASE("typical weights give simple Kac modules") {
  for (auto kind : {ChiKind::Chi3, ChiKind::Chi5, ChiKind::Chi2}) {
    const Setting s = Setting::make(5, kind);
    int seen = 0;
    for (const auto& l : s.lambdas()) {
      if (!delta(*s.field, l).v || seen >= 4) continue;
      ++seen;
      SeriesOptions o;
      o.cross_check = false;
      const auto r = composition_series(s, l, o);
      CHECK(r.typical);
      CHECK(r.length == 1);
      CHECK(r.factors[0].label == l);
    }
  }
}

TEST_CASE("factor multisets do not depend on the seed") {
  const Setting s = Setting::make(5, ChiKind::Chi5);
  for (int t : {1, 4}) {
    SeriesOptions a, b;
    a.seed = 1;
    b.seed = 987654321;
    const auto ra = composition_series(s, ints(s, 0, t), a);
    const auto rb = composition_series(s, ints(s, 0, t), b);
    check_report(ra);
    REQUIRE(ra.factors.size() == rb.factors.size());
    for (std::size_t i = 0; i < ra.factors.size(); ++i) {
      CHECK(ra.factors[i].label == rb.factors[i].label);
      CHECK(ra.factors[i].dim == rb.factors[i].dim);
      CHECK(ra.factors[i].mult == rb.factors[i].mult);
    }
    CHECK(ra.length == (t == 4 ? 3 : 2));
  }
}

TEST_CASE("resource guard") {
  const Setting s = Setting::make(5, ChiKind::Chi6);
  SeriesOptions o;
  o.max_dim = 999;
  CHECK_THROWS_AS(composition_series(s, s.lambdas()[0], o), ResourceError);
}
