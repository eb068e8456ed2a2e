#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periplectic/weights.hpp"

using namespace peri;

TEST_CASE("delta values") {
  const auto f = Field::get(5, 1);
  for (int s = 0; s < 5; ++s) CHECK(delta(*f, weight_from_ints(*f, std::vector{0, s})) == f->zero());
  CHECK(f->to_int(delta(*f, weight_from_ints(*f, std::vector{1, 1}))) == 3);
  // (p-2, p-2): (p-2)^2 (2p-3) = 9 * 7 = 63 = 3 mod 5
  CHECK(f->to_int(delta(*f, weight_from_ints(*f, std::vector{3, 3}))) == 3);
  // closed form r s (r+s+1) everywhere
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s)
      CHECK(f->to_int(delta(*f, weight_from_ints(*f, std::vector{r, s}))) == r * s * (r + s + 1) % 5);
}

TEST_CASE("dot action") {
  const auto f = Field::get(7, 1);
  const auto s1 = WeylElement::simple(3, 0);
  for (int r = 0; r < 7; ++r)
    for (int s = 0; s < 7; ++s) {
      const Weight l = weight_from_ints(*f, std::vector{r, s});
      CHECK(dot_action(*f, WeylElement::identity(3), l) == l);
      CHECK(dot_action(*f, s1, l) == weight_from_ints(*f, std::vector{-r - 2, r + s + 1}));
      for (const auto& w : weyl_group(3))
        for (const auto& u : weyl_group(3))
          CHECK(dot_action(*f, w * u, l) == dot_action(*f, w, dot_action(*f, u, l)));
    }
  CHECK(weyl_group(3).size() == 6);
  CHECK(weyl_group(4).size() == 24);
  for (const auto& w : weyl_group(4)) CHECK(w * w.inverse() == WeylElement::identity(4));
}

TEST_CASE("delta_permuted agrees with delta of the dot action") {
  const auto f = Field::get(5, 1);
  const Weight l = weight_from_ints(*f, std::vector{1, 1});
  CHECK(delta_permuted(*f, WeylElement::simple(3, 0), l) == delta(*f, weight_from_ints(*f, std::vector{2, 3})));
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s)
      for (const auto& w : weyl_group(3)) {
        const Weight m = weight_from_ints(*f, std::vector{r, s});
        CHECK(delta_permuted(*f, w, m) == delta(*f, dot_action(*f, w, m)));
      }
  const auto g = Field::get(5, 5);
  const Weight ext = {f->zero(), g->add(g->theta(), g->from_int(2))};
  for (const auto& w : weyl_group(3)) CHECK(delta_permuted(*g, w, ext) == delta(*g, dot_action(*g, w, ext)));
}

TEST_CASE("chi catalog") {
  const Algebra a = build_algebra(3, 5);
  const PChar c6 = make_chi(a, ChiKind::Chi6);
  for (int i = 0; i < a.dim(); ++i) {
    const bool one = i == a.even_root(2, 1) || i == a.even_root(3, 2);
    CHECK(c6.value(i) == (one ? 1 : 0));
  }
  const PChar c5 = make_chi(a, ChiKind::Chi5);
  for (int i = 0; i < a.dim(); ++i) CHECK(c5.value(i) == (i == a.even_root(3, 2) ? 1 : 0));
  const PChar c1 = make_chi(a, ChiKind::Chi1);
  CHECK(c1.value(a.cartan(1)) == 1);
  CHECK(c1.value(a.cartan(2)) == 1);
  CHECK(c1.field_ext(a) == 5);
  CHECK(c5.field_ext(a) == 1);
  CHECK_THROWS(make_chi(a, ChiKind::Chi1, {1, 4}));
  CHECK_THROWS(make_chi(a, ChiKind::Chi1, {0, 1}));
  CHECK_THROWS(make_chi(a, ChiKind::Chi2, {0}));
  CHECK_THROWS(make_chi(a, ChiKind::Chi4, {5}));
  CHECK_THROWS(parse_chi_kind("chi7"));
  CHECK(parse_chi_kind("chi4") == ChiKind::Chi4);
  for (auto k : {ChiKind::Chi1, ChiKind::Chi2, ChiKind::Chi3, ChiKind::Chi4, ChiKind::Chi5, ChiKind::Chi6}) {
    const PChar c = make_chi(a, k);
    for (int x : a.positive_indices()) CHECK(c.value(x) == 0);
  }
}

TEST_CASE("Lambda_chi enumeration") {
  for (int p : {5, 7}) {
    const Algebra a = build_algebra(3, p);
    const auto f1 = Field::get(p, 1);
    const auto fp = Field::get(p, p);
    const auto l3 = enumerate_lambda(*f1, a, make_chi(a, ChiKind::Chi3));
    CHECK(l3.size() == static_cast<std::size_t>(p * p));
    for (auto k : {ChiKind::Chi5, ChiKind::Chi6})
      for (const auto& l : enumerate_lambda(*f1, a, make_chi(a, k))) {
        CHECK(f1->in_prime_field(l[0]));
        CHECK(f1->in_prime_field(l[1]));
      }
    for (int b = 1; b < p; ++b) {
      const PChar c2 = make_chi(a, ChiKind::Chi2, {b});
      const auto l2 = enumerate_lambda(*fp, a, c2);
      CHECK(l2.size() == static_cast<std::size_t>(p * p));
      for (const auto& l : l2) {
        CHECK(in_lambda(*fp, a, c2, l));
        CHECK(fp->in_prime_field(l[0]));
        CHECK_FALSE(fp->in_prime_field(l[1]));
        // delta vanishes exactly when r = 0
        CHECK((delta(*fp, l) == fp->zero()) == (l[0] == fp->zero()));
      }
      CHECK_FALSE(in_lambda(*fp, a, c2, weight_from_ints(*fp, std::vector{0, 0})));
    }
    const PChar c1 = make_chi(a, ChiKind::Chi1, {1, 2});
    for (const auto& l : enumerate_lambda(*fp, a, c1)) CHECK(in_lambda(*fp, a, c1, l));
  }
}

TEST_CASE("typicality scans") {
  for (auto [n, p] : {std::pair{3, 5}, {3, 7}, {3, 11}, {4, 7}, {4, 5}}) {
    const auto scan = weyl_typicality_scan(n, p);
    CHECK(scan.counterexamples.empty());
    CHECK(scan.route_mismatches == 0);
    long long expect = 1;
    for (int i = 0; i < n - 1; ++i) expect *= p;
    CHECK(scan.weights == expect);
  }
  const auto scan = weyl_typicality_scan(3, 5);
  bool zero_has_witness = false;
  for (const auto& [l, w] : scan.witnesses)
    if (l == std::vector<int>{0, 0}) {
      zero_has_witness = true;
      const auto f = Field::get(5, 1);
      CHECK(delta(*f, dot_action(*f, w, weight_from_ints(*f, l))) != f->zero());
    }
  CHECK(zero_has_witness);
  CHECK_THROWS(weyl_typicality_scan(4, 3));
  CHECK_THROWS(weyl_typicality_scan(6, 7));
}
