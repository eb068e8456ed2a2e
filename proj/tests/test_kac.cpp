#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "periplectic/kac.hpp"

using namespace peri;

namespace {

void check_kac(const Setting& s, const Weight& l) {
  const auto t0 = std::chrono::steady_clock::now();
  const KacModule k = build_kac(s, l);
  const auto t1 = std::chrono::steady_clock::now();
  const KacReport rep = verify_module(k, s.chi);
  const auto t2 = std::chrono::steady_clock::now();
  MESSAGE(s.chi.to_string() << " " << weight_to_string(*s.field, l) << " dim " << k.dim() << " build "
                            << std::chrono::duration<double>(t1 - t0).count() << "s verify "
                            << std::chrono::duration<double>(t2 - t1).count() << "s");
  CHECK(rep.ok());
  for (const auto& v : rep.homomorphism.violations) MESSAGE(v);
  for (const auto& v : rep.pchar.violations) MESSAGE(v);
  for (const auto& v : rep.structural) MESSAGE(v);
  CHECK(k.dim() == 8 * k.base.dim());
}

}  // namespace

TEST_CASE("Kac modules are well formed") {
  for (auto kind : {ChiKind::Chi3, ChiKind::Chi2, ChiKind::Chi5, ChiKind::Chi6, ChiKind::Chi4, ChiKind::Chi1}) {
    const Setting s = Setting::make(5, kind);
    const auto ls = s.lambdas();
    check_kac(s, ls[1]);
  }
}

TEST_CASE("weights and grading of Kac modules") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const Field& f = *s.field;
  const Weight l = weight_from_ints(f, std::vector{2, 3});
  const KacModule k = build_kac(s, l);
  const auto& nat = k.rep.natural_weights();
  CHECK(nat[k.index(1, 0)] == weight_from_ints(f, std::vector{2, 2}));  // y_{-e1-e2} v: (r, s-1)
  CHECK(nat[k.index(4, 0)] == weight_from_ints(f, std::vector{3, 3}));  // y_{-e2-e3} v: (r+1, s)
  const auto census = grading_census(k);
  const int d0 = k.base.dim();
  CHECK(census.at(0) == d0);
  CHECK(census.at(-1) == 3 * d0);
  CHECK(census.at(-2) == 3 * d0);
  CHECK(census.at(-3) == d0);
  // character = char(L0) x char(exterior algebra on g_{-1})
  std::map<std::vector<std::uint32_t>, int> expect, got;
  const auto base = k.base.natural_weights();
  const std::vector<std::vector<int>> ext = {{0, 0}, {0, -1}, {-1, 1}, {-1, 0}, {1, 0}, {1, -1}, {0, 1}, {0, 0}};
  for (const auto& off : ext)
    for (const auto& w : base) {
      const Weight x = weight_shift(f, w, off);
      ++expect[{f.packed(x[0]), f.packed(x[1])}];
    }
  for (const auto& x : nat) ++got[{f.packed(x[0]), f.packed(x[1])}];
  CHECK(expect == got);
}

TEST_CASE("extension field only when needed") {
  CHECK(Setting::make(5, ChiKind::Chi1).field->ext() == 5);
  CHECK(Setting::make(5, ChiKind::Chi2).field->ext() == 5);
  CHECK(Setting::make(5, ChiKind::Chi4).field->ext() == 5);
  CHECK(Setting::make(5, ChiKind::Chi3).field->ext() == 1);
  CHECK(Setting::make(5, ChiKind::Chi5).field->ext() == 1);
  CHECK(Setting::make(5, ChiKind::Chi6).field->ext() == 1);
}
