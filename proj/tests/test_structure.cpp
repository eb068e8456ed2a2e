#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periplectic/structure.hpp"

using namespace peri;

TEST_CASE("basis layout") {
  const Algebra a = build_algebra(3, 5);
  CHECK(a.dim() == 17);
  CHECK(a.indices_of_degree(-1).size() == 3);
  CHECK(a.indices_of_degree(0).size() == 8);
  CHECK(a.indices_of_degree(1).size() == 6);
  CHECK(a.positive_indices().size() == 9);
  CHECK(build_algebra(4, 5).dim() == 31);
  CHECK(build_algebra(4, 7).dim() == 31);
  CHECK_THROWS(build_algebra(2, 5));
  CHECK_THROWS(build_algebra(3, 9));
  CHECK_THROWS(build_algebra(5, 5));
}

TEST_CASE("hand-computed brackets") {
  const Algebra a = build_algebra(3, 5);
  const int h1 = a.cartan(1);
  // [X_{e1+e2}, X_{-e1-e2}] = -H_{e1-e2}
  CHECK(a.bracket(a.odd_pos(1, 2), a.odd_neg(1, 2)) == Combo{{h1, 4}});
  // [X_{2e1}, X_{-e1-e2}] = 2 X_{e1-e2}
  CHECK(a.bracket(a.odd_pos(1, 1), a.odd_neg(1, 2)) == Combo{{a.even_root(1, 2), 2}});
  // [H_{e1-e2}, X_{e1-e2}] = 2 X_{e1-e2}
  CHECK(a.bracket(h1, a.even_root(1, 2)) == Combo{{a.even_root(1, 2), 2}});
  // [X_{e1-e2}, X_{e2-e1}] = H_{e1-e2}
  CHECK(a.bracket(a.even_root(1, 2), a.even_root(2, 1)) == Combo{{h1, 1}});
  // g_{-1} and g_{+1} are abelian
  for (int x : a.indices_of_degree(-1))
    for (int y : a.indices_of_degree(-1)) CHECK(a.bracket(x, y).empty());
  for (int x : a.indices_of_degree(1))
    for (int y : a.indices_of_degree(1)) CHECK(a.bracket(x, y).empty());
}

TEST_CASE("root coordinates") {
  const Algebra a = build_algebra(3, 5);
  CHECK(a.root_coords(a.even_root(1, 2)) == std::vector<int>{2, -1});
  CHECK(a.root_coords(a.even_root(2, 3)) == std::vector<int>{-1, 2});
  CHECK(a.root_coords(a.even_root(1, 3)) == std::vector<int>{1, 1});
  CHECK(a.root_coords(a.odd_pos(1, 2)) == std::vector<int>{0, 1});
  CHECK(a.root_coords(a.odd_neg(1, 2)) == std::vector<int>{0, -1});
  CHECK(a.root_coords(a.odd_neg(1, 3)) == std::vector<int>{-1, 1});
  CHECK(a.root_coords(a.odd_neg(2, 3)) == std::vector<int>{1, 0});
  // the table is consistent with weights: [h, x] = alpha(h) x
  for (int x = 0; x < a.dim(); ++x)
    for (int k = 1; k <= 2; ++k) {
      const int c = ((a.root_coords(x)[k - 1] % 5) + 5) % 5;
      CHECK(a.bracket(a.cartan(k), x) == (c ? Combo{{x, c}} : Combo{}));
    }
}

TEST_CASE("axioms and restricted structure") {
  for (auto [n, p] : {std::pair{3, 5}, {3, 7}, {4, 5}, {3, 11}}) {
    const Algebra a = build_algebra(n, p);
    CHECK(verify_axioms(a).ok());
    CHECK(verify_restricted(a).ok());
    CHECK(verify_against_realization(a).ok());
  }
}

TEST_CASE("p-map of root vectors and toral elements") {
  const Algebra a = build_algebra(3, 5);
  CHECK(a.p_power[a.cartan(1)] == Combo{{a.cartan(1), 1}});
  CHECK(a.p_power[a.even_root(1, 3)].empty());
}

TEST_CASE("perturbed table is rejected") {
  Algebra a = build_algebra(3, 5);
  const int x = a.odd_pos(1, 2), y = a.odd_neg(1, 2);
  a.bracket_table[static_cast<std::size_t>(x) * a.dim() + y] = {{a.cartan(1), 1}};
  CHECK_FALSE(verify_against_realization(a).ok());
  CHECK_FALSE(verify_axioms(a).ok());

  Algebra b = build_algebra(3, 5);
  b.p_power[b.cartan(1)] = {{b.cartan(1), 2}};
  CHECK_FALSE(verify_restricted(b).ok());
}

TEST_CASE("decompose rejects matrices outside the algebra") {
  const Algebra a = build_algebra(3, 5);
  Matrix m = Matrix::identity(6);
  CHECK_THROWS(decompose(a, m));
}

TEST_CASE("realization matrices") {
  const Algebra a = build_algebra(3, 5);
  const auto f = Field::get(5, 1);
  auto e = [&](int r, int c, int v) {
    Matrix m(6, 6);
    m(r - 1, c - 1) = f->from_int(v);
    return m;
  };
  Matrix h = add(*f, add(*f, e(1, 1, 1), e(2, 2, -1)), add(*f, e(4, 4, -1), e(5, 5, 1)));
  CHECK(supermatrix(a, a.cartan(1)) == h);
  CHECK(supermatrix(a, a.odd_neg(1, 3)) == add(*f, e(4, 3, 1), e(6, 1, -1)));
  for (int x = 0; x < a.dim(); ++x) {
    const Matrix m = supermatrix(a, x);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(m(i, 3 + j) == m(j, 3 + i));                    // B symmetric
        CHECK(m(3 + i, j) == f->neg(m(3 + j, i)));            // C skew
        CHECK(m(3 + i, 3 + j) == f->neg(m(j, i)));            // D = -A^t
      }
  }
  CHECK(a.bracket(a.even_root(1, 2), a.odd_neg(1, 2)).empty());
  CHECK(a.bracket(a.even_root(2, 3), a.odd_neg(1, 2)) == Combo{{a.odd_neg(1, 3), 4}});
}
