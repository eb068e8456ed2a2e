#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "periplectic/field.hpp"

using namespace peri;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  for (auto& x : m.data()) x = f.from_packed(d(rng));
  return m;
}

// Cofactor expansion over the ring of polynomials is overkill; evaluate
// det(xI - m) by Leibniz at every field point instead.
Fe leibniz_det(const Field& f, const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Fe total = f.zero();
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Fe term = f.one();
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
    total = (inv % 2) ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const auto f = Field::get(5, 1);
  CHECK(f->to_int(f->mul(f->from_int(3), f->from_int(4))) == 2);
  CHECK(f->to_int(f->add(f->from_int(3), f->from_int(4))) == 2);
  CHECK(f->to_int(f->from_int(-1)) == 4);
  CHECK(f->to_int(f->inv(f->from_int(2))) == 3);
  CHECK_THROWS_AS(f->inv(f->zero()), FieldError);
  CHECK_FALSE(f->try_inv(f->zero()).has_value());
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      CHECK(f->to_int(f->add(f->from_int(a), f->from_int(b))) == (a + b) % 5);
      CHECK(f->to_int(f->mul(f->from_int(a), f->from_int(b))) == (a * b) % 5);
    }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(FieldParams({4, 1}).validate(), FieldError);
  CHECK_THROWS_AS(FieldParams({3, 1}).validate(), FieldError);
  CHECK_THROWS_AS(FieldParams({5, 2}).validate(), FieldError);
  CHECK_THROWS_AS(Field::get(11, 11), FieldError);
  CHECK_NOTHROW(Field::get(11, 1));
}

TEST_CASE("Artin-Schreier extension") {
  for (int p : {5, 7}) {
    const auto f = Field::get(p, p);
    const Fe t = f->theta();
    CHECK(f->pow(t, static_cast<std::uint64_t>(p)) == f->add(t, f->one()));
    for (int c = 1; c < p; ++c) {
      const Fe ct = f->mul(f->from_int(c), t);
      CHECK(f->sub(f->pow(ct, static_cast<std::uint64_t>(p)), ct) == f->from_int(c));
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> d(0, f->order() - 1);
    for (int k = 0; k < 200; ++k) {
      const Fe a = f->from_packed(d(rng));
      const Fe b = f->from_packed(d(rng));
      Fe frob = a;
      for (int i = 0; i < p; ++i) frob = f->pow(frob, static_cast<std::uint64_t>(p));
      CHECK(frob == a);
      CHECK(f->packed(f->from_packed(f->packed(a))) == f->packed(a));
      // additive structure matches coefficientwise addition
      auto ca = f->coeffs(a), cb = f->coeffs(b), cs = f->coeffs(f->add(a, b));
      for (int i = 0; i < p; ++i) CHECK(cs[i] == (ca[i] + cb[i]) % p);
      if (a.v) CHECK(f->mul(a, f->inv(a)) == f->one());
    }
  }
  CHECK(Field::get(5, 5)->order() == 3125u);
}

TEST_CASE("matrix multiply agrees with naive product") {
  for (int ext : {1, 5}) {
    const auto f = Field::get(5, ext);
    std::mt19937_64 rng(11);
    const Matrix a = random_matrix(*f, 13, 300, rng);
    const Matrix b = random_matrix(*f, 300, 9, rng);
    const Matrix c = multiply(*f, a, b);
    for (std::size_t i = 0; i < 13; ++i)
      for (std::size_t j = 0; j < 9; ++j) {
        Fe s = f->zero();
        for (std::size_t k = 0; k < 300; ++k) s = f->add(s, f->mul(a(i, k), b(k, j)));
        CHECK(c(i, j) == s);
      }
  }
}

TEST_CASE("rref, rank, nullspace, solve") {
  const auto f = Field::get(5, 1);
  Matrix m(2, 2);
  m(0, 0) = f->from_int(1);
  m(0, 1) = f->from_int(2);
  m(1, 0) = f->from_int(3);
  m(1, 1) = f->from_int(6);
  const auto r = rref(*f, m);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(f->to_int(r.reduced(0, 1)) == 2);
  CHECK(r.reduced(1, 0) == f->zero());

  Matrix z(2, 2);
  Matrix b(2, 1);
  b(0, 0) = f->one();
  CHECK_FALSE(solve(*f, z, b).has_value());

  for (int ext : {1, 5}) {
    const auto g = Field::get(5, ext);
    std::mt19937_64 rng(3 + ext);
    for (int trial = 0; trial < 20; ++trial) {
      // low-rank product so kernels are nontrivial
      const std::size_t k = 1 + trial % 6;
      const Matrix m2 = multiply(*g, random_matrix(*g, 9, k, rng), random_matrix(*g, k, 12, rng));
      const std::size_t rk = rank(*g, m2);
      const Matrix ns = nullspace(*g, m2);
      CHECK(rk + ns.cols() == 12);
      CHECK(multiply(*g, m2, ns).is_zero());
      CHECK(rank(*g, ns) == ns.cols());
      CHECK(kernel_rows(*g, m2) == transpose(ns));
      const Matrix x0 = random_matrix(*g, 12, 2, rng);
      const Matrix rhs = multiply(*g, m2, x0);
      const auto x = solve(*g, m2, rhs);
      REQUIRE(x.has_value());
      CHECK(multiply(*g, m2, *x) == rhs);
    }
  }
}

TEST_CASE("charpoly against determinant") {
  const auto f = Field::get(5, 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix m = random_matrix(*f, n, n, rng);
    const auto cp = charpoly(*f, m);
    REQUIRE(cp.size() == n + 1);
    CHECK(cp.back() == f->one());
    for (int x = 0; x < 5; ++x) {
      Matrix xm(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) xm(i, j) = f->sub(i == j ? f->from_int(x) : f->zero(), m(i, j));
      CHECK(eval_poly(*f, cp, f->from_int(x)) == leibniz_det(*f, xm));
    }
  }
  const auto g = Field::get(5, 5);
  const Matrix m = random_matrix(*g, 4, 4, rng);
  const auto cp = charpoly(*g, m);
  // Cayley-Hamilton
  Matrix acc(4, 4), pw = Matrix::identity(4);
  for (const Fe c : cp) {
    acc = add(*g, acc, scale(*g, c, pw));
    pw = multiply(*g, pw, m);
  }
  CHECK(acc.is_zero());
}

TEST_CASE("echelon basis") {
  const auto f = Field::get(7, 1);
  EchelonBasis e(3);
  CHECK(e.insert(*f, {f->from_int(1), f->from_int(2), f->zero()}));
  CHECK(e.insert(*f, {f->from_int(2), f->from_int(4), f->one()}));
  CHECK_FALSE(e.insert(*f, {f->from_int(3), f->from_int(6), f->from_int(5)}));
  CHECK(e.size() == 2);
  CHECK(rref(*f, e.to_rref(*f)).rank == 2);
}

TEST_CASE("matrix text round trip") {
  const auto f = Field::get(5, 5);
  std::mt19937_64 rng(1);
  const Matrix m = random_matrix(*f, 4, 6, rng);
  std::stringstream ss;
  write_matrix(ss, *f, m);
  std::stringstream copy(ss.str());
  CHECK(peek_matrix_params(copy) == FieldParams{5, 5});
  CHECK(read_matrix(ss, *f) == m);
  std::stringstream again(ss.str());
  CHECK_THROWS(read_matrix(again, *Field::get(5, 1)));
}

TEST_CASE("parse inverts to_string") {
  for (int ext : {1, 5}) {
    const auto f = Field::get(5, ext);
    for (std::uint32_t x = 0; x < f->order(); x += (ext == 1 ? 1 : 37)) {
      const Fe a = f->from_packed(x);
      CHECK(f->parse(f->to_string(a)) == a);
    }
  }
  const auto f = Field::get(5, 5);
  CHECK(f->parse("-1") == f->from_int(4));
  CHECK(f->parse("2*t + 3") == f->add(f->mul(f->from_int(2), f->theta()), f->from_int(3)));
  CHECK(f->parse("t^2-t") == f->sub(f->pow(f->theta(), 2), f->theta()));
  CHECK_THROWS(f->parse(""));
  CHECK_THROWS(f->parse("x"));
  CHECK_THROWS(f->parse("2t3"));
  CHECK_THROWS(Field::get(5, 1)->parse("t+1"));
}
