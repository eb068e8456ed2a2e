#include "periplectic/kac.hpp"

#include "periplectic/pbw.hpp"

namespace peri {

KacModule build_kac(const Setting& s, const Weight& lambda) { return build_kac(s, lambda, simple_g0(s, lambda)); }

KacModule build_kac(const Setting& s, const Weight& lambda, WeightModule base) {
  s.require_lambda(lambda);
  const Algebra& a = *s.alg;
  InducedOptions opts;
  opts.negs = odd_negs(a);
  opts.b = g0_indices(a);
  for (int x : a.indices_of_degree(1)) opts.b.push_back(x);
  opts.grade_step = -1;
  KacModule k;
  k.lambda = lambda;
  k.rep = induce(base, s.chi, opts);
  k.base = std::move(base);
  return k;
}

std::map<int, int> grading_census(const KacModule& k) {
  std::map<int, int> c;
  for (int g : k.rep.grades()) ++c[g];
  return c;
}

KacReport verify_module(const KacModule& k, const PChar& chi) {
  KacReport rep;
  rep.homomorphism = verify_homomorphism(k.rep);
  rep.pchar = verify_pchar(k.rep, chi);
  rep.weights = verify_weights(k.rep);
  rep.grading = verify_grading(k.rep);
  const int d0 = k.base.dim();
  if (k.rep.dim() != 8 * d0) rep.structural.push_back("dimension is not 8 dim L0");
  const auto census = grading_census(k);
  const std::map<int, int> expect{{0, d0}, {-1, 3 * d0}, {-2, 3 * d0}, {-3, d0}};
  if (census != expect) rep.structural.push_back("grading census differs from (1,3,3,1) dim L0");
  const Field& f = k.rep.field();
  const WeightModule& m = k.rep;
  for (int y : odd_negs(m.algebra()))
    for (int w = 0; w < m.num_weights(); ++w) {
      const Block& b1 = m.block(y, w);
      if (b1.target < 0) continue;
      const Block& b2 = m.block(y, b1.target);
      if (b2.target >= 0 && !multiply(f, b2.m, b1.m).is_zero()) {
        rep.structural.push_back("odd generator " + m.algebra().basis[y].name + " does not square to zero");
        break;
      }
    }
  for (int x : k.base.acting()) {
    const Matrix small = k.base.dense(x);
    bool same = true;
    for (int w = 0; w < m.num_weights() && same; ++w) {
      const Block& b = m.block(x, w);
      if (b.target < 0) continue;
      for (std::size_t i = 0; i < b.m.rows() && same; ++i)
        for (std::size_t j = 0; j < b.m.cols() && same; ++j) {
          const int ni = m.members(b.target)[i], nj = m.members(w)[j];
          if (nj < d0 && ni < d0 && b.m(i, j) != small(ni, nj)) same = false;
        }
    }
    if (!same) rep.structural.push_back("degree-0 block differs from L0 for " + m.algebra().basis[x].name);
  }
  return rep;
}

}  // namespace peri
