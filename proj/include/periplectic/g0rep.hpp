#ifndef PERIPLECTIC_G0REP_HPP
#define PERIPLECTIC_G0REP_HPP

#include <memory>

#include "periplectic/module.hpp"
#include "periplectic/weights.hpp"

namespace peri {

/// Shared context for building modules of p(3) with a fixed p-character.
struct Setting {
  std::shared_ptr<const Algebra> alg;
  std::shared_ptr<const Field> field;
  PChar chi;

  /// Algebra over GF(p) and the field GF(p) or GF(p^p) that chi needs.
  static Setting make(int p, ChiKind kind, std::vector<int> params = {});
  static Setting make(std::shared_ptr<const Algebra> alg, PChar chi);
  std::vector<Weight> lambdas() const { return enumerate_lambda(*field, *alg, chi); }
  void require_lambda(const Weight& lambda) const;
};

/// Even part g_0 in basis order, and its pieces.
std::vector<int> g0_indices(const Algebra& alg);
/// n0^- in PBW order (X_{-e1+e3}, X_{-e2+e3}, X_{-e1+e2}).
std::vector<int> baby_verma_negs(const Algebra& alg);
/// g_{-1} in monomial order (X_{-e1-e2}, X_{-e1-e3}, X_{-e2-e3}).
std::vector<int> odd_negs(const Algebra& alg);

/// Z0_chi(lambda) = Ind_{b0}^{g0} K_lambda, basis X_{-e1+e3}^c X_{-e2+e3}^b X_{-e1+e2}^a v.
WeightModule baby_verma(const Setting& s, const Weight& lambda);

/// Radical of the contravariant form on Z0_0(lambda) (chi = 0 only).
Subspace contravariant_radical(const Setting& s, const WeightModule& z);

enum class Gl2Kind { Restricted, RegularNilpotent };

/// Simple module for the Levi l = <H1, H2, X_{e1-e2}, X_{-e1+e2}> with highest weight lambda.
/// Restricted: dim r+1 (r = lambda_1 in GF(p)). Regular nilpotent: the p-dimensional
/// baby Verma with X_{-e1+e2}^p = 1.
WeightModule gl2_simple(const Setting& s, Gl2Kind kind, const Weight& lambda);

/// U_chi(u-) (x) V with u- = <X_{-e1+e3}, X_{-e2+e3}> and V = gl2_simple (chi2, chi4, chi5).
WeightModule levi_induced(const Setting& s, const Weight& lambda);

/// L0_chi(lambda) for the catalog kinds. For chi5 this is the head of levi_induced.
WeightModule simple_g0(const Setting& s, const Weight& lambda);

}  // namespace peri

#endif
