#ifndef PERIPLECTIC_KAC_HPP
#define PERIPLECTIC_KAC_HPP

#include <map>

#include "periplectic/g0rep.hpp"
#include "periplectic/module.hpp"

namespace peri {

/// K_chi(lambda) = Ind_{g0 + g1}^{g} L0_chi(lambda), basis y_S (x) w with S a subset of
/// (X_{-e1-e2}, X_{-e1-e3}, X_{-e2-e3}) enumerated by bitmask; grade(y_S (x) w) = -|S|.
struct KacModule {
  Weight lambda;
  WeightModule base;
  WeightModule rep;

  int dim() const { return rep.dim(); }
  /// Natural index of y_S (x) w_j.
  int index(unsigned mask, int j) const { return static_cast<int>(mask) * base.dim() + j; }
  /// Natural index of the generating vector 1 (x) v.
  int top() const { return 0; }
};

KacModule build_kac(const Setting& s, const Weight& lambda);
/// Kac module over an already built L0.
KacModule build_kac(const Setting& s, const Weight& lambda, WeightModule base);

/// Number of basis vectors per grade.
std::map<int, int> grading_census(const KacModule& k);

struct KacReport {
  ModuleReport homomorphism;
  ModuleReport pchar;
  ModuleReport weights;
  ModuleReport grading;
  std::vector<std::string> structural;  // freeness counts, exterior squares, degree-0 block
  bool ok() const {
    return homomorphism.ok() && pchar.ok() && weights.ok() && grading.ok() && structural.empty();
  }
};

/// Full well-formedness check of a Kac module.
KacReport verify_module(const KacModule& k, const PChar& chi);

}  // namespace peri

#endif
