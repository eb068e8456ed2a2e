#ifndef PERIPLECTIC_IRREDUCIBLE_HPP
#define PERIPLECTIC_IRREDUCIBLE_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "periplectic/module.hpp"

namespace peri {

enum class CertificateKind {
  Trivial,         // dimension one
  MaximalVectors,  // every maximal vector spins to M and each weight has at most one
  Norton,          // kernel vector and dual kernel vector of a singular element both spin to M
  Submodule,       // a proper nonzero submodule was found
};
std::string certificate_name(CertificateKind k);

struct IrreducibilityResult {
  bool irreducible = false;
  CertificateKind kind = CertificateKind::Trivial;
  std::optional<Subspace> submodule;  // proper and nonzero when reducible
  /// Norton data: weight space used, its dimension and the eigenvalue.
  int norton_weight = -1;
  int norton_dim = 0;
  Fe norton_eigenvalue;
  std::vector<MaxVectorSpace> max_spaces;
};

/// Decides irreducibility (MeatAxe-style). Randomness only picks search vectors and
/// the Norton element; the verdict does not depend on it.
IrreducibilityResult is_irreducible(const WeightModule& m, std::mt19937_64& rng);
/// Norton's criterion alone, on the smallest weight space.
IrreducibilityResult norton_test(const WeightModule& m, std::mt19937_64& rng);

/// Divides out proper submodules (starting with `first`, if given) until a simple
/// quotient remains. For a module with a unique maximal submodule this is its head.
WeightModule simple_top(WeightModule m, std::mt19937_64& rng, const Subspace* first = nullptr);

/// Lexicographically smallest weight carrying a maximal vector.
Weight canonical_label(const WeightModule& m);
Weight canonical_label(const WeightModule& m, const std::vector<MaxVectorSpace>& spaces);

}  // namespace peri

#endif
