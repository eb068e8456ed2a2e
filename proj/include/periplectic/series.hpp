#ifndef PERIPLECTIC_SERIES_HPP
#define PERIPLECTIC_SERIES_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "periplectic/irreducible.hpp"
#include "periplectic/kac.hpp"

namespace peri {

class MatrixCache;

/// Raised when a module exceeds the configured dimension limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Character = std::vector<std::pair<Weight, int>>;

struct Leaf {
  Weight label;
  int dim = 0;
  Character character;
  CertificateKind certificate = CertificateKind::Trivial;
};

/// Composition factors bottom to top.
std::vector<Leaf> composition_leaves(const WeightModule& m, std::mt19937_64& rng);

struct HeadInfo {
  Weight label;
  int dim = 0;
  Character character;
};

/// Simple heads of Kac modules, keyed by highest weight; thread-safe.
class HeadCache {
 public:
  std::optional<HeadInfo> find(const Field& f, const Weight& mu) const;
  void insert(const Field& f, const Weight& mu, HeadInfo h);

 private:
  mutable std::mutex mutex_;
  std::map<std::vector<std::uint32_t>, HeadInfo> heads_;
};

struct RadicalCheck {
  bool proper = false;  // the sum of the proper submodules found is proper
  Subspace sum;
  int generators = 0;   // maximal vectors that spin to a proper submodule
};

/// Sums the proper submodules generated by maximal vectors (and any extra ones given).
RadicalCheck unique_max_submodule_check(const WeightModule& m, const std::vector<Subspace>& extra = {});

/// Head of K_chi(mu): the simple quotient by the unique maximal submodule.
HeadInfo kac_head(const Setting& s, const Weight& mu, std::mt19937_64& rng, HeadCache* cache = nullptr,
                  MatrixCache* matrices = nullptr);

struct FactorEntry {
  Weight label;
  int dim = 0;
  int mult = 0;
};

struct SeriesOptions {
  std::uint64_t seed = 1;
  int max_dim = 20000;
  /// Compare each factor with the head of K_chi(label).
  bool cross_check = true;
  HeadCache* cache = nullptr;
  /// Kac modules are read from and written to this cache when set.
  MatrixCache* matrices = nullptr;
  /// Leave runtime_ms at zero so reports are byte-identical across runs.
  bool timing = true;
};

struct CompositionReport {
  PChar chi;
  Weight lambda;
  Fe delta;
  bool typical = false;
  int dim = 0;
  std::vector<FactorEntry> factors;  // sorted by label, then dimension
  int length = 0;
  std::vector<Leaf> leaves;          // bottom to top
  bool dims_ok = false;              // sum mult * dim = dim K
  bool character_ok = false;         // factor characters add up to that of K
  bool cross_check_ok = true;        // every factor matches head(K(label))
  bool unique_max_ok = false;
  bool head_confirmed = false;       // the simple head of K is the top factor
  std::vector<std::string> notes;
  double runtime_ms = 0;

  bool ok() const { return dims_ok && character_ok && cross_check_ok && unique_max_ok && head_confirmed; }
};

CompositionReport composition_series(const Setting& s, const KacModule& k, const SeriesOptions& opts = {});
CompositionReport composition_series(const Setting& s, const Weight& lambda, const SeriesOptions& opts = {});

/// Factor multiset as (label, dim, mult), sorted.
std::vector<FactorEntry> factor_multiset(const Field& f, const std::vector<Leaf>& leaves);

}  // namespace peri

#endif
