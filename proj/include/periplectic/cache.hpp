#ifndef PERIPLECTIC_CACHE_HPP
#define PERIPLECTIC_CACHE_HPP

#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>

#include "periplectic/kac.hpp"

namespace peri {

/// Text serialization of a weight module: basis weights, grades, labels and every
/// nonzero action block (as write_matrix blocks).
void write_module(std::ostream& out, const WeightModule& m);
WeightModule read_module(std::istream& in, std::shared_ptr<const Field> field, std::shared_ptr<const Algebra> alg);

void write_kac(std::ostream& out, const KacModule& k);
KacModule read_kac(std::istream& in, std::shared_ptr<const Field> field, std::shared_ptr<const Algebra> alg);

/// Directory of Kac modules keyed by (p, chi, lambda), with an index in meta.json.
/// Safe to share between threads.
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::string key(const Setting& s, const Weight& lambda) const;
  std::optional<KacModule> load(const Setting& s, const Weight& lambda) const;
  void store(const Setting& s, const Weight& lambda, const KacModule& k);
  /// Number of entries listed in meta.json.
  int size() const;

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

/// Default cache directory: $PERI_CACHE_DIR, or empty when unset.
std::string default_cache_dir();

/// K_chi(lambda) from the cache when present, otherwise built (and stored when a cache is given).
KacModule obtain_kac(const Setting& s, const Weight& lambda, MatrixCache* cache);

}  // namespace peri

#endif
