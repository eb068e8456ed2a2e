#ifndef PERIPLECTIC_MODULE_HPP
#define PERIPLECTIC_MODULE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "periplectic/field.hpp"
#include "periplectic/structure.hpp"
#include "periplectic/weights.hpp"

namespace peri {

/// Action of one algebra element from one weight space: dim(target) x dim(source).
/// target < 0 means the image weight does not occur and the action is zero.
struct Block {
  int target = -1;
  Matrix m;
};

/// Finite-dimensional weight module for (a subalgebra of) p(n), stored by weight.
///
/// Every basis vector has a weight; each acting algebra element maps the weight
/// space of mu into that of mu + alpha and is stored as one dense block per
/// source weight. The "natural" basis numbering (PBW order for induced modules)
/// is kept alongside: members[w] lists the natural indices of weight w in
/// increasing order, and local coordinates follow that order.
class WeightModule {
 public:
  WeightModule() = default;
  WeightModule(std::shared_ptr<const Field> field, std::shared_ptr<const Algebra> alg, std::vector<int> acting);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  const Algebra& algebra() const { return *alg_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }

  int dim() const { return static_cast<int>(position_.size()); }
  int num_weights() const { return static_cast<int>(weights_.size()); }
  const Weight& weight(int w) const { return weights_[w]; }
  const std::vector<Weight>& weights() const { return weights_; }
  int weight_dim(int w) const { return static_cast<int>(members_[w].size()); }
  const std::vector<int>& members(int w) const { return members_[w]; }
  /// Index of a weight, or -1.
  int find_weight(const Weight& mu) const;
  /// (weight index, local index) of a natural basis vector.
  std::pair<int, int> position(int natural) const { return position_[natural]; }

  const std::vector<int>& acting() const { return acting_; }
  bool acts(int a) const { return a < static_cast<int>(acts_.size()) && acts_[a]; }
  /// Block of algebra element a at source weight w (zero block with target -1 when a does not act).
  const Block& block(int a, int w) const;
  /// Target weight index for element a from weight w; -1 if that weight is absent.
  int shift(int a, int w) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& grades() const { return grades_; }
  bool graded() const { return !grades_.empty(); }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  void set_grades(std::vector<int> grades) { grades_ = std::move(grades); }

  /// Full matrix of a in the natural basis (small modules, export, tests).
  Matrix dense(int a) const;
  /// Natural-basis vector of a weight-local vector.
  Vec to_natural(int w, const Vec& local) const;
  /// Weight of each natural basis vector.
  std::vector<Weight> natural_weights() const;
  /// Weight multiset as (weight, multiplicity), sorted.
  std::vector<std::pair<Weight, int>> character() const;

  /// Builds the weight layout from per-vector weights (natural order).
  void set_basis(const std::vector<Weight>& natural_weights);
  /// Adds c to the matrix entry (row natural i, column natural j) of element a.
  /// The entry must respect weights: weight(i) = weight(j) + alpha_a.
  void add_entry(int a, int i, int j, Fe c);
  void set_block(int a, int w, Matrix m);

 private:
  std::shared_ptr<const Field> field_;
  std::shared_ptr<const Algebra> alg_;
  std::vector<int> acting_;
  std::vector<char> acts_;
  std::vector<Weight> weights_;
  std::map<std::vector<std::uint32_t>, int> index_;
  std::vector<std::vector<int>> members_;
  std::vector<std::pair<int, int>> position_;
  std::vector<std::vector<Block>> blocks_;  // [a][w]
  std::vector<std::vector<int>> shift_;     // [a][w]
  std::vector<std::string> labels_;
  std::vector<int> grades_;
};

/// Builds a module from full matrices (natural basis); off-weight entries are rejected.
WeightModule module_from_dense(std::shared_ptr<const Field> field, std::shared_ptr<const Algebra> alg,
                               const std::vector<Weight>& natural_weights, const std::map<int, Matrix>& actions);

struct ModuleReport {
  std::vector<std::string> violations;
  long long checks = 0;
  bool ok() const { return violations.empty(); }
};

/// rho([a,b]) = rho(a)rho(b) - (-1)^{|a||b|} rho(b)rho(a) for all acting pairs
/// whose bracket stays inside the acting set.
ModuleReport verify_homomorphism(const WeightModule& m);
/// rho(x)^p - rho(x^[p]) = chi(x)^p for every acting even x.
ModuleReport verify_pchar(const WeightModule& m, const PChar& chi);
/// Cartan elements act diagonally by the stored weights.
ModuleReport verify_weights(const WeightModule& m);
/// Grades: even elements preserve them, degree-d elements shift by d.
ModuleReport verify_grading(const WeightModule& m);

/// A vector supported on a single weight space.
struct WeightVector {
  int weight = -1;
  Vec v;
};

/// Subspace given weight by weight, each part in reduced row echelon form.
struct Subspace {
  std::vector<Matrix> rows;                       // rank_w x dim_w
  std::vector<std::vector<std::size_t>> pivots;   // per weight

  int dim() const;
  int dim(int w) const { return static_cast<int>(rows[w].rows()); }
};

Subspace zero_subspace(const WeightModule& m);
Subspace full_subspace(const WeightModule& m);
bool is_full(const WeightModule& m, const Subspace& s);
bool contains(const WeightModule& m, const Subspace& s, const WeightVector& v);
Subspace subspace_sum(const WeightModule& m, const Subspace& a, const Subspace& b);

/// Image of v under element a.
WeightVector apply(const WeightModule& m, int a, const WeightVector& v);
/// Splits a natural-basis vector into its weight components.
std::vector<WeightVector> weight_components(const WeightModule& m, const Vec& natural);

/// Smallest submodule containing the seeds (generators: all acting non-Cartan elements).
/// Stops early once the whole module is reached.
Subspace spin(const WeightModule& m, const std::vector<WeightVector>& seeds);
/// Same for the dual module: seeds are row vectors, acted on by transposed blocks.
Subspace spin_dual(const WeightModule& m, const std::vector<WeightVector>& seeds);
/// {v : t(v) = 0 for all t in T}, T a subspace of the dual.
Subspace annihilator(const WeightModule& m, const Subspace& dual);

/// Restriction to an invariant subspace (throws if s is not invariant).
/// Both constructions keep the grading when every row of s is homogeneous.
WeightModule submodule(const WeightModule& m, const Subspace& s);
/// Quotient by an invariant subspace; basis = non-pivot natural vectors (labels kept).
WeightModule quotient(const WeightModule& m, const Subspace& s);
WeightModule direct_sum(const WeightModule& a, const WeightModule& b);

/// Maximal vectors: common kernel of the positive elements (n0 + g_{+1}) per weight,
/// split by grade when the module is graded. Columns of each matrix are a basis,
/// normalized so the first nonzero coordinate is 1.
struct MaxVectorSpace {
  int weight = -1;
  std::optional<int> grade;
  Matrix basis;  // dim_w x k
};
std::vector<MaxVectorSpace> maximal_vector_spaces(const WeightModule& m);
/// Scales v so its first nonzero entry is 1.
void normalize(const Field& f, Vec& v);

}  // namespace peri

#endif
