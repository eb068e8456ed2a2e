#ifndef PERIPLECTIC_THEOREM_HPP
#define PERIPLECTIC_THEOREM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "periplectic/series.hpp"

namespace peri {

class MatrixCache;

/// A bound in a rule predicate: an integer or the symbol "p-1".
struct RuleValue {
  int n = 0;
  bool p_minus_1 = false;
  int resolve(int p) const { return p_minus_1 ? p - 1 : n; }
};

struct RulePredicate {
  enum class Kind { Equal, AtLeast, NotIn, SumEqual };
  Kind kind = Kind::Equal;
  int coord = 0;  // 0 = r, 1 = s (unused for SumEqual)
  std::vector<RuleValue> values;
};

/// One row of the expected multiplicity table. Factors are epsilon offsets from lambda.
struct TheoremRule {
  std::string id;
  std::vector<ChiKind> chis;  // empty: every kind
  std::optional<bool> typical;
  std::vector<RulePredicate> when;
  std::vector<std::vector<int>> factors;
  bool collision = false;  // the table itself marks offsets that coincide on h
};

/// First-match rule table, loaded from JSON.
class TheoremTable {
 public:
  static TheoremTable parse(std::string_view json_text);
  /// The table compiled into the library.
  static const TheoremTable& builtin();

  int version() const { return version_; }
  const std::vector<TheoremRule>& rules() const { return rules_; }
  const TheoremRule* match(const Field& f, ChiKind kind, const Weight& lambda, bool typical) const;

 private:
  int version_ = 0;
  std::vector<TheoremRule> rules_;
};

/// The table's prediction turned into labelled factors via heads of Kac modules.
struct Expectation {
  std::string rule;
  std::vector<Weight> weights;        // lambda + offset, one per listed factor
  std::vector<FactorEntry> factors;   // canonical labels, dims, multiplicities
  int total_dim = 0;
  bool collision = false;             // two listed factors have the same weight on h
};

Expectation expectation_for(const Setting& s, const Weight& lambda, const TheoremRule& rule, std::mt19937_64& rng,
                            HeadCache* cache = nullptr, MatrixCache* matrices = nullptr);

enum class RowStatus { Pass, Fail, Uncovered };
std::string row_status_name(RowStatus s);

struct VerifyRow {
  ChiKind kind = ChiKind::Chi3;
  Weight lambda;
  CompositionReport report;
  std::optional<Expectation> expected;
  RowStatus status = RowStatus::Uncovered;
  std::vector<std::string> reasons;
};

struct VerifyOptions {
  int p = 5;
  std::vector<ChiKind> kinds = {ChiKind::Chi1, ChiKind::Chi2, ChiKind::Chi3,
                                ChiKind::Chi4, ChiKind::Chi5, ChiKind::Chi6};
  int jobs = 1;
  std::uint64_t seed = 1;
  int max_dim = 20000;
  bool cross_check = true;
  const TheoremTable* table = nullptr;  // builtin when null
  MatrixCache* matrices = nullptr;
};

struct VerifySummary {
  int p = 5;
  int table_version = 0;
  std::vector<VerifyRow> rows;  // ordered by kind, then lambda as enumerated
  int passed = 0;
  int failed = 0;
  int uncovered = 0;
  bool ok() const { return failed == 0; }
};

/// Compares one composition report with the table.
VerifyRow verify_one(const Setting& s, const Weight& lambda, const VerifyOptions& opts, HeadCache& heads);

/// Every chi kind and every lambda in Lambda_chi, on a bounded worker pool.
VerifySummary verify_all(const VerifyOptions& opts);

}  // namespace peri

#endif
