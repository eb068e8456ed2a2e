#ifndef PERIPLECTIC_WEIGHTS_HPP
#define PERIPLECTIC_WEIGHTS_HPP

#include <memory>
#include <string>
#include <vector>

#include "periplectic/field.hpp"
#include "periplectic/structure.hpp"

namespace peri {

/// coords[i] = lambda(H_{e_{i+1} - e_{i+2}}); for n = 3 this is (r, s).
using Weight = std::vector<Fe>;

Weight weight_from_ints(const Field& f, std::span<const int> coords);
std::string weight_to_string(const Field& f, const Weight& w);
/// Lexicographic order by packed coordinates.
bool weight_less(const Field& f, const Weight& a, const Weight& b);
Weight weight_add(const Field& f, const Weight& a, const Weight& b);
/// a + sum of integer offsets (e.g. a root in Cartan coordinates).
Weight weight_shift(const Field& f, const Weight& a, std::span<const int> offset);
/// Cartan coordinates of an integer e-coordinate vector (length n).
std::vector<int> eps_to_coords(std::span<const int> eps);

/// Permutation of {0, ..., n-1}; acts on e-coordinates of lambda + rho by y'_k = y_{perm[k]}.
struct WeylElement {
  std::vector<int> perm;

  static WeylElement identity(int n);
  /// Simple reflection swapping e_{k+1} and e_{k+2} (0-based k).
  static WeylElement simple(int n, int k);
  /// (this * u) acts as this after u.
  WeylElement operator*(const WeylElement& u) const;
  WeylElement inverse() const;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  std::string to_string() const;
};

/// All n! elements in lexicographic order of perm.
std::vector<WeylElement> weyl_group(int n);

/// prod_{i<j} (x_i - x_j + j - i - 1) with x the e-coordinates of lambda.
Fe delta(const Field& f, const Weight& lambda);
/// w.lambda = w(lambda + rho) - rho.
Weight dot_action(const Field& f, const WeylElement& w, const Weight& lambda);
/// prod_{k<s} (x_{i_k} - x_{i_s} + i_s - i_k - 1), i_k = perm[k]; equals delta(w.lambda).
Fe delta_permuted(const Field& f, const WeylElement& w, const Weight& lambda);
/// prod_{i != k} (x_i - x_k + k - i - 1), k 0-based.
Fe typicality_factor(const Field& f, int k, const Weight& lambda);

enum class ChiKind { Chi1, Chi2, Chi3, Chi4, Chi5, Chi6, Custom };

std::string chi_kind_name(ChiKind k);
ChiKind parse_chi_kind(const std::string& s);

/// A p-character on the even part, with values in GF(p) indexed by algebra basis index.
struct PChar {
  ChiKind kind = ChiKind::Chi3;
  std::vector<int> params;
  int p = 5;
  std::vector<int> values;  // residues mod p, one per algebra basis element (odd entries 0)

  int value(int index) const { return values.at(index); }
  bool semisimple_part_zero(const Algebra& alg) const;
  /// Extension degree needed for weights in Lambda_chi: 1 when chi vanishes on h, else p.
  int field_ext(const Algebra& alg) const;
  std::string to_string() const;
};

/// Orbit representatives chi1..chi6 for p(3). Params: chi1 (a, b); chi2 (b); chi4 (b); others none.
/// Missing params default to 1.
PChar make_chi(const Algebra& alg, ChiKind kind, std::vector<int> params = {});
PChar make_custom_chi(const Algebra& alg, std::vector<int> values);

/// lambda(h_i)^p - lambda(h_i) = chi(h_i) for every Cartan basis element.
bool in_lambda(const Field& f, const Algebra& alg, const PChar& chi, const Weight& lambda);
/// The p^{n-1} weights chi(h_i) t + t_i, t_i in GF(p), in lexicographic order of (t_1, ..., t_{n-1}).
std::vector<Weight> enumerate_lambda(const Field& f, const Algebra& alg, const PChar& chi);

struct TypicalityCounterexample {
  std::vector<int> lambda;
  std::string reason;
};

struct TypicalityScan {
  int n = 3;
  int p = 5;
  long long weights = 0;
  long long weyl_size = 0;
  long long delta_zero = 0;  // weights with delta(lambda) = 0
  std::vector<TypicalityCounterexample> counterexamples;
  /// For each atypical weight, the first w (in weyl_group order) with delta(w.lambda) != 0.
  std::vector<std::pair<std::vector<int>, WeylElement>> witnesses;
  /// Disagreements between delta(w.lambda) and delta_permuted(w, lambda).
  long long route_mismatches = 0;
};

/// Exhaustive scan over GF(p)^{n-1}. Requires 3 <= n <= 5 and p >= n + 1.
TypicalityScan weyl_typicality_scan(int n, int p);

}  // namespace peri

#endif
