#ifndef PERIPLECTIC_STRUCTURE_HPP
#define PERIPLECTIC_STRUCTURE_HPP

#include <string>
#include <vector>

#include "periplectic/field.hpp"

namespace peri {

enum class BasisKind { Cartan, EvenRoot, OddNeg, OddPos };

/// One element of the standard basis of p(n). Indices i, j are 1-based.
///   Cartan(i)     H_{e_i - e_{i+1}}
///   EvenRoot(i,j) X_{e_i - e_j}, i != j
///   OddNeg(i,j)   X_{-e_i - e_j}, i < j
///   OddPos(i,j)   X_{e_i + e_j}, i <= j
struct BasisElement {
  BasisKind kind;
  int i = 0;
  int j = 0;
  int parity = 0;           // 0 even, 1 odd
  int degree = 0;           // Z-grading: -1, 0, +1
  std::vector<int> weight;  // root in e-coordinates (zero for Cartan)
  std::string name;
};

struct Term {
  int index;
  int coeff;  // residue mod p in [1, p)
  friend bool operator==(const Term&, const Term&) = default;
};
/// Sparse linear combination of basis elements with GF(p) coefficients, sorted by index.
using Combo = std::vector<Term>;

/// Structure constants of p(n) over GF(p), derived from the 2n x 2n supermatrix
/// realization. Immutable once built; the members are public so tests can
/// perturb a copy.
struct Algebra {
  int n = 3;
  int p = 5;
  std::vector<BasisElement> basis;
  std::vector<Combo> bracket_table;  // row-major dim x dim
  std::vector<Combo> p_power;        // meaningful for even indices only

  int dim() const { return static_cast<int>(basis.size()); }
  const Combo& bracket(int a, int b) const { return bracket_table[static_cast<std::size_t>(a) * basis.size() + b]; }
  int parity(int a) const { return basis[a].parity; }
  int degree(int a) const { return basis[a].degree; }

  int cartan(int i) const;
  int even_root(int i, int j) const;
  int odd_neg(int i, int j) const;
  int odd_pos(int i, int j) const;
  int find(BasisKind kind, int i, int j) const;

  std::vector<int> even_indices() const;
  std::vector<int> indices_of_degree(int degree) const;
  /// Positive part n = n_0 + g_{+1}: positive even root vectors and all of g_{+1}.
  std::vector<int> positive_indices() const;

  /// The root of a basis element evaluated on the Cartan basis,
  /// (a(H_{e1-e2}), ..., a(H_{e_{n-1}-e_n})), as integers.
  std::vector<int> root_coords(int a) const;
};

/// Builds p(n) over GF(p). Requires n >= 3 and p > 3 prime; also p > n.
Algebra build_algebra(int n, int p);

/// The realization matrix of basis element a over GF(p).
Matrix supermatrix(const Algebra& alg, int a);
/// Re-expresses a 2n x 2n matrix in the basis; throws if it lies outside p(n).
Combo decompose(const Algebra& alg, const Matrix& m);
/// Super-commutator AB - (-1)^{|a||b|} BA of two homogeneous realization matrices.
Matrix super_commutator(const Field& f, const Matrix& a, const Matrix& b, int parity_a, int parity_b);

Combo combo_add(const Combo& a, const Combo& b, int p);
Combo combo_scale(const Combo& a, int c, int p);
Combo bracket(const Algebra& alg, const Combo& a, const Combo& b);
Combo single(int index);

struct Violation {
  std::string what;
  int x = -1;
  int y = -1;
  int z = -1;
};

struct StructureReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// [x^{[p]}, y] = (ad x)^p (y) for every even basis x and every basis y.
StructureReport verify_restricted(const Algebra& alg);
/// Super-antisymmetry, graded super-Jacobi and Z-degree compatibility.
StructureReport verify_axioms(const Algebra& alg);
/// Table bracket against the supermatrix super-commutator for all pairs.
StructureReport verify_against_realization(const Algebra& alg);

}  // namespace peri

#endif
