#ifndef PERIPLECTIC_PBW_HPP
#define PERIPLECTIC_PBW_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "periplectic/module.hpp"
#include "periplectic/structure.hpp"
#include "periplectic/weights.hpp"

namespace peri {

/// Induction Ind_B^G W in the reduced enveloping algebra U_chi.
///
/// The induced module has basis y_1^{e_1} ... y_k^{e_k} (x) w, where negs = (y_1, ..., y_k)
/// spans a complement of B, even exponents run over [0, p) and odd ones over {0, 1}.
/// Left multiplication by a basis element is straightened symbolically with
///   x y m' = (-1)^{|x||y|} y (x m') + [x, y] m',
///   y^p = y^[p] + chi(y)^p,   y^2 = [y, y] / 2 for odd y,
/// and memoized; the results are then compiled against the action of B on W.
class Straightener {
 public:
  /// A word is a product b_1 b_2 ... of elements of B (as in U, so b_last acts first).
  using Word = std::vector<std::uint8_t>;
  using Key = std::pair<std::uint64_t, Word>;
  using Expr = std::map<Key, int>;  // coefficients mod p

  Straightener(const Algebra& alg, const PChar& chi, std::vector<int> negs, std::vector<int> b);

  /// x * (y^e) as a combination of y^f * word.
  const Expr& left_mul(int x, std::uint64_t mono);

  int radix(int k) const { return radix_[k]; }
  std::size_t num_monomials() const { return count_; }
  std::uint64_t monomial(std::size_t index) const;
  std::size_t monomial_index(std::uint64_t mono) const;
  int exponent(std::uint64_t mono, int k) const { return static_cast<int>((mono >> (4 * k)) & 15u); }
  const std::vector<int>& negs() const { return negs_; }

 private:
  std::uint64_t with_exponent(std::uint64_t mono, int k, int e) const;
  void add_scaled(Expr& out, const Expr& in, int c, const Word& suffix) const;
  Expr times_neg_first(int k, const Expr& e);

  const Algebra& alg_;
  const PChar& chi_;
  std::vector<int> negs_;
  std::vector<int> neg_pos_;  // algebra index -> position in negs or -1
  std::vector<char> in_b_;
  std::vector<int> radix_;
  std::size_t count_ = 1;
  int inv2_ = 0;
  std::map<std::pair<int, std::uint64_t>, Expr> memo_;
  std::map<std::pair<int, std::uint64_t>, bool> busy_;
};

struct InducedOptions {
  /// Elements of B acting as zero on W that W does not list (e.g. g_{+1} for Kac modules).
  std::vector<int> b;
  std::vector<int> negs;
  /// Grade of a monomial = sum of exponents times this (e.g. -1 for Kac modules); 0 = ungraded.
  int grade_step = 0;
};

/// Ind_B^G W. W must act by every element of B it does not annihilate.
WeightModule induce(const WeightModule& w, const PChar& chi, const InducedOptions& opts);

/// Monomial label such as "X_{-e1-e2} X_{-e1-e3}^2".
std::string monomial_label(const Algebra& alg, const std::vector<int>& negs, const std::vector<int>& exps);

}  // namespace peri

#endif
