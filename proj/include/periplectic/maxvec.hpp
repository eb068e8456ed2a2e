#ifndef PERIPLECTIC_MAXVEC_HPP
#define PERIPLECTIC_MAXVEC_HPP

#include <string>
#include <utility>
#include <vector>

#include "periplectic/kac.hpp"

namespace peri {

/// Weight space decomposition: for each weight, the natural indices spanning it.
std::vector<std::pair<Weight, std::vector<int>>> weight_spaces(const WeightModule& m);

struct MaximalVector {
  Weight weight;
  int degree = 0;
  Vec coords;  // natural basis of the Kac module, first nonzero entry 1
};

/// Homogeneous maximal vectors of K, ordered by (weight, degree descending).
std::vector<MaximalVector> maximal_vectors(const KacModule& k);

/// Applies algebra element a to a natural-basis vector.
Vec act(const WeightModule& m, int a, const Vec& v);

/// sum_i c_i x_{i,1} x_{i,2} ... x_{i,k} (1 (x) v), read as written (rightmost acts first).
struct PbwTerm {
  Fe coeff;
  std::vector<int> word;
};
Vec pbw_vector(const KacModule& k, const std::vector<PbwTerm>& terms);

/// n-annihilation and h-eigenvector test for a natural-basis vector of weight mu.
bool is_maximal(const WeightModule& m, const Vec& v, const Weight& mu);

/// Components of a homogeneous vector with respect to the written monomials:
///   degree -1: y12 w1 + y13 w2 + y23 w3
///   degree -2: y13 y12 w1 + y23 y12 w2 + y13 y23 w3
///   degree -3: y13 y23 y12 w
/// Each w is a vector of L0 (natural basis of the base module).
std::vector<Vec> written_components(const KacModule& k, const Vec& v, int degree);
/// Inverse of written_components.
Vec from_written_components(const KacModule& k, const std::vector<Vec>& w, int degree);
/// Sign relating a written monomial (degree -2 position 0..2, or degree -3) to the ordered basis.
int written_sign(int degree, int position);

struct Condition {
  std::string label;  // e.g. "X_{e1-e2} w1 = 0"
  bool holds = false;
};

struct ConditionReport {
  std::vector<Condition> conditions;
  bool all_hold() const;
};

/// Evaluates the component conditions for a degree -1, -2 or -3 candidate of weight mu.
/// Throws std::invalid_argument when the candidate has the wrong number of components.
ConditionReport check_m_conditions(const KacModule& k, const std::vector<Vec>& w, int degree, const Weight& mu);

}  // namespace peri

#endif
