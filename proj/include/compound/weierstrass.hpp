#pragma once

#include <optional>
#include <vector>

#include "compound/core.hpp"

namespace compound {

// Parameters of a superelliptic tower x_i^{a_i} = f_i(x_{i-1}) with
// deg f_i = b_i.  Requires gcd(a_i, b_j) = 1 for ALL i, j (strictly stronger
// than suitability).  Optional shifts c_i describe the concrete family
// f_i(x) = x^{b_i} - c_i, whose affine levels are nonsingular exactly when
// no c_i is a b_i-th power of a rational.
struct TowerSpec {
  SuitablePair pair;
  std::optional<std::vector<Rat>> shifts;
};

TowerSpec validate_tower(SuitablePair pair,
                         std::optional<std::vector<Rat>> shifts = {});

// Is c equal to r^n for some rational r?  Exact; works on the canonical
// numerator and denominator separately.
bool is_rational_perfect_power(const Rat& c, const Int& n);

struct WeightReport {
  Int genus;      // S_0(A,B), at least 2
  unsigned q = 1;
  Int dimension;  // d_q: genus for q = 1, (genus-1)(2q-1) for q >= 2
  Int weight;     // q-Weierstrass weight of the point at infinity
};

// weight = S_0(A^2,B^2)/12 - S_0(A,B) for q = 1 and S_0(A^2,B^2)/12 for
// q >= 2; the division by 12 is exact.  Cross-checked against the
// S_1-based route (S_1 - g(g+1)/2 resp. S_1 - g(g-1)/2).
WeightReport q_weight(const TowerSpec& tower, unsigned q);

// Geometric specialization a_i = a, b_i = b, via the explicit closed form
//   ((b^2-1)a^{2k+2} - (a^2-1)b^{2k+2}) / (24(a^2-b^2))  (+ 1/24 for q >= 2,
//   minus the genus term and 11/24 for q = 1),
// asserted equal to q_weight on the constant tuples.
WeightReport q_weight_geometric(const Int& a, const Int& b, unsigned long k,
                                unsigned q);

}  // namespace compound
