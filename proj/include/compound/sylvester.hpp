#pragma once

#include <mutex>
#include <vector>

#include "compound/core.hpp"
#include "compound/semigroup.hpp"

namespace compound {

// Memoized Bernoulli numbers under the B_1 = -1/2 convention (the one fixed
// by the generating function z/(e^z - 1)).  Grow-only and safe to share
// across threads.
class BernoulliCache {
 public:
  BernoulliCache();

  Rat value(std::size_t m);

  // Process-wide shared cache.
  static BernoulliCache& shared();

 private:
  void extend(std::size_t m);  // caller holds mu_

  std::mutex mu_;
  std::vector<Rat> values_;
};

Rat bernoulli(std::size_t m, BernoulliCache& cache);
Rat bernoulli(std::size_t m);

// S_0(A,B) = (a_k b_1 sigma(pi_k(A), pi_1(B)) - sigma(A,B) + 1) / 2, the
// genus.  0 for k = 0.
Int s0_closed(const SuitablePair& p);

// Closed forms for S_m, m = 0..3, driven by the genus values of (A,B),
// (A^2,B^2) and (A^4,B^4).  s0_sq is ignored for m = 0, s0_4th for m < 3.
Int s_closed_from_genus(const Int& s0, const Int& s0_sq, const Int& s0_4th,
                        unsigned m);

// S_m(A,B) via the closed forms; m must be 0..3.
Int s_closed(const SuitablePair& p, unsigned m);

// S_m(A,B) by direct summation over the gap set.
Int s_enumerated(const SuitablePair& p, unsigned m, const Budget& budget = {});

// S_m(A,B) via the Bernoulli-number expansion: with m' = m+1, the sum over
// all compositions x_0..x_k, y_1..y_k >= 0 of m' of
//   (m'!/m') (prod B_{x_i}/x_i!) (prod a_i^{alpha(i)} b_i^{beta(i)})
//           / (prod (y_j+1)!)  -  B_{m'}/m',
// where alpha(i) = sum_{l<=i} (x_{l-1} + y_l) and
//       beta(i)  = sum_{l>=i} (x_l + y_l).
Int s_bernoulli(const SuitablePair& p, unsigned m, BernoulliCache& cache,
                const Budget& budget = {});
Int s_bernoulli(const SuitablePair& p, unsigned m);

// S_m(a, b; k) for the geometric pair A = (a,...,a), B = (b,...,b), m = 0..3.
// S_0 is evaluated through both the sigma recurrence and the alternative
// closed form ((b-1)a^{k+1} - (a-1)b^{k+1} + a - b) / (2(a-b)); the two must
// agree.
Int s_geometric(const Int& a, const Int& b, unsigned long k, unsigned m);

// Semigroup generated by prod(a)/a_i for pairwise-coprime a_0..a_k, realized
// as the compound pair A = (a_1..a_k), B = (a_0..a_{k-1}).  The enumerated
// summary is cross-checked against the closed forms
//   F = k prod(a) - sigma,  genus = (1 + k prod(a) - sigma) / 2.
SemigroupSummary supersymmetric_summary(const Tuple& moduli,
                                        const Budget& budget = {});

}  // namespace compound
