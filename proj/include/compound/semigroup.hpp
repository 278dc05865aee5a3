#pragma once

#include <vector>

#include "compound/core.hpp"

namespace compound {

// The Apery set of R(A,B) with respect to g_0: the values sum n_i g_i over
// all digit vectors with 0 <= n_i < a_i for 1 <= i <= k.  Exactly g_0
// elements, one per residue class mod g_0; 0 is always among them.
struct AperySet {
  std::vector<Int> elements;  // ascending
};

AperySet apery_set(const SuitablePair& p, const Budget& budget = {});

// The gap set NR(A,B) = { w - t g_0 : w in Apery, 1 <= t <= floor(w/g_0) },
// ascending.  Empty when some generator equals 1.
std::vector<Int> gaps(const SuitablePair& p, const Budget& budget = {});

// Closed-form Frobenius number a_k b_1 sigma(pi_k(A), pi_1(B)) - sigma(A,B);
// -1 for k = 0.
Int frobenius_closed(const SuitablePair& p);

struct SemigroupSummary {
  Int frobenius;           // max gap, -1 when there are none
  Int genus;               // number of gaps
  std::vector<Int> gaps;   // ascending
  bool symmetric = false;  // 2 genus = frobenius + 1
};

// Full summary.  The Frobenius number is computed both closed-form and from
// the enumeration, the symmetric flag both pointwise (every 0 <= x <= F has
// exactly one of x, F-x representable) and via 2g = F+1; disagreement on
// either pair of routes raises InternalError.
SemigroupSummary summarize(const SuitablePair& p, const Budget& budget = {});

}  // namespace compound
