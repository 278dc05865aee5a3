#pragma once

#include <functional>
#include <vector>

#include "compound/core.hpp"

namespace compound {

// U_{j,0}: the values sum_{i != j} n_i g_i over digit vectors with
// 0 <= n_i < b_{i+1} for i < j, 0 <= n_i < a_i for i > j and n_j = 0.
// Exactly g_j values.
struct UjZeroSet {
  std::size_t pivot = 0;
  std::vector<Int> values;  // ascending
};

UjZeroSet u_j_zero(const SuitablePair& p, std::size_t pivot,
                   const Budget& budget = {});

// Any integer-valued function on the non-negative integers.
using IntFn = std::function<Int(const Int&)>;

struct TuenterCheck {
  Int lhs;  // sum over NR of f(n + g_j) - f(n)
  Int rhs;  // sum over U_{j,0} of f(n)  -  sum_{n=0}^{g_j - 1} f(n)
  bool equal = false;
};

// Evaluates both sides of the telescoping identity characterizing NR(A,B).
// equal is always true for a correct implementation; a false value is
// surfaced to the caller, never masked.  With exclude_zero the n = 0 terms
// on the right are dropped (the variant for functions defined only on the
// positive integers); equality is unaffected.
TuenterCheck tuenter_check(const SuitablePair& p, std::size_t pivot,
                           const IntFn& f, bool exclude_zero = false,
                           const Budget& budget = {});

}  // namespace compound
