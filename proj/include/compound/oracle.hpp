#pragma once

#include <vector>

#include "compound/numeric.hpp"

namespace compound::oracle {

// Brute-force ground truth for tests and spot checks.  Works on plain
// machine integers and deliberately knows nothing about compound structure,
// so it shares no code path with the library proper.

struct ReachTable {
  long long limit = 0;
  std::vector<char> reachable;  // indexed 0..limit
};

// Coin-problem reachability DP: reachable[0] = true, reachable[n] = OR over
// generators g <= n of reachable[n - g].
ReachTable dp_table(const std::vector<long long>& generators, long long limit,
                    const Budget& budget = {});

// Indices n <= limit with reachable[n] = false, ascending.
std::vector<long long> oracle_gaps(const std::vector<long long>& generators,
                                   long long limit, const Budget& budget = {});

}  // namespace compound::oracle
