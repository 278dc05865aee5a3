#include "compound/oracle.hpp"

namespace compound::oracle {

ReachTable dp_table(const std::vector<long long>& generators, long long limit,
                    const Budget& budget) {
  if (generators.empty()) {
    throw ValidationError("oracle needs at least one generator");
  }
  for (long long g : generators) {
    if (g < 1) throw ValidationError("oracle generators must be positive");
  }
  if (limit < 0) throw ValidationError("oracle limit must be non-negative");
  budget.require(Int(static_cast<long>(limit)) + 1, "oracle table");

  ReachTable t;
  t.limit = limit;
  t.reachable.assign(static_cast<std::size_t>(limit) + 1, 0);
  t.reachable[0] = 1;
  for (long long n = 1; n <= limit; ++n) {
    for (long long g : generators) {
      if (g <= n && t.reachable[static_cast<std::size_t>(n - g)]) {
        t.reachable[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  }
  return t;
}

std::vector<long long> oracle_gaps(const std::vector<long long>& generators,
                                   long long limit, const Budget& budget) {
  ReachTable t = dp_table(generators, limit, budget);
  std::vector<long long> gaps;
  for (long long n = 0; n <= limit; ++n) {
    if (!t.reachable[static_cast<std::size_t>(n)]) gaps.push_back(n);
  }
  return gaps;
}

}  // namespace compound::oracle
