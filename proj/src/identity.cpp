#include "compound/identity.hpp"

#include <algorithm>

#include "compound/semigroup.hpp"

namespace compound {

UjZeroSet u_j_zero(const SuitablePair& p, std::size_t pivot,
                   const Budget& budget) {
  const std::size_t k = p.length();
  if (pivot > k) {
    throw IndexOutOfRange("pivot " + std::to_string(pivot) +
                          " out of range 0.." + std::to_string(k));
  }
  std::vector<Int> gens = generator_values(p.a(), p.b());
  budget.require(gens[pivot], "U_{j,0}");

  // Digit positions i != pivot with their bounds: b_{i+1} left of the pivot,
  // a_i right of it.
  std::vector<std::size_t> position;
  std::vector<Int> bound;
  for (std::size_t i = 0; i <= k; ++i) {
    if (i == pivot) continue;
    position.push_back(i);
    bound.push_back(i < pivot ? p.b()[i] : p.a()[i - 1]);
  }

  std::vector<Int> out;
  out.reserve(gens[pivot].get_ui());
  std::vector<Int> digit(position.size(), 0);
  Int value = 0;
  for (;;) {
    out.push_back(value);
    std::size_t pos = 0;
    while (pos < position.size()) {
      digit[pos] += 1;
      value += gens[position[pos]];
      if (digit[pos] < bound[pos]) break;
      value -= digit[pos] * gens[position[pos]];
      digit[pos] = 0;
      ++pos;
    }
    if (pos == position.size()) break;
  }
  std::sort(out.begin(), out.end());
  if (Int(static_cast<unsigned long>(out.size())) != gens[pivot]) {
    throw InternalError("U_{j,0} has wrong cardinality");
  }
  return UjZeroSet{pivot, std::move(out)};
}

TuenterCheck tuenter_check(const SuitablePair& p, std::size_t pivot,
                           const IntFn& f, bool exclude_zero,
                           const Budget& budget) {
  std::vector<Int> gens = generator_values(p.a(), p.b());
  if (pivot > p.length()) {
    throw IndexOutOfRange("pivot out of range");
  }
  const Int& gj = gens[pivot];
  budget.require(gj, "pivot generator range");

  TuenterCheck result;
  result.lhs = 0;
  for (const Int& n : gaps(p, budget)) {
    result.lhs += f(n + gj) - f(n);
  }

  result.rhs = 0;
  for (const Int& n : u_j_zero(p, pivot, budget).values) {
    if (exclude_zero && n == 0) continue;
    result.rhs += f(n);
  }
  for (Int n = exclude_zero ? 1 : 0; n < gj; ++n) {
    result.rhs -= f(n);
  }

  result.equal = (result.lhs == result.rhs);
  return result;
}

}  // namespace compound
