#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "compound/numeric.hpp"

namespace compound {

// Ordered tuple of positive integers.  Length k >= 0; the empty tuple is the
// seed of the degenerate semigroup N_0.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<Int> entries);
  Tuple(std::initializer_list<Int> entries)
      : Tuple(std::vector<Int>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  bool operator==(const Tuple&) const = default;

 private:
  std::vector<Int> entries_;
};

// pi_i: deletes the i-th component.  i is 1-based, matching the usual
// projection notation.
Tuple project(const Tuple& t, std::size_t i);

// rho: the tuple written in reverse order.
Tuple reverse(const Tuple& t);

// C^e: component-wise exponentiation.
Tuple power(const Tuple& t, unsigned long e);

// A pair of equal-length tuples (A, B) with gcd(a_i, b_j) = 1 for all
// i >= j.  Construction validates; a SuitablePair is suitable by type.
class SuitablePair {
 public:
  SuitablePair(Tuple a, Tuple b);

  std::size_t length() const { return a_.size(); }  // k
  const Tuple& a() const { return a_; }
  const Tuple& b() const { return b_; }
  bool operator==(const SuitablePair&) const = default;

 private:
  Tuple a_, b_;
};

// Generator values g_0..g_k with g_0 = prod(a) and g_i = g_{i-1} b_i / a_i,
// i.e. g_i = b_1...b_i a_{i+1}...a_k.  The product formula is well defined
// for arbitrary equal-length tuples; no coprimality is needed here.
std::vector<Int> generator_values(const Tuple& a, const Tuple& b);

// The compound sequence (g_0, ..., g_k) of a suitable pair.  gcd of the
// generators is always 1.
class CompoundSequence {
 public:
  explicit CompoundSequence(SuitablePair source);

  const std::vector<Int>& generators() const { return generators_; }
  const SuitablePair& source() const { return source_; }

 private:
  SuitablePair source_;
  std::vector<Int> generators_;
};

CompoundSequence build_sequence(const SuitablePair& p);

// sigma: the sum of the generator values.
Int sigma(const Tuple& a, const Tuple& b);
Int sigma(const SuitablePair& p);

// The unique expansion n = sum n_i g_i with 0 <= n_i < b_{i+1} for i < j and
// 0 <= n_i < a_i for i > j; the pivot digit n_j is unconstrained and
// negative exactly when n is not representable (or n < 0).
struct DigitExpansion {
  std::size_t pivot = 0;
  std::vector<Int> digits;  // n_0..n_k
  Int value;
};

// Defined for every integer n (negative included) and every pivot 0 <= j <= k.
DigitExpansion digit_expand(const Int& n, const SuitablePair& p,
                            std::size_t pivot);

// n in R(A,B)?  Negative n is never representable.
bool is_representable(const Int& n, const SuitablePair& p);

// Eliminates 1-entries without changing the generated semigroup: an a_i = 1
// folds b_i into b_{i+1}, a b_i = 1 folds a_i into a_{i-1}, each dropping
// index i.  Returns the empty pair when 1 is itself a generator.  The result
// has all entries >= 2 or length 0.
SuitablePair normalize(const SuitablePair& p);

}  // namespace compound
