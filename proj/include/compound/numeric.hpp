#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "compound/errors.hpp"

namespace compound {

// All semigroup arithmetic runs on arbitrary-precision integers; closed
// forms take generator products to fourth powers.
using Int = mpz_class;

// Exact rational, kept canonical: lowest terms, positive denominator.
using Rat = mpq_class;

// Cap shared by every operation that materializes a set (Apery sets, gap
// sets, digit boxes, Bernoulli composition counts, DP tables, search spaces).
struct Budget {
  std::uint64_t cap = 10'000'000;

  void require(const Int& need, const char* what) const {
    if (need > Int(static_cast<unsigned long>(cap))) {
      throw BudgetExceeded(std::string(what) + " needs " + need.get_str() +
                           " elements, budget is " + std::to_string(cap));
    }
  }
};

inline Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Remainder in [0, m) for any sign of n.  m > 0.
inline Int floor_mod(const Int& n, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Quotient n / d, required to be exact.
inline Int exact_div(const Int& n, const Int& d) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0) {
    throw InternalError("division expected to be exact: " + n.get_str() +
                        " / " + d.get_str());
  }
  return q;
}

// Inverse of x modulo m > 0.  Callers guarantee gcd(x, m) = 1.
inline Int invert_mod(const Int& x, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InternalError("no inverse of " + x.get_str() + " mod " +
                        m.get_str());
  }
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Canonicalizing rational constructor; mpq_class(num, den) alone does not
// reduce to lowest terms.
inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Extract an integer from a rational that must have denominator 1.
inline Int rat_to_int(const Rat& r) {
  if (r.get_den() != 1) {
    throw InternalError("expected integral value, got " + r.get_str());
  }
  return r.get_num();
}

}  // namespace compound
