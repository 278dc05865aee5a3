#include "compound/core.hpp"

#include <algorithm>
#include <utility>

namespace compound {

Tuple::Tuple(std::vector<Int> entries) : entries_(std::move(entries)) {
  for (const Int& e : entries_) {
    if (e < 1) {
      throw ValidationError("tuple entries must be positive, got " +
                            e.get_str());
    }
  }
}

Tuple project(const Tuple& t, std::size_t i) {
  if (i < 1 || i > t.size()) {
    throw IndexOutOfRange("projection index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(t.size()));
  }
  std::vector<Int> out;
  out.reserve(t.size() - 1);
  for (std::size_t pos = 0; pos < t.size(); ++pos) {
    if (pos != i - 1) out.push_back(t[pos]);
  }
  return Tuple(std::move(out));
}

Tuple reverse(const Tuple& t) {
  std::vector<Int> out(t.begin(), t.end());
  std::reverse(out.begin(), out.end());
  return Tuple(std::move(out));
}

Tuple power(const Tuple& t, unsigned long e) {
  if (e == 0) throw ValidationError("exponent must be positive");
  std::vector<Int> out;
  out.reserve(t.size());
  for (const Int& v : t) out.push_back(pow_ui(v, e));
  return Tuple(std::move(out));
}

SuitablePair::SuitablePair(Tuple a, Tuple b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) {
    throw LengthMismatch("tuples must have equal length: " +
                         std::to_string(a_.size()) + " vs " +
                         std::to_string(b_.size()));
  }
  // gcd(a_i, b_j) = 1 for all i >= j (1-based).
  for (std::size_t i = 1; i <= a_.size(); ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      Int g = gcd(a_[i - 1], b_[j - 1]);
      if (g != 1) {
        throw GcdViolation(i, j,
                           "gcd(a_" + std::to_string(i) + ", b_" +
                               std::to_string(j) + ") = " + g.get_str());
      }
    }
  }
}

std::vector<Int> generator_values(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("tuples must have equal length");
  }
  const std::size_t k = a.size();
  std::vector<Int> g(k + 1);
  g[0] = 1;
  for (const Int& v : a) g[0] *= v;
  for (std::size_t i = 1; i <= k; ++i) {
    // g_{i-1} always carries the factor a_i, so the quotient is exact even
    // for tuples that are not suitable.
    g[i] = exact_div(g[i - 1] * b[i - 1], a[i - 1]);
  }
  return g;
}

CompoundSequence::CompoundSequence(SuitablePair source)
    : source_(std::move(source)),
      generators_(generator_values(source_.a(), source_.b())) {
  Int g = generators_[0];
  for (const Int& v : generators_) g = gcd(g, v);
  if (g != 1) {
    throw InternalError("compound sequence with gcd " + g.get_str());
  }
}

CompoundSequence build_sequence(const SuitablePair& p) {
  return CompoundSequence(p);
}

Int sigma(const Tuple& a, const Tuple& b) {
  Int s = 0;
  for (const Int& g : generator_values(a, b)) s += g;
  return s;
}

Int sigma(const SuitablePair& p) { return sigma(p.a(), p.b()); }

DigitExpansion digit_expand(const Int& n, const SuitablePair& p,
                            std::size_t pivot) {
  const std::size_t k = p.length();
  if (pivot > k) {
    throw IndexOutOfRange("pivot " + std::to_string(pivot) +
                          " out of range 0.." + std::to_string(k));
  }
  std::vector<Int> digits(k + 1);
  // Window [l, r) of not-yet-peeled indices; prodA/prodB are the products of
  // the window's a/b entries, i.e. the window's first and last generator.
  Int prodA = 1, prodB = 1;
  for (std::size_t t = 0; t < k; ++t) {
    prodA *= p.a()[t];
    prodB *= p.b()[t];
  }
  Int v = n;
  std::size_t l = 0, r = k;
  // Fix each outer digit modulo its bound and carry the stripped multiple
  // toward the pivot; this is the lemma's pair of shift rules applied once
  // per index, from both ends inward.
  while (r > pivot) {
    const Int& bound = p.a()[r - 1];
    Int digit = floor_mod(v * invert_mod(floor_mod(prodB, bound), bound),
                          bound);
    digits[r] = digit;
    v = exact_div(v - digit * prodB, bound);
    prodA = exact_div(prodA, p.a()[r - 1]);
    prodB = exact_div(prodB, p.b()[r - 1]);
    --r;
  }
  while (l < pivot) {
    const Int& bound = p.b()[l];
    Int digit = floor_mod(v * invert_mod(floor_mod(prodA, bound), bound),
                          bound);
    digits[l] = digit;
    v = exact_div(v - digit * prodA, bound);
    prodA = exact_div(prodA, p.a()[l]);
    prodB = exact_div(prodB, p.b()[l]);
    ++l;
  }
  digits[pivot] = v;
  return DigitExpansion{pivot, std::move(digits), n};
}

bool is_representable(const Int& n, const SuitablePair& p) {
  if (n < 0) return false;
  return digit_expand(n, p, 0).digits[0] >= 0;
}

SuitablePair normalize(const SuitablePair& p) {
  std::vector<Int> a(p.a().begin(), p.a().end());
  std::vector<Int> b(p.b().begin(), p.b().end());
  for (;;) {
    std::vector<Int> gens = generator_values(Tuple(a), Tuple(b));
    for (const Int& g : gens) {
      if (g == 1) return SuitablePair(Tuple{}, Tuple{});
    }
    // Leftmost 1-entry, a-rule first when both rules apply at one index.
    std::size_t idx = a.size();
    bool a_rule = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 1 || b[i] == 1) {
        idx = i;
        a_rule = (a[i] == 1);
        break;
      }
    }
    if (idx == a.size()) return SuitablePair(Tuple(a), Tuple(b));
    if (a_rule) {
      if (idx + 1 < b.size()) b[idx + 1] *= b[idx];
    } else {
      if (idx > 0) a[idx - 1] *= a[idx];
    }
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(idx));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(idx));
  }
}

}  // namespace compound
