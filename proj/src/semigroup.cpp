#include "compound/semigroup.hpp"

#include <algorithm>

namespace compound {

AperySet apery_set(const SuitablePair& p, const Budget& budget) {
  const std::size_t k = p.length();
  std::vector<Int> gens = generator_values(p.a(), p.b());
  budget.require(gens[0], "Apery set");

  std::vector<Int> out;
  out.reserve(gens[0].get_ui());
  std::vector<Int> digit(k, 0);
  Int value = 0;
  for (;;) {
    out.push_back(value);
    std::size_t pos = 0;  // digit n_{pos+1}, bound a_{pos+1}
    while (pos < k) {
      digit[pos] += 1;
      value += gens[pos + 1];
      if (digit[pos] < p.a()[pos]) break;
      value -= digit[pos] * gens[pos + 1];
      digit[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  std::sort(out.begin(), out.end());
  if (Int(static_cast<unsigned long>(out.size())) != gens[0]) {
    throw InternalError("Apery set has wrong cardinality");
  }
  return AperySet{std::move(out)};
}

std::vector<Int> gaps(const SuitablePair& p, const Budget& budget) {
  AperySet apery = apery_set(p, budget);
  const Int g0(static_cast<unsigned long>(apery.elements.size()));

  Int genus = 0;
  for (const Int& w : apery.elements) genus += w / g0;
  budget.require(genus, "gap set");

  std::vector<Int> out;
  out.reserve(genus.get_ui());
  for (const Int& w : apery.elements) {
    for (Int x = w - g0; x > 0; x -= g0) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int frobenius_closed(const SuitablePair& p) {
  const std::size_t k = p.length();
  if (k == 0) return Int(-1);
  Tuple pa = project(p.a(), k);
  Tuple pb = project(p.b(), 1);
  return p.a()[k - 1] * p.b()[0] * sigma(pa, pb) - sigma(p.a(), p.b());
}

namespace {

// Pointwise symmetry: exactly one of x, F-x is representable for every
// 0 <= x <= F.  Equivalently the gap set and its mirror {F - n} are disjoint
// and together tile [0, F], which a single merge over the sorted gap set
// decides.
bool symmetric_by_definition(const std::vector<Int>& gaps,
                             const Int& frobenius) {
  if (gaps.empty()) return frobenius == -1;
  std::vector<Int> mirror;
  mirror.reserve(gaps.size());
  for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) {
    mirror.push_back(frobenius - *it);
  }
  // Disjoint?
  std::size_t i = 0, j = 0;
  while (i < gaps.size() && j < mirror.size()) {
    int c = cmp(gaps[i], mirror[j]);
    if (c == 0) return false;  // x and F-x both gaps
    (c < 0 ? i : j)++;
  }
  // Disjoint union of two genus-sized subsets of [0, F] covers it exactly
  // when 2 genus = F + 1.
  return Int(2 * static_cast<unsigned long>(gaps.size())) == frobenius + 1;
}

}  // namespace

SemigroupSummary summarize(const SuitablePair& p, const Budget& budget) {
  SemigroupSummary s;
  s.gaps = gaps(p, budget);
  s.genus = Int(static_cast<unsigned long>(s.gaps.size()));

  Int closed = frobenius_closed(p);
  Int enumerated = s.gaps.empty() ? Int(-1) : s.gaps.back();
  if (closed != enumerated) {
    throw InternalError("Frobenius mismatch: closed form " + closed.get_str() +
                        " vs enumeration " + enumerated.get_str());
  }
  s.frobenius = closed;

  s.symmetric = symmetric_by_definition(s.gaps, s.frobenius);
  bool by_count = (2 * s.genus == s.frobenius + 1);
  if (s.symmetric != by_count) {
    throw InternalError("symmetry criteria disagree");
  }
  return s;
}

}  // namespace compound
