#include "compound/weierstrass.hpp"

#include "compound/sylvester.hpp"

namespace compound {

namespace {

// v = r^n for an integer r >= 0?  mpz_root reports whether the truncated
// n-th root is exact.
bool is_perfect_power_abs(const Int& v, unsigned long n) {
  Int root;
  return mpz_root(root.get_mpz_t(), v.get_mpz_t(), n) != 0;
}

}  // namespace

bool is_rational_perfect_power(const Rat& c, const Int& n) {
  if (n < 1) throw ValidationError("power must be positive");
  if (n == 1) return true;
  if (!n.fits_ulong_p()) {
    // Exponents this large exceed any representable polynomial degree.
    throw ValidationError("power exponent too large");
  }
  const unsigned long e = n.get_ui();
  const Int num = c.get_num();
  const Int den = c.get_den();
  if (num < 0 && e % 2 == 0) return false;  // even powers are non-negative
  return is_perfect_power_abs(abs(num), e) && is_perfect_power_abs(den, e);
}

TowerSpec validate_tower(SuitablePair pair,
                         std::optional<std::vector<Rat>> shifts) {
  const std::size_t k = pair.length();
  // Suitability covers i >= j; the tower needs every (i, j).
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      Int g = gcd(pair.a()[i - 1], pair.b()[j - 1]);
      if (g != 1) {
        throw GcdViolation(i, j,
                           "tower needs gcd(a_" + std::to_string(i) + ", b_" +
                               std::to_string(j) + ") = 1, got " +
                               g.get_str());
      }
    }
  }
  if (shifts) {
    if (shifts->size() != k) {
      throw LengthMismatch("expected " + std::to_string(k) + " shifts, got " +
                           std::to_string(shifts->size()));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (is_rational_perfect_power((*shifts)[i], pair.b()[i])) {
        throw PerfectPowerViolation(
            i + 1, "c_" + std::to_string(i + 1) + " = " +
                       (*shifts)[i].get_str() + " is a rational " +
                       pair.b()[i].get_str() + "-th power");
      }
    }
  }
  return TowerSpec{std::move(pair), std::move(shifts)};
}

WeightReport q_weight(const TowerSpec& tower, unsigned q) {
  if (q < 1) throw ValidationError("q must be a positive integer");
  const SuitablePair& p = tower.pair;
  Int genus = s0_closed(p);
  if (genus < 2) {
    throw GenusTooSmall("q-Weierstrass weights need genus >= 2, got " +
                        genus.get_str());
  }
  Int s0_sq = s0_closed(SuitablePair(power(p.a(), 2), power(p.b(), 2)));
  Int twelfth = exact_div(s0_sq, 12);
  Int weight = (q == 1) ? Int(twelfth - genus) : twelfth;

  // The proof computes the same weight from S_1.
  Int s1 = s_closed(p, 1);
  Int alt = (q == 1) ? Int(s1 - exact_div(genus * (genus + 1), 2))
                     : Int(s1 - exact_div(genus * (genus - 1), 2));
  if (alt != weight) {
    throw InternalError("weight routes disagree: " + weight.get_str() +
                        " vs " + alt.get_str());
  }

  WeightReport r;
  r.genus = genus;
  r.q = q;
  r.dimension = (q == 1) ? genus : Int((genus - 1) * (2 * q - 1));
  r.weight = weight;
  return r;
}

WeightReport q_weight_geometric(const Int& a, const Int& b, unsigned long k,
                                unsigned q) {
  if (q < 1) throw ValidationError("q must be a positive integer");
  if (a < 1 || b < 1) throw ValidationError("a and b must be positive");
  if (gcd(a, b) != 1) {
    throw GcdViolation("geometric tower needs gcd(a, b) = 1");
  }
  Int genus = s_geometric(a, b, k, 0);
  if (genus < 2) {
    throw GenusTooSmall("q-Weierstrass weights need genus >= 2, got " +
                        genus.get_str());
  }
  // genus >= 2 rules out a = b and any 1-entry, so a^2 - b^2 != 0.
  Rat base = rat((b * b - 1) * pow_ui(a, 2 * k + 2) -
                     (a * a - 1) * pow_ui(b, 2 * k + 2),
                 24 * (a * a - b * b));
  Rat w;
  if (q == 1) {
    w = base -
        rat((b - 1) * pow_ui(a, k + 1) - (a - 1) * pow_ui(b, k + 1),
            2 * (a - b)) -
        rat(11, 24);
  } else {
    w = base + rat(1, 24);
  }
  Int weight = rat_to_int(w);

  std::vector<Int> av(k, a), bv(k, b);
  TowerSpec tower = validate_tower(SuitablePair(Tuple(av), Tuple(bv)));
  WeightReport direct = q_weight(tower, q);
  if (direct.weight != weight || direct.genus != genus) {
    throw InternalError("geometric weight disagrees with tuple route");
  }
  return direct;
}

}  // namespace compound
