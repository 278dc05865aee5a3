#include "compound/sylvester.hpp"

#include <algorithm>

namespace compound {

BernoulliCache::BernoulliCache() {
  values_.emplace_back(1);
  values_.push_back(rat(-1, 2));
}

BernoulliCache& BernoulliCache::shared() {
  static BernoulliCache cache;
  return cache;
}

Rat BernoulliCache::value(std::size_t m) {
  std::lock_guard<std::mutex> lock(mu_);
  if (m >= values_.size()) extend(m);
  return values_[m];
}

void BernoulliCache::extend(std::size_t m) {
  // Akiyama-Tanigawa triangle over exact rationals.  The triangle produces
  // the B_1 = +1/2 convention; the stored table flips B_1.
  const std::size_t n = std::max(m, 2 * values_.size());
  std::vector<Rat> t(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    t[j] = rat(1, Int(static_cast<unsigned long>(j + 1)));
  }
  std::vector<Rat> out(n + 1);
  out[0] = t[0];
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j + i <= n; ++j) {
      t[j] = Rat(Int(static_cast<unsigned long>(j + 1))) * (t[j] - t[j + 1]);
    }
    out[i] = t[0];
  }
  out[1] = rat(-1, 2);
  values_ = std::move(out);
}

Rat bernoulli(std::size_t m, BernoulliCache& cache) { return cache.value(m); }
Rat bernoulli(std::size_t m) { return BernoulliCache::shared().value(m); }

Int s0_closed(const SuitablePair& p) {
  if (p.length() == 0) return Int(0);
  return exact_div(frobenius_closed(p) + 1, 2);
}

Int s_closed_from_genus(const Int& s0, const Int& s0_sq, const Int& s0_4th,
                        unsigned m) {
  const Rat g(s0), g2(s0_sq), g4(s0_4th);
  Rat r;
  switch (m) {
    case 0:
      return s0;
    case 1:
      r = (g * g - g) / 2 + g2 / 12;
      break;
    case 2:
      r = (g - 1) * g * (2 * g - 1) / 6 + g2 / 12 * (2 * g - 1);
      break;
    case 3:
      r = (g * g - g) * (g * g - g) / 4 + g2 / 4 * g * (g - 1) +
          g2 / 48 * (g2 + 2) - g4 / 240;
      break;
    default:
      throw ValidationError("closed forms exist for m = 0..3 only");
  }
  return rat_to_int(r);
}

namespace {

SuitablePair pair_power(const SuitablePair& p, unsigned long e) {
  return SuitablePair(power(p.a(), e), power(p.b(), e));
}

}  // namespace

Int s_closed(const SuitablePair& p, unsigned m) {
  if (m > 3) throw ValidationError("closed forms exist for m = 0..3 only");
  Int s0 = s0_closed(p);
  Int s0_sq = m >= 1 ? s0_closed(pair_power(p, 2)) : Int(0);
  Int s0_4th = m == 3 ? s0_closed(pair_power(p, 4)) : Int(0);
  return s_closed_from_genus(s0, s0_sq, s0_4th, m);
}

Int s_enumerated(const SuitablePair& p, unsigned m, const Budget& budget) {
  Int total = 0;
  for (const Int& n : gaps(p, budget)) total += pow_ui(n, m);
  return total;
}

Int s_bernoulli(const SuitablePair& p, unsigned m, BernoulliCache& cache,
                const Budget& budget) {
  const std::size_t k = p.length();
  if (k == 0) return Int(0);  // empty gap set; the formula also yields 0
  const unsigned long mp = m + 1;
  budget.require(binomial(mp + 2 * k, 2 * k), "composition enumeration");

  // Power tables a_i^e, b_i^e for e = 0..mp.
  std::vector<std::vector<Int>> apow(k), bpow(k);
  for (std::size_t i = 0; i < k; ++i) {
    apow[i].resize(mp + 1);
    bpow[i].resize(mp + 1);
    apow[i][0] = 1;
    bpow[i][0] = 1;
    for (unsigned long e = 1; e <= mp; ++e) {
      apow[i][e] = apow[i][e - 1] * p.a()[i];
      bpow[i][e] = bpow[i][e - 1] * p.b()[i];
    }
  }
  std::vector<Int> fact(mp + 2);
  for (unsigned long e = 0; e <= mp + 1; ++e) fact[e] = factorial(e);

  // x[0..k], y[0..k-1] hold the composition; y[j-1] is the 1-based y_j.
  std::vector<unsigned long> x(k + 1, 0), y(k, 0);
  Rat total(0);

  auto add_term = [&]() {
    Rat coef(1);
    for (std::size_t i = 0; i <= k; ++i) {
      if (x[i] == 1) {
        coef *= rat(-1, 2);
      } else if (x[i] != 0) {
        coef *= cache.value(x[i]) / Rat(fact[x[i]]);
      }
    }
    Int mono = 1;
    unsigned long alpha = 0;  // alpha(i) accumulates left to right
    for (std::size_t i = 1; i <= k; ++i) {
      alpha += x[i - 1] + y[i - 1];
      unsigned long beta = 0;  // beta(i) = sum_{l >= i} (x_l + y_l)
      for (std::size_t l = i; l <= k; ++l) beta += x[l] + y[l - 1];
      mono *= apow[i - 1][alpha] * bpow[i - 1][beta];
      coef /= Rat(fact[y[i - 1] + 1]);
    }
    total += coef * Rat(mono);
  };

  // Lexicographic recursion over (x_0..x_k, y_1..y_k); terms with an odd
  // x_i >= 3 vanish (B = 0) and are pruned.
  auto rec = [&](auto&& self, std::size_t pos, unsigned long remaining) -> void {
    if (pos == 2 * k) {  // last slot, y_k
      y[k - 1] = remaining;
      add_term();
      return;
    }
    for (unsigned long v = 0; v <= remaining; ++v) {
      if (pos <= k) {
        if (v >= 3 && v % 2 == 1) continue;
        x[pos] = v;
      } else {
        y[pos - k - 1] = v;
      }
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, mp);

  Rat result = Rat(fact[mp]) / Rat(Int(mp)) * total -
               cache.value(mp) / Rat(Int(mp));
  Int out = rat_to_int(result);
  if (out < 0) throw InternalError("negative Sylvester sum from expansion");
  return out;
}

Int s_bernoulli(const SuitablePair& p, unsigned m) {
  return s_bernoulli(p, m, BernoulliCache::shared());
}

namespace {

// sigma(a, b; k) = (a^{k+1} - b^{k+1}) / (a - b); 0 for k = -1, and k+1
// copies of a^k when a = b (which coprimality limits to a = b = 1).
Int sigma_geometric(const Int& a, const Int& b, long k) {
  if (k < 0) return Int(0);
  const unsigned long e = static_cast<unsigned long>(k) + 1;
  if (a == b) return Int(e) * pow_ui(a, e - 1);
  return exact_div(pow_ui(a, e) - pow_ui(b, e), a - b);
}

Int s0_geometric(const Int& a, const Int& b, unsigned long k) {
  Int s0 = rat_to_int(
      rat(a * b * sigma_geometric(a, b, static_cast<long>(k) - 1) -
              sigma_geometric(a, b, static_cast<long>(k)) + 1,
          2));
  if (a != b) {
    Int alt = rat_to_int(rat((b - 1) * pow_ui(a, k + 1) -
                                 (a - 1) * pow_ui(b, k + 1) + a - b,
                             2 * (a - b)));
    if (alt != s0) {
      throw InternalError("geometric S_0 routes disagree: " + s0.get_str() +
                          " vs " + alt.get_str());
    }
  }
  return s0;
}

}  // namespace

Int s_geometric(const Int& a, const Int& b, unsigned long k, unsigned m) {
  if (a < 1 || b < 1) throw ValidationError("a and b must be positive");
  Int g = gcd(a, b);
  if (g != 1) {
    throw GcdViolation("geometric pair needs gcd(a, b) = 1, got gcd = " +
                       g.get_str());
  }
  if (m > 3) throw ValidationError("closed forms exist for m = 0..3 only");
  Int s0 = s0_geometric(a, b, k);
  Int s0_sq = m >= 1 ? s0_geometric(a * a, b * b, k) : Int(0);
  Int s0_4th = m == 3 ? s0_geometric(pow_ui(a, 4), pow_ui(b, 4), k) : Int(0);
  return s_closed_from_genus(s0, s0_sq, s0_4th, m);
}

SemigroupSummary supersymmetric_summary(const Tuple& moduli,
                                        const Budget& budget) {
  if (moduli.empty()) {
    throw ValidationError("need at least one modulus");
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      Int g = gcd(moduli[i], moduli[j]);
      if (g != 1) {
        throw GcdViolation(i + 1, j + 1,
                           "moduli must be pairwise coprime: gcd(" +
                               moduli[i].get_str() + ", " +
                               moduli[j].get_str() + ") = " + g.get_str());
      }
    }
  }
  const std::size_t k = moduli.size() - 1;
  std::vector<Int> av(moduli.begin() + 1, moduli.end());
  std::vector<Int> bv(moduli.begin(), moduli.end() - 1);
  SuitablePair p{Tuple(std::move(av)), Tuple(std::move(bv))};

  Int prod = 1;
  for (const Int& v : moduli) prod *= v;
  std::vector<Int> gens = generator_values(p.a(), p.b());
  for (std::size_t i = 0; i <= k; ++i) {
    if (gens[i] * moduli[i] != prod) {
      throw InternalError("supersymmetric generators are not prod/a_i");
    }
  }

  SemigroupSummary s = summarize(p, budget);
  Int frob = Int(static_cast<unsigned long>(k)) * prod - sigma(p);
  Int genus = exact_div(1 + frob, 2);
  if (s.frobenius != frob || s.genus != genus) {
    throw InternalError("supersymmetric closed forms disagree with summary");
  }
  return s;
}

}  // namespace compound
