#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "compound/core.hpp"
#include "compound/oracle.hpp"
#include "compound/semigroup.hpp"
#include "testutil.hh"

using namespace compound;

namespace {

SuitablePair nugget() { return SuitablePair({3, 3}, {2, 10}); }

std::vector<Int> gens(const SuitablePair& p) {
  return build_sequence(p).generators();
}

}  // namespace

TEST_CASE("tuple entries must be positive") {
  CHECK_THROWS_AS(Tuple({Int(0)}), ValidationError);
  CHECK_THROWS_AS(Tuple({Int(-3)}), ValidationError);
  CHECK_NOTHROW(Tuple({Int(1)}));
}

TEST_CASE("suitable pair validation") {
  CHECK_NOTHROW(nugget());
  CHECK_NOTHROW(SuitablePair({}, {}));

  CHECK_THROWS_AS(SuitablePair({2, 3}, {2}), LengthMismatch);

  try {
    SuitablePair p({2, 3}, {2, 5});
    FAIL("expected GcdViolation");
  } catch (const GcdViolation& e) {
    CHECK(e.index_a() == 1);
    CHECK(e.index_b() == 1);
  }

  // gcd(a_i, b_j) only matters for i >= j
  CHECK_NOTHROW(SuitablePair({3, 5}, {2, 3}));  // gcd(a_1, b_2) = 3 is fine
}

TEST_CASE("generators of known pairs") {
  CHECK(gens(nugget()) == std::vector<Int>{9, 6, 20});
  CHECK(gens(SuitablePair({8, 2}, {5, 7})) == std::vector<Int>{16, 10, 35});
  CHECK(gens(SuitablePair({}, {})) == std::vector<Int>{1});
}

TEST_CASE("sigma") {
  CHECK(sigma(nugget()) == 35);
  CHECK(sigma(SuitablePair({}, {})) == 1);
  // geometric a=2, b=3, k=2: (a^3 - b^3)/(a - b)
  CHECK(sigma(SuitablePair({2, 2}, {3, 3})) == 19);
}

TEST_CASE("tuple operators") {
  CHECK(project(Tuple({3, 3}), 2) == Tuple({3}));
  CHECK(project(Tuple({4, 5, 6}), 1) == Tuple({5, 6}));
  CHECK_THROWS_AS(project(Tuple({3, 3}), 0), IndexOutOfRange);
  CHECK_THROWS_AS(project(Tuple({3, 3}), 3), IndexOutOfRange);

  CHECK(reverse(Tuple({5, 7})) == Tuple({7, 5}));
  CHECK(reverse(Tuple({})) == Tuple({}));

  CHECK(power(Tuple({2, 10}), 2) == Tuple({4, 100}));
  CHECK(power(Tuple({2, 10}), 1) == Tuple({2, 10}));
}

TEST_CASE("digit expansion examples") {
  SuitablePair p35({3}, {5});
  DigitExpansion d = digit_expand(7, p35, 0);
  CHECK(d.digits == std::vector<Int>{-1, 2});

  DigitExpansion zero = digit_expand(0, nugget(), 0);
  CHECK(zero.digits == std::vector<Int>{0, 0, 0});
  CHECK(digit_expand(0, nugget(), 2).digits == std::vector<Int>{0, 0, 0});

  DigitExpansion f = digit_expand(43, nugget(), 0);
  CHECK(f.digits == std::vector<Int>{-1, 2, 2});
}

TEST_CASE("digit expansion pivot bounds") {
  CHECK_THROWS_AS(digit_expand(5, nugget(), 3), IndexOutOfRange);
  CHECK_NOTHROW(digit_expand(5, nugget(), 2));
}

TEST_CASE("representability examples") {
  CHECK_FALSE(is_representable(13, nugget()));
  CHECK(is_representable(15, nugget()));
  CHECK_FALSE(is_representable(-1, nugget()));
  CHECK(is_representable(0, nugget()));
  // k = 0 generates all of N_0
  SuitablePair empty({}, {});
  CHECK(is_representable(0, empty));
  CHECK(is_representable(7, empty));
  CHECK_FALSE(is_representable(-2, empty));
}

TEST_CASE("reconstruction and digit ranges over all pivots") {
  std::mt19937_64 rng(7001);
  for (int iter = 0; iter < 40; ++iter) {
    SuitablePair p = testutil::random_pair(rng, 3, 9);
    auto g = gens(p);
    const std::size_t k = p.length();
    for (std::size_t j = 0; j <= k; ++j) {
      for (long n = -60; n <= 200; ++n) {
        DigitExpansion d = digit_expand(n, p, j);
        Int sum = 0;
        for (std::size_t i = 0; i <= k; ++i) sum += d.digits[i] * g[i];
        REQUIRE(sum == n);
        for (std::size_t i = 0; i < j; ++i) {
          REQUIRE(d.digits[i] >= 0);
          REQUIRE(d.digits[i] < p.b()[i]);
        }
        for (std::size_t i = j + 1; i <= k; ++i) {
          REQUIRE(d.digits[i] >= 0);
          REQUIRE(d.digits[i] < p.a()[i - 1]);
        }
      }
    }
  }
}

TEST_CASE("uniqueness: no two in-range digit vectors share a value") {
  SuitablePair p({3, 2}, {5, 7});
  auto g = gens(p);
  for (std::size_t j = 0; j <= 2; ++j) {
    std::set<Int> seen;
    std::vector<long> lo(3, 0), hi(3, 0);
    for (std::size_t i = 0; i <= 2; ++i) {
      if (i == j) {
        lo[i] = -8;
        hi[i] = 8;
      } else if (i < j) {
        hi[i] = p.b()[i].get_si() - 1;
      } else {
        hi[i] = p.a()[i - 1].get_si() - 1;
      }
    }
    for (long d0 = lo[0]; d0 <= hi[0]; ++d0) {
      for (long d1 = lo[1]; d1 <= hi[1]; ++d1) {
        for (long d2 = lo[2]; d2 <= hi[2]; ++d2) {
          Int value = d0 * g[0] + d1 * g[1] + d2 * g[2];
          REQUIRE(seen.insert(value).second);
        }
      }
    }
  }
}

TEST_CASE("pivot independence of representability") {
  std::mt19937_64 rng(7002);
  for (int iter = 0; iter < 30; ++iter) {
    SuitablePair p = testutil::random_pair(rng, 3, 9);
    for (long n = -5; n <= 120; ++n) {
      bool base = digit_expand(n, p, 0).digits[0] >= 0;
      for (std::size_t j = 1; j <= p.length(); ++j) {
        REQUIRE((digit_expand(n, p, j).digits[j] >= 0) == base);
      }
      REQUIRE(is_representable(n, p) == (base && n >= 0));
    }
  }
}

TEST_CASE("membership agrees with the DP oracle") {
  std::mt19937_64 rng(7003);
  for (int iter = 0; iter < 30; ++iter) {
    SuitablePair p = testutil::random_pair(rng, 3, 9, 2);
    auto g = gens(p);
    Int bound = frobenius_closed(p) + g[0];
    if (bound < 0) bound = 0;
    auto table = oracle::dp_table(testutil::to_ll(g), bound.get_si());
    for (long n = 0; n <= bound.get_si(); ++n) {
      REQUIRE(is_representable(n, p) ==
              static_cast<bool>(table.reachable[static_cast<std::size_t>(n)]));
    }
  }
}

TEST_CASE("duality: R(A,B) = R(rho(B), rho(A))") {
  std::mt19937_64 rng(7004);
  for (int iter = 0; iter < 25; ++iter) {
    SuitablePair p = testutil::random_pair(rng, 3, 9);
    SuitablePair dual(reverse(p.b()), reverse(p.a()));
    Int bound = frobenius_closed(p) + 2;
    for (Int n = 0; n <= bound; ++n) {
      REQUIRE(is_representable(n, p) == is_representable(n, dual));
    }
  }
}

TEST_CASE("normalize examples") {
  SuitablePair folded = normalize(SuitablePair({1, 3}, {2, 5}));
  CHECK(folded == SuitablePair({3}, {10}));

  CHECK(normalize(SuitablePair({2}, {1})) == SuitablePair({}, {}));
  CHECK(normalize(nugget()) == nugget());
}

TEST_CASE("normalize output has no 1-entries and keeps the semigroup") {
  std::mt19937_64 rng(7005);
  int with_ones = 0;
  for (int iter = 0; iter < 60; ++iter) {
    SuitablePair p = testutil::random_pair(rng, 3, 7);
    bool had_one = false;
    for (const Int& v : p.a()) had_one |= (v == 1);
    for (const Int& v : p.b()) had_one |= (v == 1);
    with_ones += had_one;

    SuitablePair n = normalize(p);
    for (const Int& v : n.a()) REQUIRE(v >= 2);
    for (const Int& v : n.b()) REQUIRE(v >= 2);

    Int bound = frobenius_closed(p) + gens(p)[0] + 1;
    for (Int x = 0; x <= bound; ++x) {
      REQUIRE(is_representable(x, p) == is_representable(x, n));
    }
  }
  CHECK(with_ones > 5);  // the sample actually exercises the rules
}

TEST_CASE("digit expansion far beyond machine range") {
  SuitablePair p = nugget();
  auto g = gens(p);
  Int huge("1000000000000000000000000000000");  // 10^30
  for (std::size_t j = 0; j <= 2; ++j) {
    for (const Int& n : {huge, Int(-huge), Int(huge + 43)}) {
      DigitExpansion d = digit_expand(n, p, j);
      Int sum = 0;
      for (std::size_t i = 0; i <= 2; ++i) sum += d.digits[i] * g[i];
      REQUIRE(sum == n);
    }
  }
  CHECK(is_representable(huge, p));       // far past the Frobenius number
  CHECK_FALSE(is_representable(-huge, p));
}

TEST_CASE("normalize folds chains of 1-entries") {
  // a_1 = 1 and b_3 = 1 both fold away
  SuitablePair p({1, 3, 5}, {2, 7, 1});
  SuitablePair n = normalize(p);
  REQUIRE(n.length() == 1);
  Int bound = frobenius_closed(p) + gens(p)[0] + 1;
  for (Int x = 0; x <= bound; ++x) {
    REQUIRE(is_representable(x, p) == is_representable(x, n));
  }

  // every entry 1: the semigroup is all of N_0
  CHECK(normalize(SuitablePair({1, 1}, {1, 1})) == SuitablePair({}, {}));
}

TEST_CASE("compound sequence gcd is always 1") {
  std::mt19937_64 rng(7006);
  for (int iter = 0; iter < 50; ++iter) {
    SuitablePair p = testutil::random_pair(rng, 4, 12);
    auto g = gens(p);
    Int d = g[0];
    for (const Int& v : g) d = gcd(d, v);
    REQUIRE(d == 1);
  }
}
