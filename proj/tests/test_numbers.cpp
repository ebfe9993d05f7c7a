#include "doctest.h"
#include "oracles.hpp"
#include <numeric>

#include "qv/numbers.hpp"

using namespace qv;

TEST_CASE("valuations and unit parts") {
  CHECK(valuation(Int(360), Int(2)) == 3);
  CHECK(valuation(Int(360), Int(3)) == 2);
  CHECK(valuation(Int(360), Int(5)) == 1);
  CHECK(valuation(Int(-49), Int(7)) == 2);
  CHECK(valuation(Rat(9, 8), Int(2)) == -3);
  CHECK(valuation(Rat(9, 8), Int(3)) == 2);
  CHECK(unit_part(Int(-24), Int(2)) == -3);
  CHECK_THROWS_AS(valuation(Int(0), Int(2)), DivisionByZero);
}

TEST_CASE("rational powers with signed bases and exponents") {
  CHECK(pow_int(Int(-3), 3) == -27);
  CHECK(pow_rat(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(pow_rat(Rat(2, 3), 0) == 1);
  CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
  // Negative base with a negative exponent must still yield a normalized
  // rational (denominator positive).
  CHECK(pow_rat(Rat(-3), -1) == Rat(-1, 3));
  CHECK(pow_rat(Rat(-2, 5), -3) == Rat(-125, 8));
  CHECK_THROWS_AS(pow_rat(Rat(0), -1), DivisionByZero);
}

TEST_CASE("modular arithmetic") {
  CHECK(mod_reduce(Int(-1), Int(7)) == 6);
  CHECK(mod_reduce(Rat(1, 3), Int(5)) == 2);  // 3 * 2 = 6 = 1 mod 5
  for (long long m : {5LL, 8LL, 121LL}) {
    for (long long x = 1; x < m; ++x) {
      if (std::gcd(x, m) != 1) continue;
      Int inv = mod_inverse(Int(x), Int(m));
      CHECK(mod_reduce(Int(inv * x), Int(m)) == 1);
    }
  }
  CHECK_THROWS_AS(mod_inverse(Int(6), Int(9)), ModulusNotCoprime);
  CHECK(mod_pow(Int(2), Int(10), Int(1000)) == 24);
}

TEST_CASE("legendre symbol against enumerated squares") {
  for (long long l : {3LL, 5LL, 7LL, 11LL, 13LL}) {
    for (long long u = 1; u < l; ++u) {
      int expect = oracle::is_square_mod(u, l) ? 1 : -1;
      CHECK(legendre(Int(u), Int(l)) == expect);
    }
    CHECK(legendre(Int(l), Int(l)) == 0);
  }
}

TEST_CASE("primality and factorization") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(13)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(91)));
  auto f = prime_factors(Int(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == 2);
  CHECK(f[1] == 3);
  CHECK(f[2] == 5);
}

TEST_CASE("integer square roots") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(35)) == 5);
  CHECK(isqrt(Int(36)) == 6);
  Int r;
  CHECK(perfect_square(Int(144), &r));
  CHECK(r == 12);
  CHECK_FALSE(perfect_square(Int(145)));
}
