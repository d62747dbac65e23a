#include <doctest.h>

#include <random>
#include <vector>

#include "padic/core.hpp"
#include "padic/primality.hpp"

using namespace padic;

namespace {

const std::vector<int> kSmallPrimes = {3,  5,  7,  11, 13, 17, 19, 23, 29,
                                       31, 37, 41, 43, 47, 53, 59, 61, 67,
                                       71, 73, 79, 83, 89, 97};

// brute-force square-root oracle: smallest x in [1, p-1] with x^2 = a mod p
Int sqrt_oracle(const Int& a, const Int& p) {
  for (Int x = 1; x < p; ++x) {
    if ((x * x - a) % p == 0) return x;
  }
  return -1;
}

int legendre_oracle(const Int& a, const Int& p) {
  if (mod_floor(a, p) == 0) return 0;
  return sqrt_oracle(a, p) > 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("padic_valuation on table entries") {
  CHECK(padic_valuation(87, 3) == 1);
  CHECK(padic_valuation(0, 5).is_infinite());
  CHECK(padic_valuation(50, 5) == 2);
  CHECK(padic_valuation(-587, 3) == 0);
}

TEST_CASE("padic_valuation is additive on products") {
  std::mt19937_64 rng(20240801);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  std::uniform_int_distribution<std::size_t> pick(0, kSmallPrimes.size() - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    Int x = coeff(rng), y = coeff(rng);
    if (x == 0 || y == 0) continue;
    Int p = kSmallPrimes[pick(rng)];
    CHECK(padic_valuation(x * y, p).value() ==
          padic_valuation(x, p).value() + padic_valuation(y, p).value());
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(8, 81) == 71);  // 8*71 = 568 = 7*81 + 1
  CHECK(mod_inverse(1, 9) == 1);
  CHECK(mod_inverse(2, 25) == 13);
  CHECK_THROWS_AS(mod_inverse(6, 9), NotInvertible);
}

TEST_CASE("mod_inverse on random coprime pairs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> value(1, 1000000000L);
  int done = 0;
  while (done < 10000) {
    Int x = value(rng);
    Int m = value(rng) + 1;
    if (gcd(x, m) != 1) continue;
    Int y = mod_inverse(x, m);
    CHECK(y >= 0);
    CHECK(y < m);
    CHECK(mod_floor(x * y, m) == 1);
    ++done;
  }
}

TEST_CASE("legendre_symbol examples") {
  CHECK(legendre_symbol(0, 7) == 0);
  CHECK(legendre_symbol(-4, 5) == 1);  // squares mod 5 are {0,1,4}; -4 = 1
  CHECK(legendre_symbol(2, 3) == -1);
}

TEST_CASE("legendre_symbol equals square enumeration for p <= 97") {
  for (int p : kSmallPrimes) {
    for (Int a = 0; a < p; ++a) {
      CAPTURE(p);
      CAPTURE(a.str());
      CHECK(legendre_symbol(a, p) == legendre_oracle(a, p));
    }
  }
}

TEST_CASE("legendre_symbol is multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-100000, 100000);
  std::uniform_int_distribution<std::size_t> pick(0, kSmallPrimes.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    Int a = coeff(rng), b = coeff(rng);
    Int p = kSmallPrimes[pick(rng)];
    CHECK(legendre_symbol(a * b, p) ==
          legendre_symbol(a, p) * legendre_symbol(b, p));
  }
}

TEST_CASE("sqrt_mod_p returns the smaller root") {
  CHECK(sqrt_mod_p(-1, 5) == 2);
  CHECK(sqrt_mod_p(1, 7) == 1);
  CHECK(sqrt_mod_p(-4, 5) == 1);
  CHECK_THROWS_AS(sqrt_mod_p(2, 3), NotAResidue);
  CHECK_THROWS_AS(sqrt_mod_p(0, 7), NotAResidue);
}

TEST_CASE("sqrt_mod_p agrees with exhaustive search for p <= 97") {
  for (int p : kSmallPrimes) {
    for (Int a = 1; a < p; ++a) {
      if (legendre_symbol(a, p) != 1) continue;
      CHECK(sqrt_mod_p(a, p) == sqrt_oracle(a, p));
    }
  }
}

TEST_CASE("hensel_lift_sqrt on the n^2+1 branch") {
  PadicApprox x = hensel_lift_sqrt(-1, 5, 2);
  CHECK(x.residue == 7);  // 7^2 + 1 = 50 = 2 * 25
  CHECK(x.precision == 2);
  CHECK(hensel_lift_sqrt(-1, 5, 3).residue == 57);  // 57^2 + 1 = 26 * 125
  CHECK(hensel_lift_sqrt(1, 3, 4).residue == 1);
}

TEST_CASE("hensel_lift_sqrt: correctness and lift coherence") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coeff(-100000, 100000);
  std::uniform_int_distribution<std::size_t> pick(0, kSmallPrimes.size() - 1);
  int done = 0;
  while (done < 500) {
    Int a = coeff(rng);
    Int p = kSmallPrimes[pick(rng)];
    if (legendre_symbol(a, p) != 1) continue;
    PadicApprox prev = hensel_lift_sqrt(a, p, 1);
    for (unsigned k = 1; k <= 8; ++k) {
      PadicApprox x = hensel_lift_sqrt(a, p, k);
      Int m = pow_int(p, k);
      CHECK(x.residue >= 0);
      CHECK(x.residue < m);
      CHECK(mod_floor(x.residue * x.residue - a, m) == 0);
      // reducing the k-precision lift mod p^(k-1) gives the previous lift
      CHECK(mod_floor(x.residue, pow_int(p, k - 1)) ==
            (k == 1 ? Int(0) : prev.residue));
      prev = x;
    }
    ++done;
  }
}

TEST_CASE("padic_sqrt splits off the even valuation") {
  auto [u, e] = padic_sqrt(-4, 5, 2);
  CHECK(u.residue == 11);  // 11^2 = 121 = -4 mod 25
  CHECK(e == 0);

  auto [u9, e9] = padic_sqrt(9, 3, 1);
  CHECK(u9.residue == 1);
  CHECK(e9 == 1);

  // nu_3 = 7 is odd, so this discriminant has no 3-adic square root
  CHECK_THROWS_AS(padic_sqrt(pow_int(3, 7) * 16, 3, 4), NoSquareRoot);
  // even valuation but non-residue unit part
  CHECK_THROWS_AS(padic_sqrt(9 * 2, 3, 4), NoSquareRoot);
}

TEST_CASE("hensel_lift_quadratic_root follows the one-branch seed") {
  Quadratic f(12, 16, 7, 3);
  CHECK(hensel_lift_quadratic_root(f, 2, 2).residue == 5);  // f(5) = 387 = 9*43
  CHECK(hensel_lift_quadratic_root(f, 2, 1).residue == 2);

  Quadratic g(1, 0, -1, 5);
  CHECK(hensel_lift_quadratic_root(g, 1, 3).residue == 1);

  CHECK_THROWS_AS(hensel_lift_quadratic_root(f, 1, 2), NotASimpleRoot);
  // double root of n^2 mod 3: f(0) = 0 but f'(0) = 0
  CHECK_THROWS_AS(hensel_lift_quadratic_root(Quadratic(1, 0, 0, 3), 0, 2),
                  NotASimpleRoot);
}

TEST_CASE("hensel_lift_quadratic_root residual growth") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::uniform_int_distribution<std::size_t> pick(0, kSmallPrimes.size() - 1);
  int done = 0;
  while (done < 300) {
    Int a = coeff(rng), b = coeff(rng), c = coeff(rng);
    Int p = kSmallPrimes[pick(rng)];
    if (a == 0) continue;
    Quadratic f(a, b, c, p);
    for (Int x0 = 0; x0 < p; ++x0) {
      if (mod_floor(f.eval(x0), p) != 0) continue;
      if (mod_floor(f.derivative(x0), p) == 0) continue;
      for (unsigned k : {1u, 3u, 8u}) {
        PadicApprox xi = hensel_lift_quadratic_root(f, x0, k);
        CHECK(padic_valuation(f.eval(xi.residue), p).at_least(k));
        CHECK(mod_floor(xi.residue, p) == x0);
      }
      ++done;
    }
  }
}

TEST_CASE("primality validation") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
  CHECK(is_prime_u64(18446744073709551557ull));

  CHECK_NOTHROW(validate_odd_prime(Int(97)));
  CHECK_THROWS_AS(validate_odd_prime(Int(2)), InvalidPrime);
  CHECK_THROWS_AS(validate_odd_prime(Int(9)), InvalidPrime);
  CHECK_THROWS_AS(validate_odd_prime(Int(-3)), InvalidPrime);
  // primes beyond 64 bits are rejected outright
  CHECK_THROWS_AS(validate_odd_prime(pow_int(Int(2), 89) - 1), InvalidPrime);
}

TEST_CASE("quadratic rejects invalid instances") {
  CHECK_THROWS_AS(Quadratic(0, 1, 2, 3), InvalidQuadratic);
  CHECK_THROWS_AS(Quadratic(1, 1, 2, 4), InvalidPrime);
}
