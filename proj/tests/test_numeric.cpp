#include "numeric.hpp"

#include <gmpxx.h>

#include "doctest.h"
#include "error.hpp"

using namespace patchcount;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("5/10") == Rational(1, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("decimal parsing") {
  CHECK(parse_decimal("122.94") == Rational(12294, 100));
  CHECK(parse_decimal("1397192") == Rational(1397192));
  CHECK(parse_decimal("0.00001") == Rational(1, 100000));
  CHECK_THROWS_AS(parse_decimal("12."), Error);
  CHECK_THROWS_AS(parse_decimal("1.2.3"), Error);
  CHECK_THROWS_AS(parse_decimal("-1.5"), Error);
}

TEST_CASE("fixed-point floor formatting") {
  CHECK(floor_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(floor_decimal(Rational(1), 2) == "1.00");
  CHECK(floor_decimal(Rational(12294, 100), 2) == "122.94");
  CHECK(floor_decimal(Rational(0), 3) == "0.000");
  CHECK(floor_decimal(Rational(7), 0) == "7");
}

TEST_CASE("log2 of powers of two is exact") {
  mpz_class x = 1;
  x <<= 10;
  CHECK(log2_floor_decimal(x, 2) == "10.00");
  mpz_class big = 1;
  big <<= 1000;  // exercises the top-bits path
  CHECK(log2_floor_decimal(big, 4) == "1000.0000");
}

TEST_CASE("log2 of 20 against the integer-power oracle") {
  // floor(log2(20) * 10^4) = L iff 2^L <= 20^10000 < 2^(L+1)
  BigCount L = log2_floor_scaled(BigCount(20), 4);
  CHECK(L.fits_ulong_p());
  unsigned long l = L.get_ui();
  mpz_class pow20;
  mpz_ui_pow_ui(pow20.get_mpz_t(), 20, 10000);
  mpz_class lo = 1;
  lo <<= l;
  mpz_class hi = 1;
  hi <<= (l + 1);
  CHECK(lo <= pow20);
  CHECK(pow20 < hi);
  CHECK(log2_floor_decimal(BigCount(20), 4) == "4.3219");
}

TEST_CASE("log2 floor is exact on random inputs") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(42);
  for (int i = 0; i < 10; ++i) {
    mpz_class x = rng.get_z_bits(40) + 2;
    BigCount scaled = log2_floor_scaled(x, 3);
    unsigned long l = scaled.get_ui();
    mpz_class powx;
    mpz_pow_ui(powx.get_mpz_t(), x.get_mpz_t(), 1000);
    mpz_class lo = 1;
    lo <<= l;
    mpz_class hi = 1;
    hi <<= (l + 1);
    CHECK(lo <= powx);
    CHECK(powx < hi);
  }
}

TEST_CASE("log2 of the published four-bundle tile count") {
  BigCount f("10233480626615962155895931163981261674");
  CHECK(log2_floor_decimal(f, 2) == "122.94");
}

TEST_CASE("log2 rejects nonpositive input") {
  CHECK_THROWS_AS(log2_floor_decimal(BigCount(0), 2), Error);
  CHECK(log2_floor_decimal(BigCount(1), 2) == "0.00");
}
