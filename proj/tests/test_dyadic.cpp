#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prefixlab/dyadic.hpp"
#include "support/generators.hpp"

using namespace prefixlab;

TEST_CASE("canonical form") {
  CHECK(Dyadic(4, 3) == Dyadic(1, 1));
  CHECK(Dyadic(4, 3).numerator() == 1);
  CHECK(Dyadic(4, 3).exponent() == 1);
  CHECK(Dyadic(6, 0).numerator() == 6);
  CHECK(Dyadic(0, 9) == Dyadic::zero());
  CHECK(Dyadic(0, 9).exponent() == 0);
  CHECK_THROWS_AS(Dyadic(-1, 0), std::domain_error);
}

TEST_CASE("addition and comparison") {
  const Dyadic half = Dyadic::inversePowerOfTwo(1);
  const Dyadic quarter = Dyadic::inversePowerOfTwo(2);
  CHECK(half + quarter + quarter == Dyadic::one());
  CHECK(half < Dyadic::one());
  CHECK(Dyadic(3, 2) > half);
  CHECK((quarter * Natural(3)) == Dyadic(3, 2));
  CHECK(Dyadic(3, 2).toString() == "3/2^2");
  CHECK(Dyadic(5, 0).toString() == "5");
  CHECK(Dyadic(3, 2).toDouble() == doctest::Approx(0.75));
}

TEST_CASE("sums agree with rational arithmetic") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Dyadic sum;
    testing::Rational oracle = 0;
    const std::size_t terms = testing::uniform(rng, 0, 30);
    for (std::size_t i = 0; i < terms; ++i) {
      const std::size_t num = testing::uniform(rng, 0, 1000);
      const std::size_t exp = testing::uniform(rng, 0, 80);
      sum += Dyadic(num, exp);
      oracle += testing::Rational(num) * testing::pow2neg(exp);
    }
    REQUIRE(testing::toRational(sum) == oracle);
    const Dyadic other(testing::uniform(rng, 0, 1000), testing::uniform(rng, 0, 40));
    REQUIRE((sum < other) == (oracle < testing::toRational(other)));
  }
}
