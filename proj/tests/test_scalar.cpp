#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcirc/random.hpp"
#include "pfcirc/scalar.hpp"

#include <complex>

using namespace pfcirc;

TEST_CASE("field constants and defining relations") {
  Scalar one(1), half(Rational(1, 2));
  CHECK(Scalar(1) + Scalar::sqrt2() == Scalar(1, 1, 0, 0));
  CHECK(half + half == one);
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::inv_sqrt2() * Scalar::inv_sqrt2() == half);
  CHECK(Scalar::inv_sqrt2() == Scalar::sqrt2().inverse());
}

TEST_CASE("inverses") {
  CHECK(Scalar(2).inverse() == Scalar(Rational(1, 2)));
  CHECK(Scalar::sqrt2().inverse() == Scalar(0, Rational(1, 2), 0, 0));
  CHECK(Scalar::i().inverse() == -Scalar::i());
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
  Rng rng(7);
  for (int trial = 0; trial < 200; trial++) {
    Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + Scalar() == x);
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
  }
}

TEST_CASE("zero iff all coordinates zero") {
  CHECK(Scalar(0, 0, 0, 0).is_zero());
  CHECK_FALSE(Scalar(0, 0, 0, Rational(1, 1000000)).is_zero());
  Rng rng(11);
  for (int trial = 0; trial < 100; trial++) {
    Scalar x = random_scalar(rng);
    bool coords_zero = x.rat_part() == 0 && x.sqrt2_part() == 0 && x.i_part() == 0 &&
                       x.i_sqrt2_part() == 0;
    CHECK(x.is_zero() == coords_zero);
  }
}

TEST_CASE("float approximation") {
  CHECK(Scalar(Rational(1, 2)).to_complex() == std::complex<double>(0.5, 0));
  CHECK(Scalar::sqrt2().to_complex().real() == doctest::Approx(1.41421356237).epsilon(1e-11));
  CHECK(Scalar(0, 0, 0, 1).to_complex().imag() == doctest::Approx(1.41421356237).epsilon(1e-11));
}

TEST_CASE("text round trip") {
  CHECK(Scalar().to_string() == "0");
  CHECK(Scalar(1, Rational(-3, 2), 0, 1).to_string() == "1 - 3/2*sqrt2 + i*sqrt2");
  CHECK(Scalar::parse("1/2") == Scalar(Rational(1, 2)));
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("sqrt2 + 2*i") == Scalar(0, 1, 2, 0));
  CHECK_THROWS(Scalar::parse(""));
  CHECK_THROWS(Scalar::parse("1 + + 2"));
  Rng rng(13);
  for (int trial = 0; trial < 300; trial++) {
    Scalar x = random_scalar(rng, true, 20, 7);
    CHECK(Scalar::parse(x.to_string()) == x);
  }
}
