#include "doctest.h"

#include "galois5/affine.hpp"

using namespace galois5;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(5, 2) * Rational(4)).as_integer() == 10);
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(-4).str() == "-4");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 2).as_integer(), non_integral_error);
}

TEST_CASE("affine form evaluation") {
  // 10g + 4n1 + 5/2 n2 - 9
  auto f = AffineForm::make(-9, 10, {Rational(4), Rational(5, 2), 0, 0, 0, 0});
  TypeCounts c;
  c.n = {0, 4, 0, 0, 0, 0};
  CHECK(f.eval_int(0, c) == 1);
  c.n = {1, 2, 0, 0, 0, 0};
  CHECK(f.eval_int(1, c) == 10);
  c.n = {0, 1, 0, 0, 0, 0};
  CHECK_THROWS_AS(f.eval_int(0, c), non_integral_error);
}

TEST_CASE("affine form algebra") {
  auto g = AffineForm::genus(1);
  auto n2 = AffineForm::count(1, Rational(1, 2));
  auto f = g + n2 - AffineForm::constant(1);
  CHECK(f.genus_coeff() == Rational(1));
  CHECK(f.count_coeff(1) == Rational(1, 2));
  CHECK(f.constant_term() == Rational(-1));
  CHECK((f - f).is_zero());
  CHECK(f * Rational(2) == AffineForm::make(-2, 2, {0, 1, 0, 0, 0, 0}));
}

TEST_CASE("rendering in lowest terms") {
  auto f = AffineForm::make(-9, 10, {Rational(4), Rational(5, 2), 0, 0, 0, 0});
  CHECK(f.str() == "-9 + 10*g + 4*n1 + 5/2*n2");
  CHECK(AffineForm::constant(0).str() == "0");
  CHECK(AffineForm::make(0, 1, {Rational(-1, 2), 0, 0, 0, 0, 0}).str() ==
        "0 + 1*g - 1/2*n1");
}
