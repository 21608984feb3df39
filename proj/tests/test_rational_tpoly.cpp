#include "doctest.h"
#include "fmzv/rational.hpp"
#include "fmzv/tpoly.hpp"

using namespace fmzv;

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-4, -2) == Rational(2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(7, 3).num() == 7);
  CHECK(Rational(7, 3).den() == 3);
}

TEST_CASE("rational ordering and printing") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(-5, 2).to_string() == "-5/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("tpoly basics") {
  TPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  TPoly t = TPoly::t();
  CHECK(t.degree() == 1);
  CHECK(t.coeff(0) == Rational(0));
  CHECK(t.coeff(1) == Rational(1));
  CHECK(t.coeff(5) == Rational(0));

  TPoly omt = TPoly::one_minus_t();
  CHECK(omt == TPoly(1) - t);
  // (1 - t)(1 + t) = 1 - t^2
  CHECK(omt * (TPoly(1) + t) == TPoly(1) - t * t);
  // cancellation trims back to the zero polynomial
  CHECK((t - t).is_zero());
  CHECK(TPoly::monomial(3, Rational(1, 2)).degree() == 3);
  CHECK(TPoly::monomial(0, Rational(0)).is_zero());
}

TEST_CASE("tpoly evaluation and substitution") {
  // q = 2 - 3t + t^2
  TPoly q = TPoly(2) - TPoly(3) * TPoly::t() + TPoly::t() * TPoly::t();
  CHECK(q.eval(Rational(0)) == Rational(2));
  CHECK(q.eval(Rational(1)) == Rational(0));
  CHECK(q.eval(Rational(1, 2)) == Rational(3, 4));

  // t -> 1 - t mirrors the coefficients
  TPoly r = q.subst_affine(Rational(1), Rational(-1));
  CHECK(r.eval(Rational(0)) == q.eval(Rational(1)));
  CHECK(r.eval(Rational(1)) == q.eval(Rational(0)));
  CHECK(r.eval(Rational(1, 3)) == q.eval(Rational(2, 3)));
  // t -> constant collapses the degree
  CHECK(q.subst_affine(Rational(1), Rational(0)) == TPoly(0));
  // double reflection is the identity
  CHECK(r.subst_affine(Rational(1), Rational(-1)) == q);
}
