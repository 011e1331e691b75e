#include <doctest.h>

#include "coxkl/poly.hpp"

using namespace coxkl;

TEST_SUITE("poly") {

TEST_CASE("canonical form and degree") {
  PolyZ z;
  CHECK(z.is_zero());
  CHECK(z.degree() == PolyZ::kNegInfDegree);
  CHECK(PolyZ({mpz_class(0), mpz_class(0)}).is_zero());
  PolyZ p({mpz_class(1), mpz_class(2), mpz_class(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(5) == 0);
  CHECK(p.coeff(-1) == 0);
}

TEST_CASE("ring identities") {
  PolyZ a({mpz_class(-1), mpz_class(1)});           // q - 1
  PolyZ b({mpz_class(3), mpz_class(0), mpz_class(2)});  // 2q^2 + 3
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK(a * (b + b) == a * b + a * b);
  CHECK((a - a).is_zero());
  CHECK(a * PolyZ::zero() == PolyZ::zero());
  CHECK(a * PolyZ::one() == a);
  CHECK(-(-a) == a);
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(0) == PolyZ::one());
}

TEST_CASE("shift, truncate, reverse") {
  PolyZ p({mpz_class(1), mpz_class(2), mpz_class(3)});
  CHECK(p.shifted(2).degree() == 4);
  CHECK(p.shifted(2).coeff(2) == 1);
  CHECK(p.truncated(1) == PolyZ({mpz_class(1), mpz_class(2)}));
  CHECK(p.truncated(-1).is_zero());
  // q^4 p(1/q) for p = 3q^2 + 2q + 1 is q^4 + 2q^3 + 3q^2
  PolyZ r = p.reversed(4);
  CHECK(r.coeff(4) == 1);
  CHECK(r.coeff(3) == 2);
  CHECK(r.coeff(2) == 3);
  CHECK(r.coeff(1) == 0);
  CHECK_THROWS_AS(p.reversed(1), std::invalid_argument);
  CHECK(PolyZ::zero().reversed(3).is_zero());
}

TEST_CASE("to_string") {
  CHECK(PolyZ::zero().to_string() == "0");
  CHECK(PolyZ(-7).to_string() == "-7");
  CHECK(PolyZ({mpz_class(-1), mpz_class(1)}).to_string() == "q - 1");
  CHECK(PolyZ({mpz_class(1), mpz_class(-2), mpz_class(0), mpz_class(1)})
            .to_string() == "q^3 - 2q + 1");
  CHECK(PolyZ::monomial(1, 1).to_string() == "q");
  CHECK(PolyZ::monomial(-3, 2).to_string() == "-3q^2");
}

}  // TEST_SUITE
