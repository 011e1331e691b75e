#include <doctest.h>

#include <cmath>

#include "coxkl/numberfield.hpp"

using namespace coxkl;

namespace {

FieldElem gen(const NumberField* f) {
  std::vector<mpq_class> c(f->degree(), mpq_class(0));
  if (f->degree() >= 2)
    c[1] = 1;
  else
    c[0] = f->two_cos(1)[0];  // y is rational here
  return FieldElem(f, std::move(c));
}

}  // namespace

TEST_SUITE("numberfield") {

TEST_CASE("minimal polynomials of 2cos(pi/N)") {
  auto check = [](unsigned n, std::vector<long> expect) {
    auto f = NumberField::make(n);
    REQUIRE(f->degree() == int(expect.size()) - 1);
    for (size_t i = 0; i < expect.size(); ++i)
      CHECK(f->modulus()[i] == expect[i]);
  };
  check(2, {0, 1});           // y
  check(3, {-1, 1});          // y - 1
  check(4, {-2, 0, 1});       // y^2 - 2
  check(5, {-1, -1, 1});      // y^2 - y - 1, golden ratio
  check(6, {-3, 0, 1});       // y^2 - 3
  check(7, {1, -2, -1, 1});   // y^3 - y^2 - 2y + 1
  check(12, {1, 0, -4, 0, 1});  // y^4 - 4y^2 + 1
}

TEST_CASE("the bracket isolates the largest root") {
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 7u, 9u, 12u, 15u, 30u}) {
    auto f = NumberField::make(n);
    double y = 2 * std::cos(M_PI / n);
    auto [lo, hi] = f->bracket();
    CHECK(lo.get_d() <= y + 1e-9);
    CHECK(hi.get_d() >= y - 1e-9);
    f->refine(30);
    auto [lo2, hi2] = f->bracket();
    CHECK(std::abs((lo2.get_d() + hi2.get_d()) / 2 - y) < 1e-6);
  }
}

TEST_CASE("field arithmetic mod the minimal polynomial") {
  auto f = NumberField::make(6);  // y = sqrt(3)
  FieldElem y = gen(f.get());
  CHECK(y * y == FieldElem::rational(f.get(), 3));
  CHECK((y * y * y).coeffs()[1] == 3);  // y^3 = 3y
  FieldElem a = y + FieldElem::one(f.get());
  CHECK(a * a.inverse() == FieldElem::one(f.get()));
  CHECK((a - a).is_zero());

  auto f7 = NumberField::make(7);
  FieldElem y7 = gen(f7.get());
  FieldElem b = y7 * y7 - y7 - FieldElem::rational(f7.get(), 2);
  CHECK(b * b.inverse() == FieldElem::one(f7.get()));
  // 2cos(2pi/7) = y^2 - 2 via the Chebyshev word
  FieldElem c(f7.get(), f7->two_cos(2));
  CHECK(std::abs(c.approx() - 2 * std::cos(2 * M_PI / 7)) < 1e-9);
}

TEST_CASE("certified signs") {
  auto f = NumberField::make(7);  // y = 2cos(pi/7) ~ 1.8019
  FieldElem y = gen(f.get());
  CHECK((y - FieldElem::rational(f.get(), 1)).sign() == 1);
  CHECK((y - FieldElem::rational(f.get(), 2)).sign() == -1);
  CHECK((y - FieldElem::rational(f.get(), mpq_class(9, 5))).sign() == 1);
  CHECK(FieldElem::zero(f.get()).sign() == 0);
  // Differences of conjugate values: 2cos(pi/7) + 2cos(3pi/7) - 2cos(5pi/7)
  // is y^2 + y - 1 evaluated... just certify a few mixed elements and check
  // against floating point.
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      FieldElem e = y * FieldElem::rational(f.get(), a) +
                    FieldElem::rational(f.get(), b);
      double v = 2 * std::cos(M_PI / 7) * a + b;
      if (std::abs(v) > 1e-9) CHECK(e.sign() == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("signs are stable under extra refinement") {
  auto f = NumberField::make(15);
  FieldElem y = gen(f.get());
  std::vector<FieldElem> samples;
  for (long k = -3; k <= 3; ++k)
    samples.push_back(y * y - y * FieldElem::rational(f.get(), k) +
                      FieldElem::rational(f.get(), mpq_class(k, 7)));
  std::vector<int> before;
  for (auto& e : samples) before.push_back(e.sign());
  f->refine(10);
  for (size_t i = 0; i < samples.size(); ++i)
    CHECK(samples[i].sign() == before[i]);
}

TEST_CASE("rational degenerate fields") {
  auto f = NumberField::make(2);  // y = 0
  CHECK(f->degree() == 1);
  FieldElem y = gen(f.get());
  CHECK(y.is_zero());
  auto f3 = NumberField::make(3);  // y = 1
  CHECK(FieldElem(f3.get(), f3->two_cos(1)) == FieldElem::one(f3.get()));
  CHECK_THROWS_AS(NumberField::make(1), std::invalid_argument);
}

}  // TEST_SUITE
