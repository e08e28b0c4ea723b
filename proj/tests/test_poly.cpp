#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "goals/poly.hpp"

using namespace goals;

namespace {

RationalPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("degree and zero polynomial normalization") {
  CHECK(RationalPolynomial{}.degree() == -1);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({1, 0, 0}).degree() == 0);
  CHECK(poly({1, 1}).degree() == 1);
}

TEST_CASE("Horner evaluation") {
  RationalPolynomial p = poly({30, 83, 90, 50, 15, 2});
  CHECK(p.evaluate(0) == 30);
  CHECK(p.evaluate(1) == 30 + 83 + 90 + 50 + 15 + 2);
  CHECK(p.evaluate(-1) == 30 - 83 + 90 - 50 + 15 - 2);
}

TEST_CASE("arithmetic and exact division") {
  RationalPolynomial a = poly({1, 1});        // r + 1
  RationalPolynomial b = poly({2, 1});        // r + 2
  RationalPolynomial prod = a * b;            // r^2 + 3r + 2
  CHECK(prod == poly({2, 3, 1}));
  CHECK(prod.divide_exact(a) == b);
  CHECK((prod + poly({-2, -3, -1})).is_zero());
  CHECK_THROWS_AS(poly({1, 0, 1}).divide_exact(a), NonzeroRemainder);
}

TEST_CASE("affine composition reflects correctly") {
  RationalPolynomial p = poly({0, 1});  // r
  RationalPolynomial q = p.compose_affine(-1, -3);  // -r - 3
  CHECK(q == poly({-3, -1}));
  RationalPolynomial cubic = poly({1, 0, 0, 1});  // r^3 + 1
  RationalPolynomial composed = cubic.compose_affine(2, 1);  // (2r+1)^3 + 1
  CHECK(composed.evaluate(3) == cubic.evaluate(7));
}

TEST_CASE("interpolation reproduces random rational polynomials exactly") {
  std::mt19937 gen(123);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<int> deg(0, 8);
  for (int t = 0; t < 100; ++t) {
    int d = deg(gen);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= d; ++k) coeffs.emplace_back(num(gen), den(gen));
    if (coeffs.back() == 0) coeffs.back() = 1;
    RationalPolynomial p(coeffs);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x = 0; x <= p.degree(); ++x)
      pts.emplace_back(Rational(x), p.evaluate(Rational(x)));
    CHECK(interpolate(pts) == p);
  }
}

TEST_CASE("linear solver rejects singular systems") {
  std::vector<std::vector<Rational>> a{{1, 2}, {2, 4}};
  std::vector<Rational> b{1, 2};
  CHECK_THROWS_AS(solve_linear_system(a, b), VerificationFailure);
}

TEST_CASE("integer content form and printing") {
  std::vector<Rational> c{Rational(1), Rational(83, 30), Rational(3),
                          Rational(5, 3), Rational(1, 2), Rational(1, 15)};
  RationalPolynomial p(c);
  auto [l, ints] = p.integer_content_form();
  CHECK(l == 30);
  CHECK(ints == std::vector<mpz_class>{30, 83, 90, 50, 15, 2});
  CHECK(p.to_string() ==
        "(1/30)*(2*r^5 + 15*r^4 + 50*r^3 + 90*r^2 + 83*r + 30)");
  CHECK(poly({1, 1}).to_string() == "r + 1");
  CHECK(RationalPolynomial{}.to_string() == "0");
}
