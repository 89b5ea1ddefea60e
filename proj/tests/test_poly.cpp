#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eulerint/poly.hpp"
#include "eulerint/sequences.hpp"
#include "test_support.hpp"

using eulerint::bernoulli_poly;
using eulerint::euler_numbers;
using eulerint::euler_poly;
using eulerint::linear_combine;
using eulerint::Poly;
using eulerint::Rational;

namespace {

Poly poly_of(std::initializer_list<long> constant_first) {
  std::vector<Rational> coeffs;
  for (long c : constant_first) coeffs.emplace_back(c);
  return Poly(std::move(coeffs));
}

}  // namespace

TEST_CASE("normal form") {
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly(std::vector<Rational>{Rational(0), Rational(0)}).is_zero());
  CHECK(poly_of({1, 2}).degree() == 1);
  CHECK(poly_of({1, 2}) + poly_of({-1, -2}) == Poly());
  CHECK(Poly::constant(Rational(0)).is_zero());
  CHECK(Poly::monomial(3, Rational(2)).degree() == 3);
  CHECK(Poly::monomial(3, Rational(0)).is_zero());
}

TEST_CASE("ring operations") {
  Poly x_minus_half(std::vector<Rational>{Rational(-1, 2), Rational(1)});
  CHECK(x_minus_half * x_minus_half ==
        Poly(std::vector<Rational>{Rational(1, 4), Rational(-1), Rational(1)}));
  CHECK(poly_of({1, 1}) * poly_of({-1, 1}) == poly_of({-1, 0, 1}));
  CHECK(Rational(3) * poly_of({1, 2}) == poly_of({3, 6}));
  CHECK((Poly() * poly_of({5, 7})).is_zero());
  CHECK(-poly_of({1, -2}) == poly_of({-1, 2}));
}

TEST_CASE("linear_combine") {
  CHECK(linear_combine({}).is_zero());
  CHECK(linear_combine({{Rational(2), poly_of({0, 1})}, {Rational(-1), poly_of({0, 2})}})
            .is_zero());
  CHECK(linear_combine({{Rational(1, 2), poly_of({2, 4})}, {Rational(1), poly_of({1})}}) ==
        poly_of({2, 2}));
}

TEST_CASE("evaluation by Horner") {
  Poly e3 = euler_poly(3);
  CHECK(e3.eval(Rational(0)) == Rational(1, 4));
  CHECK(e3.eval(Rational(1, 2)) == Rational(0));
  CHECK(e3.eval(Rational(1)) == Rational(-1, 4));
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    Poly p = eulerint_test::random_poly(rng, 8);
    Rational at = eulerint_test::random_rational(rng);
    Rational naive;
    Rational power(1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      naive += p.coeffs()[k] * power;
      power *= at;
    }
    CHECK(p.eval(at) == naive);
  }
}

TEST_CASE("derivative and antiderivative") {
  CHECK(poly_of({1, 2, 3}).derivative() == poly_of({2, 6}));
  CHECK(poly_of({5}).derivative().is_zero());
  CHECK(poly_of({0, 0, 3}).antiderivative() == Poly::monomial(3, Rational(1)));
  std::mt19937 rng(12);
  for (int i = 0; i < 100; ++i) {
    Poly p = eulerint_test::random_poly(rng, 10);
    CHECK(p.antiderivative().derivative() == p);
    CHECK(p.antiderivative().eval(Rational(0)) == Rational(0));
    CHECK(p.antiderivative().eval(Rational(1)) == p.integral01());
  }
}

TEST_CASE("shift and affine composition") {
  Poly e1 = euler_poly(1);
  CHECK(e1.shift(Rational(1)) == poly_of({1, 2}) * Poly::constant(Rational(1, 2)));
  CHECK(euler_poly(2).shift(Rational(1)) == poly_of({0, 1, 1}));
  std::mt19937 rng(13);
  for (int i = 0; i < 60; ++i) {
    Poly p = eulerint_test::random_poly(rng, 7);
    Rational a = eulerint_test::random_rational(rng);
    Rational b = eulerint_test::random_rational(rng);
    Rational at = eulerint_test::random_rational(rng);
    CHECK(p.compose_affine(a, b).eval(at) == p.eval(a * at + b));
    CHECK(p.shift(Rational(0)) == p);
    Rational c = eulerint_test::random_rational(rng);
    Rational d = eulerint_test::random_rational(rng);
    CHECK(p.shift(c).shift(d) == p.shift(c + d));
  }
}

TEST_CASE("umbral constructors, frozen") {
  CHECK(euler_poly(0) == poly_of({1}));
  CHECK(euler_poly(1) == poly_of({-1, 2}) * Poly::constant(Rational(1, 2)));
  CHECK(euler_poly(3).to_string() == "x^3 - 3/2*x^2 + 1/4");
  CHECK(bernoulli_poly(0) == poly_of({1}));
  CHECK(bernoulli_poly(1).to_string() == "x - 1/2");
  CHECK(bernoulli_poly(2) == poly_of({1, -6, 6}) * Poly::constant(Rational(1, 6)));
}

TEST_CASE("family invariants through n = 40") {
  eulerint::SequenceTable etab = euler_numbers(41);
  for (std::size_t n = 0; n <= 40; ++n) {
    Poly en = euler_poly(n);
    Poly bn = bernoulli_poly(n);
    CHECK(en.eval(Rational(0)) == etab.at(n));
    if (n >= 1) {
      CHECK(en.eval(Rational(1)) + en.eval(Rational(0)) == Rational(0));
      CHECK(en.derivative() == Rational(static_cast<long>(n)) * euler_poly(n - 1));
      CHECK(bn.derivative() == Rational(static_cast<long>(n)) * bernoulli_poly(n - 1));
    }
    Poly reflected = en.compose_affine(Rational(-1), Rational(1));
    CHECK(reflected == (n % 2 == 0 ? en : -en));
    CHECK(en.integral01() ==
          Rational(-2) * etab.at(n + 1) / Rational(static_cast<long>(n) + 1));
    if (n != 1) CHECK(bn.eval(Rational(1)) == bn.eval(Rational(0)));
  }
  CHECK(bernoulli_poly(1).eval(Rational(1)) == Rational(1, 2));
}

TEST_CASE("text form") {
  CHECK(Poly().to_string() == "0");
  CHECK(Poly::constant(Rational(1, 4)).to_string() == "1/4");
  CHECK(Poly::constant(Rational(-2)).to_string() == "-2");
  CHECK(poly_of({0, 1}).to_string() == "x");
  CHECK(poly_of({0, -1}).to_string() == "-x");
  CHECK(poly_of({0, 0, 0, 1}).to_string() == "x^3");
  CHECK(poly_of({1, 0, -3}).to_string() == "-3*x^2 + 1");
  CHECK((Rational(1, 2) * poly_of({1, 0, 1})).to_string() == "1/2*x^2 + 1/2");
  CHECK(poly_of({-1, 1}).to_string() == "x - 1");
}

TEST_CASE("coefficients are constant-first") {
  Poly e3 = euler_poly(3);
  CHECK(e3.coeffs().size() == 4);
  CHECK(e3.coeffs()[0] == Rational(1, 4));
  CHECK(e3.coeffs()[1] == Rational(0));
  CHECK(e3.coeffs()[2] == Rational(-3, 2));
  CHECK(e3.coeffs()[3] == Rational(1));
  CHECK(e3.coeff(7) == Rational(0));
}
