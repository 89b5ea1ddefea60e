#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "eulerint/oracle.hpp"
#include "test_support.hpp"

using eulerint::ibp_BqEp_chain;
using eulerint::ibp_EmEn_chain;
using eulerint::ibp_ynEn_chain;
using eulerint::ibp_ynEn_forward;
using eulerint::Poly;
using eulerint::product_integral;
using eulerint::product_poly;
using eulerint::ProductFactor;
using eulerint::ProductSpec;
using eulerint::Rational;
using eulerint::SequenceKind;
using eulerint::triple_beta_sum;
using eulerint::triple_via_expansion;
using eulerint::ynEn_expand;
using eulerint::ynEn_reflect;

namespace {

ProductFactor E(std::size_t n, Rational shift = Rational()) {
  return {SequenceKind::Euler, n, shift};
}
ProductFactor B(std::size_t n, Rational shift = Rational()) {
  return {SequenceKind::Bernoulli, n, shift};
}

}  // namespace

TEST_CASE("product_integral basics") {
  CHECK(product_integral({{E(1), E(1)}}) == Rational(1, 12));
  CHECK(product_integral({{E(1), E(1), E(1)}}) == Rational(0));
  CHECK(product_integral({{E(1), E(1), E(2)}}) == Rational(-1, 120));
  CHECK(product_integral({{E(0)}}) == Rational(1));
  CHECK(product_integral({{B(2), E(2)}}) == Rational(1, 180));
  CHECK(product_integral({{E(1, Rational(1, 2))}}) == Rational(1, 2));
  CHECK_THROWS_AS(product_integral(ProductSpec{}), std::domain_error);
}

TEST_CASE("product_poly expands shifted factors") {
  Poly p = product_poly({{E(1, Rational(1, 2))}});
  CHECK(p.to_string() == "x");
  Poly q = product_poly({{E(1), B(1)}});
  CHECK(q.to_string() == "x^2 - x + 1/4");
}

TEST_CASE("moment integral: expansion, reflection and brute force agree") {
  CHECK(ynEn_expand(0).to_string() == "1");
  CHECK(ynEn_expand(1).to_string() == "1/2*x + 1/12");
  for (std::size_t n = 0; n <= 15; ++n) CHECK(ynEn_expand(n) == ynEn_reflect(n));
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(ynEn_expand(n) == eulerint_test::ynEn_bruteforce(n));
}

TEST_CASE("backward chain matches the expansion") {
  CHECK_THROWS_AS(ibp_ynEn_chain(2), std::domain_error);
  for (std::size_t n = 3; n <= 12; ++n) CHECK(ibp_ynEn_chain(n) == ynEn_expand(n));
}

TEST_CASE("forward chain matches the expansion") {
  CHECK_THROWS_AS(ibp_ynEn_forward(0), std::domain_error);
  CHECK(ibp_ynEn_forward(1).to_string() == "1/2*x + 1/12");
  for (std::size_t n = 1; n <= 12; ++n) CHECK(ibp_ynEn_forward(n) == ynEn_expand(n));
}

TEST_CASE("Euler product chain") {
  CHECK_THROWS_AS(ibp_EmEn_chain(0, 0), std::domain_error);
  CHECK(ibp_EmEn_chain(1, 1) == Rational(1, 12));
  CHECK(ibp_EmEn_chain(2, 1) == Rational(0));
  CHECK(ibp_EmEn_chain(2, 2) == Rational(1, 30));
  for (std::size_t m = 0; m <= 10; ++m)
    for (std::size_t n = 0; n <= 10; ++n) {
      if (m + n < 1) continue;
      Rational direct = product_integral({{E(n), E(m)}});
      CHECK(ibp_EmEn_chain(m, n) == direct);
      CHECK(ibp_EmEn_chain(n, m) == direct);
      if ((m + n) % 2 == 1) CHECK(direct == Rational(0));
    }
}

TEST_CASE("Bernoulli-Euler chain") {
  CHECK_THROWS_AS(ibp_BqEp_chain(0, 1), std::domain_error);
  CHECK(ibp_BqEp_chain(1, 1) == Rational(1, 12));
  CHECK(ibp_BqEp_chain(2, 1) == Rational(0));
  CHECK(ibp_BqEp_chain(2, 2) == Rational(1, 180));
  for (std::size_t q = 1; q <= 10; ++q)
    for (std::size_t p = 0; p <= 10; ++p)
      CHECK(ibp_BqEp_chain(q, p) == product_integral({{B(q), E(p)}}));
}

TEST_CASE("triple product routes") {
  CHECK_THROWS_AS(triple_via_expansion(1, 0, 2), std::domain_error);
  CHECK(triple_via_expansion(1, 1, 1) == Rational(0));
  CHECK(triple_via_expansion(1, 1, 2) == Rational(-1, 120));
  CHECK(triple_via_expansion(2, 2, 2) == Rational(-1, 140));
  CHECK(triple_beta_sum(1, 1, 1) == Rational(0));
  CHECK(triple_beta_sum(1, 1, 2) == Rational(-1, 120));
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n)
      for (std::size_t p = 1; p <= 5; ++p) {
        Rational direct = product_integral({{E(m), E(n), E(p)}});
        CHECK(triple_via_expansion(m, n, p) == direct);
        CHECK(triple_beta_sum(m, n, p) == direct);
      }
}

TEST_CASE("double Beta sum route") {
  for (std::size_t m = 0; m <= 10; ++m)
    for (std::size_t n = 0; n <= 10; ++n)
      CHECK(eulerint::emen_beta_sum(m, n) == product_integral({{E(n), E(m)}}));
}
