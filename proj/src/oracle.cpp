#include "eulerint/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulerint/combinatorics.hpp"

namespace eulerint {

namespace {

long L(std::size_t v) { return static_cast<long>(v); }

Poly family_poly(SequenceKind family, std::size_t n) {
  return family == SequenceKind::Euler ? euler_poly(n) : bernoulli_poly(n);
}

}  // namespace

Poly product_poly(const ProductSpec& spec) {
  if (spec.factors.empty()) throw std::domain_error("empty product");
  Poly r = Poly::constant(Rational(1));
  for (const auto& f : spec.factors)
    r = r * family_poly(f.family, f.index).shift(f.shift);
  return r;
}

Rational product_integral(const ProductSpec& spec) {
  return product_poly(spec).integral01();
}

Poly ynEn_expand(std::size_t n) {
  SequenceTable euler = euler_numbers(n);
  Poly r;
  for (std::size_t l = 0; l <= n; ++l)
    r += (Rational(binomial(L(n), L(l))) / Rational(L(n) + L(l) + 1)) *
         euler_poly(n - l, euler);
  return r;
}

Poly ynEn_reflect(std::size_t n) {
  SequenceTable euler = euler_numbers(n);
  Poly r;
  for (std::size_t l = 0; l <= n; ++l) {
    Rational c = Rational(binomial(L(n), L(l))) * beta_int(L(n) + 1, L(l) + 1);
    if (l % 2 == 1) c = -c;
    r += c * euler_poly(n - l, euler).shift(Rational(1));
  }
  return r;
}

Poly ibp_ynEn_chain(std::size_t n) {
  if (n < 3) throw std::domain_error("ibp_ynEn_chain requires n >= 3");
  SequenceTable euler = euler_numbers(n);
  // I_j = integral_0^1 y^{n+j} E_{n-j}(x+y) dy satisfies
  //   I_j = E_{n-j}(x+1)/(n+j+1) - (n-j)/(n+j+1) * I_{j+1};
  // unrolled, I_0 = sum_j prefix_j * bnd_j + prefix_{n-1} * I_{n-1} with
  // prefix_j the product of the accumulated -(n-i)/(n+i+1) factors.
  Poly r;
  Rational prefix(1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Poly bnd = (Rational(1) / Rational(L(n) + L(j) + 1)) *
               euler_poly(n - j, euler).shift(Rational(1));
    r += prefix * bnd;
    prefix *= -Rational(L(n) - L(j)) / Rational(L(n) + L(j) + 1);
  }
  // I_{n-1} = integral_0^1 y^{2n-1} E_1(x+y) dy, expanded exactly.
  Poly base;
  for (std::size_t l = 0; l <= 1; ++l)
    base += (Rational(binomial(1, L(l))) / Rational(2 * L(n) + L(l))) *
            euler_poly(1 - l, euler);
  r += prefix * base;
  return r;
}

Poly ibp_ynEn_forward(std::size_t n) {
  if (n < 1) throw std::domain_error("ibp_ynEn_forward requires n >= 1");
  SequenceTable euler = euler_numbers(n + 1);
  Poly bnd = (Rational(1) / Rational(L(n) + 1)) *
             euler_poly(n + 1, euler).shift(Rational(1));
  // integral_0^1 y^{n-1} E_{n+1}(x+y) dy via y -> 1-y, the reflection
  // E_{n+1}(1-(y-x)) = (-1)^{n+1} E_{n+1}(y-x), and the additive expansion
  // E_{n+1}(y-x) = sum_l C(n+1,l) E_{n+1-l}(-x) y^l, whose moments against
  // (1-y)^{n-1} are exact Beta values.
  Poly rest;
  for (std::size_t l = 0; l <= n + 1; ++l) {
    Rational c = Rational(binomial(L(n) + 1, L(l))) * beta_int(L(n), L(l) + 1);
    rest += c * euler_poly(n + 1 - l, euler).compose_affine(Rational(-1), Rational(0));
  }
  if (n % 2 == 0) rest = -rest;  // (-1)^{n+1}
  return bnd - (Rational(L(n)) / Rational(L(n) + 1)) * rest;
}

Rational ibp_EmEn_chain(std::size_t m, std::size_t n) {
  if (m + n < 1) throw std::domain_error("ibp_EmEn_chain requires m + n >= 1");
  if (m == 0) {
    SequenceTable euler = euler_numbers(n + 1);
    return Rational(-2) * euler.at(n + 1) / Rational(L(n) + 1);
  }
  Poly prod = euler_poly(n + 1) * euler_poly(m);
  Rational boundary =
      (prod.eval(Rational(1)) - prod.eval(Rational(0))) / Rational(L(n) + 1);
  return boundary -
         (Rational(L(m)) / Rational(L(n) + 1)) * ibp_EmEn_chain(m - 1, n + 1);
}

Rational ibp_BqEp_chain(std::size_t q, std::size_t p) {
  if (q < 1) throw std::domain_error("ibp_BqEp_chain requires q >= 1");
  if (p == 0) return bernoulli_poly(q).integral01();
  Poly prod = bernoulli_poly(q + 1) * euler_poly(p);
  Rational boundary =
      (prod.eval(Rational(1)) - prod.eval(Rational(0))) / Rational(L(q) + 1);
  return boundary -
         (Rational(L(p)) / Rational(L(q) + 1)) * ibp_BqEp_chain(q + 1, p - 1);
}

Rational triple_via_expansion(std::size_t m, std::size_t n, std::size_t p) {
  if (m + n < 2) throw std::domain_error("triple_via_expansion requires m + n >= 2");
  std::size_t top = std::max(m, n);
  SequenceTable euler = euler_numbers(std::max(m + n + 1, p + 1));
  Rational total;
  for (std::size_t r = 0; 2 * r + 1 <= top; ++r) {
    Rational w = Rational(binomial(L(m), 2 * L(r) + 1) + binomial(L(n), 2 * L(r) + 1));
    Rational coeff = Rational(-2) * euler.at(2 * r + 1) * w /
                     Rational(L(m) + L(n) - 2 * L(r));
    total += coeff * ibp_BqEp_chain(m + n - 2 * r, p);
  }
  Rational constant = Rational(2) * euler.at(n + m + 1) /
                      (Rational(binomial(L(n) + L(m), L(n))) * Rational(L(n) + L(m) + 1));
  if (m % 2 == 0) constant = -constant;  // 2 (-1)^{m+1} ...
  total += constant * (Rational(-2) * euler.at(p + 1) / Rational(L(p) + 1));
  return total;
}

Rational triple_beta_sum(std::size_t m, std::size_t n, std::size_t p) {
  SequenceTable euler = euler_numbers(std::max({m, n, p}));
  Rational total;
  for (std::size_t l = 0; l <= m; ++l)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k = 0; k <= p; ++k) {
        Rational term = Rational(binomial(L(m), L(l)) * binomial(L(n), L(j)) *
                                 binomial(L(p), L(k))) *
                        euler.at(m - l) * euler.at(n - j) * euler.at(k) *
                        beta_int(L(l) + L(j) + 1, L(p) - L(k) + 1);
        total += term;
      }
  if (p % 2 == 1) total = -total;
  return total;
}

Rational emen_beta_sum(std::size_t m, std::size_t n) {
  SequenceTable euler = euler_numbers(std::max(m, n));
  Rational total;
  for (std::size_t l = 0; l <= n; ++l)
    for (std::size_t k = 0; k <= m; ++k)
      total += Rational(binomial(L(n), L(l)) * binomial(L(m), L(k))) *
               euler.at(l) * euler.at(k) *
               beta_int(L(n) - L(l) + 1, L(m) - L(k) + 1);
  if (m % 2 == 1) total = -total;
  return total;
}

}  // namespace eulerint
