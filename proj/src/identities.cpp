#include "eulerint/identities.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eulerint/combinatorics.hpp"
#include "eulerint/oracle.hpp"

namespace eulerint {

namespace {

using Params = std::vector<long>;

Rational rb(long n, long k) { return Rational(binomial(n, k)); }

// C(n,l) / C(n+l,l), the coefficient ratio shared by several displays.
Rational binom_over(long n, long l) { return rb(n, l) / rb(n + l, l); }

Rational sgn_pow(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Poly epoly1(long n) { return euler_poly(static_cast<std::size_t>(n)); }
Poly bpoly1(long n) { return bernoulli_poly(static_cast<std::size_t>(n)); }

Rational eulnum(long n) {
  return euler_numbers(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(n));
}

ProductFactor ef(long n) { return {SequenceKind::Euler, static_cast<std::size_t>(n), Rational()}; }
ProductFactor bf(long n) { return {SequenceKind::Bernoulli, static_cast<std::size_t>(n), Rational()}; }

IdentityValue sub_values(const IdentityValue& a, const IdentityValue& b,
                         IdentityKind kind) {
  if (kind == IdentityKind::RationalValue)
    return std::get<Rational>(a) - std::get<Rational>(b);
  return std::get<Poly>(a) - std::get<Poly>(b);
}

bool value_is_zero(const IdentityValue& v) {
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).is_zero();
  return std::get<Poly>(v).is_zero();
}

std::vector<IdentityItem> make_registry() {
  std::vector<IdentityItem> items;

  // eq2 (n >= 1), rational:
  //   E_n = -sum_{i=1}^{n} C(n,i) E_i.
  items.push_back(IdentityItem{
      "eq2",
      "printed Euler recurrence E_n = -sum_{i>=1} C(n,i) E_i",
      {"n"},
      {1},
      IdentityKind::RationalValue,
      nullptr,
      "requires n >= 1",
      [](const Params& a) -> IdentityValue {
        return eulnum(a[0]);
      },
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n));
        Rational s;
        for (long i = 1; i <= n; ++i)
          s += rb(n, i) * e.at(static_cast<std::size_t>(i));
        return -s;
      },
      nullptr,
  });

  // thm1 (n >= 0), polynomial in x:
  //   sum_l C(n,l) E_{n-l}(x) / (n+l+1)
  //     = sum_l (-1)^l (E_{n-l}(1+x)/(n+l+1)) C(n,l)/C(n+l,l).
  items.push_back(IdentityItem{
      "thm1",
      "moment integral of y^n E_n(x+y): expansion form equals reflection form",
      {"n"},
      {0},
      IdentityKind::PolyInX,
      nullptr,
      "requires n >= 0",
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n));
        Poly s;
        for (long l = 0; l <= n; ++l)
          s += (rb(n, l) / Rational(n + l + 1)) *
               euler_poly(static_cast<std::size_t>(n - l), e);
        return s;
      },
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n));
        Poly s;
        for (long l = 0; l <= n; ++l)
          s += (sgn_pow(l) * binom_over(n, l) / Rational(n + l + 1)) *
               euler_poly(static_cast<std::size_t>(n - l), e).shift(Rational(1));
        return s;
      },
      [](const Params& a) -> IdentityValue { return ynEn_expand(static_cast<std::size_t>(a[0])); },
  });

  // thm1_x0 (n >= 0), rational: the same display at x = 0,
  //   sum_l C(n,l) E_{n-l} / (n+l+1)
  //     = (-1)^n sum_l (E_{n-l}/(n+l+1)) C(n,l)/C(n+l,l).
  items.push_back(IdentityItem{
      "thm1_x0",
      "the moment identity specialized at x = 0",
      {"n"},
      {0},
      IdentityKind::RationalValue,
      nullptr,
      "requires n >= 0",
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n));
        Rational s;
        for (long l = 0; l <= n; ++l)
          s += rb(n, l) * e.at(static_cast<std::size_t>(n - l)) / Rational(n + l + 1);
        return s;
      },
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n));
        Rational s;
        for (long l = 0; l <= n; ++l)
          s += e.at(static_cast<std::size_t>(n - l)) / Rational(n + l + 1) *
               binom_over(n, l);
        return sgn_pow(n) * s;
      },
      [](const Params& a) -> IdentityValue {
        return ynEn_expand(static_cast<std::size_t>(a[0])).eval(Rational(0));
      },
  });

  // Shared lhs of the two thm2 readings (n >= 3):
  //   sum_{l=0}^{n} (-1)^l (E_{n-l}(x+1)/(n+l+1)) C(n,l)/C(n+l,l).
  auto thm2_lhs = [](const Params& a) -> IdentityValue {
    long n = a[0];
    SequenceTable e = euler_numbers(static_cast<std::size_t>(n));
    Poly s;
    for (long l = 0; l <= n; ++l)
      s += (sgn_pow(l) * binom_over(n, l) / Rational(n + l + 1)) *
           euler_poly(static_cast<std::size_t>(n - l), e).shift(Rational(1));
    return s;
  };

  // Shared tail of both thm2 readings:
  //   E_n(x+1)/(n+1) ... + ((-1)^{n-1}/C(2n,n)) (E_1(x+1) - 1/(2n+1)).
  auto thm2_head = [](long n) {
    return (Rational(1) / Rational(n + 1)) *
           epoly1(n).shift(Rational(1));
  };
  auto thm2_tail = [](long n) {
    Poly t = epoly1(1).shift(Rational(1)) -
             Poly::constant(Rational(1) / Rational(2 * n + 1));
    return (sgn_pow(n - 1) / rb(2 * n, n)) * t;
  };

  // thm2_printed (n >= 3), polynomial in x: middle coefficients read as the
  // binomial ratio C(n,l)(n-l+2)/C(n+l,l).
  items.push_back(IdentityItem{
      "thm2_printed",
      "reflection form re-expanded by parts, binomial-ratio coefficients as printed",
      {"n"},
      {3},
      IdentityKind::PolyInX,
      nullptr,
      "requires n >= 3",
      thm2_lhs,
      [thm2_head, thm2_tail](const Params& a) -> IdentityValue {
        long n = a[0];
        Poly s = thm2_head(n);
        for (long l = 2; l <= n - 1; ++l)
          s += (sgn_pow(l - 1) * rb(n, l) * Rational(n - l + 2) / rb(n + l, l)) *
               epoly1(n - l + 1).shift(Rational(1));
        s += thm2_tail(n);
        return s;
      },
      [](const Params& a) -> IdentityValue { return ynEn_expand(static_cast<std::size_t>(a[0])); },
  });

  // thm2_plus (n >= 3), polynomial in x: middle coefficients read as the
  // falling-factorial ratio n(n-1)...(n-l+2) / ((n+1)...(n+l)).
  items.push_back(IdentityItem{
      "thm2_plus",
      "reflection form re-expanded by parts, falling-factorial coefficients",
      {"n"},
      {3},
      IdentityKind::PolyInX,
      nullptr,
      "requires n >= 3",
      thm2_lhs,
      [thm2_head, thm2_tail](const Params& a) -> IdentityValue {
        long n = a[0];
        Poly s = thm2_head(n);
        for (long l = 2; l <= n - 1; ++l) {
          Rational c(1);
          for (long t = 0; t <= l - 2; ++t) c *= Rational(n - t);
          for (long t = 1; t <= l; ++t) c /= Rational(n + t);
          s += (sgn_pow(l - 1) * c) * epoly1(n - l + 1).shift(Rational(1));
        }
        s += thm2_tail(n);
        return s;
      },
      [](const Params& a) -> IdentityValue { return ynEn_expand(static_cast<std::size_t>(a[0])); },
  });

  // thm2_x0 (n >= 3), rational: the printed x = 0 specialization,
  //   sum_l (E_{n-l}/(n+l+1)) C(n,l)/C(n+l,l)
  //     = E_n/(n+1) + sum_{l=2}^{n-1} (C(n,l)(n-l+2)/C(n+l,l)) E_{n-l+1}
  //       + (1/C(2n,n)) (1/2 + 1/(2n+1)).
  items.push_back(IdentityItem{
      "thm2_x0",
      "the re-expansion specialized at x = 0",
      {"n"},
      {3},
      IdentityKind::RationalValue,
      nullptr,
      "requires n >= 3",
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n));
        Rational s;
        for (long l = 0; l <= n; ++l)
          s += e.at(static_cast<std::size_t>(n - l)) / Rational(n + l + 1) *
               binom_over(n, l);
        return s;
      },
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n) + 1);
        Rational s = e.at(static_cast<std::size_t>(n)) / Rational(n + 1);
        for (long l = 2; l <= n - 1; ++l)
          s += rb(n, l) * Rational(n - l + 2) / rb(n + l, l) *
               e.at(static_cast<std::size_t>(n - l + 1));
        s += (Rational(1, 2) + Rational(1) / Rational(2 * n + 1)) / rb(2 * n, n);
        return s;
      },
      nullptr,
  });

  // thm3 (n >= 1), polynomial in x:
  //   E_{n+1}(x)/(n+1)
  //     = (1/(n+1)) sum_{l=0}^{n+1} (C(n+1,l)/C(n+l,l)) (-1)^l E_{n+1-l}(1+x)
  //       - sum_{l=0}^{n} (-1)^l (C(n,l)/((n+l+1) C(n+l,l))) E_{n-l}(1+x).
  items.push_back(IdentityItem{
      "thm3",
      "E_{n+1}(x)/(n+1) recovered from the two moment forms",
      {"n"},
      {1},
      IdentityKind::PolyInX,
      nullptr,
      "requires n >= 1",
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        return (Rational(1) / Rational(n + 1)) * epoly1(n + 1);
      },
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n) + 1);
        Poly s1;
        for (long l = 0; l <= n + 1; ++l)
          s1 += (sgn_pow(l) * rb(n + 1, l) / rb(n + l, l)) *
                euler_poly(static_cast<std::size_t>(n + 1 - l), e).shift(Rational(1));
        Poly s2;
        for (long l = 0; l <= n; ++l)
          s2 += (sgn_pow(l) * rb(n, l) / (Rational(n + l + 1) * rb(n + l, l))) *
                euler_poly(static_cast<std::size_t>(n - l), e).shift(Rational(1));
        return (Rational(1) / Rational(n + 1)) * s1 - s2;
      },
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        return (Rational(1) / Rational(n + 1)) * epoly1(n + 1);
      },
  });

  // thm3_x0 (n >= 1), rational:
  //   -E_{n+1}/(n+1) = (1/(n+1)) sum_{l=0}^{n+1} (C(n+1,l)/C(n+l,l)) E_{n+1-l}
  //                    + sum_{l=0}^{n} (C(n,l)/C(n+l,l)) E_{n-l}/(n+l+1).
  items.push_back(IdentityItem{
      "thm3_x0",
      "the recovery specialized at x = 0",
      {"n"},
      {1},
      IdentityKind::RationalValue,
      nullptr,
      "requires n >= 1",
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        return -eulnum(n + 1) / Rational(n + 1);
      },
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n) + 1);
        Rational s1;
        for (long l = 0; l <= n + 1; ++l)
          s1 += rb(n + 1, l) / rb(n + l, l) * e.at(static_cast<std::size_t>(n + 1 - l));
        Rational s2;
        for (long l = 0; l <= n; ++l)
          s2 += rb(n, l) / rb(n + l, l) * e.at(static_cast<std::size_t>(n - l)) /
                Rational(n + l + 1);
        return s1 / Rational(n + 1) + s2;
      },
      nullptr,
  });

  // thm4_closed (m >= 1, n >= 0), rational:
  //   -2 E_{n+m+1} / (C(n+m,n) (n+m+1))
  //     = sum_{l=0}^{n} sum_{k=0}^{m} C(n,l) C(m,k) E_l E_k
  //                                   (n-l)! (m-k)! / (n+m-l-k+1)!.
  items.push_back(IdentityItem{
      "thm4_closed",
      "closed form of the reflected Euler product integral against its double sum",
      {"m", "n"},
      {1, 0},
      IdentityKind::RationalValue,
      nullptr,
      "requires m >= 1 and n >= 0",
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return Rational(-2) * eulnum(n + m + 1) /
               (rb(n + m, n) * Rational(n + m + 1));
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(std::max(m, n)));
        Rational s;
        for (long l = 0; l <= n; ++l)
          for (long k = 0; k <= m; ++k)
            s += rb(n, l) * rb(m, k) * e.at(static_cast<std::size_t>(l)) *
                 e.at(static_cast<std::size_t>(k)) *
                 Rational(factorial(n - l) * factorial(m - k),
                          factorial(n + m - l - k + 1));
        return s;
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        Poly reflected = epoly1(m).compose_affine(Rational(-1), Rational(1));
        return (epoly1(n) * reflected).integral01();
      },
  });

  // thm4_moreover (m >= 1, n >= 0), rational:
  //   E_{n+m+1} = -(1/2) sum_{l,k} (C(n,l) C(m,k) C(n+m,n) / C(n+m-l-k,n-l))
  //                               ((n+m+1) E_l E_k / (n+m-l-k+1)).
  items.push_back(IdentityItem{
      "thm4_moreover",
      "E_{n+m+1} isolated from the double sum",
      {"m", "n"},
      {1, 0},
      IdentityKind::RationalValue,
      nullptr,
      "requires m >= 1 and n >= 0",
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return eulnum(n + m + 1);
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(std::max(m, n)));
        Rational s;
        for (long l = 0; l <= n; ++l)
          for (long k = 0; k <= m; ++k)
            s += rb(n, l) * rb(m, k) * rb(n + m, n) / rb(n + m - l - k, n - l) *
                 Rational(n + m + 1) * e.at(static_cast<std::size_t>(l)) *
                 e.at(static_cast<std::size_t>(k)) / Rational(n + m - l - k + 1);
        return Rational(-1, 2) * s;
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        Poly reflected = epoly1(m).compose_affine(Rational(-1), Rational(1));
        return Rational(-1, 2) * rb(n + m, n) * Rational(n + m + 1) *
               (epoly1(n) * reflected).integral01();
      },
  });

  // thm5 (m, n >= 1), polynomial in x:
  //   m E_{m-1}(x) E_n(x) + n E_m(x) E_{n-1}(x)
  //     = -2 sum_{2r+1 <= max(m,n)} E_{2r+1} B_{m+n-2r-1}(x)
  //                                 (C(m,2r+1) + C(n,2r+1)).
  items.push_back(IdentityItem{
      "thm5",
      "derivative of E_m E_n expanded over odd Euler numbers and Bernoulli polynomials",
      {"m", "n"},
      {1, 1},
      IdentityKind::PolyInX,
      nullptr,
      "requires m >= 1 and n >= 1",
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return Rational(m) * (epoly1(m - 1) * epoly1(n)) +
               Rational(n) * (epoly1(m) * epoly1(n - 1));
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(std::max(m, n)));
        Poly s;
        for (long r = 0; 2 * r + 1 <= std::max(m, n); ++r)
          s += (Rational(-2) * e.at(static_cast<std::size_t>(2 * r + 1)) *
                (rb(m, 2 * r + 1) + rb(n, 2 * r + 1))) *
               bpoly1(m + n - 2 * r - 1);
        return s;
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return (epoly1(m) * epoly1(n)).derivative();
      },
  });

  // thm6 (m, n >= 0, m + n >= 2), polynomial in x:
  //   E_m(x) E_n(x) = -2 sum_{2r+1 <= max(m,n)} (C(m,2r+1) + C(n,2r+1))
  //                       E_{2r+1} B_{m+n-2r}(x) / (m+n-2r)
  //                   + 2 (-1)^{m+1} E_{n+m+1} / (C(n+m,n) (n+m+1)).
  items.push_back(IdentityItem{
      "thm6",
      "E_m E_n expanded over Bernoulli polynomials plus a constant",
      {"m", "n"},
      {0, 0},
      IdentityKind::PolyInX,
      [](const Params& a) { return a[0] + a[1] >= 2; },
      "requires m, n >= 0 with m + n >= 2",
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return epoly1(m) * epoly1(n);
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(std::max(m, n)));
        Poly s;
        for (long r = 0; 2 * r + 1 <= std::max(m, n); ++r)
          s += (Rational(-2) * (rb(m, 2 * r + 1) + rb(n, 2 * r + 1)) *
                e.at(static_cast<std::size_t>(2 * r + 1)) /
                Rational(m + n - 2 * r)) *
               bpoly1(m + n - 2 * r);
        s += Poly::constant(thm6_constant(m, n));
        return s;
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return epoly1(m) * epoly1(n);
      },
  });

  // eq17 (n >= 1), polynomial in x: forward integration by parts with the
  // boundary term as printed,
  //   integral_0^1 y^n E_n(x+y) dy
  //     = E_n(x)/(n+1) - (n/(n+1)) sum_{l=0}^{n+1} C(n+1,l) E_{n+1-l}(x)/(n+l).
  items.push_back(IdentityItem{
      "eq17",
      "forward integration by parts of the moment integral, boundary as printed",
      {"n"},
      {1},
      IdentityKind::PolyInX,
      nullptr,
      "requires n >= 1",
      [](const Params& a) -> IdentityValue {
        return ynEn_expand(static_cast<std::size_t>(a[0]));
      },
      [](const Params& a) -> IdentityValue {
        long n = a[0];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(n) + 1);
        Poly s;
        for (long l = 0; l <= n + 1; ++l)
          s += (rb(n + 1, l) / Rational(n + l)) *
               euler_poly(static_cast<std::size_t>(n + 1 - l), e);
        return (Rational(1) / Rational(n + 1)) * euler_poly(static_cast<std::size_t>(n), e) -
               (Rational(n) / Rational(n + 1)) * s;
      },
      [](const Params& a) -> IdentityValue {
        return ynEn_expand(static_cast<std::size_t>(a[0]));
      },
  });

  // eq22 (m >= 1, n >= 0), rational:
  //   integral_0^1 E_{n+m-1}(x) E_1(x) dx = 2 E_{n+m-1} / ((m+n)(m+n+1)).
  items.push_back(IdentityItem{
      "eq22",
      "Euler product integral special case, subscript as printed",
      {"m", "n"},
      {1, 0},
      IdentityKind::RationalValue,
      nullptr,
      "requires m >= 1 and n >= 0",
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return product_integral({{ef(n + m - 1), ef(1)}});
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return Rational(2) * eulnum(n + m - 1) /
               (Rational(m + n) * Rational(m + n + 1));
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return ibp_EmEn_chain(1, static_cast<std::size_t>(n + m - 1));
      },
  });

  // eq23 (m >= 1, n >= 0), rational:
  //   integral_0^1 E_n(x) E_m(x) dx
  //     = 2 (-1)^{m+1} (m! n! / (n+m)!) E_{n+m+1} / (n+m+1).
  items.push_back(IdentityItem{
      "eq23",
      "closed form of integral_0^1 E_n E_m dx",
      {"m", "n"},
      {1, 0},
      IdentityKind::RationalValue,
      nullptr,
      "requires m >= 1 and n >= 0",
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return product_integral({{ef(n), ef(m)}});
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return Rational(2) * sgn_pow(m + 1) *
               Rational(factorial(m) * factorial(n), factorial(n + m)) *
               eulnum(n + m + 1) / Rational(n + m + 1);
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1];
        return product_integral({{ef(n), ef(m)}});
      },
  });

  // eq29_printed (q >= 1, p >= 0), rational:
  //   integral_0^1 B_q(x) E_p(x) dx
  //     = 2 p! sum_{l=0}^{p} (-1)^l B_{q+l} E_{p-l+1} / (C(q+l,l) l!).
  items.push_back(IdentityItem{
      "eq29_printed",
      "integral_0^1 B_q E_p dx expanded by parts, prefactor as printed",
      {"q", "p"},
      {1, 0},
      IdentityKind::RationalValue,
      nullptr,
      "requires q >= 1 and p >= 0",
      [](const Params& a) -> IdentityValue {
        long q = a[0], p = a[1];
        return product_integral({{bf(q), ef(p)}});
      },
      [](const Params& a) -> IdentityValue {
        long q = a[0], p = a[1];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(p) + 1);
        SequenceTable b = bernoulli_numbers(static_cast<std::size_t>(q + p));
        Rational s;
        for (long l = 0; l <= p; ++l)
          s += sgn_pow(l) * b.at(static_cast<std::size_t>(q + l)) *
               e.at(static_cast<std::size_t>(p - l + 1)) /
               (rb(q + l, l) * Rational(factorial(l)));
        return Rational(2) * Rational(factorial(p)) * s;
      },
      [](const Params& a) -> IdentityValue {
        return ibp_BqEp_chain(static_cast<std::size_t>(a[0]),
                              static_cast<std::size_t>(a[1]));
      },
  });

  // eq33 (m, n, p >= 1), rational: expansion route for the triple product
  // integral against the closed triple sum,
  //   -4 p! sum_r (C(m,2r+1)+C(n,2r+1)) (E_{2r+1}/(n+m-2r))
  //         sum_{l=1}^{p} (B_{m+n-2r+l} E_{p-l+1} / C(n+m-2r+l,l)) ((-1)^l/l!)
  //   + 4 (-1)^m E_{n+m+1} E_{p+1} / (C(n+m,n) (n+m+1) (p+1))
  //     = (-1)^p sum_{l,j,k} C(m,l) C(n,j) C(p,k) E_{m-l} E_{n-j} E_k
  //               / (C(l+j+p-k, l+j) (l+j+p-k+1)).
  items.push_back(IdentityItem{
      "eq33",
      "triple Euler product integral: expansion route against the Beta sum",
      {"m", "n", "p"},
      {1, 1, 1},
      IdentityKind::RationalValue,
      nullptr,
      "requires m, n, p >= 1",
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1], p = a[2];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(std::max(m + n + 1, p + 1)));
        SequenceTable b = bernoulli_numbers(static_cast<std::size_t>(m + n + p));
        Rational s;
        for (long r = 0; 2 * r + 1 <= std::max(m, n); ++r) {
          Rational inner;
          for (long l = 1; l <= p; ++l)
            inner += b.at(static_cast<std::size_t>(m + n - 2 * r + l)) *
                     e.at(static_cast<std::size_t>(p - l + 1)) /
                     rb(n + m - 2 * r + l, l) * sgn_pow(l) /
                     Rational(factorial(l));
          s += (rb(m, 2 * r + 1) + rb(n, 2 * r + 1)) *
               e.at(static_cast<std::size_t>(2 * r + 1)) /
               Rational(n + m - 2 * r) * inner;
        }
        Rational total = Rational(-4) * Rational(factorial(p)) * s;
        total += Rational(4) * sgn_pow(m) * e.at(static_cast<std::size_t>(n + m + 1)) *
                 e.at(static_cast<std::size_t>(p + 1)) /
                 (rb(n + m, n) * Rational(n + m + 1) * Rational(p + 1));
        return total;
      },
      [](const Params& a) -> IdentityValue {
        long m = a[0], n = a[1], p = a[2];
        SequenceTable e = euler_numbers(static_cast<std::size_t>(std::max({m, n, p})));
        Rational s;
        for (long l = 0; l <= m; ++l)
          for (long j = 0; j <= n; ++j)
            for (long k = 0; k <= p; ++k)
              s += rb(m, l) * rb(n, j) * rb(p, k) *
                   e.at(static_cast<std::size_t>(m - l)) *
                   e.at(static_cast<std::size_t>(n - j)) *
                   e.at(static_cast<std::size_t>(k)) /
                   (rb(l + j + p - k, l + j) * Rational(l + j + p - k + 1));
        return sgn_pow(p) * s;
      },
      [](const Params& a) -> IdentityValue {
        return product_integral({{ef(a[0]), ef(a[1]), ef(a[2])}});
      },
  });

  return items;
}

}  // namespace

bool IdentityItem::in_domain(const std::vector<long>& params) const {
  for (std::size_t i = 0; i < param_min.size(); ++i)
    if (params[i] < param_min[i]) return false;
  return !extra_domain || extra_domain(params);
}

const std::vector<IdentityItem>& registry() {
  static const std::vector<IdentityItem> items = make_registry();
  return items;
}

const IdentityItem& find_item(std::string_view id) {
  for (const auto& item : registry())
    if (item.id == id) return item;
  throw std::invalid_argument("unknown identity id: " + std::string(id));
}

bool is_verified_class(std::string_view id) {
  static const std::set<std::string, std::less<>> verified = {
      "thm1", "thm1_x0", "thm4_closed", "thm4_moreover",
      "thm5", "thm6",    "eq23"};
  return verified.count(id) > 0;
}

std::string IdentityResult::residual_text() const {
  if (std::holds_alternative<Rational>(residual))
    return std::get<Rational>(residual).to_string();
  return std::get<Poly>(residual).to_string();
}

namespace {

IdentityResult make_result(const IdentityItem& item, const std::vector<long>& params,
                           IdentityValue residual) {
  IdentityResult r;
  r.id = item.id;
  for (std::size_t i = 0; i < item.param_names.size(); ++i)
    r.params.emplace_back(item.param_names[i], params[i]);
  r.status = value_is_zero(residual) ? IdentityStatus::Holds : IdentityStatus::Fails;
  r.residual = std::move(residual);
  return r;
}

void require_in_domain(const IdentityItem& item, const std::vector<long>& params) {
  if (params.size() != item.param_names.size())
    throw std::invalid_argument("identity " + item.id + " expects " +
                                std::to_string(item.param_names.size()) +
                                " parameter(s)");
  if (!item.in_domain(params))
    throw std::domain_error("identity " + item.id + " " + item.domain_note);
}

}  // namespace

IdentityResult check_item(std::string_view id, const std::vector<long>& params) {
  const IdentityItem& item = find_item(id);
  require_in_domain(item, params);
  return make_result(item, params,
                     sub_values(item.lhs(params), item.rhs(params), item.kind));
}

IdentityResult check_against_oracle(std::string_view id,
                                    const std::vector<long>& params) {
  const IdentityItem& item = find_item(id);
  require_in_domain(item, params);
  if (!item.oracle)
    throw std::invalid_argument("identity " + item.id + " has no oracle mapping");
  return make_result(item, params,
                     sub_values(item.rhs(params), item.oracle(params), item.kind));
}

Rational thm6_constant(long m, long n) {
  if (m < 0 || n < 0 || m + n < 2)
    throw std::domain_error("thm6_constant requires m, n >= 0 with m + n >= 2");
  Rational c = Rational(2) * eulnum(n + m + 1) /
               (rb(n + m, n) * Rational(n + m + 1));
  return m % 2 == 0 ? -c : c;
}

}  // namespace eulerint
