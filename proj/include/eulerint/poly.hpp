#ifndef EULERINT_POLY_HPP
#define EULERINT_POLY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eulerint/rational.hpp"
#include "eulerint/sequences.hpp"

namespace eulerint {

/// Dense univariate polynomial over Rational. Coefficients are stored
/// constant-first (coeffs[i] is the coefficient of x^i) with no trailing
/// zeros, so equal polynomials have identical representations; the zero
/// polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(Rational c);
  /// c * x^deg.
  static Poly monomial(std::size_t deg, Rational c);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational();
  }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  Poly operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact value at x = at, by Horner's rule.
  Rational eval(const Rational& at) const;
  /// Formal derivative.
  Poly derivative() const;
  /// Antiderivative with zero constant term.
  Poly antiderivative() const;
  /// Integral over [0, 1].
  Rational integral01() const;
  /// P(x + c).
  Poly shift(const Rational& c) const { return compose_affine(Rational(1), c); }
  /// P(a*x + b), exact composition.
  Poly compose_affine(const Rational& a, const Rational& b) const;

  /// Human-readable text, highest degree first, explicit '*', e.g.
  /// "x^3 - 3/2*x^2 + 1/4"; the zero polynomial prints as "0".
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// Sum of c_i * p_i over the given terms; an empty list gives zero.
Poly linear_combine(const std::vector<std::pair<Rational, Poly>>& terms);

/// Euler polynomial E_n(x) = sum_{k=0}^{n} C(n,k) E_k x^{n-k}.
Poly euler_poly(std::size_t n);
Poly euler_poly(std::size_t n, const SequenceTable& euler);

/// Bernoulli polynomial B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^{n-k}.
Poly bernoulli_poly(std::size_t n);
Poly bernoulli_poly(std::size_t n, const SequenceTable& bernoulli);

}  // namespace eulerint

#endif
