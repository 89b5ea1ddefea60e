#ifndef EULERINT_RATIONAL_HPP
#define EULERINT_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace eulerint {

/// Arbitrary-precision rational number in canonical form:
/// denominator > 0, gcd(|num|, den) == 1, and zero is 0/1.
/// Every constructor and every arithmetic operator re-canonicalizes,
/// so two equal values always have identical representations.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}
  Rational(const mpz_class& n) : num_(n), den_(1) {}
  Rational(long n, long d) : num_(n), den_(d) { canonicalize(); }
  Rational(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
    canonicalize();
  }

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sgn() const { return mpz_sgn(num_.get_mpz_t()); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

  /// "p/q" with the "/q" omitted when q == 1, e.g. "-3/4", "17", "0".
  std::string to_string() const;

  /// Parses the to_string form. Throws std::invalid_argument on malformed
  /// input and std::domain_error on a zero denominator.
  static Rational from_string(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void canonicalize();

  mpz_class num_;
  mpz_class den_;
};

}  // namespace eulerint

#endif
