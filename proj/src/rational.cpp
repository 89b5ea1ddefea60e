#include "eulerint/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace eulerint {

void Rational::canonicalize() {
  if (den_ == 0) throw std::domain_error("zero denominator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::string Rational::to_string() const {
  std::string s = num_.get_str();
  if (den_ != 1) {
    s += '/';
    s += den_.get_str();
  }
  return s;
}

Rational Rational::from_string(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw std::invalid_argument("malformed rational: " + std::string(text));
  mpz_class num(std::string(text.substr(0, num_end)), 10);
  mpz_class den(1);
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw std::invalid_argument("malformed rational: " + std::string(text));
    std::size_t den_begin = num_end + 1;
    std::size_t den_end = digits(den_begin);
    if (den_end == den_begin || den_end != text.size())
      throw std::invalid_argument("malformed rational: " + std::string(text));
    den = mpz_class(std::string(text.substr(den_begin, den_end - den_begin)), 10);
  }
  return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace eulerint
