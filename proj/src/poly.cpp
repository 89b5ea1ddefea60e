#include "eulerint/poly.hpp"

#include <ostream>
#include <stdexcept>

#include "eulerint/combinatorics.hpp"

namespace eulerint {

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(std::size_t deg, Rational c) {
  Poly p;
  if (!c.is_zero()) {
    p.coeffs_.assign(deg, Rational());
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c.is_zero()) return Poly();
  Poly r = p;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Rational Poly::eval(const Rational& at) const {
  Rational r;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * at + coeffs_[i];
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
  r.normalize();
  return r;
}

Poly Poly::antiderivative() const {
  if (is_zero()) return Poly();
  Poly r;
  r.coeffs_.assign(coeffs_.size() + 1, Rational());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i + 1] = coeffs_[i] / Rational(static_cast<long>(i) + 1);
  r.normalize();
  return r;
}

Rational Poly::integral01() const {
  Rational r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r += coeffs_[i] / Rational(static_cast<long>(i) + 1);
  return r;
}

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
  Poly arg(std::vector<Rational>{b, a});
  Poly r;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    r = r * arg + Poly::constant(coeffs_[i]);
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sgn() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sgn() < 0) out += '-';
    } else {
      out += c.sgn() < 0 ? " - " : " + ";
    }
    bool unit = (mag == Rational(1));
    if (i == 0) {
      out += mag.to_string();
    } else {
      if (!unit) {
        out += mag.to_string();
        out += '*';
      }
      out += 'x';
      if (i > 1) {
        out += '^';
        out += std::to_string(i);
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.to_string();
}

Poly linear_combine(const std::vector<std::pair<Rational, Poly>>& terms) {
  Poly r;
  for (const auto& [c, p] : terms) r += c * p;
  return r;
}

Poly euler_poly(std::size_t n) { return euler_poly(n, euler_numbers(n)); }

Poly euler_poly(std::size_t n, const SequenceTable& euler) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    coeffs[i] = Rational(binomial(static_cast<long>(n), static_cast<long>(i))) *
                euler.at(n - i);
  return Poly(std::move(coeffs));
}

Poly bernoulli_poly(std::size_t n) { return bernoulli_poly(n, bernoulli_numbers(n)); }

Poly bernoulli_poly(std::size_t n, const SequenceTable& bernoulli) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    coeffs[i] = Rational(binomial(static_cast<long>(n), static_cast<long>(i))) *
                bernoulli.at(n - i);
  return Poly(std::move(coeffs));
}

}  // namespace eulerint
