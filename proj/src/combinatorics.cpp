#include "eulerint/combinatorics.hpp"

#include <stdexcept>

namespace eulerint {

mpz_class factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative upper index");
  if (k < 0 || k > n) return mpz_class(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational beta_int(long a, long b) {
  if (a < 1 || b < 1) throw std::domain_error("beta_int requires a >= 1 and b >= 1");
  return Rational(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1));
}

}  // namespace eulerint
