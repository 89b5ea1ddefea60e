#ifndef EULERINT_COMBINATORICS_HPP
#define EULERINT_COMBINATORICS_HPP

#include <gmpxx.h>

#include "eulerint/rational.hpp"

namespace eulerint {

/// n!, exact. Throws std::domain_error for negative n.
mpz_class factorial(long n);

/// Binomial coefficient C(n, k) for n >= 0, with C(n, k) == 0 whenever
/// k < 0 or k > n. The zero convention lets formally infinite binomial
/// sums truncate naturally. Throws std::domain_error for negative n.
mpz_class binomial(long n, long k);

/// Exact Beta function at positive integers:
/// beta_int(a, b) = (a-1)! (b-1)! / (a+b-1)!.
/// Throws std::domain_error unless a >= 1 and b >= 1.
Rational beta_int(long a, long b);

}  // namespace eulerint

#endif
