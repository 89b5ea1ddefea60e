#ifndef EULERINT_ORACLE_HPP
#define EULERINT_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "eulerint/poly.hpp"
#include "eulerint/rational.hpp"
#include "eulerint/sequences.hpp"

namespace eulerint {

/// One factor of a product of shifted Euler/Bernoulli polynomials:
/// E_index(x + shift) or B_index(x + shift).
struct ProductFactor {
  SequenceKind family;
  std::size_t index;
  Rational shift;

  friend bool operator==(const ProductFactor& a, const ProductFactor& b) {
    return a.family == b.family && a.index == b.index && a.shift == b.shift;
  }
};

/// Product of one or more factors (the empty product is rejected).
struct ProductSpec {
  std::vector<ProductFactor> factors;

  friend bool operator==(const ProductSpec& a, const ProductSpec& b) {
    return a.factors == b.factors;
  }
};

/// Expands the product into a single polynomial.
/// Throws std::domain_error for an empty factor list.
Poly product_poly(const ProductSpec& spec);

/// Ground truth: the exact integral over [0,1] of the expanded product.
Rational product_integral(const ProductSpec& spec);

// ---- Derivation chains. Each routine reproduces one manipulation step by
// step, with boundary terms computed by exact evaluation rather than
// transcribed from any simplified form. All return the same quantity as an
// independent route where the chains overlap.

/// I_n(x) = integral_0^1 y^n E_n(x+y) dy via the additive expansion
/// E_n(x+y) = sum_l C(n,l) E_{n-l}(x) y^l:
/// I_n(x) = sum_{l=0}^{n} C(n,l)/(n+l+1) * E_{n-l}(x).
Poly ynEn_expand(std::size_t n);

/// The same integral via the substitution y -> 1-y and the reflection
/// E_n(x+1-y) = sum_l C(n,l) (-y)^l E_{n-l}(x+1), which brings in exact
/// Beta values:
/// I_n(x) = sum_{l=0}^{n} (-1)^l C(n,l) B(n+1, l+1) E_{n-l}(x+1).
Poly ynEn_reflect(std::size_t n);

/// Repeated integration by parts that lowers the Euler index while raising
/// the power of y:
/// integral y^{n+j} E_{n-j}(x+y) dy
///   = E_{n-j}(x+1)/(n+j+1) - (n-j)/(n+j+1) * integral y^{n+j+1} E_{n-j-1},
/// iterated from j = 0 until the E_1 integral, which is evaluated exactly.
/// Requires n >= 3 (the chain needs at least two reduction steps).
Poly ibp_ynEn_chain(std::size_t n);

/// Single integration by parts in the other direction (raising the Euler
/// index), then expanding the remaining integral through Beta values:
/// I_n(x) = E_{n+1}(x+1)/(n+1)
///          - n/(n+1) * integral_0^1 y^{n-1} E_{n+1}(x+y) dy.
/// Requires n >= 1.
Poly ibp_ynEn_forward(std::size_t n);

/// integral_0^1 E_n(x) E_m(x) dx by lowering m:
/// the boundary term [E_{n+1} E_m]_0^1 / (n+1) is evaluated exactly and the
/// chain closes at m = 0 with integral_0^1 E_k(x) dx = -2 E_{k+1}/(k+1).
/// Requires m + n >= 1.
Rational ibp_EmEn_chain(std::size_t m, std::size_t n);

/// integral_0^1 B_q(x) E_p(x) dx by raising q and lowering p; the chain
/// closes at p = 0 with the direct integral of B_q. Requires q >= 1.
Rational ibp_BqEp_chain(std::size_t q, std::size_t p);

/// integral_0^1 E_m E_n E_p dx by substituting the verified product
/// expansion of E_m E_n into Bernoulli terms plus a constant, integrating
/// each B_k E_p factor through ibp_BqEp_chain, and closing the constant
/// term with the direct Euler integral. Requires m + n >= 2.
Rational triple_via_expansion(std::size_t m, std::size_t n, std::size_t p);

/// The same triple integral as a closed triple Beta sum:
/// (-1)^p sum_{l,j,k} C(m,l) C(n,j) C(p,k) E_{m-l} E_{n-j} E_k
///                    * B(l+j+1, p-k+1).
Rational triple_beta_sum(std::size_t m, std::size_t n, std::size_t p);

/// integral_0^1 E_n E_m dx as the double Beta sum
/// sum_{l,k} C(n,l) C(m,k) (-1)^m E_l E_k B(n-l+1, m-k+1).
Rational emen_beta_sum(std::size_t m, std::size_t n);

}  // namespace eulerint

#endif
