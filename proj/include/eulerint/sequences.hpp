#ifndef EULERINT_SEQUENCES_HPP
#define EULERINT_SEQUENCES_HPP

#include <cstddef>
#include <vector>

#include "eulerint/rational.hpp"

namespace eulerint {

enum class SequenceKind { Euler, Bernoulli };

/// Immutable table of sequence values indexed 0..max_index.
struct SequenceTable {
  SequenceKind kind;
  std::vector<Rational> values;

  const Rational& at(std::size_t n) const { return values.at(n); }
  std::size_t max_index() const { return values.size() - 1; }
};

/// Euler numbers E_0..E_max from the umbral recurrence
/// (E + 1)^n + E_n = 0 (n >= 1), i.e.
/// E_n = -(1/2) * sum_{k=0}^{n-1} C(n,k) E_k, with E_0 = 1.
SequenceTable euler_numbers(std::size_t max_index);

/// Bernoulli numbers B_0..B_max from
/// B_n = -(1/(n+1)) * sum_{k=0}^{n-1} C(n+1,k) B_k, with B_0 = 1.
SequenceTable bernoulli_numbers(std::size_t max_index);

}  // namespace eulerint

#endif
