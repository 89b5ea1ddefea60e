#include "eulerint/sequences.hpp"

#include "eulerint/combinatorics.hpp"

namespace eulerint {

SequenceTable euler_numbers(std::size_t max_index) {
  SequenceTable t{SequenceKind::Euler, {}};
  t.values.reserve(max_index + 1);
  t.values.emplace_back(1);
  for (std::size_t n = 1; n <= max_index; ++n) {
    Rational acc;
    for (std::size_t k = 0; k < n; ++k)
      acc += Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * t.values[k];
    t.values.push_back(acc * Rational(-1, 2));
  }
  return t;
}

SequenceTable bernoulli_numbers(std::size_t max_index) {
  SequenceTable t{SequenceKind::Bernoulli, {}};
  t.values.reserve(max_index + 1);
  t.values.emplace_back(1);
  for (std::size_t n = 1; n <= max_index; ++n) {
    Rational acc;
    for (std::size_t k = 0; k < n; ++k)
      acc += Rational(binomial(static_cast<long>(n) + 1, static_cast<long>(k))) * t.values[k];
    t.values.push_back(acc * Rational(-1, static_cast<long>(n) + 1));
  }
  return t;
}

}  // namespace eulerint
