#include "eulerint/expr.hpp"

#include <cctype>

namespace eulerint {

namespace {

constexpr long kMaxIndex = 10000;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool eat(char c) {
    if (!at_end() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

[[noreturn]] void fail(const Cursor& c, const std::string& expected) {
  std::string found = c.at_end() ? "end of input"
                                 : "'" + std::string(1, c.peek()) + "'";
  throw ParseError(c.pos, expected,
                   "parse error at byte " + std::to_string(c.pos) + ": expected " +
                       expected + ", found " + found);
}

// Unsigned decimal integer as text; the cursor must sit on a digit.
std::string lex_digits(Cursor& c, const std::string& expected) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (!c.at_end() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) fail(c, expected);
  return std::string(c.text.substr(start, c.pos - start));
}

long parse_bounded(Cursor& c, const std::string& expected) {
  std::string digits = lex_digits(c, expected);
  std::size_t at = c.pos - digits.size();
  if (digits.size() > 5 || std::stol(digits) > kMaxIndex)
    throw ParseError(at, expected,
                     "parse error at byte " + std::to_string(at) + ": " + expected +
                         " must be at most " + std::to_string(kMaxIndex));
  return std::stol(digits);
}

// rational := digits ("/" digits)?, nonnegative; any sign is consumed by the
// caller as part of the argument syntax.
Rational parse_rational(Cursor& c) {
  mpz_class num(lex_digits(c, "a rational"), 10);
  c.skip_ws();
  if (c.eat('/')) {
    std::size_t at = c.pos;
    mpz_class den(lex_digits(c, "a positive denominator"), 10);
    if (den == 0)
      throw ParseError(at, "a positive denominator",
                       "parse error at byte " + std::to_string(at) +
                           ": zero denominator");
    return Rational(std::move(num), std::move(den));
  }
  return Rational(std::move(num));
}

// factor := ("E" | "B") index ("^" power)? arg?
void parse_factor(Cursor& c, ProductSpec& spec) {
  c.skip_ws();
  SequenceKind family;
  if (c.eat('E')) {
    family = SequenceKind::Euler;
  } else if (c.eat('B')) {
    family = SequenceKind::Bernoulli;
  } else {
    fail(c, "'E' or 'B'");
  }
  c.skip_ws();
  long index = parse_bounded(c, "an index");

  long power = 1;
  c.skip_ws();
  if (c.eat('^')) {
    c.skip_ws();
    std::size_t at = c.pos;
    power = parse_bounded(c, "a power");
    if (power == 0)
      throw ParseError(at, "a positive power",
                       "parse error at byte " + std::to_string(at) +
                           ": power must be positive");
  }

  Rational shift;
  c.skip_ws();
  if (c.eat('(')) {
    c.skip_ws();
    if (!c.eat('x')) fail(c, "'x'");
    c.skip_ws();
    if (c.eat('+')) {
      shift = parse_rational(c);
    } else if (c.eat('-')) {
      shift = -parse_rational(c);
    }
    c.skip_ws();
    if (!c.eat(')')) fail(c, "')'");
  }

  for (long i = 0; i < power; ++i)
    spec.factors.push_back(
        ProductFactor{family, static_cast<std::size_t>(index), shift});
}

}  // namespace

ProductSpec parse_product(std::string_view text) {
  Cursor c{text};
  ProductSpec spec;
  parse_factor(c, spec);
  while (true) {
    c.skip_ws();
    if (c.at_end()) break;
    if (!c.eat('*')) fail(c, "'*' or end of input");
    parse_factor(c, spec);
  }
  return spec;
}

std::string render_product(const ProductSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const ProductFactor& f = spec.factors[i];
    if (i > 0) out += '*';
    out += f.family == SequenceKind::Euler ? 'E' : 'B';
    out += std::to_string(f.index);
    if (!f.shift.is_zero()) {
      out += "(x";
      out += f.shift.sgn() > 0 ? '+' : '-';
      out += (f.shift.sgn() > 0 ? f.shift : -f.shift).to_string();
      out += ')';
    }
  }
  return out;
}

}  // namespace eulerint
