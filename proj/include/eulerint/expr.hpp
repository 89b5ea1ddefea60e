#ifndef EULERINT_EXPR_HPP
#define EULERINT_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eulerint/oracle.hpp"

namespace eulerint {

/// Parse failure with the byte offset of the failure and a description of
/// what was expected there; what() carries both.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& message)
      : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Parses a product expression such as "E3(x+1/2)*B2" or "E1^3".
///
///   product  := factor ("*" factor)*
///   factor   := ("E" | "B") index ("^" power)? arg?
///   arg      := "(" "x" (("+" | "-") rational)? ")"
///   rational := digits ("/" digits)?
///
/// Whitespace between tokens is ignored. Indexes and powers are capped at
/// 10000; powers must be positive and expand into repeated factors.
ProductSpec parse_product(std::string_view text);

/// Canonical text for a product; parse_product(render_product(s)) == s.
std::string render_product(const ProductSpec& spec);

}  // namespace eulerint

#endif
