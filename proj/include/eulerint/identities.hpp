#ifndef EULERINT_IDENTITIES_HPP
#define EULERINT_IDENTITIES_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "eulerint/poly.hpp"
#include "eulerint/rational.hpp"

namespace eulerint {

/// An identity side evaluates to either a polynomial in x or a single
/// rational, depending on the item.
using IdentityValue = std::variant<Rational, Poly>;

enum class IdentityKind { RationalValue, PolyInX };

enum class IdentityStatus { Holds, Fails };

/// One registered printed identity. Both sides are transcribed literally
/// from their source display; an optional oracle evaluator gives an
/// independently computed ground truth for the same quantity.
struct IdentityItem {
  std::string id;
  std::string description;
  std::vector<std::string> param_names;
  /// Per-parameter lower bounds for grid enumeration.
  std::vector<long> param_min;
  IdentityKind kind;
  /// Extra domain restriction beyond the per-parameter bounds (may be null).
  std::function<bool(const std::vector<long>&)> extra_domain;
  std::string domain_note;
  std::function<IdentityValue(const std::vector<long>&)> lhs;
  std::function<IdentityValue(const std::vector<long>&)> rhs;
  /// Null when the item has no oracle mapping.
  std::function<IdentityValue(const std::vector<long>&)> oracle;

  bool in_domain(const std::vector<long>& params) const;
};

/// All registered identities, in registration order. The set of ids is a
/// fixed public contract:
///   eq2, thm1, thm1_x0, thm2_printed, thm2_plus, thm2_x0, thm3, thm3_x0,
///   thm4_closed, thm4_moreover, thm5, thm6, eq17, eq22, eq23,
///   eq29_printed, eq33.
const std::vector<IdentityItem>& registry();

/// Throws std::invalid_argument for an unknown id.
const IdentityItem& find_item(std::string_view id);

/// Ids whose audited displays are required to hold everywhere.
bool is_verified_class(std::string_view id);

struct IdentityResult {
  std::string id;
  std::vector<std::pair<std::string, long>> params;
  IdentityStatus status;
  /// lhs - rhs for check_item, rhs - oracle for check_against_oracle;
  /// Holds means the residual is exactly zero.
  IdentityValue residual;

  std::string residual_text() const;
};

/// Evaluates lhs - rhs exactly. Throws std::invalid_argument for an unknown
/// id and std::domain_error (naming the restriction) for out-of-domain
/// parameters.
IdentityResult check_item(std::string_view id, const std::vector<long>& params);

/// Evaluates rhs - oracle exactly. Additionally throws
/// std::invalid_argument when the id has no oracle mapping.
IdentityResult check_against_oracle(std::string_view id,
                                    const std::vector<long>& params);

/// The constant term of the E_m E_n product expansion:
/// 2 (-1)^{m+1} E_{n+m+1} / (C(n+m,n) (n+m+1)). Requires m + n >= 2.
Rational thm6_constant(long m, long n);

}  // namespace eulerint

#endif
