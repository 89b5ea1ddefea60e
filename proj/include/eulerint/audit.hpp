#ifndef EULERINT_AUDIT_HPP
#define EULERINT_AUDIT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerint/identities.hpp"

namespace eulerint {

/// Inclusive upper bounds for grid enumeration; parameters named n, m, p
/// range up to the matching bound and q shares the m bound. Lower bounds
/// come from each item's domain.
struct AuditRanges {
  long n_max = 8;
  long m_max = 8;
  long p_max = 8;
};

enum class Execution { Serial, Parallel };

using ParamList = std::vector<std::pair<std::string, long>>;

struct AuditSummaryEntry {
  std::string id;
  bool holds_everywhere = true;
  std::optional<ParamList> first_failure;
  /// Oracle fields are meaningful only when the item has an oracle mapping.
  bool has_oracle = false;
  bool oracle_holds_everywhere = true;
  std::optional<ParamList> first_oracle_failure;
};

struct AuditReport {
  std::string version;
  AuditRanges ranges;
  /// check_item outcomes, ordered by id then by params ascending.
  std::vector<IdentityResult> results;
  /// One entry per audited id, same id order as results.
  std::vector<AuditSummaryEntry> summary;
};

/// Runs check_item (and check_against_oracle where mapped) for every
/// requested id over its parameter grid. Grid points may be evaluated
/// concurrently; assembly order is deterministic, so equal inputs produce
/// byte-identical reports regardless of execution mode.
/// Throws std::invalid_argument for an unknown id.
AuditReport audit_grid(const std::vector<std::string>& ids,
                       const AuditRanges& ranges,
                       Execution exec = Execution::Parallel);

/// All registry ids, sorted.
std::vector<std::string> all_identity_ids();

/// Deterministic JSON rendering of a report.
std::string report_to_json(const AuditReport& report);

/// 0 when every verified-class id holds everywhere (identity and oracle),
/// 2 otherwise.
int report_exit_code(const AuditReport& report);

}  // namespace eulerint

#endif
