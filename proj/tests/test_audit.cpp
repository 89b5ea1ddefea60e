#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "eulerint/audit.hpp"

using eulerint::all_identity_ids;
using eulerint::audit_grid;
using eulerint::AuditRanges;
using eulerint::AuditReport;
using eulerint::Execution;
using eulerint::report_exit_code;
using eulerint::report_to_json;

TEST_CASE("id list") {
  auto ids = all_identity_ids();
  CHECK(ids.size() == 17);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(ids.front() == "eq17");
  CHECK(ids.back() == "thm6");
}

TEST_CASE("serial and parallel runs are byte-identical") {
  AuditRanges ranges{4, 4, 4};
  AuditReport serial = audit_grid(all_identity_ids(), ranges, Execution::Serial);
  AuditReport parallel = audit_grid(all_identity_ids(), ranges, Execution::Parallel);
  CHECK(report_to_json(serial) == report_to_json(parallel));
  AuditReport again = audit_grid(all_identity_ids(), ranges, Execution::Parallel);
  CHECK(report_to_json(parallel) == report_to_json(again));
}

TEST_CASE("grid domains") {
  AuditRanges ranges{4, 4, 4};
  AuditReport report = audit_grid(all_identity_ids(), ranges);
  auto count = [&](const std::string& id) {
    return std::count_if(report.results.begin(), report.results.end(),
                         [&](const auto& r) { return r.id == id; });
  };
  CHECK(count("thm1") == 5);      // n = 0..4
  CHECK(count("eq2") == 4);       // n = 1..4
  CHECK(count("thm2_printed") == 2);  // n = 3..4
  CHECK(count("thm6") == 22);     // 25 pairs in 0..4^2 minus the 3 with m+n < 2
  CHECK(count("thm4_closed") == 20);  // m = 1..4, n = 0..4
  CHECK(count("eq29_printed") == 20); // q = 1..4, p = 0..4
  CHECK(count("eq33") == 64);     // m,n,p = 1..4
  CHECK(report.summary.size() == 17);

  // results ordered by id, then ascending in declared parameter order
  CHECK(report.results.front().id == "eq17");
  CHECK(report.results.front().params ==
        std::vector<std::pair<std::string, long>>{{"n", 1}});
  CHECK(std::is_sorted(report.results.begin(), report.results.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("summary records failures and oracle outcomes") {
  AuditRanges ranges{4, 4, 4};
  AuditReport report = audit_grid(all_identity_ids(), ranges);
  auto entry = [&](const std::string& id) {
    for (const auto& s : report.summary)
      if (s.id == id) return s;
    throw std::logic_error("missing summary entry");
  };

  CHECK(entry("eq2").holds_everywhere == false);
  CHECK(entry("eq2").first_failure ==
        std::vector<std::pair<std::string, long>>{{"n", 1}});
  CHECK(entry("eq2").has_oracle == false);

  CHECK(entry("thm1").holds_everywhere == true);
  CHECK(!entry("thm1").first_failure.has_value());
  CHECK(entry("thm1").has_oracle == true);
  CHECK(entry("thm1").oracle_holds_everywhere == true);

  CHECK(entry("eq22").holds_everywhere == false);
  CHECK(entry("eq22").first_failure ==
        std::vector<std::pair<std::string, long>>{{"m", 1}, {"n", 0}});

  CHECK(entry("eq29_printed").holds_everywhere == false);
  CHECK(entry("eq29_printed").first_failure ==
        std::vector<std::pair<std::string, long>>{{"q", 1}, {"p", 0}});

  for (const char* id :
       {"thm1", "thm1_x0", "thm4_closed", "thm4_moreover", "thm5", "thm6", "eq23"}) {
    CHECK(entry(id).holds_everywhere == true);
    CHECK(entry(id).oracle_holds_everywhere == true);
  }
}

TEST_CASE("report JSON structure") {
  AuditRanges ranges{3, 3, 3};
  AuditReport report = audit_grid({"thm1", "eq2"}, ranges);
  auto j = nlohmann::json::parse(report_to_json(report));
  CHECK(j["version"].is_string());
  CHECK(j["ranges"]["n_max"] == 3);
  CHECK(j["ranges"]["m_max"] == 3);
  CHECK(j["ranges"]["p_max"] == 3);
  CHECK(j["results"].is_array());
  CHECK(j["results"].size() == 3 + 4);  // eq2 n=1..3, thm1 n=0..3
  CHECK(j["results"][0]["id"] == "eq2");
  CHECK(j["results"][0]["params"]["n"] == 1);
  CHECK(j["results"][0]["status"] == "FAILS");
  CHECK(j["results"][0]["residual"] == "-1");
  CHECK(j["summary"].size() == 2);
  CHECK(j["summary"][0]["id"] == "eq2");
  CHECK(j["summary"][0]["holds_everywhere"] == false);
  CHECK(j["summary"][0]["first_failure"]["n"] == 1);
  CHECK(!j["summary"][0].contains("oracle_holds_everywhere"));
  CHECK(j["summary"][1]["id"] == "thm1");
  CHECK(j["summary"][1]["first_failure"].is_null());
  CHECK(j["summary"][1]["oracle_holds_everywhere"] == true);
  CHECK(j["summary"][1]["first_oracle_failure"].is_null());
}

TEST_CASE("duplicate and unknown ids") {
  AuditRanges ranges{2, 2, 2};
  AuditReport report = audit_grid({"thm1", "thm1"}, ranges);
  CHECK(report.summary.size() == 1);
  CHECK_THROWS_AS(audit_grid({"nosuch"}, ranges), std::invalid_argument);
}

TEST_CASE("exit code logic") {
  AuditRanges ranges{4, 4, 4};
  AuditReport report = audit_grid(all_identity_ids(), ranges);
  CHECK(report_exit_code(report) == 0);  // audit-class failures alone do not fail the run

  AuditReport doctored = report;
  for (auto& s : doctored.summary)
    if (s.id == "thm5") {
      s.holds_everywhere = false;
      eulerint::ParamList where{{"m", 1}, {"n", 1}};
      s.first_failure = where;
    }
  CHECK(report_exit_code(doctored) == 2);

  AuditReport doctored2 = report;
  for (auto& s : doctored2.summary)
    if (s.id == "eq23") s.oracle_holds_everywhere = false;
  CHECK(report_exit_code(doctored2) == 2);
}
