#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerint/audit.hpp"
#include "eulerint/expr.hpp"
#include "eulerint/identities.hpp"
#include "eulerint/oracle.hpp"
#include "eulerint/poly.hpp"
#include "eulerint/sequences.hpp"
#include "eulerint/version.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> ids;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t b = part.find_first_not_of(" \t");
    std::size_t e = part.find_last_not_of(" \t");
    if (b != std::string::npos) ids.push_back(part.substr(b, e - b + 1));
  }
  return ids;
}

void run_numbers(const std::string& kind, long max, const std::string& format) {
  eulerint::SequenceTable table = kind == "euler"
                                      ? eulerint::euler_numbers(static_cast<std::size_t>(max))
                                      : eulerint::bernoulli_numbers(static_cast<std::size_t>(max));
  if (format == "json") {
    ordered_json j;
    j["kind"] = kind;
    j["values"] = ordered_json::array();
    for (const auto& v : table.values) j["values"].push_back(v.to_string());
    std::cout << j.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    if (i > 0) std::cout << ", ";
    std::cout << table.values[i].to_string();
  }
  std::cout << "\n";
}

void run_show(const std::string& family, long n, const std::string& format) {
  eulerint::Poly p = family == "E" ? eulerint::euler_poly(static_cast<std::size_t>(n))
                                   : eulerint::bernoulli_poly(static_cast<std::size_t>(n));
  if (format == "json") {
    ordered_json j;
    j["coeffs"] = ordered_json::array();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
      j["coeffs"].push_back(p.coeff(i).to_string());
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << p.to_string() << "\n";
}

int run_audit(bool all, const std::string& ids_csv, const eulerint::AuditRanges& ranges,
              const std::string& report_path, const std::string& format, bool serial) {
  std::vector<std::string> ids =
      all ? eulerint::all_identity_ids() : split_ids(ids_csv);
  for (const auto& id : ids) eulerint::find_item(id);  // reject unknown ids upfront

  eulerint::AuditReport report = eulerint::audit_grid(
      ids, ranges, serial ? eulerint::Execution::Serial : eulerint::Execution::Parallel);
  std::string json_text = eulerint::report_to_json(report);

  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report path: " + report_path);
    out << json_text;
    if (!out.flush()) throw std::runtime_error("cannot write report: " + report_path);
  }

  if (format == "json") {
    std::cout << json_text;
  } else {
    for (const auto& s : report.summary) {
      std::cout << s.id << ": ";
      if (s.holds_everywhere) {
        std::cout << "HOLDS everywhere";
      } else {
        std::cout << "FAILS first at {";
        for (std::size_t i = 0; i < s.first_failure->size(); ++i) {
          if (i > 0) std::cout << ", ";
          std::cout << (*s.first_failure)[i].first << "=" << (*s.first_failure)[i].second;
        }
        std::cout << "}";
      }
      if (s.has_oracle)
        std::cout << (s.oracle_holds_everywhere ? "; oracle check passes"
                                                : "; ORACLE CHECK FAILS");
      std::cout << "\n";
    }
  }
  return eulerint::report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integrals of Euler/Bernoulli polynomial products and identity audits"};
  app.set_version_flag("--version", eulerint::kVersion);
  app.require_subcommand(1);

  auto* numbers = app.add_subcommand("numbers", "print a number sequence");
  std::string numbers_kind, numbers_format = "text";
  long numbers_max = 0;
  numbers->add_option("--kind", numbers_kind, "euler or bernoulli")
      ->required()
      ->check(CLI::IsMember({"euler", "bernoulli"}));
  numbers->add_option("--max", numbers_max, "largest index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  numbers->add_option("--format", numbers_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* show = app.add_subcommand("show", "print one polynomial");
  std::string show_family, show_format = "text";
  long show_n = 0;
  show->add_option("--family", show_family, "E or B")
      ->required()
      ->check(CLI::IsMember({"E", "B"}));
  show->add_option("--n", show_n, "index")->required()->check(CLI::NonNegativeNumber);
  show->add_option("--format", show_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* integrate = app.add_subcommand("integrate", "exact integral of a product over [0,1]");
  std::string integrate_expr;
  integrate->add_option("expr", integrate_expr, "product expression, e.g. \"E3(x+1/2)*B2\"")
      ->required();

  auto* eval = app.add_subcommand("eval", "exact value of a product at a rational point");
  std::string eval_expr, eval_at;
  eval->add_option("expr", eval_expr, "product expression")->required();
  eval->add_option("--at", eval_at, "evaluation point, e.g. 1/2")->required();

  auto* audit = app.add_subcommand("audit", "check registered identities over a grid");
  bool audit_all = false, audit_serial = false;
  std::string audit_ids, audit_report, audit_format = "text";
  long audit_max = 8, audit_n = -1, audit_m = -1, audit_p = -1;
  audit->add_flag("--all", audit_all, "audit every registered id");
  audit->add_option("--ids", audit_ids, "comma-separated id list");
  audit->add_option("--max", audit_max, "bound for n, m/q and p together")
      ->check(CLI::NonNegativeNumber);
  audit->add_option("--n-max", audit_n, "bound for n")->check(CLI::NonNegativeNumber);
  audit->add_option("--m-max", audit_m, "bound for m and q")->check(CLI::NonNegativeNumber);
  audit->add_option("--p-max", audit_p, "bound for p")->check(CLI::NonNegativeNumber);
  audit->add_option("--report", audit_report, "write the JSON report to this path");
  audit->add_option("--format", audit_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  audit->add_flag("--serial", audit_serial, "evaluate the grid without parallelism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (*numbers) {
      run_numbers(numbers_kind, numbers_max, numbers_format);
    } else if (*show) {
      run_show(show_family, show_n, show_format);
    } else if (*integrate) {
      eulerint::ProductSpec spec = eulerint::parse_product(integrate_expr);
      std::cout << eulerint::product_integral(spec).to_string() << "\n";
    } else if (*eval) {
      eulerint::ProductSpec spec = eulerint::parse_product(eval_expr);
      eulerint::Rational at = eulerint::Rational::from_string(eval_at);
      std::cout << eulerint::product_poly(spec).eval(at).to_string() << "\n";
    } else if (*audit) {
      if (audit_all == !audit_ids.empty()) {
        std::cerr << "audit requires exactly one of --all or --ids\n";
        return 1;
      }
      eulerint::AuditRanges ranges;
      ranges.n_max = audit_n >= 0 ? audit_n : audit_max;
      ranges.m_max = audit_m >= 0 ? audit_m : audit_max;
      ranges.p_max = audit_p >= 0 ? audit_p : audit_max;
      return run_audit(audit_all, audit_ids, ranges, audit_report, audit_format,
                       audit_serial);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
