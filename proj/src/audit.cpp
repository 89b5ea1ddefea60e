#include "eulerint/audit.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "eulerint/version.hpp"

namespace eulerint {

namespace {

long bound_for(const std::string& name, const AuditRanges& ranges) {
  if (name == "n") return ranges.n_max;
  if (name == "m" || name == "q") return ranges.m_max;
  if (name == "p") return ranges.p_max;
  throw std::logic_error("unmapped parameter name: " + name);
}

// All in-domain parameter tuples for one item, ascending in declared
// parameter order (first parameter outermost).
std::vector<std::vector<long>> grid_points(const IdentityItem& item,
                                           const AuditRanges& ranges) {
  std::vector<std::vector<long>> points;
  std::vector<long> current(item.param_names.size());
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == current.size()) {
      if (item.in_domain(current)) points.push_back(current);
      return;
    }
    long hi = bound_for(item.param_names[i], ranges);
    for (long v = item.param_min[i]; v <= hi; ++v) {
      current[i] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return points;
}

struct Task {
  const IdentityItem* item;
  std::vector<long> params;
};

struct TaskOutcome {
  IdentityResult result;
  bool oracle_checked = false;
  bool oracle_holds = true;
};

TaskOutcome run_task(const Task& task) {
  TaskOutcome out;
  out.result = check_item(task.item->id, task.params);
  if (task.item->oracle) {
    out.oracle_checked = true;
    IdentityResult o = check_against_oracle(task.item->id, task.params);
    out.oracle_holds = (o.status == IdentityStatus::Holds);
  }
  return out;
}

}  // namespace

std::vector<std::string> all_identity_ids() {
  std::vector<std::string> ids;
  for (const auto& item : registry()) ids.push_back(item.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

AuditReport audit_grid(const std::vector<std::string>& ids,
                       const AuditRanges& ranges, Execution exec) {
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Task> tasks;
  std::vector<std::size_t> id_task_count;
  for (const auto& id : sorted) {
    const IdentityItem& item = find_item(id);
    auto points = grid_points(item, ranges);
    id_task_count.push_back(points.size());
    for (auto& p : points) tasks.push_back(Task{&item, std::move(p)});
  }

  std::vector<TaskOutcome> outcomes(tasks.size());
  std::string first_error;
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
      try {
        outcomes[i] = run_task(tasks[i]);
      } catch (const std::exception& e) {
#pragma omp critical
        if (first_error.empty()) first_error = e.what();
      }
    }
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) outcomes[i] = run_task(tasks[i]);
  }
  if (!first_error.empty()) throw std::runtime_error(first_error);

  AuditReport report;
  report.version = kVersion;
  report.ranges = ranges;
  std::size_t offset = 0;
  for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
    AuditSummaryEntry entry;
    entry.id = sorted[idx];
    entry.has_oracle = static_cast<bool>(find_item(sorted[idx]).oracle);
    for (std::size_t i = 0; i < id_task_count[idx]; ++i) {
      TaskOutcome& out = outcomes[offset + i];
      if (out.result.status == IdentityStatus::Fails && entry.holds_everywhere) {
        entry.holds_everywhere = false;
        entry.first_failure = out.result.params;
      }
      if (out.oracle_checked && !out.oracle_holds && entry.oracle_holds_everywhere) {
        entry.oracle_holds_everywhere = false;
        entry.first_oracle_failure = out.result.params;
      }
      report.results.push_back(std::move(out.result));
    }
    report.summary.push_back(std::move(entry));
    offset += id_task_count[idx];
  }
  return report;
}

std::string report_to_json(const AuditReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["version"] = report.version;
  j["ranges"] = {{"n_max", report.ranges.n_max},
                 {"m_max", report.ranges.m_max},
                 {"p_max", report.ranges.p_max}};
  j["results"] = json::array();
  for (const auto& r : report.results) {
    json params = json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    j["results"].push_back({{"id", r.id},
                            {"params", std::move(params)},
                            {"status", r.status == IdentityStatus::Holds
                                           ? "HOLDS"
                                           : "FAILS"},
                            {"residual", r.residual_text()}});
  }
  j["summary"] = json::array();
  for (const auto& s : report.summary) {
    json entry;
    entry["id"] = s.id;
    entry["holds_everywhere"] = s.holds_everywhere;
    if (s.first_failure) {
      json params = json::object();
      for (const auto& [name, value] : *s.first_failure) params[name] = value;
      entry["first_failure"] = std::move(params);
    } else {
      entry["first_failure"] = nullptr;
    }
    if (s.has_oracle) {
      entry["oracle_holds_everywhere"] = s.oracle_holds_everywhere;
      if (s.first_oracle_failure) {
        json params = json::object();
        for (const auto& [name, value] : *s.first_oracle_failure) params[name] = value;
        entry["first_oracle_failure"] = std::move(params);
      } else {
        entry["first_oracle_failure"] = nullptr;
      }
    }
    j["summary"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

int report_exit_code(const AuditReport& report) {
  for (const auto& s : report.summary) {
    if (!is_verified_class(s.id)) continue;
    if (!s.holds_everywhere) return 2;
    if (s.has_oracle && !s.oracle_holds_everywhere) return 2;
  }
  return 0;
}

}  // namespace eulerint
