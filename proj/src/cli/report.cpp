#include "ncp4/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace ncp4::cli {

void Report::sort() {
  std::stable_sort(records.begin(), records.end(),
                   [](const Record& a, const Record& b) { return a.check_id < b.check_id; });
}

bool Report::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.pass; });
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["paper_anchor"] = r.paper_anchor;
  j["pass"] = r.pass;
  j["vanishing_order"] = r.vanishing_order;
  j["reliable_order"] = r.reliable_order;
  j["max_residual"] = r.max_residual;
  j["residual_by_order"] = r.residual_by_order;
  j["inputs_digest"] = r.inputs_digest;
  j["seconds"] = r.seconds;
  j["detail"] = r.detail;
  return j;
}

void emit_report(const Report& report, Format format, std::ostream& out) {
  for (const auto& r : report.records) {
    if (format == Format::json_lines) {
      out << to_json(r).dump() << '\n';
      continue;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "  vanishing %d/%d  max %.3g", r.vanishing_order, r.reliable_order,
                  r.max_residual);
    out << (r.pass ? "PASS " : "FAIL ") << r.check_id << buf;
    if (r.seconds > 0) out << "  " << r.seconds << "s";
    out << "\n     " << r.paper_anchor << '\n';
    if (!r.detail.empty()) out << "     " << r.detail << '\n';
  }
  if (format == Format::human && !report.records.empty()) {
    const auto passed = std::count_if(report.records.begin(), report.records.end(), [](const Record& r) { return r.pass; });
    out << passed << "/" << report.records.size() << " checks passed\n";
  }
}

}  // namespace ncp4::cli
