#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace ncp4::cli {

struct Record {
  std::string check_id;
  std::string paper_anchor;
  int vanishing_order = 0;
  int reliable_order = -1;
  double max_residual = 0.0;
  std::vector<double> residual_by_order;
  bool pass = false;
  double seconds = 0.0;
  std::string inputs_digest;
  /// First nonzero coefficient on failure, error text on exceptions, free notes otherwise.
  std::string detail;
};

struct Report {
  std::vector<Record> records;

  void sort();
  bool all_pass() const;
  void append(const Report& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }
};

enum class Format { json_lines, human };

nlohmann::ordered_json to_json(const Record& r);
void emit_report(const Report& report, Format format, std::ostream& out);

/// 0 iff every record passes; an empty report passes.
inline int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

}  // namespace ncp4::cli
