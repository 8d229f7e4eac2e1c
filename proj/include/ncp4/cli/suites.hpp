#pragma once

#include <string>

#include "ncp4/cli/report.hpp"
#include "ncp4/cli/scenario.hpp"

namespace ncp4::cli {

struct RunOptions {
  bool timing = false;
  /// 0 reads NCP4_THREADS, falling back to the hardware count.
  unsigned threads = 0;
};

/// Runs one suite (or "all"). Structured errors turn into failed records;
/// the result is sorted by check id.
Report run_suite(const Scenario& scenario, const std::string& suite, const RunOptions& opts = {});

/// Thread count from NCP4_THREADS, else the hardware count, at least 1.
unsigned thread_count_from_env();

}  // namespace ncp4::cli
