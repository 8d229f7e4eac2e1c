#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ncp4/cli/suites.hpp"
#include "ncp4/errors.hpp"

using namespace ncp4::cli;

namespace {

int emit(const Report& report, const std::string& format, const std::string& out_path) {
  const Format f = format == "human" ? Format::human : Format::json_lines;
  if (out_path.empty()) {
    emit_report(report, f, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "ncp4: cannot write " << out_path << '\n';
      return 2;
    }
    emit_report(report, f, out);
  }
  return exit_code(report);
}

Report run_all(const Scenario& sc, const std::vector<std::string>& suites, const RunOptions& opts) {
  Report report;
  for (const auto& s : suites) report.append(run_suite(sc, s, opts));
  report.sort();
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Painleve IV / Toda verification checks"};
  app.require_subcommand(1);

  std::string format = "json-lines", out_path;
  bool timing = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json-lines or human")->check(CLI::IsMember({"json-lines", "human"}));
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
    cmd->add_flag("--timing", timing, "record wall-clock seconds per check");
  };

  std::string scenario_path, suite;
  auto* run = app.add_subcommand("run", "run suites described by a scenario file");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--suite", suite, "suite id; defaults to the scenario's list")->check(CLI::IsMember(suite_names()));
  add_common(run);

  std::string demo_suite = "all", mode = "exact";
  int dim = 2, order = 12;
  std::uint64_t seed = 42;
  auto* demo = app.add_subcommand("demo", "run suites on drawn data");
  demo->add_option("--suite", demo_suite, "suite id")->check(CLI::IsMember(suite_names()));
  demo->add_option("--dim", dim, "matrix size d")->check(CLI::Range(1, 8));
  demo->add_option("--order", order, "truncation order N")->check(CLI::Range(4, 64));
  demo->add_option("--seed", seed, "random seed");
  demo->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  add_common(demo);

  CLI11_PARSE(app, argc, argv);

  RunOptions opts;
  opts.timing = timing;
  try {
    if (*run) {
      const Scenario sc = parse_scenario(scenario_path);
      const std::vector<std::string> suites = suite.empty() ? sc.suites : std::vector<std::string>{suite};
      return emit(run_all(sc, suites, opts), format, out_path);
    }
    Scenario sc;
    sc.dim = static_cast<std::size_t>(dim);
    sc.order = order;
    sc.seed = seed;
    sc.mode = mode == "float" ? Mode::floating : Mode::exact;
    sc.suites = {demo_suite};
    return emit(run_all(sc, sc.suites, opts), format, out_path);
  } catch (const ncp4::Error& e) {
    std::cerr << "ncp4: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  }
}
