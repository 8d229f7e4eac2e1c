#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncp4/ring/matrix.hpp"

namespace ncp4::cli {

enum class Mode { exact, floating };

/// Optional fixed initial data. Anything absent is drawn from the seed.
struct InitialData {
  std::optional<Mat<Rational>> kappa1, kappa1_prime, kappa_m1, kappa_m1_prime;
  std::optional<std::array<Mat<Rational>, 3>> f;
};

/// Validated run description. Numbers are held exactly; float mode converts
/// them on use. Float-mode inputs that were JSON decimals are stored as the
/// exact binary value of the double.
struct Scenario {
  Mode mode = Mode::exact;
  std::size_t dim = 2;
  int order = 12;
  std::uint64_t seed = 42;
  std::array<Rational, 3> alphas{Rational(1, 3), Rational(1, 5), Rational(7, 15)};
  bool lotka_volterra = false;
  Rational a = 1;
  Rational beta2 = -1;
  int nmax = 5;
  int mmax = 4;
  InitialData initial;
  double tolerance = 1e-9;
  std::vector<std::string> suites{"all"};

  /// Canonical form with every default filled in; the basis of input digests.
  nlohmann::ordered_json normalized() const;
};

Scenario parse_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& source = "<scenario>");

/// Integer or "p/q" string; plain JSON decimals only in float mode.
Rational parse_number(const nlohmann::json& v, Mode mode, const std::string& field);

const std::vector<std::string>& suite_names();

}  // namespace ncp4::cli
