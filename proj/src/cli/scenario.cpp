#include "ncp4/cli/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "ncp4/errors.hpp"

namespace ncp4::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& msg) {
  throw ScenarioError(source + ": field '" + field + "': " + msg);
}

std::string describe(const json& v) {
  std::string s = v.dump();
  return s.size() > 40 ? s.substr(0, 37) + "..." : s;
}

int get_int(const json& obj, const std::string& key, int fallback, int lo, int hi, const std::string& src) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(src, key, "expected an integer, got " + describe(v));
  const auto x = v.get<long long>();
  if (x < lo || x > hi)
    fail(src, key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(x));
  return static_cast<int>(x);
}

Mat<Rational> parse_matrix(const json& v, std::size_t d, Mode mode, const std::string& field,
                           const std::string& src) {
  if (!v.is_array() || v.size() != d) fail(src, field, "expected a " + std::to_string(d) + "x" + std::to_string(d) + " nested array");
  Mat<Rational> m = Mat<Rational>::zero(d);
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = v[i];
    const std::string rf = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != d) fail(src, rf, "expected a row of length " + std::to_string(d));
    for (std::size_t j = 0; j < d; ++j) {
      try {
        m(i, j) = parse_number(row[j], mode, rf + "[" + std::to_string(j) + "]");
      } catch (const ScenarioError& e) {
        throw ScenarioError(src + ": " + e.what());
      }
    }
  }
  return m;
}

ordered_json number_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

ordered_json matrix_json(const Mat<Rational>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(number_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring", "qdet",     "toda", "p4",       "backlund",
                                              "toda2p4", "lax", "ham", "bilinear", "all"};
  return names;
}

Rational parse_number(const json& v, Mode mode, const std::string& field) {
  if (v.is_number_integer()) return Rational(mpz_class(v.dump()));
  if (v.is_number_float()) {
    if (mode == Mode::exact)
      throw ScenarioError("field '" + field + "': exact mode needs an integer or a \"p/q\" string, got " + describe(v));
    return Rational(v.get<double>());
  }
  if (v.is_string()) {
    static const std::regex re(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?)");
    std::smatch m;
    const std::string s = v.get<std::string>();
    if (!std::regex_match(s, m, re))
      throw ScenarioError("field '" + field + "': cannot read \"" + s + "\" as an integer or p/q");
    mpz_class num(m[1].str()), den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw ScenarioError("field '" + field + "': zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  throw ScenarioError("field '" + field + "': expected a number, got " + describe(v));
}

Scenario parse_scenario_text(const std::string& text, const std::string& src) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(src + ": " + e.what());
  }
  if (!root.is_object()) throw ScenarioError(src + ": top level must be an object");

  static const std::set<std::string> known{"mode", "dim",  "order", "seed",    "alphas",    "a",     "beta2",
                                           "nmax", "mmax", "initial", "tolerance", "suites"};
  for (const auto& [k, v] : root.items())
    if (!known.count(k)) fail(src, k, "unknown field");

  Scenario s;
  if (root.contains("mode")) {
    const json& m = root.at("mode");
    if (m == "exact")
      s.mode = Mode::exact;
    else if (m == "float")
      s.mode = Mode::floating;
    else
      fail(src, "mode", "expected \"exact\" or \"float\", got " + describe(m));
  }
  s.dim = static_cast<std::size_t>(get_int(root, "dim", 2, 1, 8, src));
  s.order = get_int(root, "order", 12, 4, 64, src);
  s.nmax = get_int(root, "nmax", 5, 1, 8, src);
  s.mmax = get_int(root, "mmax", 4, 1, 8, src);
  if (root.contains("seed")) {
    const json& v = root.at("seed");
    if (!v.is_number_unsigned()) fail(src, "seed", "expected a non-negative integer, got " + describe(v));
    s.seed = v.get<std::uint64_t>();
  }

  auto number = [&](const json& v, const std::string& field) {
    try {
      return parse_number(v, s.mode, field);
    } catch (const ScenarioError& e) {
      throw ScenarioError(src + ": " + e.what());
    }
  };

  if (root.contains("alphas")) {
    const json& v = root.at("alphas");
    if (!v.is_array()) fail(src, "alphas", "expected an array of 3 numbers");
    if (v.size() != 3) fail(src, "alphas", "expected 3 entries, got " + std::to_string(v.size()));
    for (std::size_t i = 0; i < 3; ++i) s.alphas[i] = number(v[i], "alphas[" + std::to_string(i) + "]");
  }
  const Rational sum = s.alphas[0] + s.alphas[1] + s.alphas[2];
  if (sum == 0)
    s.lotka_volterra = true;
  else if (sum != 1)
    fail(src, "alphas", "entries must sum to 0 or 1, got " + sum.get_str());

  if (root.contains("a")) s.a = number(root.at("a"), "a");
  if (root.contains("beta2")) s.beta2 = number(root.at("beta2"), "beta2");

  if (root.contains("tolerance")) {
    const json& v = root.at("tolerance");
    if (!v.is_number()) fail(src, "tolerance", "expected a number");
    s.tolerance = v.get<double>();
  }
  if (s.mode == Mode::floating && !(s.tolerance > 0)) fail(src, "tolerance", "must be positive in float mode");

  if (root.contains("suites")) {
    const json& v = root.at("suites");
    if (!v.is_array() || v.empty()) fail(src, "suites", "expected a non-empty array of suite names");
    s.suites.clear();
    for (const auto& x : v) {
      if (!x.is_string()) fail(src, "suites", "expected strings");
      const auto name = x.get<std::string>();
      const auto& ok = suite_names();
      if (std::find(ok.begin(), ok.end(), name) == ok.end()) fail(src, "suites", "unknown suite \"" + name + "\"");
      s.suites.push_back(name);
    }
  }

  if (root.contains("initial")) {
    const json& in = root.at("initial");
    if (!in.is_object()) fail(src, "initial", "expected an object");
    static const std::set<std::string> keys{"kappa1", "kappa1_prime", "kappa_m1", "kappa_m1_prime", "f"};
    for (const auto& [k, v] : in.items())
      if (!keys.count(k)) fail(src, "initial." + k, "unknown field");
    auto mat = [&](const char* key, std::optional<Mat<Rational>>& out) {
      if (in.contains(key)) out = parse_matrix(in.at(key), s.dim, s.mode, std::string("initial.") + key, src);
    };
    mat("kappa1", s.initial.kappa1);
    mat("kappa1_prime", s.initial.kappa1_prime);
    mat("kappa_m1", s.initial.kappa_m1);
    mat("kappa_m1_prime", s.initial.kappa_m1_prime);
    if (s.initial.kappa1.has_value() != s.initial.kappa_m1.has_value())
      fail(src, "initial", "kappa1 and kappa_m1 must be given together");
    if (s.initial.kappa1_prime && !s.initial.kappa1) fail(src, "initial.kappa1_prime", "needs kappa1");
    if (s.initial.kappa_m1_prime && !s.initial.kappa_m1) fail(src, "initial.kappa_m1_prime", "needs kappa_m1");
    if (in.contains("f")) {
      const json& f = in.at("f");
      if (!f.is_array() || f.size() != 3) fail(src, "initial.f", "expected 3 matrices");
      std::array<Mat<Rational>, 3> fs;
      for (std::size_t i = 0; i < 3; ++i)
        fs[i] = parse_matrix(f[i], s.dim, s.mode, "initial.f[" + std::to_string(i) + "]", src);
      s.initial.f = fs;
    }
  }
  return s;
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path + ": cannot open scenario file");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_scenario_text(os.str(), path);
}

ordered_json Scenario::normalized() const {
  ordered_json j;
  j["mode"] = mode == Mode::exact ? "exact" : "float";
  j["dim"] = dim;
  j["order"] = order;
  j["seed"] = seed;
  j["alphas"] = {number_json(alphas[0]), number_json(alphas[1]), number_json(alphas[2])};
  j["lotka_volterra"] = lotka_volterra;
  j["a"] = number_json(a);
  j["beta2"] = number_json(beta2);
  j["nmax"] = nmax;
  j["mmax"] = mmax;
  ordered_json in = ordered_json::object();
  if (initial.kappa1) in["kappa1"] = matrix_json(*initial.kappa1);
  if (initial.kappa1_prime) in["kappa1_prime"] = matrix_json(*initial.kappa1_prime);
  if (initial.kappa_m1) in["kappa_m1"] = matrix_json(*initial.kappa_m1);
  if (initial.kappa_m1_prime) in["kappa_m1_prime"] = matrix_json(*initial.kappa_m1_prime);
  if (initial.f) in["f"] = {matrix_json((*initial.f)[0]), matrix_json((*initial.f)[1]), matrix_json((*initial.f)[2])};
  j["initial"] = in;
  j["tolerance"] = tolerance;
  j["suites"] = suites;
  return j;
}

}  // namespace ncp4::cli
