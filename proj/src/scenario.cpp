#include "fracmax/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "fracmax/families.hpp"
#include "fracmax/rng.hpp"

namespace fracmax {

ScenarioError::ScenarioError(std::vector<std::string> errors) : errors_(std::move(errors)) {
  std::ostringstream os;
  os << "scenario validation failed:";
  for (const auto& e : errors_) os << "\n  - " << e;
  joined_ = os.str();
}

std::string Scenario::get(const std::string& key, const std::string& fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double Scenario::get_double(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  return std::stod(it->second);
}

int Scenario::get_int(const std::string& key, int fallback) const {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  return std::stoi(it->second);
}

bool Scenario::get_bool(const std::string& key, bool fallback) const {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (it->second == "true" || it->second == "1") return true;
  if (it->second == "false" || it->second == "0") return false;
  throw ScenarioError({"key '" + key + "': expected true/false, got '" + it->second + "'"});
}

namespace {

struct KeySpec {
  const char* name;
  enum Type { kString, kDouble, kInt, kBool } type = kString;
};

// section.key catalogs per kind. A key listed for a kind may appear; anything
// else is rejected with its line number.
const std::vector<KeySpec> kCommonKeys = {
    {"scenario.kind", KeySpec::kString},   {"scenario.seed", KeySpec::kInt},
    {"scenario.out", KeySpec::kString},    {"scenario.label", KeySpec::kString},
    {"checks.tol_scale", KeySpec::kDouble}};

const std::map<std::string, std::vector<KeySpec>> kKindKeys = {
    {"op",
     {{"op.input", KeySpec::kString},
      {"op.operator", KeySpec::kString},
      {"op.output", KeySpec::kString},
      {"orders.alpha", KeySpec::kDouble},
      {"orders.beta", KeySpec::kDouble},
      {"orders.delta", KeySpec::kDouble}}},
    {"extremum",
     {{"grid.nx", KeySpec::kInt},
      {"orders.alpha", KeySpec::kDouble},
      {"orders.beta", KeySpec::kDouble},
      {"problem.f", KeySpec::kString},
      {"problem.kind", KeySpec::kString},  // min | max | caputo_max | rl_max | order12
      {"batch.cases", KeySpec::kInt}}},
    {"ode",
     {{"grid.a", KeySpec::kDouble},
      {"grid.b", KeySpec::kDouble},
      {"grid.nx", KeySpec::kInt},
      {"orders.alpha", KeySpec::kDouble},
      {"orders.beta", KeySpec::kDouble},
      {"problem.q", KeySpec::kString},
      {"problem.f", KeySpec::kString},
      {"problem.u_a", KeySpec::kDouble},
      {"problem.v_a", KeySpec::kDouble},
      {"problem.class_consistent_ua", KeySpec::kBool},
      {"batch.cases", KeySpec::kInt},
      {"batch.theorem", KeySpec::kString}}},  // sign | comparison | sandwich
    {"diffusion",
     {{"grid.a", KeySpec::kDouble},
      {"grid.b", KeySpec::kDouble},
      {"grid.nx", KeySpec::kInt},
      {"grid.T", KeySpec::kDouble},
      {"grid.nt", KeySpec::kInt},
      {"orders.alpha", KeySpec::kDouble},
      {"orders.beta1", KeySpec::kDouble},
      {"orders.beta2", KeySpec::kDouble},
      {"problem.nu", KeySpec::kDouble},
      {"problem.F", KeySpec::kString},
      {"problem.phi", KeySpec::kString},
      {"problem.psi_a", KeySpec::kString},
      {"problem.psi_b", KeySpec::kString},
      {"checks.min_principle", KeySpec::kBool},
      {"checks.max_principle", KeySpec::kBool},
      {"batch.cases", KeySpec::kInt},
      {"batch.theorem", KeySpec::kString}}},
    {"pseudo",
     {{"grid.a", KeySpec::kDouble},
      {"grid.b", KeySpec::kDouble},
      {"grid.nx", KeySpec::kInt},
      {"grid.T", KeySpec::kDouble},
      {"grid.nt", KeySpec::kInt},
      {"orders.alpha", KeySpec::kDouble},
      {"orders.beta1", KeySpec::kDouble},
      {"orders.beta2", KeySpec::kDouble},
      {"problem.nu", KeySpec::kDouble},
      {"problem.F", KeySpec::kString},
      {"problem.phi", KeySpec::kString},
      {"problem.psi1", KeySpec::kString},
      {"problem.psi2", KeySpec::kString},
      {"batch.cases", KeySpec::kInt}}},
    {"elliptic",
     {{"grid.dims", KeySpec::kInt},
      {"grid.a0", KeySpec::kDouble},
      {"grid.b0", KeySpec::kDouble},
      {"grid.n0", KeySpec::kInt},
      {"grid.a1", KeySpec::kDouble},
      {"grid.b1", KeySpec::kDouble},
      {"grid.n1", KeySpec::kInt},
      {"orders.alpha", KeySpec::kDouble},
      {"orders.beta", KeySpec::kDouble},
      {"orders.gamma", KeySpec::kDouble},
      {"problem.a0", KeySpec::kString},
      {"problem.a1", KeySpec::kString},
      {"problem.b0", KeySpec::kString},
      {"problem.b1", KeySpec::kString},
      {"problem.c0", KeySpec::kString},
      {"problem.c1", KeySpec::kString},
      {"problem.d", KeySpec::kString},
      {"problem.F", KeySpec::kString},
      {"problem.phi", KeySpec::kString},
      {"batch.cases", KeySpec::kInt}}},
    {"laplace",
     {{"grid.a", KeySpec::kDouble},
      {"grid.b", KeySpec::kDouble},
      {"grid.nx", KeySpec::kInt},
      {"grid.y_lo", KeySpec::kDouble},
      {"grid.y_hi", KeySpec::kDouble},
      {"grid.ny", KeySpec::kInt},
      {"orders.alpha", KeySpec::kDouble},
      {"orders.beta", KeySpec::kDouble},
      {"orders.delta", KeySpec::kDouble},
      {"problem.f", KeySpec::kString},
      {"problem.phi1", KeySpec::kString},
      {"problem.phi2", KeySpec::kString},
      {"batch.cases", KeySpec::kInt}}},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parses_as_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    (void)std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

bool parses_as_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    (void)std::stoll(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

void check_constraints(const Scenario& sc, std::vector<std::string>& errors) {
  auto in_range = [&](const std::string& key, double lo, double hi, bool lo_open, bool hi_open,
                      const char* what) {
    if (!sc.has(key)) return;
    const double v = std::stod(sc.params.at(key));
    const bool ok = (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi);
    if (!ok) {
      std::ostringstream os;
      os << "key '" << key << "': value " << v << " violates the constraint " << what;
      errors.push_back(os.str());
    }
  };

  if (sc.kind == "extremum") {
    const bool order12 = sc.get("problem.kind") == "order12";
    if (order12) {
      in_range("orders.alpha", 1.0, 2.0, true, true, "alpha in (1,2)");
    } else {
      in_range("orders.alpha", 0.0, 1.0, true, true, "alpha in (0,1)");
      in_range("orders.beta", 0.0, 1.0, true, true, "beta in (0,1)");
    }
  } else if (sc.kind == "ode") {
    in_range("orders.alpha", 0.0, 1.0, true, false, "alpha in (0,1]");
    in_range("orders.beta", 0.0, 1.0, true, false, "beta in (0,1]");
  } else if (sc.kind == "diffusion" || sc.kind == "pseudo") {
    in_range("orders.alpha", 0.0, 1.0, true, false, "alpha in (0,1]");
    in_range("orders.beta1", 0.0, 1.0, true, false, "beta1 in (0,1]");
    in_range("orders.beta2", 0.0, 1.0, true, false, "beta2 in (0,1]");
    if (sc.has("orders.beta1") && sc.has("orders.beta2")) {
      const double s = std::stod(sc.params.at("orders.beta1")) + std::stod(sc.params.at("orders.beta2"));
      if (!(s > 1.0) || !(s <= 2.0))
        errors.push_back("keys 'orders.beta1'/'orders.beta2': require 1 < beta1 + beta2 <= 2");
    }
    in_range("problem.nu", 0.0, 1e300, true, true, "nu > 0");
  } else if (sc.kind == "elliptic") {
    in_range("orders.alpha", 0.0, 1.0, true, false, "alpha in (0,1]");
    in_range("orders.beta", 0.0, 1.0, true, false, "beta in (0,1]");
    in_range("orders.gamma", 0.0, 1.0, true, false, "gamma in (0,1]");
    if (sc.has("grid.dims")) {
      const int d = std::stoi(sc.params.at("grid.dims"));
      if (d != 1 && d != 2) errors.push_back("key 'grid.dims': must be 1 or 2");
    }
  } else if (sc.kind == "laplace") {
    in_range("orders.alpha", 0.0, 1.0, true, false, "alpha in (0,1]");
    in_range("orders.beta", 0.0, 1.0, true, false, "beta in (0,1]");
    in_range("orders.delta", 0.0, 1.0, true, true, "delta in (0,1)");
  }
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& name) {
  std::vector<std::string> errors;
  Scenario sc;
  sc.source_path = name;

  std::istringstream is(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        errors.push_back("line " + std::to_string(lineno) + ": malformed section header '" + t + "'");
        continue;
      }
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(lineno) + ": expected 'key = value', got '" + t + "'");
      continue;
    }
    if (section.empty()) {
      errors.push_back("line " + std::to_string(lineno) + ": key outside any [section]");
      continue;
    }
    const std::string key = section + "." + trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (sc.params.count(key))
      errors.push_back("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    sc.params[key] = value;

    // Key-level validation against the catalog.
    const KeySpec* spec = nullptr;
    for (const auto& k : kCommonKeys)
      if (key == k.name) spec = &k;
    if (!spec) {
      // kind may not be known yet on the first pass; re-validated below.
      continue;
    }
    if (spec->type == KeySpec::kDouble && !parses_as_double(value))
      errors.push_back("line " + std::to_string(lineno) + ": key '" + key +
                       "' expects a number, got '" + value + "'");
    if (spec->type == KeySpec::kInt && !parses_as_int(value))
      errors.push_back("line " + std::to_string(lineno) + ": key '" + key +
                       "' expects an integer, got '" + value + "'");
  }

  sc.kind = sc.get("scenario.kind");
  if (sc.kind.empty()) {
    errors.push_back("missing required key 'scenario.kind'");
    throw ScenarioError(std::move(errors));
  }
  const auto kit = kKindKeys.find(sc.kind);
  if (kit == kKindKeys.end()) {
    errors.push_back("key 'scenario.kind': unknown kind '" + sc.kind + "'");
    throw ScenarioError(std::move(errors));
  }

  // Unknown keys and type mismatches for the kind-specific catalog.
  for (const auto& [key, value] : sc.params) {
    const KeySpec* spec = nullptr;
    for (const auto& k : kCommonKeys)
      if (key == k.name) spec = &k;
    for (const auto& k : kit->second)
      if (key == k.name) spec = &k;
    if (!spec) {
      errors.push_back("unknown key '" + key + "' for kind '" + sc.kind + "'");
      continue;
    }
    if (spec->type == KeySpec::kDouble && !parses_as_double(value))
      errors.push_back("key '" + key + "' expects a number, got '" + value + "'");
    if (spec->type == KeySpec::kInt && !parses_as_int(value))
      errors.push_back("key '" + key + "' expects an integer, got '" + value + "'");
    if (spec->type == KeySpec::kBool && value != "true" && value != "false" && value != "0" &&
        value != "1")
      errors.push_back("key '" + key + "' expects true/false, got '" + value + "'");
  }

  if (sc.has("scenario.seed")) sc.seed = static_cast<std::uint64_t>(std::stoll(sc.params.at("scenario.seed")));
  sc.output_dir = sc.get("scenario.out");

  check_constraints(sc, errors);
  if (!errors.empty()) throw ScenarioError(std::move(errors));
  return sc;
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ScenarioError({"cannot open scenario file '" + path + "'"});
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return parse_scenario_text(text, path);
}

std::function<double(double)> parse_function_spec(const std::string& spec, double lo, double hi) {
  const double span = hi - lo;
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const auto p = s.find(sep, start);
      parts.push_back(s.substr(start, p - start));
      if (p == std::string::npos) break;
      start = p + 1;
    }
    return parts;
  };

  if (spec.empty() || spec == "zero") return [](double) { return 0.0; };
  const auto parts = split(spec, ':');
  const std::string& head = parts[0];
  try {
    if (head == "const" && parts.size() == 2) {
      const double c = std::stod(parts[1]);
      return [c](double) { return c; };
    }
    if ((head == "sin" || head == "cos") && parts.size() == 3) {
      const double amp = std::stod(parts[1]);
      const double k = std::stod(parts[2]);
      const bool is_sin = head == "sin";
      return [=](double x) {
        const double xi = (x - lo) / span;
        constexpr double pi = 3.14159265358979323846;
        return is_sin ? amp * std::sin(k * pi * xi) : amp * std::cos(k * pi * xi);
      };
    }
    if (head == "bump" && parts.size() == 2) {
      const double amp = std::stod(parts[1]);
      return [=](double x) {
        const double xi = (x - lo) / span;
        return amp * xi * (1.0 - xi);
      };
    }
    if (head == "poly" && parts.size() == 2) {
      std::vector<double> coef;
      for (const auto& c : split(parts[1], ',')) coef.push_back(std::stod(c));
      return [coef](double x) {
        double s = 0.0;
        for (std::size_t i = coef.size(); i-- > 0;) s = s * x + coef[i];
        return s;
      };
    }
    if (head == "rand_trig" && parts.size() == 4) {
      const double amp = std::stod(parts[1]);
      const int kmax = std::stoi(parts[2]);
      Xoshiro256ss rng(static_cast<std::uint64_t>(std::stoll(parts[3])));
      auto poly = std::make_shared<TrigPoly>(TrigPoly::random(rng, kmax));
      return [=](double x) { return amp * poly->eval((x - lo) / span); };
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (...) {
    throw ScenarioError({"malformed function spec '" + spec + "'"});
  }
  throw ScenarioError({"unknown function spec '" + spec + "'"});
}

}  // namespace fracmax
