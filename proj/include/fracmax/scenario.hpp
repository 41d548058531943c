#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fracmax {

/// Validation failure carrying one message per offending key.
class ScenarioError : public std::exception {
 public:
  explicit ScenarioError(std::vector<std::string> errors);
  const char* what() const noexcept override { return joined_.c_str(); }
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
  std::string joined_;
};

/// One scenario from a flat, sectioned key = value file. Keys are exposed as
/// "section.key". Kind-specific validation happens at parse time.
struct Scenario {
  std::string kind;  // op | extremum | ode | diffusion | pseudo | elliptic | laplace
  std::uint64_t seed = 42;
  std::string output_dir;
  std::map<std::string, std::string> params;
  std::string source_path;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  std::string get(const std::string& key, const std::string& fallback = {}) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
};

Scenario parse_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& name);

/// Small function grammar for scenario data fields:
///   zero | const:<v> | sin:<amp>:<k> | cos:<amp>:<k> | bump:<amp> |
///   poly:<c0>,<c1>,... | rand_trig:<amp>:<kmax>:<seed>
/// sin/cos/bump act on the normalized coordinate xi = (x-lo)/(hi-lo).
std::function<double(double)> parse_function_spec(const std::string& spec, double lo, double hi);

}  // namespace fracmax
