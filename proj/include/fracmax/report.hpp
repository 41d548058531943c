#pragma once

#include <string>

#include <json.hpp>

namespace fracmax {

/// Outcome of one extremum-inequality evaluation.
struct ExtremumReport {
  enum class Kind { min, max };
  enum class CaseTag { sum_gt_1, sum_lt_1, sum_eq_1, single_order };

  Kind kind = Kind::min;
  double x_star = 0.0;     // extremum node location
  double f_at_a = 0.0;
  double f_at_xstar = 0.0;
  double lhs = 0.0;        // operator value at x_star
  double rhs = 0.0;        // bound value
  double margin = 0.0;     // lhs-rhs for >=-type, rhs-lhs for <=-type
  CaseTag case_tag = CaseTag::sum_gt_1;
  double tolerance = 0.0;
  bool pass = false;       // pass <=> margin >= -tolerance
  bool applicable = true;  // false when the extremum sits at the left endpoint
  std::string note;

  nlohmann::ordered_json to_json() const;
};

/// Outcome of a principle check (comparison, maximum/minimum, uniqueness,
/// continuous dependence).
struct VerificationReport {
  std::string principle;
  double extremum_value = 0.0;
  double location_x = 0.0;
  double location_t = 0.0;   // NaN when the check has no time axis
  double bound = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool applicable = true;    // false => hypotheses not met, informational only
  std::string note;

  static VerificationReport make(std::string principle, double extremum_value, double location_x,
                                 double location_t, double bound, double margin, double tolerance);

  nlohmann::ordered_json to_json() const;
};

const char* to_string(ExtremumReport::Kind k);
const char* to_string(ExtremumReport::CaseTag t);

}  // namespace fracmax
