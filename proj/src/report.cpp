#include "fracmax/report.hpp"

#include <cmath>

namespace fracmax {

const char* to_string(ExtremumReport::Kind k) {
  return k == ExtremumReport::Kind::min ? "min" : "max";
}

const char* to_string(ExtremumReport::CaseTag t) {
  switch (t) {
    case ExtremumReport::CaseTag::sum_gt_1: return "sum_gt_1";
    case ExtremumReport::CaseTag::sum_lt_1: return "sum_lt_1";
    case ExtremumReport::CaseTag::sum_eq_1: return "sum_eq_1";
    default: return "single_order";
  }
}

nlohmann::ordered_json ExtremumReport::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["x_star"] = x_star;
  j["f_at_a"] = f_at_a;
  j["f_at_xstar"] = f_at_xstar;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["margin"] = margin;
  j["case_tag"] = to_string(case_tag);
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j["applicable"] = applicable;
  if (!note.empty()) j["note"] = note;
  return j;
}

VerificationReport VerificationReport::make(std::string principle, double extremum_value,
                                            double location_x, double location_t, double bound,
                                            double margin, double tolerance) {
  VerificationReport r;
  r.principle = std::move(principle);
  r.extremum_value = extremum_value;
  r.location_x = location_x;
  r.location_t = location_t;
  r.bound = bound;
  r.margin = margin;
  r.tolerance = tolerance;
  r.pass = margin >= -tolerance;
  return r;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["principle"] = principle;
  j["extremum_value"] = extremum_value;
  j["location_x"] = location_x;
  if (!std::isnan(location_t)) j["location_t"] = location_t;
  j["bound"] = bound;
  j["margin"] = margin;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j["applicable"] = applicable;
  if (!note.empty()) j["note"] = note;
  return j;
}

}  // namespace fracmax
