#include "fracmax/specfun.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fracmax {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtTwoPi = 2.5066282746310005024;

// Lanczos coefficients for g = 7 (Godfrey's set). Good to ~1e-13 relative
// over the positive real axis, which covers the 1e-12 budget on [0.1, 50].
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}
}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma_fn: argument must be finite");
  if (x <= 0.0 && x == std::floor(x)) {
    std::ostringstream os;
    os << "gamma_fn: pole at x = " << x;
    throw std::domain_error(os.str());
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double mittag_leffler(const MLParams& p, double z) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0))
    throw std::domain_error("mittag_leffler: requires alpha > 0 and beta > 0");
  if (!(p.series_tol > 0.0)) throw std::domain_error("mittag_leffler: series_tol must be > 0");
  if (p.max_terms < 1) throw std::domain_error("mittag_leffler: max_terms must be >= 1");
  if (!(std::abs(z) <= 50.0))
    throw std::domain_error("mittag_leffler: |z| <= 50 is the supported argument range");

  double sum = 0.0;
  double zk = 1.0;  // z^k
  for (int k = 0; k < p.max_terms; ++k) {
    const double term = zk / gamma_fn(p.alpha * static_cast<double>(k) + p.beta);
    sum += term;
    if (std::abs(term) < p.series_tol) return sum;
    zk *= z;
  }
  std::ostringstream os;
  os << "mittag_leffler: series did not reach |term| < " << p.series_tol << " within "
     << p.max_terms << " terms (partial sum " << sum << ", |z| = " << std::abs(z) << ")";
  throw std::runtime_error(os.str());
}

double power_rule_rl(double beta_exp, double alpha, double t_minus_a) {
  if (!(alpha > 0.0) || !(beta_exp > alpha))
    throw std::domain_error("power_rule_rl: requires beta_exp > alpha > 0");
  if (!(t_minus_a >= 0.0)) throw std::domain_error("power_rule_rl: requires t - a >= 0");
  const double expo = beta_exp - alpha - 1.0;
  return gamma_fn(beta_exp) / gamma_fn(beta_exp - alpha) * std::pow(t_minus_a, expo);
}

}  // namespace fracmax
