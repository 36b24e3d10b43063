#include "tspscale/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tspscale/error.hpp"

namespace tspscale {

double analytic::mean_edge_2d() noexcept {
  const double r2 = std::numbers::sqrt2;
  return (2.0 + r2 + 5.0 * std::log(1.0 + r2)) / 15.0;
}

AnalyticReport analytic_constants(int n, int d) {
  if (n < 3) throw ValidationError("analytic constants need n >= 3, got " + std::to_string(n));
  if (d < 1) throw ValidationError("analytic constants need d >= 1, got " + std::to_string(d));
  using namespace analytic;
  const double nn = n;
  const double mu = mean_edge_2d();
  const double xi_sq = kEmpiricalXi2d * kEmpiricalXi2d;
  // Per edge Var -> sigma^2 / (4 mu) and neighbouring-edge Cov -> phi^2 / (4 mu),
  // so the tour variance tends to n (7/180 + 2/180) / (4/6) = 3n/40.
  return AnalyticReport{n,
                        d,
                        mu,
                        nn * mu,
                        nn * xi_sq,
                        true,
                        xi_sq,
                        nn * std::sqrt(d * kMeanSquaredAxisGap),
                        nn * std::sqrt(kMeanSquaredAxisGap),
                        3.0 * nn / 40.0};
}

}  // namespace tspscale
