#pragma once

namespace tspscale {

/// Closed-form landmarks for random tours on uniform unit-hypercube instances.
namespace analytic {

/// Expected distance between two uniform points in the unit square,
/// (2 + sqrt2 + 5 ln(1 + sqrt2)) / 15.
double mean_edge_2d() noexcept;

/// E[(x - y)^2] for x, y ~ U[0,1]: 1/6.
inline constexpr double kMeanSquaredAxisGap = 1.0 / 6.0;
/// Var[(x - y)^2]: 7/180.
inline constexpr double kVarSquaredAxisGap = 7.0 / 180.0;
/// Cov[(x - y)^2, (y - z)^2] for a shared middle coordinate: 1/180.
inline constexpr double kCovSquaredAxisGap = 1.0 / 180.0;

/// Fitted (not derived) constant: random tour variance in 2D is about
/// n * 0.276^2.
inline constexpr double kEmpiricalXi2d = 0.276;

}  // namespace analytic

struct AnalyticReport {
  int n;
  int d;
  double mu_edge_2d;
  double random_mean_2d;          // n * mu_edge_2d
  double random_var_2d;           // n * xi^2, xi empirical
  bool random_var_2d_empirical;   // always true
  double xi_sq;
  double random_mean_upper;       // n * sqrt(d / 6)
  double random_mean_limit_coeff; // lim E[L] / sqrt(d) = n / sqrt(6)
  double random_var_limit;        // lim Var[L] = 3n/40
};

/// Throws ValidationError for n < 3 or d < 1.
AnalyticReport analytic_constants(int n, int d);

}  // namespace tspscale
