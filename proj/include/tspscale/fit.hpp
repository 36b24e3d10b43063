#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tspscale {

/// Scaling-law families:
///   power_decay          y = (k / x)^alpha
///   offset_power_growth  y = ((x - gamma) / k)^alpha
///   subexp_decay         y = beta - k / psi^(x^phi)
///   exp_decay            subexp_decay with phi = 1
enum class FitForm { power_decay, offset_power_growth, subexp_decay, exp_decay };
enum class FitSpace { linear, log };

std::string_view to_string(FitForm form);
std::string_view to_string(FitSpace space);
FitForm fit_form_from_string(std::string_view name);
FitSpace fit_space_from_string(std::string_view name);

/// Log space for the power forms, linear for the asymptote forms.
FitSpace default_fit_space(FitForm form) noexcept;
int free_parameter_count(FitForm form) noexcept;

/// Unused parameters of a form are NaN.
struct FitParams {
  static constexpr double unset = std::numeric_limits<double>::quiet_NaN();
  double alpha = unset;
  double beta = unset;
  double gamma = unset;
  double psi = unset;
  double phi = unset;
  double scale_k = unset;
};

struct FitPoint {
  double x;
  double y;
};

/// Throws ValidationError outside the form's domain (x <= gamma for the
/// offset form, x <= 0 otherwise) or when a required parameter is unset.
double eval_form(FitForm form, const FitParams& params, double x);

struct FitOptions {
  std::optional<FitSpace> fit_space;  // default_fit_space(form) when unset
  int multistart_count = 64;
  double tol = 1e-10;
  int max_iterations = 2000;
  unsigned threads = 1;
};

struct FitResult {
  FitForm form;
  FitParams params;
  double sse;  // in fit space
  double r2;   // in fit space
  int n_points;
  std::vector<double> residuals;  // model - data in fit space, input order
  FitSpace fit_space;
  bool converged;  // false: best-so-far after max_iterations
  int starts;
  int best_start;
};

/// Multistart Levenberg-Marquardt on a reparameterization that enforces
/// alpha, k > 0, gamma < min x, beta > 0, psi > 1 and phi in (0, 1).
/// Deterministic; results do not depend on point order or thread count.
FitResult fit_scaling_law(FitForm form, std::span<const FitPoint> points,
                          const FitOptions& options = {});

}  // namespace tspscale
