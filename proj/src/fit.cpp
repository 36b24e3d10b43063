#include "tspscale/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "tspscale/error.hpp"
#include "tspscale/parallel.hpp"

namespace tspscale {

std::string_view to_string(FitForm form) {
  switch (form) {
    case FitForm::power_decay: return "power_decay";
    case FitForm::offset_power_growth: return "offset_power_growth";
    case FitForm::subexp_decay: return "subexp_decay";
    case FitForm::exp_decay: return "exp_decay";
  }
  return "unknown";
}

std::string_view to_string(FitSpace space) { return space == FitSpace::log ? "log" : "linear"; }

FitForm fit_form_from_string(std::string_view name) {
  if (name == "power_decay") return FitForm::power_decay;
  if (name == "offset_power_growth") return FitForm::offset_power_growth;
  if (name == "subexp_decay") return FitForm::subexp_decay;
  if (name == "exp_decay") return FitForm::exp_decay;
  throw ValidationError("unknown fit form '" + std::string(name) + "'");
}

FitSpace fit_space_from_string(std::string_view name) {
  if (name == "log") return FitSpace::log;
  if (name == "linear") return FitSpace::linear;
  throw ValidationError("unknown fit space '" + std::string(name) + "'");
}

FitSpace default_fit_space(FitForm form) noexcept {
  return (form == FitForm::power_decay || form == FitForm::offset_power_growth) ? FitSpace::log
                                                                                : FitSpace::linear;
}

int free_parameter_count(FitForm form) noexcept {
  switch (form) {
    case FitForm::power_decay: return 2;
    case FitForm::offset_power_growth: return 3;
    case FitForm::subexp_decay: return 4;
    case FitForm::exp_decay: return 3;
  }
  return 0;
}

namespace {

void require(double value, const char* name) {
  if (std::isnan(value)) {
    throw ValidationError(std::string("fit parameter '") + name + "' is required by this form");
  }
}

}  // namespace

double eval_form(FitForm form, const FitParams& p, double x) {
  switch (form) {
    case FitForm::power_decay:
      require(p.alpha, "alpha");
      require(p.scale_k, "scale_k");
      if (!(x > 0.0)) throw ValidationError("power_decay needs x > 0");
      return std::pow(p.scale_k / x, p.alpha);
    case FitForm::offset_power_growth:
      require(p.alpha, "alpha");
      require(p.gamma, "gamma");
      require(p.scale_k, "scale_k");
      if (!(x > p.gamma)) throw ValidationError("offset_power_growth needs x > gamma");
      return std::pow((x - p.gamma) / p.scale_k, p.alpha);
    case FitForm::subexp_decay:
    case FitForm::exp_decay: {
      require(p.beta, "beta");
      require(p.psi, "psi");
      require(p.scale_k, "scale_k");
      const double phi = form == FitForm::exp_decay ? 1.0 : p.phi;
      require(phi, "phi");
      if (!(x > 0.0)) throw ValidationError("decay forms need x > 0");
      return p.beta - p.scale_k * std::exp(-std::pow(x, phi) * std::log(p.psi));
    }
  }
  throw ValidationError("unknown fit form");
}

namespace {

constexpr int kMaxDim = 4;
using Theta = std::array<double, kMaxDim>;

double sigmoid(double w) noexcept {
  return w >= 0 ? 1.0 / (1.0 + std::exp(-w)) : std::exp(w) / (1.0 + std::exp(w));
}
double logit(double p) noexcept { return std::log(p / (1.0 - p)); }

// Unconstrained coordinates per form:
//   power_decay   (log alpha, log k)
//   offset        (log alpha, log(xmin - gamma), log k)
//   subexp        (log beta, log(psi - 1), logit phi, log k)
//   exp           (log beta, log(psi - 1), log k)
class Model {
 public:
  Model(FitForm form, double xmin) : form_(form), xmin_(xmin), dim_(free_parameter_count(form)) {}

  [[nodiscard]] int dim() const noexcept { return dim_; }

  /// Model value and its gradient in theta. Returns false outside the domain.
  bool eval(const Theta& t, double x, double& f, Theta& df) const noexcept {
    df.fill(0.0);
    switch (form_) {
      case FitForm::power_decay: {
        const double alpha = std::exp(t[0]);
        const double lf = alpha * (t[1] - std::log(x));
        f = std::exp(lf);
        df[0] = f * lf;
        df[1] = f * alpha;
        return std::isfinite(f);
      }
      case FitForm::offset_power_growth: {
        const double alpha = std::exp(t[0]);
        const double shift = std::exp(t[1]);
        const double u = x - xmin_ + shift;
        if (!(u > 0.0)) return false;
        const double lf = alpha * (std::log(u) - t[2]);
        f = std::exp(lf);
        df[0] = f * lf;
        df[1] = f * alpha * shift / u;
        df[2] = -f * alpha;
        return std::isfinite(f);
      }
      case FitForm::subexp_decay:
      case FitForm::exp_decay: {
        const bool sub = form_ == FitForm::subexp_decay;
        const double beta = std::exp(t[0]);
        const double ev = std::exp(t[1]);
        const double log_psi = std::log1p(ev);
        const double phi = sub ? sigmoid(t[2]) : 1.0;
        const double k = std::exp(sub ? t[3] : t[2]);
        const double xp = std::pow(x, phi);
        const double g = std::exp(-xp * log_psi);
        f = beta - k * g;
        df[0] = beta;
        df[1] = k * g * xp * ev / (1.0 + ev);
        if (sub) {
          df[2] = k * g * log_psi * xp * std::log(x) * phi * (1.0 - phi);
          df[3] = -k * g;
        } else {
          df[2] = -k * g;
        }
        return std::isfinite(f);
      }
    }
    return false;
  }

  [[nodiscard]] FitParams params(const Theta& t) const noexcept {
    FitParams p;
    switch (form_) {
      case FitForm::power_decay:
        p.alpha = std::exp(t[0]);
        p.scale_k = std::exp(t[1]);
        break;
      case FitForm::offset_power_growth:
        p.alpha = std::exp(t[0]);
        p.gamma = xmin_ - std::exp(t[1]);
        p.scale_k = std::exp(t[2]);
        break;
      case FitForm::subexp_decay:
        p.beta = std::exp(t[0]);
        p.psi = 1.0 + std::exp(t[1]);
        p.phi = sigmoid(t[2]);
        p.scale_k = std::exp(t[3]);
        break;
      case FitForm::exp_decay:
        p.beta = std::exp(t[0]);
        p.psi = 1.0 + std::exp(t[1]);
        p.phi = 1.0;
        p.scale_k = std::exp(t[2]);
        break;
    }
    return p;
  }

 private:
  FitForm form_;
  double xmin_;
  int dim_;
};

struct Problem {
  const Model* model;
  std::vector<double> x;
  std::vector<double> target;  // y or log y
  FitSpace space;

  /// Residuals and Jacobian; returns +inf sse when any point is invalid.
  double evaluate(const Theta& t, Eigen::VectorXd& r, Eigen::MatrixXd& jac) const {
    const int m = static_cast<int>(x.size());
    const int dim = model->dim();
    r.resize(m);
    jac.resize(m, dim);
    double sse = 0.0;
    for (int i = 0; i < m; ++i) {
      double f;
      Theta df;
      if (!model->eval(t, x[i], f, df)) return std::numeric_limits<double>::infinity();
      if (space == FitSpace::log) {
        if (!(f > 0.0)) return std::numeric_limits<double>::infinity();
        r[i] = std::log(f) - target[i];
        for (int c = 0; c < dim; ++c) jac(i, c) = df[c] / f;
      } else {
        r[i] = f - target[i];
        for (int c = 0; c < dim; ++c) jac(i, c) = df[c];
      }
      sse += r[i] * r[i];
    }
    return std::isfinite(sse) ? sse : std::numeric_limits<double>::infinity();
  }

  double sse(const Theta& t) const {
    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    return evaluate(t, r, jac);
  }
};

struct StartOutcome {
  Theta theta{};
  double sse = std::numeric_limits<double>::infinity();
  bool converged = false;
};

StartOutcome levenberg_marquardt(const Problem& prob, Theta theta, double tol, int max_iter) {
  const int dim = prob.model->dim();
  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  double sse = prob.evaluate(theta, r, jac);
  StartOutcome out{theta, sse, false};
  if (!std::isfinite(sse)) return out;

  double scale = 0.0;
  for (const double v : prob.target) scale += v * v;
  const double floor_sse = 1e-30 * std::max(scale, 1e-300);

  double lambda = 1e-3;
  for (int iter = 0; iter < max_iter; ++iter) {
    if (sse <= floor_sse) {
      out.converged = true;
      break;
    }
    const Eigen::MatrixXd a = jac.transpose() * jac;
    const Eigen::VectorXd g = jac.transpose() * r;
    bool accepted = false;
    while (!accepted) {
      Eigen::MatrixXd damped = a;
      for (int c = 0; c < dim; ++c) damped(c, c) += lambda * std::max(a(c, c), 1e-12);
      const Eigen::VectorXd step = damped.ldlt().solve(-g);
      Theta trial = theta;
      double step_norm = 0.0;
      double theta_norm = 0.0;
      for (int c = 0; c < dim; ++c) {
        trial[c] += step[c];
        step_norm += step[c] * step[c];
        theta_norm += theta[c] * theta[c];
      }
      Eigen::VectorXd r_trial;
      Eigen::MatrixXd jac_trial;
      const double sse_trial =
          step.allFinite() ? prob.evaluate(trial, r_trial, jac_trial)
                           : std::numeric_limits<double>::infinity();
      if (sse_trial < sse) {
        const double decrease = sse - sse_trial;
        theta = trial;
        sse = sse_trial;
        r = std::move(r_trial);
        jac = std::move(jac_trial);
        lambda = std::max(lambda / 10.0, 1e-15);
        accepted = true;
        if (decrease <= tol * sse_trial ||
            std::sqrt(step_norm) <= tol * (std::sqrt(theta_norm) + tol)) {
          out.converged = true;
        }
      } else {
        lambda *= 10.0;
        if (lambda > 1e20) {
          // No damped step reduces the objective: numerically stationary.
          out.converged = true;
          break;
        }
      }
    }
    if (out.converged) break;
  }
  out.theta = theta;
  out.sse = sse;
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> v;
  if (count <= 1) {
    v.push_back(std::sqrt(lo * hi));
    return v;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < count; ++i) v.push_back(std::exp(a + (b - a) * i / (count - 1)));
  return v;
}

// Least-squares line through (u, v): returns (slope, intercept).
std::pair<double, double> regress(const std::vector<double>& u, const std::vector<double>& v) {
  const double m = static_cast<double>(u.size());
  const double mu = std::accumulate(u.begin(), u.end(), 0.0) / m;
  const double mv = std::accumulate(v.begin(), v.end(), 0.0) / m;
  double suu = 0.0;
  double suv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suv += (u[i] - mu) * (v[i] - mv);
  }
  const double slope = suu > 0.0 ? suv / suu : 0.0;
  return {slope, mv - slope * mu};
}

std::vector<Theta> initial_guesses(FitForm form, const std::vector<double>& x,
                                   const std::vector<double>& y, int count) {
  std::vector<Theta> starts;
  const double xmin = x.front();
  const double xmax = x.back();
  const double ymax = *std::max_element(y.begin(), y.end());
  std::vector<double> logy(y.size());
  const double tiny = 1e-300;
  for (std::size_t i = 0; i < y.size(); ++i) logy[i] = std::log(std::max(y[i], tiny));

  switch (form) {
    case FitForm::power_decay: {
      // log y = alpha log k - alpha log x
      std::vector<double> logx(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) logx[i] = std::log(x[i]);
      const auto [slope, intercept] = regress(logx, logy);
      if (slope < 0.0) {
        const double alpha = -slope;
        starts.push_back({std::log(alpha), intercept / alpha, 0, 0});
      }
      for (const double alpha : log_spaced(0.02, 10.0, count - static_cast<int>(starts.size()))) {
        double b = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) b += logy[i] / alpha + logx[i];
        starts.push_back({std::log(alpha), b / static_cast<double>(x.size()), 0, 0});
      }
      break;
    }
    case FitForm::offset_power_growth: {
      double spacing = xmax - xmin;
      for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] > x[i - 1]) spacing = std::min(spacing, x[i] - x[i - 1]);
      }
      if (!(spacing > 0.0)) spacing = 1.0;
      std::vector<double> shifts{spacing};
      for (const double s : log_spaced(spacing * 1e-4, (xmax - xmin + spacing) * 100.0, count - 1)) {
        shifts.push_back(s);
      }
      for (const double shift : shifts) {
        std::vector<double> logu(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) logu[i] = std::log(x[i] - xmin + shift);
        auto [slope, intercept] = regress(logu, logy);
        if (!(slope > 1e-3)) slope = 1e-3;
        // log y = alpha log u - alpha log k
        double b = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) b += logu[i] - logy[i] / slope;
        starts.push_back({std::log(slope), std::log(shift), b / static_cast<double>(x.size()), 0});
      }
      break;
    }
    case FitForm::subexp_decay:
    case FitForm::exp_decay: {
      const bool sub = form == FitForm::subexp_decay;
      const std::vector<double> phis =
          sub ? std::vector<double>{0.5, 1.0, 0.75, 0.35, 0.25, 0.15, 0.1, 0.05}
              : std::vector<double>{1.0};
      const int per_phi = std::max(1, (count - 1 + static_cast<int>(phis.size()) - 1) /
                                          static_cast<int>(phis.size()));
      const std::vector<double> psis = log_spaced(1.02, 1000.0, per_phi);
      auto make = [&](double beta, double psi, double phi, double k) {
        beta = std::max(beta, 1e-12);
        k = std::max(k, 1e-12);
        phi = std::clamp(phi, 1e-6, 1.0 - 1e-9);
        Theta t{std::log(beta), std::log(psi - 1.0), 0, 0};
        if (sub) {
          t[2] = logit(phi);
          t[3] = std::log(k);
        } else {
          t[2] = std::log(k);
        }
        return t;
      };
      auto basis = [&](double psi, double phi) {
        std::vector<double> g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          g[i] = std::exp(-std::pow(x[i], phi) * std::log(psi));
        }
        return g;
      };
      {
        // Asymptote just above the largest observation, k by least squares.
        const double beta = ymax > 0.0 ? 1.05 * ymax : 1e-3;
        const std::vector<double> g = basis(std::exp(1.0), 0.5);
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          num += g[i] * (beta - y[i]);
          den += g[i] * g[i];
        }
        starts.push_back(make(beta, std::exp(1.0), 0.5, den > 0.0 ? num / den : 1.0));
      }
      for (const double phi : phis) {
        for (const double psi : psis) {
          if (static_cast<int>(starts.size()) >= count) break;
          // Given psi and phi the model is linear in (beta, k).
          const std::vector<double> g = basis(psi, phi);
          const double m = static_cast<double>(x.size());
          double sg = 0.0, sgg = 0.0, sy = 0.0, sgy = 0.0;
          for (std::size_t i = 0; i < x.size(); ++i) {
            sg += g[i];
            sgg += g[i] * g[i];
            sy += y[i];
            sgy += g[i] * y[i];
          }
          const double det = m * sgg - sg * sg;
          double beta = 1.05 * std::max(ymax, 1e-3);
          double k = 1.0;
          if (std::abs(det) > 1e-300) {
            beta = (sgg * sy - sg * sgy) / det;
            k = -(m * sgy - sg * sy) / det;
          }
          if (!(beta > 0.0)) beta = 1.05 * std::max(ymax, 1e-3);
          if (!(k > 0.0)) k = 1e-3;
          starts.push_back(make(beta, psi, phi, k));
        }
      }
      break;
    }
  }
  if (static_cast<int>(starts.size()) > count) starts.resize(static_cast<std::size_t>(count));
  return starts;
}

}  // namespace

FitResult fit_scaling_law(FitForm form, std::span<const FitPoint> points,
                          const FitOptions& options) {
  const int dim = free_parameter_count(form);
  const int m = static_cast<int>(points.size());
  if (m < dim + 1) {
    throw ValidationError("fit of " + std::string(to_string(form)) + " needs at least " +
                          std::to_string(dim + 1) + " points, got " + std::to_string(m));
  }
  if (options.multistart_count < 1) throw ValidationError("multistart_count must be >= 1");
  if (!(options.tol > 0.0)) throw ValidationError("tol must be > 0");
  const FitSpace space = options.fit_space.value_or(default_fit_space(form));

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    if (points[a].y != points[b].y) return points[a].y < points[b].y;
    return a < b;
  });
  std::vector<double> xs(static_cast<std::size_t>(m));
  std::vector<double> ys(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    xs[i] = points[order[i]].x;
    ys[i] = points[order[i]].y;
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw ValidationError("fit points must be finite");
    }
    if (space == FitSpace::log && !(ys[i] > 0.0)) {
      throw ValidationError("log-space fit needs y > 0");
    }
  }
  if (form != FitForm::offset_power_growth && !(xs.front() > 0.0)) {
    throw ValidationError(std::string(to_string(form)) + " needs x > 0");
  }

  const Model model(form, xs.front());
  Problem prob{&model, xs, ys, space};
  if (space == FitSpace::log) {
    for (double& t : prob.target) t = std::log(t);
  }

  const std::vector<Theta> starts = initial_guesses(form, xs, ys, options.multistart_count);
  std::vector<StartOutcome> outcomes(starts.size());
  parallel_for(starts.size(), options.threads, [&](std::size_t s) {
    outcomes[s] = levenberg_marquardt(prob, starts[s], options.tol, options.max_iterations);
  });
  std::size_t best = 0;
  for (std::size_t s = 1; s < outcomes.size(); ++s) {
    if (outcomes[s].sse < outcomes[best].sse) best = s;
  }
  const StartOutcome& win = outcomes[best];
  if (!std::isfinite(win.sse)) {
    throw NumericError("no start produced a finite objective for " +
                       std::string(to_string(form)));
  }

  FitResult out;
  out.form = form;
  out.params = model.params(win.theta);
  out.fit_space = space;
  out.n_points = m;
  out.converged = win.converged;
  out.starts = static_cast<int>(starts.size());
  out.best_start = static_cast<int>(best);
  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  out.sse = prob.evaluate(win.theta, r, jac);
  out.residuals.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) out.residuals[order[i]] = r[i];
  const double mean_t =
      std::accumulate(prob.target.begin(), prob.target.end(), 0.0) / static_cast<double>(m);
  double sst = 0.0;
  for (const double t : prob.target) sst += (t - mean_t) * (t - mean_t);
  out.r2 = sst > 0.0 ? 1.0 - out.sse / sst : (out.sse == 0.0 ? 1.0 : 0.0);
  return out;
}

}  // namespace tspscale
