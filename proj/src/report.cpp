#include "tspscale/report.hpp"

#include <cmath>
#include <string>

#include "tspscale/error.hpp"

namespace tspscale {

using json = nlohmann::ordered_json;

json to_json(const CostSummary& s) {
  json j;
  j["count"] = s.count;
  j["mean"] = s.mean;
  j["sd"] = s.sd_defined ? json(s.sd) : json(nullptr);
  if (std::isfinite(s.min)) j["min"] = s.min;
  if (std::isfinite(s.max)) j["max"] = s.max;
  return j;
}

json to_json(const SuboptimalitySummary& s) {
  json j;
  j["counts"] = {{"model", s.count_model}, {"opt", s.count_opt}};
  j["mu_model"] = s.mu_model;
  j["mu_opt"] = s.mu_opt;
  j["s"] = s.s;
  j["sd_model"] = s.sd_model;
  j["sd_opt"] = s.sd_opt;
  if (s.gap) j["gap"] = to_json(*s.gap);
  return j;
}

json to_json(const WelchTTest& t) {
  json j;
  j["t"] = t.t;
  j["df"] = t.df;
  j["p_less"] = t.p_less;
  j["p_greater"] = t.p_greater;
  j["p_two_sided"] = t.p_two_sided;
  return j;
}

json to_json(const LandscapeSummary& s) {
  json j;
  j["n"] = s.n;
  j["d"] = s.d;
  j["move"] = std::string(to_string(s.move));
  j["descents"] = s.descents;
  j["instances"] = s.instances;
  j["mean_unique_optima"] = s.mean_unique_optima;
  j["mean_blo_rate"] = s.mean_blo_rate;
  j["mean_depth"] = s.mean_depth;
  auto sd = [&](double v) { return s.sd_defined ? json(v) : json(nullptr); };
  j["sd_unique_optima"] = sd(s.sd_unique_optima);
  j["sd_blo_rate"] = sd(s.sd_blo_rate);
  j["sd_depth"] = sd(s.sd_depth);
  return j;
}

json to_json(FitForm form, const FitParams& p) {
  json j;
  switch (form) {
    case FitForm::power_decay:
      j["alpha"] = p.alpha;
      j["scale_k"] = p.scale_k;
      break;
    case FitForm::offset_power_growth:
      j["alpha"] = p.alpha;
      j["gamma"] = p.gamma;
      j["scale_k"] = p.scale_k;
      break;
    case FitForm::subexp_decay:
      j["beta"] = p.beta;
      j["psi"] = p.psi;
      j["phi"] = p.phi;
      j["scale_k"] = p.scale_k;
      break;
    case FitForm::exp_decay:
      j["beta"] = p.beta;
      j["psi"] = p.psi;
      j["scale_k"] = p.scale_k;
      break;
  }
  return j;
}

json to_json(const FitResult& r, const FitOptions& options) {
  json j;
  j["form"] = std::string(to_string(r.form));
  j["params"] = to_json(r.form, r.params);
  j["fit_space"] = std::string(to_string(r.fit_space));
  j["sse"] = r.sse;
  j["r2"] = r.r2;
  j["n_points"] = r.n_points;
  j["converged"] = r.converged;
  j["residuals"] = r.residuals;
  j["options"] = {{"multistart_count", options.multistart_count},
                  {"tol", options.tol},
                  {"max_iterations", options.max_iterations},
                  {"best_start", r.best_start}};
  return j;
}

FitResult fit_result_from_json(const json& j) {
  try {
    FitResult r{};
    r.form = fit_form_from_string(j.at("form").get<std::string>());
    r.fit_space = fit_space_from_string(j.value("fit_space", std::string(to_string(
                                                                  default_fit_space(r.form)))));
    const json& p = j.at("params");
    auto get = [&](const char* key) {
      return p.contains(key) ? p[key].get<double>() : FitParams::unset;
    };
    r.params.alpha = get("alpha");
    r.params.beta = get("beta");
    r.params.gamma = get("gamma");
    r.params.psi = get("psi");
    r.params.phi = get("phi");
    r.params.scale_k = get("scale_k");
    r.sse = j.value("sse", 0.0);
    r.r2 = j.value("r2", 0.0);
    r.n_points = j.value("n_points", 0);
    r.converged = j.value("converged", true);
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad fit.json: ") + e.what());
  }
}

}  // namespace tspscale
