#pragma once

// JSON views of result types, shared by the CLI and tests.

#include <json.hpp>

#include "tspscale/fit.hpp"
#include "tspscale/landscape.hpp"
#include "tspscale/stats.hpp"

namespace tspscale {

nlohmann::ordered_json to_json(const CostSummary& s);
nlohmann::ordered_json to_json(const SuboptimalitySummary& s);
nlohmann::ordered_json to_json(const WelchTTest& t);
nlohmann::ordered_json to_json(const LandscapeSummary& s);

/// Only the parameters used by `form` are emitted.
nlohmann::ordered_json to_json(FitForm form, const FitParams& p);
nlohmann::ordered_json to_json(const FitResult& r, const FitOptions& options);

/// Reads the form, params and fit_space back from a fit.json document.
/// Throws ValidationError.
FitResult fit_result_from_json(const nlohmann::ordered_json& j);

}  // namespace tspscale
