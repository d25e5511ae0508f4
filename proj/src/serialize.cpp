#include "nbs/serialize.hpp"

#include <string>

namespace nbs {

nlohmann::json to_json(const Interval& value) { return nlohmann::json::array({value.lo(), value.hi()}); }

nlohmann::json to_json(const FitReport& report) {
  const auto names = param_names(report.model);
  return {
      {"model", std::string(to_string(report.model))},
      {"param_names", {std::string(names[0]), std::string(names[1])}},
      {"alpha_hat", to_json(report.alpha_hat)},
      {"beta_hat", to_json(report.beta_hat)},
      {"loglik", to_json(report.loglik)},
      {"aic", to_json(report.aic)},
      {"bic", to_json(report.bic)},
      {"n", report.n},
      {"k_bic", report.k_bic},
      {"strategy", report.strategy},
      {"points_evaluated", report.points_evaluated},
  };
}

nlohmann::json to_json(const GofResult& result) {
  return {
      {"model", std::string(to_string(result.model))},
      {"ks_star", to_json(result.ks_star)},
      {"p_value", to_json(result.p_value)},
      {"mc_reps", result.mc_reps},
      {"seed", result.seed},
      {"failed_reps", result.failed_reps},
      {"clamped", result.clamped},
  };
}

nlohmann::json to_json(const SimSummary& s) {
  const auto& c = s.config;
  return {
      {"alpha", c.alpha_true},     {"beta", c.beta_true},
      {"n", c.n},                  {"eps", c.eps},
      {"reps", c.reps},            {"seed", c.seed},
      {"nae_alpha", to_json(s.nae_alpha)},   {"nae_beta", to_json(s.nae_beta)},
      {"nab_alpha", to_json(s.nab_alpha)},   {"nab_beta", to_json(s.nab_beta)},
      {"nmse_alpha", to_json(s.nmse_alpha)}, {"nmse_beta", to_json(s.nmse_beta)},
      {"failed_reps", s.failed_reps},        {"redraws", s.redraws},
  };
}

}  // namespace nbs
