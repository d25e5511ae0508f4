// nbs: command-line front end for interval-valued Birnbaum-Saunders analysis.
//
//   nbs fit FILE [--model nbs|nln|ng] [--strategy S] [--paper-compat-bic]
//   nbs gof FILE [--model M] [--reps R] [--seed S]
//   nbs compare FILE [--reps R] [--seed S] [--paper-compat-bic]
//   nbs curves --alpha A --beta B --t-min T0 --t-max T1 [--points K]
//   nbs simulate --alpha A --beta B --n N[,N...] --eps E[,E...] [--reps R] [--seed S]
//
// Exit status: 0 success, 2 usage error, 3 data error, 4 numerical failure.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nbs/bs.hpp"
#include "nbs/competitors.hpp"
#include "nbs/dataset.hpp"
#include "nbs/error.hpp"
#include "nbs/estimation.hpp"
#include "nbs/fitting.hpp"
#include "nbs/gof.hpp"
#include "nbs/serialize.hpp"
#include "nbs/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(nbs::ErrorKind kind) {
  using nbs::ErrorKind;
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::range:
    case ErrorKind::domain:
    case ErrorKind::insufficient_data:
    case ErrorKind::degenerate_sample:
      return kExitData;
    case ErrorKind::evaluation:
    case ErrorKind::overflow:
    case ErrorKind::solver_failure:
    case ErrorKind::contract:
      return kExitNumerical;
  }
  return kExitNumerical;
}

struct Options {
  std::string file;
  std::string model = "nbs";
  std::string strategy;
  std::string format;
  std::size_t reps = 1000;
  std::uint64_t seed = 20240101;
  bool paper_compat_bic = false;

  std::string alpha;
  std::string beta;
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t points = 200;

  std::vector<std::size_t> sizes;
  std::vector<double> eps;
};

void check_reps(std::size_t reps) {
  if (reps < nbs::kMinMcReps) {
    throw UsageError("reps must be ≥ " + std::to_string(nbs::kMinMcReps) + " (got " +
                     std::to_string(reps) + ")");
  }
}

// Malformed option values are usage errors, not data errors.
nbs::EnvelopeStrategy option_strategy(const std::string& text) {
  try {
    return nbs::parse_strategy(text);
  } catch (const nbs::Error& e) {
    throw UsageError(std::string("--strategy: ") + e.what());
  }
}

nbs::Interval option_interval(const char* name, const std::string& text) {
  try {
    return nbs::parse_interval(text);
  } catch (const nbs::Error& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
}

nbs::FitOptions fit_options(const Options& o) {
  nbs::FitOptions fit;
  if (!o.strategy.empty()) fit.strategy = option_strategy(o.strategy);
  fit.seed = o.seed;
  fit.k_bic = o.paper_compat_bic ? nbs::kPaperCompatBicCount : nbs::kBsParamCount;
  return fit;
}

std::string interval_csv(const nbs::Interval& v) {
  return nbs::format_real(v.lo()) + "," + nbs::format_real(v.hi());
}

void print_fit(const nbs::FitReport& r, const std::string& format) {
  if (format == "csv") {
    std::cout << "field,lo,hi\n";
    std::cout << "alpha_hat," << interval_csv(r.alpha_hat) << '\n'
              << "beta_hat," << interval_csv(r.beta_hat) << '\n'
              << "loglik," << interval_csv(r.loglik) << '\n'
              << "aic," << interval_csv(r.aic) << '\n'
              << "bic," << interval_csv(r.bic) << '\n';
    return;
  }
  std::cout << nbs::to_json(r).dump(2) << '\n';
}

void print_gof(const nbs::GofResult& g, const std::string& format) {
  if (format == "csv") {
    std::cout << "field,lo,hi\n"
              << "ks_star," << interval_csv(g.ks_star) << '\n'
              << "p_value," << interval_csv(g.p_value) << '\n';
    return;
  }
  std::cout << nbs::to_json(g).dump(2) << '\n';
}

int cmd_fit(const Options& o) {
  const auto data = nbs::read_dataset(o.file);
  print_fit(nbs::neutro_fit(data, nbs::parse_model(o.model), fit_options(o)),
            o.format.empty() ? "json" : o.format);
  return kExitOk;
}

int cmd_gof(const Options& o) {
  check_reps(o.reps);
  const auto data = nbs::read_dataset(o.file);
  print_gof(nbs::neutro_gof(data, nbs::parse_model(o.model), {o.reps, o.seed}),
            o.format.empty() ? "json" : o.format);
  return kExitOk;
}

int cmd_compare(const Options& o) {
  check_reps(o.reps);
  const auto data = nbs::read_dataset(o.file);
  const nbs::FitOptions fit = fit_options(o);
  std::vector<nbs::CompetitorResult> rows;
  for (const auto model : {nbs::Model::nbs, nbs::Model::nln, nbs::Model::ng}) {
    rows.push_back(nbs::fit_competitor(data, model, fit, {o.reps, o.seed}));
  }
  const std::string format = o.format.empty() ? "table" : o.format;
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) out.push_back({{"fit", nbs::to_json(r.fit)}, {"gof", nbs::to_json(r.gof)}});
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  if (format == "csv") {
    std::cout << "model,param1_lo,param1_hi,param2_lo,param2_hi,loglik_lo,loglik_hi,aic_lo,aic_hi,"
                 "bic_lo,bic_hi,ks_lo,ks_hi,p_lo,p_hi\n";
    for (const auto& r : rows) {
      std::cout << nbs::to_string(r.fit.model) << ',' << interval_csv(r.fit.alpha_hat) << ','
                << interval_csv(r.fit.beta_hat) << ',' << interval_csv(r.fit.loglik) << ','
                << interval_csv(r.fit.aic) << ',' << interval_csv(r.fit.bic) << ','
                << interval_csv(r.gof.ks_star) << ',' << interval_csv(r.gof.p_value) << '\n';
    }
    return kExitOk;
  }
  auto iv = [](const nbs::Interval& v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << '[' << v.lo() << ", " << v.hi() << ']';
    return s.str();
  };
  std::cout << std::left << std::setw(6) << "model" << std::setw(34) << "estimates"
            << std::setw(24) << "log-likelihood" << std::setw(24) << "AIC" << std::setw(24)
            << "BIC" << std::setw(20) << "KS*" << "p-value\n";
  for (const auto& r : rows) {
    const auto names = nbs::param_names(r.fit.model);
    std::cout << std::setw(6) << nbs::to_string(r.fit.model) << std::setw(34)
              << std::string(names[0]) + "=" + iv(r.fit.alpha_hat, 4) << std::setw(24)
              << iv(r.fit.loglik, 4) << std::setw(24) << iv(r.fit.aic, 4) << std::setw(24)
              << iv(r.fit.bic, 4) << std::setw(20) << iv(r.gof.ks_star, 4) << iv(r.gof.p_value, 4)
              << '\n'
              << std::setw(6) << "" << std::string(names[1]) + "=" + iv(r.fit.beta_hat, 4) << '\n';
  }
  return kExitOk;
}

int cmd_curves(const Options& o) {
  const nbs::NbsParams params(option_interval("--alpha", o.alpha), option_interval("--beta", o.beta));
  const auto grid = nbs::linear_grid(o.t_min, o.t_max, o.points);
  const nbs::EnvelopeStrategy strategy =
      o.strategy.empty() ? nbs::EnvelopeStrategy{nbs::strategy::Corners{}} : option_strategy(o.strategy);
  const auto rows = nbs::curves(params, grid, strategy);
  if (o.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
      out.push_back({{"t", r.t}, {"f", nbs::to_json(r.f)}, {"F", nbs::to_json(r.F)}, {"h", nbs::to_json(r.h)}});
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << nbs::curves_csv(rows);
  return kExitOk;
}

int cmd_simulate(const Options& o) {
  const nbs::Interval alpha = option_interval("--alpha", o.alpha);
  const nbs::Interval beta = option_interval("--beta", o.beta);
  if (!alpha.degenerate() || !beta.degenerate()) {
    throw UsageError("simulate needs point values for --alpha and --beta");
  }
  std::vector<nbs::SimSummary> out;
  for (const double eps : o.eps) {
    for (const std::size_t n : o.sizes) {
      out.push_back(nbs::run_simulation({alpha.lo(), beta.lo(), n, eps, o.reps, o.seed}));
    }
  }
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : out) arr.push_back(nbs::to_json(s));
    std::cout << arr.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << nbs::simulation_csv_header() << '\n';
  for (const auto& s : out) std::cout << nbs::simulation_csv_row(s) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-valued (neutrosophic) Birnbaum-Saunders analysis"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> models{"nbs", "nln", "ng"};

  auto* fit = app.add_subcommand("fit", "Interval maximum-likelihood fit of a dataset");
  fit->add_option("file", o.file, "Dataset file")->required();
  fit->add_option("--model", o.model, "Model: nbs, nln or ng")->check(CLI::IsMember(models));
  fit->add_option("--strategy", o.strategy, "corners | endpoints | grid:K | random:M[:SEED]");
  fit->add_option("--seed", o.seed, "Seed for randomized strategies");
  fit->add_flag("--paper-compat-bic", o.paper_compat_bic, "Count 4 parameters in BIC");
  fit->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* gof = app.add_subcommand("gof", "Modified KS goodness of fit with Monte Carlo p-values");
  gof->add_option("file", o.file, "Dataset file")->required();
  gof->add_option("--model", o.model, "Model: nbs, nln or ng")->check(CLI::IsMember(models));
  gof->add_option("--reps", o.reps, "Monte Carlo replicates (>= 100)");
  gof->add_option("--seed", o.seed, "Random seed");
  gof->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* compare = app.add_subcommand("compare", "Fit and test nbs, nln and ng side by side");
  compare->add_option("file", o.file, "Dataset file")->required();
  compare->add_option("--strategy", o.strategy, "Indeterminacy search strategy");
  compare->add_option("--reps", o.reps, "Monte Carlo replicates (>= 100)");
  compare->add_option("--seed", o.seed, "Random seed");
  compare->add_flag("--paper-compat-bic", o.paper_compat_bic, "Count 4 parameters in BIC");
  compare->add_option("--format", o.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  auto* curves = app.add_subcommand("curves", "Emit pdf/cdf/hazard bands over a t grid");
  curves->add_option("--alpha", o.alpha, "Shape interval, e.g. \"[0.5, 0.75]\"")->required();
  curves->add_option("--beta", o.beta, "Scale interval, e.g. 1")->required();
  curves->add_option("--t-min", o.t_min, "Smallest t (> 0)")->required();
  curves->add_option("--t-max", o.t_max, "Largest t")->required();
  curves->add_option("--points", o.points, "Number of grid points");
  curves->add_option("--strategy", o.strategy, "Envelope strategy over the parameter box");
  curves->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

  auto* simulate = app.add_subcommand("simulate", "Bias/MSE study of the interval estimates");
  simulate->add_option("--alpha", o.alpha, "True shape")->required();
  simulate->add_option("--beta", o.beta, "True scale")->required();
  simulate->add_option("--n", o.sizes, "Sample sizes")->required()->delimiter(',');
  simulate->add_option("--eps", o.eps, "Indeterminacy half-widths")->required()->delimiter(',');
  simulate->add_option("--reps", o.reps, "Replicates per configuration");
  simulate->add_option("--seed", o.seed, "Random seed");
  simulate->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fit->parsed()) return cmd_fit(o);
    if (gof->parsed()) return cmd_gof(o);
    if (compare->parsed()) return cmd_compare(o);
    if (curves->parsed()) return cmd_curves(o);
    if (simulate->parsed()) return cmd_simulate(o);
  } catch (const UsageError& e) {
    std::cerr << "nbs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nbs::Error& e) {
    std::cerr << "nbs: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "nbs: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
