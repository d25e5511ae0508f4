#include "nbs/fitting.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "nbs/competitors.hpp"
#include "nbs/detail/parallel.hpp"
#include "nbs/error.hpp"

namespace nbs {

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::nbs: return "nbs";
    case Model::nln: return "nln";
    case Model::ng: return "ng";
  }
  return "?";
}

Model parse_model(std::string_view text) {
  if (text == "nbs") return Model::nbs;
  if (text == "nln") return Model::nln;
  if (text == "ng") return Model::ng;
  fail(ErrorKind::parse, "unknown model '" + std::string(text) + "' (expected nbs, nln or ng)");
}

std::array<std::string_view, 2> param_names(Model model) noexcept {
  switch (model) {
    case Model::nbs: return {"alpha", "beta"};
    case Model::nln: return {"mu", "sigma"};
    case Model::ng: return {"shape", "scale"};
  }
  return {"", ""};
}

double FittedModel::cdf(double t) const {
  switch (model) {
    case Model::nbs: return nbs::cdf(t, BsParams(first, second));
    case Model::nln: return lognormal_cdf(t, LnParams(first, second));
    case Model::ng: return gamma_cdf(t, GammaParams(first, second));
  }
  fail(ErrorKind::contract, "unknown model");
}

double FittedModel::draw(RandomStream& rng) const {
  switch (model) {
    case Model::nbs: return nbs::draw(BsParams(first, second), rng);
    case Model::nln: return sample_lognormal(LnParams(first, second), 1, rng).front();
    case Model::ng: return std::gamma_distribution<double>(first, second)(rng.engine());
  }
  fail(ErrorKind::contract, "unknown model");
}

FittedModel fit_model(Model model, const ClassicalSample& d) {
  switch (model) {
    case Model::nbs: {
      const BsFit f = mle(d);
      return {model, f.alpha, f.beta, f.loglik};
    }
    case Model::nln: {
      const LnFit f = lognormal_mle(d);
      return {model, f.params.mu, f.params.sigma, f.loglik};
    }
    case Model::ng: {
      const GammaFit f = gamma_mle(d);
      return {model, f.params.shape, f.params.scale, f.loglik};
    }
  }
  fail(ErrorKind::contract, "unknown model");
}

FitReport neutro_fit(const NeutroSample& d, Model model, const FitOptions& options) {
  const auto positions = d.indeterminate_positions();
  FitReport report;
  report.model = model;
  report.n = d.size();
  report.k_bic = options.k_bic;

  std::vector<FittedModel> fits;
  if (positions.empty()) {
    fits.push_back(fit_model(model, ClassicalSample(d.lower())));
    report.strategy = "point";
  } else {
    const Box box = d.indeterminacy_box();
    const EnvelopeStrategy strategy =
        options.strategy.value_or(default_strategy(box.size(), options.seed));
    report.strategy = describe(strategy);
    const PointSet points(box, strategy);
    fits.resize(points.size());
    detail::parallel_for(points.size(), [&](std::size_t i) {
      std::vector<double> x(points.dims());
      points.point(i, x);
      try {
        fits[i] = fit_model(model, ClassicalSample(d.realize(x)));
      } catch (const Error& e) {
        std::string where;
        for (std::size_t j = 0; j < x.size(); ++j) {
          where += (j ? ", " : "") + format_real(x[j]);
        }
        throw Error(e.kind(), std::string(e.what()) + " (evaluation point " + std::to_string(i) +
                                  ": indeterminate observations at " + where + ")");
      }
    });
  }
  report.points_evaluated = fits.size();

  auto bounds = [&](auto member) {
    const auto [lo, hi] = std::ranges::minmax(fits, {}, member);
    return Interval(lo.*member, hi.*member);
  };
  report.alpha_hat = bounds(&FittedModel::first);
  report.beta_hat = bounds(&FittedModel::second);
  report.loglik = bounds(&FittedModel::loglik);
  const auto ic = information_criteria(report.loglik, report.n, kBsParamCount, options.k_bic);
  report.aic = ic.aic;
  report.bic = ic.bic;
  return report;
}

}  // namespace nbs
