#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nbs/estimation.hpp"
#include "nbs/gof.hpp"
#include "nbs/random.hpp"
#include "nbs/sample.hpp"

namespace nbs {

struct LnParams {
  double mu;     // location of log t
  double sigma;  // spread of log t

  LnParams(double mu, double sigma);
};

struct GammaParams {
  double shape;
  double scale;

  GammaParams(double shape, double scale);
};

struct LnFit {
  LnParams params;
  double loglik;
};

struct GammaFit {
  GammaParams params;
  double loglik;
  int iterations;
};

double digamma(double x);
double trigamma(double x);

double lognormal_log_pdf(double t, const LnParams& p);
double lognormal_cdf(double t, const LnParams& p);
double lognormal_loglik(std::span<const double> data, const LnParams& p);

double gamma_log_pdf(double t, const GammaParams& p);
double gamma_cdf(double t, const GammaParams& p);
double gamma_loglik(std::span<const double> data, const GammaParams& p);

// Closed form: mu = mean log t, sigma = n-denominator spread of log t.
LnFit lognormal_mle(const ClassicalSample& d);

// Shape solves ln k - digamma(k) = ln(mean t) - mean(log t); scale = mean / k.
GammaFit gamma_mle(const ClassicalSample& d);

std::vector<double> sample_lognormal(const LnParams& p, std::size_t n, RandomStream& rng);
std::vector<double> sample_gamma(const GammaParams& p, std::size_t n, RandomStream& rng);

struct CompetitorResult {
  FitReport fit;
  GofResult gof;
};

// Interval fit of a competitor model (nln or ng) plus its modified-KS
// goodness of fit on the endpoint datasets.
CompetitorResult fit_competitor(const NeutroSample& d, Model model, const FitOptions& fit,
                                const GofOptions& gof);

}  // namespace nbs
