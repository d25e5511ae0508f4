#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nbs/interval.hpp"
#include "nbs/random.hpp"

namespace nbs {

// Birnbaum-Saunders shape (alpha, dimensionless) and scale (beta, units of t).
struct BsParams {
  double alpha;
  double beta;

  BsParams(double alpha, double beta);
};

// Interval-valued shape and scale.
struct NbsParams {
  Interval alpha;
  Interval beta;

  NbsParams(Interval alpha, Interval beta);
  explicit NbsParams(const BsParams& p);

  Box box() const { return Box({alpha, beta}); }
};

// Standardized deviate (sqrt(t/beta) - sqrt(beta/t)) / alpha.
double bs_deviate(double t, const BsParams& p);

double pdf(double t, const BsParams& p);
double log_pdf(double t, const BsParams& p);
double cdf(double t, const BsParams& p);
// 1 - cdf, evaluated directly in the upper tail.
double sf(double t, const BsParams& p);
double quantile(double q, const BsParams& p);

// E(T^r) from the double binomial sum over standard normal moments.
double raw_moment(int r, const BsParams& p);

struct SummaryStats {
  double mean;
  double variance;
  double cv;
  double skewness;
  double kurtosis;
};

struct NeutroSummaryStats {
  Interval mean;
  Interval variance;
  Interval cv;
  Interval skewness;
  Interval kurtosis;
};

SummaryStats summary_stats(const BsParams& p);

// Transforms n standard normal draws through T = beta (a Z + sqrt((a Z)^2 + 1))^2
// with a = alpha / 2.
std::vector<double> sample(const BsParams& p, std::size_t n, RandomStream& rng);
double draw(const BsParams& p, RandomStream& rng);

// Interval-parameter evaluation. Each is an envelope over the parameter box
// (times the t interval where one is accepted).

Interval survival(double t, const NbsParams& p,
                  const EnvelopeStrategy& strategy = strategy::Corners{});
Interval survival(const Interval& t, const NbsParams& p,
                  const EnvelopeStrategy& strategy = strategy::Corners{});

Interval density(double t, const NbsParams& p,
                 const EnvelopeStrategy& strategy = strategy::Corners{});
Interval distribution(double t, const NbsParams& p,
                      const EnvelopeStrategy& strategy = strategy::Corners{});

// f / (1 - F). Throws overflow error when the survival function underflows.
double hazard(double t, const BsParams& p);
Interval hazard(double t, const NbsParams& p,
                const EnvelopeStrategy& strategy = strategy::Corners{});

Interval raw_moment(int r, const NbsParams& p,
                    const EnvelopeStrategy& strategy = strategy::Corners{});

NeutroSummaryStats summary_stats(const NbsParams& p,
                                 const EnvelopeStrategy& strategy = strategy::Corners{});

// One row of the band table behind the pdf/cdf/hazard plots.
struct CurveRow {
  double t;
  Interval f;
  Interval F;
  Interval h;
};

std::vector<CurveRow> curves(const NbsParams& p, std::span<const double> t_grid,
                             const EnvelopeStrategy& strategy = strategy::Corners{});

// Evenly spaced grid of `points` values over [t_min, t_max].
std::vector<double> linear_grid(double t_min, double t_max, std::size_t points);

std::string curves_csv(std::span<const CurveRow> rows);

}  // namespace nbs
