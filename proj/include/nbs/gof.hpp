#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nbs/fitting.hpp"
#include "nbs/interval.hpp"
#include "nbs/model.hpp"
#include "nbs/sample.hpp"

namespace nbs {

inline constexpr std::size_t kMinMcReps = 100;
inline constexpr double kClampEps = 1e-15;

struct CbTransform {
  // u values ordered like the ascending-sorted data.
  std::vector<double> u;
  // Set when some fitted CDF value had to be clamped away from 0 or 1.
  bool clamped = false;
};

// Chen-Balakrishnan transform: v = F(t), y = Phi^-1(v), u = Phi((y - ybar)/s_y)
// with the (n-1)-denominator s_y. Requires n >= 3.
CbTransform cb_transform(std::span<const double> data, const FittedModel& fitted);

// (sqrt(n) - 0.01 + 0.85/sqrt(n)) max(D+, D-). Throws contract error when u is
// not sorted ascending.
double ks_star(std::span<const double> u);

// Fit + transform + statistic on one classical dataset.
double ks_star(const ClassicalSample& d, Model model);

struct McTest {
  double statistic;   // observed KS*
  double p_value;     // (1 + #{KS*_rep >= observed}) / (reps + 1)
  std::size_t reps;
  std::size_t failed_reps;
  bool clamped;
};

// Parametric-bootstrap p-value of the modified KS statistic: every replicate
// simulates from the fitted model, refits and recomputes KS*. Each replicate
// draws from its own stream derived from (seed, replicate index). Throws
// solver_failure when more than 1% of replicates fail to fit.
McTest mc_test(const ClassicalSample& d, Model model, std::size_t reps, std::uint64_t seed);

double mc_pvalue(const ClassicalSample& d, Model model, std::size_t reps, std::uint64_t seed);

struct GofOptions {
  std::size_t reps = 1000;
  std::uint64_t seed = 0;
};

struct GofResult {
  Model model = Model::nbs;
  Interval ks_star;
  Interval p_value;
  std::size_t mc_reps = 0;
  std::uint64_t seed = 0;
  std::size_t failed_reps = 0;
  bool clamped = false;
};

// Runs the Monte Carlo test on the all-lower and all-upper datasets and
// reports [min, max] of KS* and of the p-value across the two.
GofResult neutro_gof(const NeutroSample& d, Model model, const GofOptions& options);

}  // namespace nbs
