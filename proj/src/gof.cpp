#include "nbs/gof.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "nbs/detail/parallel.hpp"
#include "nbs/error.hpp"
#include "nbs/normal.hpp"

namespace nbs {

CbTransform cb_transform(std::span<const double> data, const FittedModel& fitted) {
  const std::size_t n = data.size();
  if (n < 3) {
    fail(ErrorKind::insufficient_data, "goodness of fit needs at least 3 observations");
  }
  std::vector<double> t(data.begin(), data.end());
  std::ranges::stable_sort(t);

  CbTransform out;
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = fitted.cdf(t[i]);
    if (v < kClampEps || v > 1.0 - kClampEps) {
      v = std::clamp(v, kClampEps, 1.0 - kClampEps);
      out.clamped = true;
    }
    y[i] = std_normal_quantile(v);
  }
  double mean = 0.0;
  for (const double v : y) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (const double v : y) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) {
    fail(ErrorKind::evaluation, "transformed sample has zero spread");
  }
  out.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.u[i] = std_normal_cdf((y[i] - mean) / sd);
  return out;
}

double ks_star(std::span<const double> u) {
  const std::size_t n = u.size();
  if (n == 0) fail(ErrorKind::insufficient_data, "KS statistic needs at least one value");
  if (!std::ranges::is_sorted(u)) {
    fail(ErrorKind::contract, "KS statistic needs u sorted ascending");
  }
  const double nn = static_cast<double>(n);
  double d_plus = 0.0;
  double d_minus = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double uj = u[j - 1];
    d_plus = std::max(d_plus, static_cast<double>(j) / nn - uj);
    d_minus = std::max(d_minus, uj - static_cast<double>(j - 1) / nn);
  }
  const double root = std::sqrt(nn);
  return (root - 0.01 + 0.85 / root) * std::max(d_plus, d_minus);
}

double ks_star(const ClassicalSample& d, Model model) {
  return ks_star(cb_transform(d.values(), fit_model(model, d)).u);
}

McTest mc_test(const ClassicalSample& d, Model model, std::size_t reps, std::uint64_t seed) {
  if (reps < kMinMcReps) {
    fail(ErrorKind::domain, "reps must be >= " + std::to_string(kMinMcReps) + ", got " +
                                std::to_string(reps));
  }
  const FittedModel fitted = fit_model(model, d);
  const CbTransform observed = cb_transform(d.values(), fitted);
  const double t0 = ks_star(observed.u);
  const std::size_t n = d.size();

  enum : unsigned char { below, at_or_above, failed };
  std::vector<unsigned char> outcome(reps, failed);
  detail::parallel_for(reps, [&](std::size_t rep) {
    RandomStream rng = RandomStream::derive(seed, rep);
    std::vector<double> x(n);
    for (auto& v : x) v = fitted.draw(rng);
    try {
      const ClassicalSample sim(std::move(x));
      const double stat = ks_star(cb_transform(sim.values(), fit_model(model, sim)).u);
      outcome[rep] = stat >= t0 ? at_or_above : below;
    } catch (const Error&) {
      outcome[rep] = failed;
    }
  }, 16);

  const auto n_failed = static_cast<std::size_t>(std::ranges::count(outcome, failed));
  if (n_failed * 100 > reps) {
    fail(ErrorKind::solver_failure, std::to_string(n_failed) + " of " + std::to_string(reps) +
                                        " Monte Carlo replicates failed to fit");
  }
  const auto exceed = static_cast<std::size_t>(std::ranges::count(outcome, at_or_above));
  const std::size_t used = reps - n_failed;
  return {t0, (1.0 + static_cast<double>(exceed)) / (static_cast<double>(used) + 1.0), reps,
          n_failed, observed.clamped};
}

double mc_pvalue(const ClassicalSample& d, Model model, std::size_t reps, std::uint64_t seed) {
  return mc_test(d, model, reps, seed).p_value;
}

GofResult neutro_gof(const NeutroSample& d, Model model, const GofOptions& options) {
  GofResult result;
  result.model = model;
  result.mc_reps = options.reps;
  result.seed = options.seed;

  const McTest lower = mc_test(ClassicalSample(d.lower()), model, options.reps, options.seed);
  const McTest upper = d.degenerate()
                           ? lower
                           : mc_test(ClassicalSample(d.upper()), model, options.reps, options.seed);
  result.ks_star = Interval::hull(lower.statistic, upper.statistic);
  result.p_value = Interval::hull(lower.p_value, upper.p_value);
  result.failed_reps = lower.failed_reps + (d.degenerate() ? 0 : upper.failed_reps);
  result.clamped = lower.clamped || upper.clamped;
  return result;
}

}  // namespace nbs
