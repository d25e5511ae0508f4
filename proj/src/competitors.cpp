#include "nbs/competitors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "nbs/error.hpp"
#include "nbs/normal.hpp"

namespace nbs {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;

void require_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    fail(ErrorKind::domain, std::string(what) + " must be positive and finite, got " + format_real(v));
  }
}

void require_not_degenerate(const ClassicalSample& d) {
  if (d.all_equal()) {
    fail(ErrorKind::degenerate_sample, "degenerate sample: all observations are equal");
  }
}

}  // namespace

LnParams::LnParams(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
  if (!std::isfinite(mu)) fail(ErrorKind::domain, "mu must be finite");
  require_positive(sigma, "sigma");
}

GammaParams::GammaParams(double shape_, double scale_) : shape(shape_), scale(scale_) {
  require_positive(shape, "shape");
  require_positive(scale, "scale");
}

// Recurrence up to x >= 10, then the asymptotic series; truncation error is
// below 1e-16 there.
double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    fail(ErrorKind::domain, "digamma needs x > 0, got " + format_real(x));
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double z = 1.0 / (x * x);
  const double series =
      z * (1.0 / 12 - z * (1.0 / 120 - z * (1.0 / 252 - z * (1.0 / 240 - z * (1.0 / 132 - z * (691.0 / 32760 - z / 12))))));
  return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    fail(ErrorKind::domain, "trigamma needs x > 0, got " + format_real(x));
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double z = 1.0 / (x * x);
  const double series =
      1.0 / x + z / 2.0 +
      z / x * (1.0 / 6 - z * (1.0 / 30 - z * (1.0 / 42 - z * (1.0 / 30 - z * (5.0 / 66 - z * (691.0 / 2730 - z * 7.0 / 6))))));
  return acc + series;
}

double lognormal_log_pdf(double t, const LnParams& p) {
  require_positive(t, "t");
  const double z = (std::log(t) - p.mu) / p.sigma;
  return -kHalfLog2Pi - std::log(p.sigma) - std::log(t) - 0.5 * z * z;
}

double lognormal_cdf(double t, const LnParams& p) {
  require_positive(t, "t");
  return std_normal_cdf((std::log(t) - p.mu) / p.sigma);
}

double lognormal_loglik(std::span<const double> data, const LnParams& p) {
  double out = 0.0;
  for (const double t : data) out += lognormal_log_pdf(t, p);
  return out;
}

double gamma_log_pdf(double t, const GammaParams& p) {
  require_positive(t, "t");
  return (p.shape - 1.0) * std::log(t) - t / p.scale - std::lgamma(p.shape) -
         p.shape * std::log(p.scale);
}

double gamma_cdf(double t, const GammaParams& p) {
  require_positive(t, "t");
  return boost::math::gamma_p(p.shape, t / p.scale);
}

double gamma_loglik(std::span<const double> data, const GammaParams& p) {
  double out = 0.0;
  for (const double t : data) out += gamma_log_pdf(t, p);
  return out;
}

LnFit lognormal_mle(const ClassicalSample& d) {
  require_not_degenerate(d);
  const auto t = d.values();
  const double n = static_cast<double>(t.size());
  double mu = 0.0;
  for (const double v : t) mu += std::log(v);
  mu /= n;
  double ss = 0.0;
  for (const double v : t) {
    const double e = std::log(v) - mu;
    ss += e * e;
  }
  const LnParams p(mu, std::sqrt(ss / n));
  return {p, lognormal_loglik(t, p)};
}

GammaFit gamma_mle(const ClassicalSample& d) {
  require_not_degenerate(d);
  const auto t = d.values();
  const double n = static_cast<double>(t.size());
  double mean = 0.0;
  double mean_log = 0.0;
  for (const double v : t) {
    mean += v;
    mean_log += std::log(v);
  }
  mean /= n;
  mean_log /= n;
  const double c = std::log(mean) - mean_log;
  if (!(c > 0.0)) {
    fail(ErrorKind::degenerate_sample, "degenerate sample: log of mean equals mean of logs");
  }

  // Minka's starting point is within a few percent of the root.
  double k = (3.0 - c + std::sqrt((c - 3.0) * (c - 3.0) + 24.0 * c)) / (12.0 * c);
  int iter = 0;
  for (; iter < 100; ++iter) {
    const double f = std::log(k) - digamma(k) - c;
    if (f == 0.0) break;
    const double df = 1.0 / k - trigamma(k);
    double next = k - f / df;
    if (!(next > 0.0)) next = 0.5 * k;
    const bool done = std::abs(next - k) <= 1e-12 * k;
    k = next;
    if (done) break;
  }
  const double residual = std::log(k) - digamma(k) - c;
  if (iter == 100 || !(std::abs(residual) < 1e-10)) {
    fail(ErrorKind::solver_failure, "gamma shape solve did not converge (residual " +
                                        format_real(residual) + ")");
  }
  const GammaParams p(k, mean / k);
  return {p, gamma_loglik(t, p), iter + 1};
}

std::vector<double> sample_lognormal(const LnParams& p, std::size_t n, RandomStream& rng) {
  std::vector<double> out(n);
  for (auto& v : out) v = std::exp(p.mu + p.sigma * rng.normal());
  return out;
}

std::vector<double> sample_gamma(const GammaParams& p, std::size_t n, RandomStream& rng) {
  std::gamma_distribution<double> dist(p.shape, p.scale);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng.engine());
  return out;
}

CompetitorResult fit_competitor(const NeutroSample& d, Model model, const FitOptions& fit,
                                const GofOptions& gof) {
  return {neutro_fit(d, model, fit), neutro_gof(d, model, gof)};
}

}  // namespace nbs
