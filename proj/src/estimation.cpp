#include "nbs/estimation.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "nbs/error.hpp"
#include "nbs/fitting.hpp"

namespace nbs {

SampleMeans sample_means(const ClassicalSample& d) {
  const auto t = d.values();
  const double n = static_cast<double>(t.size());
  double sum = 0.0;
  double inv = 0.0;
  for (const double v : t) {
    sum += v;
    inv += 1.0 / v;
  }
  return {sum / n, n / inv};
}

namespace {

struct KValue {
  double k;
  double dk;  // K'(x)
};

KValue k_with_derivative(double x, std::span<const double> t) {
  double inv = 0.0;
  double inv2 = 0.0;
  for (const double v : t) {
    const double w = 1.0 / (x + v);
    inv += w;
    inv2 += w * w;
  }
  const double n = static_cast<double>(t.size());
  const double k = n / inv;
  return {k, k * k * inv2 / n};
}

}  // namespace

double k_fn(double x, const ClassicalSample& d) {
  if (!(x >= 0.0)) fail(ErrorKind::domain, "K(x) needs x >= 0, got " + format_real(x));
  return k_with_derivative(x, d.values()).k;
}

double beta_score(double beta, const ClassicalSample& d, const SampleMeans& m) {
  const double k = k_with_derivative(beta, d.values()).k;
  const double r = m.harmonic;
  return beta * beta - beta * (2.0 * r + k) + r * (m.arithmetic + k);
}

double solve_beta(const ClassicalSample& d, double tol) {
  if (d.all_equal()) {
    fail(ErrorKind::degenerate_sample, "degenerate sample: all observations are equal");
  }
  const SampleMeans m = sample_means(d);
  const double r = m.harmonic;
  const double s = m.arithmetic;
  if (!(r < s)) {
    fail(ErrorKind::degenerate_sample, "degenerate sample: harmonic and arithmetic means coincide");
  }
  const auto t = d.values();
  auto eval = [&](double b) {
    const auto [k, dk] = k_with_derivative(b, t);
    const double g = b * b - b * (2.0 * r + k) + r * (s + k);
    const double dg = 2.0 * b - 2.0 * r - k - (b - r) * dk;
    return std::pair{g, dg};
  };

  // g(r) = r (s - r) > 0 and g(s) = (s - r)(s - K(s)) < 0 because K(s) > s.
  double lo = r;
  double hi = s;
  double b = std::sqrt(r * s);
  for (int iter = 0; iter < 200; ++iter) {
    const auto [g, dg] = eval(b);
    if (g == 0.0) return b;
    if (g > 0.0) lo = b; else hi = b;
    double next = b - g / dg;
    if (!(dg < 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    // Relative to the iterate: b >= r, which can sit far below s.
    if (std::abs(next - b) <= tol * b || hi - lo <= tol * lo) return next;
    b = next;
  }
  fail(ErrorKind::solver_failure, "beta root solve did not converge in (" + format_real(r) + ", " +
                                      format_real(s) + ")");
}

double bs_loglik(std::span<const double> data, const BsParams& p) {
  double out = 0.0;
  for (const double t : data) out += log_pdf(t, p);
  return out;
}

BsFit mle(const ClassicalSample& d) {
  const double beta = solve_beta(d);
  const SampleMeans m = sample_means(d);
  const double a2 = m.arithmetic / beta + beta / m.harmonic - 2.0;
  if (!(a2 > 0.0)) {
    fail(ErrorKind::degenerate_sample, "degenerate sample: shape estimate collapses to zero");
  }
  const double alpha = std::sqrt(a2);
  return {alpha, beta, bs_loglik(d.values(), BsParams(alpha, beta))};
}

InformationCriteria information_criteria(const Interval& loglik, std::size_t n, std::size_t k,
                                         std::size_t k_bic) {
  if (n < 1) fail(ErrorKind::domain, "information criteria need n >= 1");
  const double pen_aic = 2.0 * static_cast<double>(k);
  const double pen_bic = static_cast<double>(k_bic) * std::log(static_cast<double>(n));
  return {Interval::hull(pen_aic - 2.0 * loglik.lo(), pen_aic - 2.0 * loglik.hi()),
          Interval::hull(pen_bic - 2.0 * loglik.lo(), pen_bic - 2.0 * loglik.hi())};
}

FitReport neutro_mle(const NeutroSample& d, const FitOptions& options) {
  return neutro_fit(d, Model::nbs, options);
}

}  // namespace nbs
