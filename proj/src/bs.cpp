#include "nbs/bs.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "nbs/error.hpp"
#include "nbs/normal.hpp"

namespace nbs {

namespace {

void require_positive_finite(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    fail(ErrorKind::domain, std::string(what) + " must be positive and finite, got " + format_real(v));
  }
}

void require_positive_t(double t) {
  if (!(t > 0.0) || std::isnan(t)) {
    fail(ErrorKind::domain, "t must be positive, got " + format_real(t));
  }
}

// beta (a + sqrt(a^2 + 1))^2 without cancellation for negative a.
double transform(double a, double beta) {
  const double root = std::hypot(a, 1.0);
  const double base = a >= 0.0 ? a + root : 1.0 / (root - a);
  return beta * base * base;
}

}  // namespace

BsParams::BsParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
  require_positive_finite(alpha, "alpha");
  require_positive_finite(beta, "beta");
}

NbsParams::NbsParams(Interval alpha_, Interval beta_) : alpha(alpha_), beta(beta_) {
  if (!(alpha.lo() > 0.0)) fail(ErrorKind::domain, "alpha interval must be strictly positive");
  if (!(beta.lo() > 0.0)) fail(ErrorKind::domain, "beta interval must be strictly positive");
}

NbsParams::NbsParams(const BsParams& p) : NbsParams(Interval(p.alpha), Interval(p.beta)) {}

double bs_deviate(double t, const BsParams& p) {
  require_positive_t(t);
  return (std::sqrt(t / p.beta) - std::sqrt(p.beta / t)) / p.alpha;
}

double log_pdf(double t, const BsParams& p) {
  const double xi = bs_deviate(t, p);
  constexpr double half_log_2pi = 0.91893853320467274178;
  return -half_log_2pi - 0.5 * xi * xi + std::log(t + p.beta) - 1.5 * std::log(t) -
         std::log(2.0 * p.alpha * std::sqrt(p.beta));
}

double pdf(double t, const BsParams& p) { return std::exp(log_pdf(t, p)); }

double cdf(double t, const BsParams& p) { return std_normal_cdf(bs_deviate(t, p)); }

double sf(double t, const BsParams& p) { return std_normal_cdf(-bs_deviate(t, p)); }

double quantile(double q, const BsParams& p) {
  if (!(q > 0.0 && q < 1.0)) {
    fail(ErrorKind::domain, "quantile level must lie in (0, 1), got " + format_real(q));
  }
  return transform(0.5 * p.alpha * std_normal_quantile(q), p.beta);
}

double hazard(double t, const BsParams& p) {
  const double s = sf(t, p);
  const double h = pdf(t, p) / s;
  if (!(s > 0.0) || !std::isfinite(h)) {
    fail(ErrorKind::overflow, "survival function underflows at t = " + format_real(t));
  }
  return h;
}

double raw_moment(int r, const BsParams& p) {
  if (r < 1) fail(ErrorKind::domain, "moment order must be >= 1, got " + std::to_string(r));
  // E Z^{2m} = (2m)! / (2^m m!) = (2m - 1)!!
  auto normal_moment = [](int m) {
    double out = 1.0;
    for (int k = 2 * m - 1; k > 1; k -= 2) out *= k;
    return out;
  };
  auto choose = [](int n, int k) {
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
  };
  const double a2 = 0.25 * p.alpha * p.alpha;
  double sum = 0.0;
  for (int j = 0; j <= r; ++j) {
    double inner = 0.0;
    for (int i = 0; i <= j; ++i) {
      const int m = r - j + i;
      inner += choose(j, i) * normal_moment(m) * std::pow(a2, m);
    }
    sum += choose(2 * r, 2 * j) * inner;
  }
  return std::pow(p.beta, r) * sum;
}

SummaryStats summary_stats(const BsParams& p) {
  const double a2 = p.alpha * p.alpha;
  const double g = 5.0 * a2 + 4.0;
  SummaryStats s;
  s.mean = p.beta * (1.0 + 0.5 * a2);
  s.variance = a2 * p.beta * p.beta * (1.0 + 1.25 * a2);
  s.cv = std::sqrt(5.0 * a2 * a2 + 4.0 * a2) / (a2 + 2.0);
  s.skewness = 4.0 * p.alpha * (11.0 * a2 + 6.0) / std::pow(g, 1.5);
  s.kurtosis = 3.0 + 6.0 * a2 * (93.0 * a2 + 40.0) / (g * g);
  return s;
}

double draw(const BsParams& p, RandomStream& rng) {
  return transform(0.5 * p.alpha * rng.normal(), p.beta);
}

std::vector<double> sample(const BsParams& p, std::size_t n, RandomStream& rng) {
  std::vector<double> out(n);
  for (auto& t : out) t = draw(p, rng);
  return out;
}

namespace {

template <class F>
Interval param_envelope(const NbsParams& p, const EnvelopeStrategy& s, F f) {
  return envelope([&](std::span<const double> x) { return f(BsParams(x[0], x[1])); }, p.box(), s);
}

}  // namespace

Interval survival(double t, const NbsParams& p, const EnvelopeStrategy& s) {
  require_positive_t(t);
  return param_envelope(p, s, [t](const BsParams& q) { return sf(t, q); });
}

Interval survival(const Interval& t, const NbsParams& p, const EnvelopeStrategy& s) {
  require_positive_t(t.lo());
  const Box box({p.alpha, p.beta, t});
  return envelope([](std::span<const double> x) { return sf(x[2], BsParams(x[0], x[1])); }, box, s);
}

Interval density(double t, const NbsParams& p, const EnvelopeStrategy& s) {
  require_positive_t(t);
  return param_envelope(p, s, [t](const BsParams& q) { return pdf(t, q); });
}

Interval distribution(double t, const NbsParams& p, const EnvelopeStrategy& s) {
  require_positive_t(t);
  return param_envelope(p, s, [t](const BsParams& q) { return cdf(t, q); });
}

Interval hazard(double t, const NbsParams& p, const EnvelopeStrategy& s) {
  require_positive_t(t);
  return param_envelope(p, s, [t](const BsParams& q) { return hazard(t, q); });
}

Interval raw_moment(int r, const NbsParams& p, const EnvelopeStrategy& s) {
  if (r < 1) fail(ErrorKind::domain, "moment order must be >= 1, got " + std::to_string(r));
  return param_envelope(p, s, [r](const BsParams& q) { return raw_moment(r, q); });
}

NeutroSummaryStats summary_stats(const NbsParams& p, const EnvelopeStrategy& s) {
  return {
      param_envelope(p, s, [](const BsParams& q) { return summary_stats(q).mean; }),
      param_envelope(p, s, [](const BsParams& q) { return summary_stats(q).variance; }),
      param_envelope(p, s, [](const BsParams& q) { return summary_stats(q).cv; }),
      param_envelope(p, s, [](const BsParams& q) { return summary_stats(q).skewness; }),
      param_envelope(p, s, [](const BsParams& q) { return summary_stats(q).kurtosis; }),
  };
}

std::vector<double> linear_grid(double t_min, double t_max, std::size_t points) {
  if (!(t_min > 0.0) || !std::isfinite(t_max) || !(t_max >= t_min)) {
    fail(ErrorKind::domain, "t grid needs 0 < t_min <= t_max");
  }
  if (points < 1) fail(ErrorKind::domain, "t grid needs at least one point");
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = points == 1 ? t_min
                         : t_min + (t_max - t_min) * static_cast<double>(i) /
                                       static_cast<double>(points - 1);
  }
  out.back() = points == 1 ? t_min : t_max;
  return out;
}

std::vector<CurveRow> curves(const NbsParams& p, std::span<const double> t_grid,
                             const EnvelopeStrategy& s) {
  std::vector<CurveRow> rows;
  rows.reserve(t_grid.size());
  for (const double t : t_grid) {
    rows.push_back({t, density(t, p, s), distribution(t, p, s), hazard(t, p, s)});
  }
  return rows;
}

std::string curves_csv(std::span<const CurveRow> rows) {
  std::ostringstream out;
  out << "t,f_lo,f_hi,F_lo,F_hi,h_lo,h_hi\n";
  for (const auto& r : rows) {
    out << format_real(r.t) << ',' << format_real(r.f.lo()) << ',' << format_real(r.f.hi()) << ','
        << format_real(r.F.lo()) << ',' << format_real(r.F.hi()) << ',' << format_real(r.h.lo())
        << ',' << format_real(r.h.hi()) << '\n';
  }
  return out.str();
}

}  // namespace nbs
