#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "nbs/bs.hpp"
#include "nbs/error.hpp"
#include "nbs/normal.hpp"
#include "support.hpp"

using namespace nbs;
using nbs::test::near;

namespace {

// Density as phi(xi) times the Jacobian d xi / dt.
double pdf_oracle(double t, double a, double b) {
  const double xi = (std::sqrt(t / b) - std::sqrt(b / t)) / a;
  const double dxi = (1.0 / std::sqrt(t * b) + std::sqrt(b) / std::pow(t, 1.5)) / (2.0 * a);
  return std::exp(-0.5 * xi * xi) / std::sqrt(2.0 * std::numbers::pi) * dxi;
}

// Integral of g(t) pdf(t) dt, taken in log t over the range where |xi| < 40.
template <class G>
double expect(const BsParams& p, G g) {
  const double half = 2.0 * std::asinh(20.0 * p.alpha);
  auto integrand = [&](double x) {
    const double t = p.beta * std::exp(x);
    return g(t) * pdf(t, p) * t;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, -half, half, 20,
                                                                        1e-13);
}

const std::vector<double> kAlphas{0.05, 0.1, 0.35, 0.5, 1.0, 2.0, 3.0};
const std::vector<double> kBetas{0.5, 1.0, 2.0, 180.0};

}  // namespace

TEST_CASE("parameters are validated") {
  CHECK_THROWS_AS(BsParams(0.0, 1.0), Error);
  CHECK_THROWS_AS(BsParams(1.0, -1.0), Error);
  CHECK_THROWS_AS(BsParams(std::nan(""), 1.0), Error);
  CHECK_THROWS_AS(NbsParams(Interval(0, 1), Interval(1, 2)), Error);
  CHECK_NOTHROW(NbsParams(Interval(0.1, 1), Interval(1, 2)));
}

TEST_CASE("pdf matches the change-of-variables form") {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      for (double q : {0.01, 0.2, 0.5, 0.9, 0.999}) {
        const BsParams p(a, b);
        const double t = quantile(q, p);
        const double ref = pdf_oracle(t, a, b);
        CHECK(near(pdf(t, p) / ref, 1.0, 1e-12));
        CHECK(near(log_pdf(t, p), std::log(ref), 1e-11));
      }
    }
  }
  CHECK_THROWS_AS(pdf(0.0, BsParams(1, 1)), Error);
  CHECK_THROWS_AS(pdf(-1.0, BsParams(1, 1)), Error);
}

TEST_CASE("pdf integrates to one and the mean matches") {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const BsParams p(a, b);
      CHECK(near(expect(p, [](double) { return 1.0; }), 1.0, 1e-9));
      CHECK(near(expect(p, [](double t) { return t; }) / raw_moment(1, p), 1.0, 1e-9));
    }
  }
}

TEST_CASE("cdf, survival and quantile") {
  const BsParams p(0.5, 2.0);
  CHECK(cdf(2.0, p) == 0.5);
  CHECK(quantile(0.5, p) == doctest::Approx(2.0).epsilon(1e-14));
  // xi = (sqrt(2) - sqrt(1/2)) / 0.5 = sqrt(2) at t = 4.
  CHECK(near(cdf(4.0, p), std_normal_cdf(std::sqrt(2.0)), 1e-15));
  CHECK(near(sf(4.0, p), std_normal_cdf(-std::sqrt(2.0)), 1e-15));
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const BsParams q(a, b);
      for (double u : {1e-8, 0.01, 0.3, 0.7, 0.99, 1 - 1e-8}) {
        CHECK(near(cdf(quantile(u, q), q), u, 1e-12));
      }
      // Median is beta, reciprocal property T/beta ~ beta/T.
      CHECK(near(cdf(b * 3.0, q), sf(b / 3.0, q), 1e-15));
    }
  }
  CHECK_THROWS_AS(quantile(0.0, p), Error);
  CHECK_THROWS_AS(quantile(1.0, p), Error);
}

TEST_CASE("survival function of the interval-parameter model") {
  const NbsParams p(Interval(0.08, 0.09), Interval(179.5, 181));
  const Interval s = survival(170.0, p);
  CHECK(near(s, 0.7271649, 0.7834391, 5e-8));

  // Every parameter in the box gives a value inside the envelope.
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const BsParams q(0.08 + 0.001 * i, 179.5 + 0.15 * j);
      CHECK(s.contains(sf(170.0, q)));
    }
  }
  // Degenerate parameters give the classical value.
  const NbsParams point(BsParams(0.085, 180.0));
  CHECK(survival(170.0, point) == Interval(sf(170.0, BsParams(0.085, 180.0))));
  // An interval time widens the band.
  const Interval wide = survival(Interval(165, 175), p);
  CHECK(wide.lo() <= s.lo());
  CHECK(wide.hi() >= s.hi());
}

TEST_CASE("hazard") {
  // At t = beta the survival is 1/2 and f = phi(0)/(alpha beta).
  CHECK(near(hazard(1.0, BsParams(1, 1)), 0.7978845608028654, 1e-14));
  CHECK(near(hazard(2.0, BsParams(0.5, 2)), 2.0 * 0.3989422804014327 / (0.5 * 2.0), 1e-14));
  const BsParams p(0.3, 5.0);
  for (double t : {1.0, 4.0, 5.0, 9.0}) {
    CHECK(near(hazard(t, p), pdf(t, p) / sf(t, p), 1e-12 * hazard(t, p)));
  }
  try {
    hazard(100.0, BsParams(0.1, 1.0));
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::overflow);
  }
  const Interval h = hazard(4.0, NbsParams(Interval(0.3, 0.4), Interval(5, 6)));
  CHECK(h.contains(hazard(4.0, BsParams(0.35, 5.5))));
}

TEST_CASE("raw moments") {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const BsParams p(a, b);
      const double m1 = b * (1 + a * a / 2);
      const double var = a * a * b * b * (1 + 1.25 * a * a);
      CHECK(near(raw_moment(1, p) / m1, 1.0, 1e-13));
      CHECK(near(raw_moment(2, p) / (var + m1 * m1), 1.0, 1e-13));
      if (a <= 1.0) {
        // Heavier shapes put mass where the log-space window truncates t^3.
        const double m3 = expect(p, [](double t) { return t * t * t; });
        CHECK(near(raw_moment(3, p) / m3, 1.0, 1e-8));
      }
    }
  }
  CHECK_THROWS_AS(raw_moment(0, BsParams(1, 1)), Error);
  CHECK_THROWS_AS(raw_moment(-1, BsParams(1, 1)), Error);
}

TEST_CASE("summary statistics") {
  const SummaryStats s = summary_stats(BsParams(1.0, 1.0));
  CHECK(near(s.mean, 1.5, 1e-15));
  CHECK(near(s.variance, 2.25, 1e-15));
  CHECK(near(s.cv, 1.0, 1e-15));
  CHECK(near(s.skewness, 4.0 * 17.0 / std::pow(9.0, 1.5), 1e-14));
  CHECK(near(s.kurtosis, 3.0 + 6.0 * 133.0 / 81.0, 1e-13));

  // Standardized central moments by quadrature.
  for (double a : {0.1, 0.5, 1.0}) {
    const BsParams p(a, 2.0);
    const SummaryStats st = summary_stats(p);
    const double m = st.mean;
    const double sd = std::sqrt(st.variance);
    const double m3 = expect(p, [&](double t) { return std::pow((t - m) / sd, 3); });
    const double m4 = expect(p, [&](double t) { return std::pow((t - m) / sd, 4); });
    CHECK(near(st.skewness, m3, 1e-7));
    CHECK(near(st.kurtosis, m4, 1e-6));
  }
  // Shape-only statistics do not move with beta; kurtosis tends to 3.
  CHECK(summary_stats(BsParams(0.7, 1)).cv == summary_stats(BsParams(0.7, 9)).cv);
  CHECK(near(summary_stats(BsParams(1e-4, 1)).kurtosis, 3.0, 1e-6));

  const NeutroSummaryStats n = summary_stats(NbsParams(Interval(0.1, 0.35), Interval(0.5, 1)));
  CHECK(near(n.mean, 0.502, 1.061, 1e-3));
  CHECK(near(n.variance, 0.003, 0.141, 1e-3));
  CHECK(near(n.cv, 0.1, 0.354, 1e-3));
  CHECK(near(n.skewness, 0.3, 1.038, 1e-3));
  CHECK(near(n.kurtosis, 3.15, 4.775, 1e-3));
}

TEST_CASE("sampling") {
  const BsParams p(0.5, 2.0);
  RandomStream a(99), b(99);
  CHECK(sample(p, 100, a) == sample(p, 100, b));

  RandomStream rng(1234);
  const std::size_t n = 200000;
  std::vector<double> x = sample(p, n, rng);
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  const double se = std::sqrt(summary_stats(p).variance / static_cast<double>(n));
  CHECK(std::abs(mean - summary_stats(p).mean) < 5.0 * se);

  // Kolmogorov distance below the 1% critical value.
  std::sort(x.begin(), x.end());
  double dmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(x[i], p);
    dmax = std::max({dmax, (i + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  CHECK(dmax < 1.628 / std::sqrt(static_cast<double>(n)));

  // Large shape exercises the negative-deviate branch: all draws stay positive.
  RandomStream wide(5);
  for (double v : sample(BsParams(3.0, 1.0), 10000, wide)) {
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
}

TEST_CASE("curves") {
  const auto grid = linear_grid(1.0, 3.0, 5);
  CHECK(grid == std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0});
  CHECK_THROWS_AS(linear_grid(3.0, 1.0, 5), Error);
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 5), Error);

  const NbsParams p(Interval(0.5, 0.75), Interval(1, 2));
  const auto rows = curves(p, linear_grid(0.2, 5.0, 50));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].F.lo() <= rows[i].F.hi());
    CHECK(rows[i].f.lo() >= 0.0);
    if (i > 0) {
      CHECK(rows[i].F.lo() >= rows[i - 1].F.lo());
      CHECK(rows[i].F.hi() >= rows[i - 1].F.hi());
    }
  }
  const std::string csv = curves_csv(rows);
  CHECK(csv.rfind("t,f_lo,f_hi,F_lo,F_hi,h_lo,h_hi\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 51);
}
