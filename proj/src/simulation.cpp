#include "nbs/simulation.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "nbs/detail/parallel.hpp"
#include "nbs/error.hpp"
#include "nbs/estimation.hpp"

namespace nbs {

NeutroDataset make_neutro_dataset(const BsParams& p, std::size_t n, double eps,
                                  RandomStream& rng) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    fail(ErrorKind::domain, "eps must be finite and >= 0, got " + format_real(eps));
  }
  // Determinate parts first, then the indeterminacy draws, so that eps = 0
  // reproduces sample() and boxes for growing eps are nested under one seed.
  std::vector<double> t = sample(p, n, rng);
  std::vector<double> noise(n);
  for (auto& u : noise) u = rng.uniform(-1.0, 1.0);

  std::size_t redraws = 0;
  std::vector<Interval> obs;
  obs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double spread = eps * std::abs(noise[i]);
    while (!(t[i] - spread > 0.0)) {
      t[i] = draw(p, rng);
      spread = eps * std::abs(rng.uniform(-1.0, 1.0));
      ++redraws;
    }
    obs.emplace_back(t[i] - spread, t[i] + spread);
  }
  return {NeutroSample(std::move(obs)), redraws};
}

void SimConfig::validate() const {
  static_cast<void>(BsParams(alpha_true, beta_true));
  if (n < 2) fail(ErrorKind::insufficient_data, "simulation needs n >= 2");
  if (!(eps >= 0.0) || !std::isfinite(eps)) fail(ErrorKind::domain, "eps must be finite and >= 0");
  if (reps < 1) fail(ErrorKind::domain, "simulation needs reps >= 1");
}

SimSummary run_simulation(const SimConfig& cfg) {
  cfg.validate();
  const BsParams truth(cfg.alpha_true, cfg.beta_true);

  struct Rep {
    double alpha_lower = 0, alpha_upper = 0, beta_lower = 0, beta_upper = 0;
    std::size_t redraws = 0;
    bool ok = false;
  };
  std::vector<Rep> reps(cfg.reps);
  detail::parallel_for(cfg.reps, [&](std::size_t i) {
    RandomStream rng = RandomStream::derive(cfg.seed, i);
    const NeutroDataset data = make_neutro_dataset(truth, cfg.n, cfg.eps, rng);
    Rep& r = reps[i];
    r.redraws = data.redraws;
    try {
      const BsFit lower = mle(ClassicalSample(data.sample.lower()));
      const BsFit upper = data.sample.degenerate() ? lower : mle(ClassicalSample(data.sample.upper()));
      r = {lower.alpha, upper.alpha, lower.beta, upper.beta, data.redraws, true};
    } catch (const Error&) {
      r.ok = false;
    }
  }, 8);

  SimSummary out{cfg, {}, {}, {}, {}, {}, {}, 0, 0};
  double a_min = 0, a_max = 0, b_min = 0, b_max = 0;
  double a_lo_se = 0, a_hi_se = 0, b_lo_se = 0, b_hi_se = 0;
  std::size_t used = 0;
  for (const Rep& r : reps) {
    out.redraws += r.redraws;
    if (!r.ok) {
      ++out.failed_reps;
      continue;
    }
    ++used;
    a_min += std::min(r.alpha_lower, r.alpha_upper);
    a_max += std::max(r.alpha_lower, r.alpha_upper);
    b_min += std::min(r.beta_lower, r.beta_upper);
    b_max += std::max(r.beta_lower, r.beta_upper);
    a_lo_se += (r.alpha_lower - cfg.alpha_true) * (r.alpha_lower - cfg.alpha_true);
    a_hi_se += (r.alpha_upper - cfg.alpha_true) * (r.alpha_upper - cfg.alpha_true);
    b_lo_se += (r.beta_lower - cfg.beta_true) * (r.beta_lower - cfg.beta_true);
    b_hi_se += (r.beta_upper - cfg.beta_true) * (r.beta_upper - cfg.beta_true);
  }
  if (out.failed_reps * 100 > cfg.reps || used == 0) {
    fail(ErrorKind::solver_failure, std::to_string(out.failed_reps) + " of " +
                                        std::to_string(cfg.reps) + " simulation replicates failed");
  }
  const double m = static_cast<double>(used);
  out.nae_alpha = Interval(a_min / m, a_max / m);
  out.nae_beta = Interval(b_min / m, b_max / m);
  out.nab_alpha = Interval::hull(out.nae_alpha.lo() - cfg.alpha_true, out.nae_alpha.hi() - cfg.alpha_true);
  out.nab_beta = Interval::hull(out.nae_beta.lo() - cfg.beta_true, out.nae_beta.hi() - cfg.beta_true);
  out.nmse_alpha = Interval::hull(a_lo_se / m, a_hi_se / m);
  out.nmse_beta = Interval::hull(b_lo_se / m, b_hi_se / m);
  return out;
}

std::string simulation_csv_header() {
  return "alpha,beta,eps,n,reps,seed,nae_alpha_lo,nae_alpha_hi,nae_beta_lo,nae_beta_hi,"
         "nab_alpha_lo,nab_alpha_hi,nab_beta_lo,nab_beta_hi,"
         "nmse_alpha_lo,nmse_alpha_hi,nmse_beta_lo,nmse_beta_hi";
}

std::string simulation_csv_row(const SimSummary& s) {
  std::ostringstream out;
  const auto& c = s.config;
  out << format_real(c.alpha_true) << ',' << format_real(c.beta_true) << ',' << format_real(c.eps)
      << ',' << c.n << ',' << c.reps << ',' << c.seed;
  for (const Interval* iv : {&s.nae_alpha, &s.nae_beta, &s.nab_alpha, &s.nab_beta, &s.nmse_alpha,
                             &s.nmse_beta}) {
    out << ',' << format_real(iv->lo()) << ',' << format_real(iv->hi());
  }
  return out.str();
}

}  // namespace nbs
