#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "nbs/bs.hpp"
#include "nbs/interval.hpp"
#include "nbs/random.hpp"
#include "nbs/sample.hpp"

namespace nbs {

struct NeutroDataset {
  NeutroSample sample;
  // Draws regenerated because the lower endpoint came out nonpositive.
  std::size_t redraws = 0;
};

// Draws t_i ~ BS(p) and I_i ~ U(-eps, eps) and records the observation
// [t_i - |I_i|, t_i + |I_i|]. eps = 0 gives degenerate intervals.
NeutroDataset make_neutro_dataset(const BsParams& p, std::size_t n, double eps,
                                  RandomStream& rng);

struct SimConfig {
  double alpha_true;
  double beta_true;
  std::size_t n;
  double eps;
  std::size_t reps;
  std::uint64_t seed;

  void validate() const;
};

struct SimSummary {
  SimConfig config;
  Interval nae_alpha, nae_beta;
  Interval nab_alpha, nab_beta;
  Interval nmse_alpha, nmse_beta;
  std::size_t failed_reps = 0;
  std::size_t redraws = 0;
};

// Per replicate: build a dataset, fit the all-lower and all-upper endpoint
// vectors. NAE = [mean of per-replicate minima, mean of per-replicate
// maxima], NAB = NAE - truth, NMSE = [min, max] of the mean squared error of
// the lower-vector and upper-vector estimator sequences.
SimSummary run_simulation(const SimConfig& cfg);

std::string simulation_csv_header();
std::string simulation_csv_row(const SimSummary& s);

}  // namespace nbs
