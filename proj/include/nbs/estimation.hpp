#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "nbs/bs.hpp"
#include "nbs/interval.hpp"
#include "nbs/model.hpp"
#include "nbs/sample.hpp"

namespace nbs {

struct SampleMeans {
  double arithmetic;  // s
  double harmonic;    // r
};

SampleMeans sample_means(const ClassicalSample& d);

// K(x) = [mean of 1/(x + t_i)]^-1, x >= 0.
double k_fn(double x, const ClassicalSample& d);

// Left side of the profile score equation for beta:
//   g(b) = b^2 - b (2r + K(b)) + r (s + K(b)).
double beta_score(double beta, const ClassicalSample& d, const SampleMeans& m);

// Unique positive root of beta_score, which lies strictly inside (r, s).
// Bracketed Newton with bisection fallback; `tol` is relative to the root.
double solve_beta(const ClassicalSample& d, double tol = 1e-10);

struct BsFit {
  double alpha;
  double beta;
  double loglik;

  BsParams params() const { return {alpha, beta}; }
};

// Full log-likelihood of the data under BS(alpha, beta), constants included.
double bs_loglik(std::span<const double> data, const BsParams& p);

// Maximum-likelihood estimates. Throws insufficient_data for n < 2 and
// degenerate_sample when every observation is equal.
BsFit mle(const ClassicalSample& d);

struct InformationCriteria {
  Interval aic;
  Interval bic;
};

// aic = 2k - 2 loglik, bic = k_bic ln(n) - 2 loglik.
InformationCriteria information_criteria(const Interval& loglik, std::size_t n,
                                         std::size_t k, std::size_t k_bic);

inline constexpr std::size_t kBsParamCount = 2;
// Penalty count selected by --paper-compat-bic, matching published BIC values.
inline constexpr std::size_t kPaperCompatBicCount = 4;

struct FitReport {
  Model model = Model::nbs;
  Interval alpha_hat;  // first model parameter (alpha, mu, shape)
  Interval beta_hat;   // second model parameter (beta, sigma, scale)
  Interval loglik;
  Interval aic;
  Interval bic;
  std::size_t n = 0;
  std::size_t k_bic = kBsParamCount;
  std::size_t points_evaluated = 0;
  std::string strategy;
};

struct FitOptions {
  // Unset means default_strategy(number of indeterminate observations, seed).
  std::optional<EnvelopeStrategy> strategy;
  std::uint64_t seed = 0;
  std::size_t k_bic = kBsParamCount;
};

// Bounds of the classical MLE over the indeterminacy space of the data,
// explored with the configured strategy.
FitReport neutro_mle(const NeutroSample& d, const FitOptions& options = {});

}  // namespace nbs
