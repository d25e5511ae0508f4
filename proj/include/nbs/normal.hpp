#pragma once

namespace nbs {

// Standard normal CDF, computed through erfc so that both tails keep full
// relative precision. Absolute error below 1e-15 over the real line.
double std_normal_cdf(double z);

double std_normal_pdf(double z);

// Inverse of std_normal_cdf on (0, 1). Throws domain error otherwise.
double std_normal_quantile(double p);

}  // namespace nbs
