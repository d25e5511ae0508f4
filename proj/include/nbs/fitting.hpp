#pragma once

#include <span>

#include "nbs/estimation.hpp"
#include "nbs/model.hpp"
#include "nbs/random.hpp"
#include "nbs/sample.hpp"

namespace nbs {

// A classical fit of any supported model, usable as the "fitted F" of the
// goodness-of-fit pipeline.
struct FittedModel {
  Model model;
  double first;   // alpha | mu | shape
  double second;  // beta | sigma | scale
  double loglik;

  double cdf(double t) const;
  double draw(RandomStream& rng) const;
};

FittedModel fit_model(Model model, const ClassicalSample& d);

// Interval fit: classical fits over the indeterminacy space of d, reduced to
// elementwise [min, max]. Errors from individual points are rethrown with the
// point's position in the evaluation set attached.
FitReport neutro_fit(const NeutroSample& d, Model model, const FitOptions& options = {});

}  // namespace nbs
