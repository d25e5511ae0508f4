#include "nbs/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nbs/error.hpp"

namespace nbs {

ClassicalSample::ClassicalSample(std::vector<double> obs) : obs_(std::move(obs)) {
  if (obs_.size() < 2) {
    fail(ErrorKind::insufficient_data,
         "insufficient data: need at least 2 observations, got " + std::to_string(obs_.size()));
  }
  for (std::size_t i = 0; i < obs_.size(); ++i) {
    if (!(std::isfinite(obs_[i]) && obs_[i] > 0.0)) {
      fail(ErrorKind::domain, "observation " + std::to_string(i + 1) +
                                  " must be positive and finite, got " + format_real(obs_[i]));
    }
  }
}

bool ClassicalSample::all_equal() const noexcept {
  return std::ranges::all_of(obs_, [&](double v) { return v == obs_.front(); });
}

NeutroSample::NeutroSample(std::vector<Interval> obs) : obs_(std::move(obs)) {
  if (obs_.size() < 2) {
    fail(ErrorKind::insufficient_data,
         "insufficient data: need at least 2 observations, got " + std::to_string(obs_.size()));
  }
  for (std::size_t i = 0; i < obs_.size(); ++i) {
    if (!(obs_[i].lo() > 0.0)) {
      fail(ErrorKind::domain, "observation " + std::to_string(i + 1) +
                                  " must have a positive lower endpoint, got " +
                                  format_interval(obs_[i]));
    }
  }
}

NeutroSample NeutroSample::from_points(std::span<const double> values) {
  std::vector<Interval> obs;
  obs.reserve(values.size());
  for (const double v : values) obs.emplace_back(v);
  return NeutroSample(std::move(obs));
}

std::vector<double> NeutroSample::lower() const {
  std::vector<double> out(obs_.size());
  std::ranges::transform(obs_, out.begin(), &Interval::lo);
  return out;
}

std::vector<double> NeutroSample::upper() const {
  std::vector<double> out(obs_.size());
  std::ranges::transform(obs_, out.begin(), &Interval::hi);
  return out;
}

std::vector<std::size_t> NeutroSample::indeterminate_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < obs_.size(); ++i) {
    if (!obs_[i].degenerate()) out.push_back(i);
  }
  return out;
}

bool NeutroSample::degenerate() const noexcept {
  return std::ranges::all_of(obs_, &Interval::degenerate);
}

Box NeutroSample::indeterminacy_box() const {
  std::vector<Interval> dims;
  for (const auto i : indeterminate_positions()) dims.push_back(obs_[i]);
  return Box(std::move(dims));
}

std::vector<double> NeutroSample::realize(std::span<const double> point) const {
  std::vector<double> out = lower();
  std::size_t k = 0;
  for (std::size_t i = 0; i < obs_.size(); ++i) {
    if (obs_[i].degenerate()) continue;
    if (k >= point.size()) fail(ErrorKind::contract, "point has too few coordinates");
    out[i] = point[k++];
  }
  if (k != point.size()) fail(ErrorKind::contract, "point has too many coordinates");
  return out;
}

}  // namespace nbs
