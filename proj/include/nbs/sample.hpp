#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nbs/interval.hpp"

namespace nbs {

// Point-valued observations: at least two, all strictly positive.
class ClassicalSample {
 public:
  explicit ClassicalSample(std::vector<double> obs);

  std::size_t size() const noexcept { return obs_.size(); }
  std::span<const double> values() const noexcept { return obs_; }
  double operator[](std::size_t i) const { return obs_[i]; }

  bool all_equal() const noexcept;

 private:
  std::vector<double> obs_;
};

// Interval-valued observations: at least two, every lower endpoint > 0.
class NeutroSample {
 public:
  explicit NeutroSample(std::vector<Interval> obs);
  static NeutroSample from_points(std::span<const double> values);

  std::size_t size() const noexcept { return obs_.size(); }
  std::span<const Interval> values() const noexcept { return obs_; }
  const Interval& operator[](std::size_t i) const { return obs_[i]; }

  std::vector<double> lower() const;
  std::vector<double> upper() const;

  // Positions of the observations with lo < hi.
  std::vector<std::size_t> indeterminate_positions() const;
  bool degenerate() const noexcept;

  // Box spanned by the indeterminate observations only.
  Box indeterminacy_box() const;

  // Point dataset with the indeterminate observations set to `point`
  // (ordered as indeterminate_positions()) and the rest at their value.
  std::vector<double> realize(std::span<const double> point) const;

 private:
  std::vector<Interval> obs_;
};

}  // namespace nbs
