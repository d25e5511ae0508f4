#pragma once

#include <cstdint>
#include <random>

namespace nbs {

// Seeded pseudo-random source. Streams for independent work items are
// derived from (seed, index) so that results never depend on execution
// order.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  static RandomStream derive(std::uint64_t seed, std::uint64_t index);

  double normal();
  double uniform(double a, double b);
  bool coin();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace nbs
