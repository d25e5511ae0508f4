#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nbs {

// Closed interval [lo, hi] with finite endpoints. A degenerate interval
// (lo == hi) stands for an ordinary real value.
class Interval {
 public:
  constexpr Interval() = default;
  explicit Interval(double value);
  // Throws range error on non-finite endpoints or lo > hi.
  Interval(double lo, double hi);

  // Orders the two endpoints instead of rejecting a reversed pair.
  static Interval hull(double a, double b);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  double mid() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }
  bool degenerate() const noexcept { return lo_ == hi_; }

  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const noexcept {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  // Smallest interval containing both this and x.
  Interval include(double x) const noexcept;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// Accepts "v", "a, b", "[a, b]" (whitespace optional anywhere).
Interval parse_interval(std::string_view text);

// Shortest round-trip decimal form of a double.
std::string format_real(double value);

// Canonical "[lo, hi]"; with compact set, degenerate intervals print as a
// bare number.
std::string format_interval(const Interval& value, bool compact = false);

// Cartesian product of intervals.
class Box {
 public:
  explicit Box(std::vector<Interval> dims);

  std::size_t size() const noexcept { return dims_.size(); }
  const Interval& operator[](std::size_t i) const { return dims_[i]; }
  std::span<const Interval> dims() const noexcept { return dims_; }

  std::vector<double> lower() const;
  std::vector<double> upper() const;
  std::vector<double> center() const;

 private:
  std::vector<Interval> dims_;
};

namespace strategy {

// Every vertex of the box (2^d points).
struct Corners {};

// k equally spaced points per dimension, endpoints included (k^d points).
struct Grid {
  std::size_t points_per_dim = 101;
};

// All-lower and all-upper vertices only.
struct Endpoints {};

// All-lower vertex, all-upper vertex and the box center, followed by
// `samples` vertices chosen uniformly at random. The full vertex set is
// added as well when the box has at most kMaxExhaustiveDims dimensions.
struct CornersPlusRandom {
  std::size_t samples = 4096;
  std::uint64_t seed = 0;
};

}  // namespace strategy

using EnvelopeStrategy = std::variant<strategy::Corners, strategy::Grid,
                                      strategy::Endpoints,
                                      strategy::CornersPlusRandom>;

inline constexpr std::size_t kMaxExhaustiveDims = 12;
inline constexpr std::size_t kDefaultRandomSamples = 4096;

// Corners up to kMaxExhaustiveDims, CornersPlusRandom beyond.
EnvelopeStrategy default_strategy(std::size_t dims, std::uint64_t seed = 0);

std::string describe(const EnvelopeStrategy& strategy);

// Parses "corners", "endpoints", "grid:K", "random:M" or "random:M:SEED".
EnvelopeStrategy parse_strategy(std::string_view text);

// The finite point set a strategy evaluates over a box. Points are addressed
// by index so that evaluation can be split across threads without changing
// the result.
class PointSet {
 public:
  PointSet(const Box& box, const EnvelopeStrategy& strategy);

  std::size_t size() const noexcept { return count_; }
  std::size_t dims() const noexcept { return box_.size(); }

  // Writes point `index` into out (out.size() == dims()).
  void point(std::size_t index, std::span<double> out) const;

 private:
  enum class Kind { corners, grid, endpoints, random };

  Box box_;
  Kind kind_;
  std::size_t count_ = 0;
  std::size_t grid_k_ = 0;
  std::size_t exhaustive_ = 0;  // leading vertex block for random kind
  std::uint64_t seed_ = 0;
};

using BoxFunction = std::function<double(std::span<const double>)>;

// [min, max] of f over the strategy's point set. Inner approximation of the
// true range; both endpoints are attained values. Throws evaluation error if
// f is non-finite at any point.
Interval envelope(const BoxFunction& f, const Box& box,
                  const EnvelopeStrategy& strategy);

}  // namespace nbs
