#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "nbs/error.hpp"
#include "nbs/interval.hpp"
#include "support.hpp"

using namespace nbs;
using nbs::test::near;

TEST_CASE("parse_interval accepts the bracket notation") {
  CHECK(parse_interval("[304.12, 307.82]") == Interval(304.12, 307.82));
  CHECK(parse_interval("355.34") == Interval(355.34, 355.34));
  CHECK(parse_interval("[2, 1]") == Interval(1, 2));
  CHECK(parse_interval("  [ 309.12 ,312.10 ] ") == Interval(309.12, 312.10));
  CHECK(parse_interval("1e-3,2E2") == Interval(0.001, 200));
  CHECK(parse_interval("[7]") == Interval(7));
  CHECK(parse_interval("+3") == Interval(3));
}

TEST_CASE("parse_interval reports malformed text") {
  auto kind_of = [](const char* text) {
    try {
      parse_interval(text);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return ErrorKind::contract;
  };
  CHECK(kind_of("") == ErrorKind::parse);
  CHECK(kind_of("[1, 2") == ErrorKind::parse);
  CHECK(kind_of("1, 2]") == ErrorKind::parse);
  CHECK(kind_of("abc") == ErrorKind::parse);
  CHECK(kind_of("[1, 2, 3]") == ErrorKind::parse);
  CHECK(kind_of("[1, ]") == ErrorKind::parse);
  CHECK(kind_of("inf") == ErrorKind::range);
  CHECK(kind_of("nan") == ErrorKind::range);
  CHECK(kind_of("1e999") == ErrorKind::range);

  try {
    parse_interval("[1, 2x]");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("2x") != std::string::npos);
  }
}

TEST_CASE("Interval rejects reversed or non-finite endpoints") {
  CHECK_THROWS_AS(Interval(2, 1), Error);
  CHECK_THROWS_AS(Interval(0, std::numeric_limits<double>::infinity()), Error);
  CHECK(Interval::hull(3, -1) == Interval(-1, 3));
  CHECK(Interval(1, 2).include(5) == Interval(1, 5));
}

TEST_CASE("format then parse is the identity on finite intervals") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::ldexp(mant(gen), expo(gen) / 3);
    const double b = std::ldexp(mant(gen), expo(gen) / 3);
    const Interval iv = Interval::hull(a, b);
    CHECK(parse_interval(format_interval(iv)) == iv);
    CHECK(parse_interval(format_interval(Interval(a), true)) == Interval(a));
  }
  CHECK(format_interval(Interval(304.12, 307.82)) == "[304.12, 307.82]");
  CHECK(format_interval(Interval(355.34), true) == "355.34");
  CHECK(format_interval(Interval(355.34)) == "[355.34, 355.34]");
}

TEST_CASE("envelope examples") {
  const auto square = [](std::span<const double> x) { return x[0] * x[0]; };
  const Interval sq = envelope(square, Box({Interval(-1, 2)}), strategy::Grid{301});
  CHECK(near(sq, 0, 4, 1e-12));

  const auto identity = [](std::span<const double> x) { return x[0]; };
  CHECK(envelope(identity, Box({Interval(2.5)}), strategy::Corners{}) == Interval(2.5));

  const auto sum = [](std::span<const double> x) { return x[0] + x[1]; };
  const Box unit({Interval(0, 1), Interval(0, 1)});
  // Oracle: enumerate the four vertices by hand.
  double lo = 1e300, hi = -1e300;
  for (double a : {0.0, 1.0}) {
    for (double b : {0.0, 1.0}) {
      lo = std::min(lo, a + b);
      hi = std::max(hi, a + b);
    }
  }
  CHECK(envelope(sum, unit, strategy::Corners{}) == Interval(lo, hi));
  CHECK(envelope(sum, unit, strategy::Endpoints{}) == Interval(0, 2));
}

TEST_CASE("envelope fails on non-finite values and names the point") {
  const auto bad = [](std::span<const double> x) { return std::log(x[0]); };
  try {
    envelope(bad, Box({Interval(0, 1)}), strategy::Corners{});
    FAIL("expected evaluation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::evaluation);
    CHECK(std::string(e.what()).find("(0)") != std::string::npos);
  }
}

TEST_CASE("corners envelope equals the dense-grid range for monotone functions") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + trial % 2;
    std::vector<Interval> dims;
    for (std::size_t j = 0; j < d; ++j) dims.push_back(Interval::hull(u(gen), u(gen)));
    const Box box(dims);
    const double w0 = u(gen), w1 = u(gen), w2 = u(gen);
    // Coordinate-wise monotone: exp is increasing, each term monotone.
    const auto f = [&](std::span<const double> x) {
      double v = w0 * x[0] + std::exp(w1 * x[1]);
      if (x.size() > 2) v += w2 * x[2] * std::abs(w2);
      return v;
    };
    const Interval corners = envelope(f, box, strategy::Corners{});
    const Interval grid = envelope(f, box, strategy::Grid{d == 2 ? 201u : 41u});
    CHECK(near(corners.lo(), grid.lo(), 1e-12));
    CHECK(near(corners.hi(), grid.hi(), 1e-12));
  }
}

TEST_CASE("envelope is an inner approximation of the range") {
  // f has an interior maximum; corners miss it but stay inside the range.
  const auto f = [](std::span<const double> x) { return -(x[0] - 0.3) * (x[0] - 0.3) - x[1] * x[1]; };
  const Box box({Interval(0, 1), Interval(-1, 1)});
  const Interval dense = envelope(f, box, strategy::Grid{401});
  for (const EnvelopeStrategy& s : {EnvelopeStrategy{strategy::Corners{}},
                                    EnvelopeStrategy{strategy::Endpoints{}},
                                    EnvelopeStrategy{strategy::CornersPlusRandom{64, 3}}}) {
    const Interval e = envelope(f, box, s);
    CHECK(dense.lo() <= e.lo() + 1e-15);
    CHECK(e.hi() <= dense.hi() + 1e-15);
  }
}

TEST_CASE("degenerate box gives a degenerate envelope equal to f at the point") {
  const auto f = [](std::span<const double> x) { return std::sin(x[0]) * x[1] + x[2]; };
  const Box box({Interval(0.7), Interval(-2.0), Interval(3.0)});
  const double expected = std::sin(0.7) * -2.0 + 3.0;
  for (const EnvelopeStrategy& s :
       {EnvelopeStrategy{strategy::Corners{}}, EnvelopeStrategy{strategy::Grid{5}},
        EnvelopeStrategy{strategy::CornersPlusRandom{16, 1}}}) {
    const Interval e = envelope(f, box, s);
    CHECK(e.degenerate());
    CHECK(e.lo() == expected);
  }
}

TEST_CASE("point sets") {
  const Box box({Interval(0, 1), Interval(2, 4), Interval(5)});
  CHECK(PointSet(box, strategy::Corners{}).size() == 8);
  CHECK(PointSet(box, strategy::Grid{3}).size() == 27);
  CHECK(PointSet(box, strategy::Endpoints{}).size() == 2);
  CHECK(PointSet(box, strategy::CornersPlusRandom{10, 0}).size() == 3 + 8 + 10);

  const PointSet random(box, strategy::CornersPlusRandom{10, 42});
  std::vector<double> x(3);
  random.point(2, x);
  CHECK(x == std::vector<double>{0.5, 3, 5});
  for (std::size_t i = 0; i < random.size(); ++i) {
    random.point(i, x);
    CHECK(box[0].contains(x[0]));
    CHECK(box[1].contains(x[1]));
  }

  std::vector<Interval> wide(40, Interval(1, 2));
  CHECK_THROWS_AS(PointSet(Box(wide), strategy::Corners{}), Error);
  CHECK(PointSet(Box(wide), default_strategy(40)).size() == 3 + kDefaultRandomSamples);
  CHECK(std::holds_alternative<strategy::Corners>(default_strategy(12)));
}

TEST_CASE("strategy text") {
  CHECK(std::holds_alternative<strategy::Corners>(parse_strategy("corners")));
  CHECK(std::holds_alternative<strategy::Endpoints>(parse_strategy("endpoints")));
  CHECK(std::get<strategy::Grid>(parse_strategy("grid:7")).points_per_dim == 7);
  const auto r = std::get<strategy::CornersPlusRandom>(parse_strategy("random:500:9"));
  CHECK(r.samples == 500);
  CHECK(r.seed == 9);
  CHECK(describe(parse_strategy("random:500:9")) == "random:500:9");
  CHECK_THROWS_AS(parse_strategy("sobol"), Error);
  CHECK_THROWS_AS(parse_strategy("grid:1"), Error);
}
