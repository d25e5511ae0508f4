#include "nbs/interval.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "nbs/error.hpp"
#include "nbs/random.hpp"

namespace nbs {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::range: return "range error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::evaluation: return "evaluation error";
    case ErrorKind::overflow: return "overflow error";
    case ErrorKind::insufficient_data: return "insufficient data";
    case ErrorKind::degenerate_sample: return "degenerate sample";
    case ErrorKind::solver_failure: return "solver failure";
    case ErrorKind::contract: return "contract violation";
  }
  return "error";
}

Interval::Interval(double value) : Interval(value, value) {}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    fail(ErrorKind::range, "interval endpoints must be finite");
  }
  if (lo > hi) {
    fail(ErrorKind::range, "interval lower endpoint " + format_real(lo) +
                               " exceeds upper endpoint " + format_real(hi));
  }
}

Interval Interval::hull(double a, double b) {
  return a <= b ? Interval(a, b) : Interval(b, a);
}

Interval Interval::include(double x) const noexcept {
  Interval out = *this;
  out.lo_ = std::min(lo_, x);
  out.hi_ = std::max(hi_, x);
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view token) {
  token = trim(token);
  if (token.empty()) fail(ErrorKind::parse, "empty number in interval text");
  // from_chars rejects a leading '+', which hand-edited data sometimes has.
  std::string_view digits = token;
  if (digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) {
    fail(ErrorKind::range, "value out of range: '" + std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    fail(ErrorKind::parse, "malformed number '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    fail(ErrorKind::range, "non-finite value '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Interval parse_interval(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') {
      fail(ErrorKind::parse, "unterminated interval '" + std::string(text) + "'");
    }
    body = trim(body.substr(1, body.size() - 2));
  } else if (!body.empty() && body.back() == ']') {
    fail(ErrorKind::parse, "unexpected ']' in '" + std::string(text) + "'");
  }
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    return Interval(parse_real(body));
  }
  const std::string_view second = body.substr(comma + 1);
  if (second.find(',') != std::string_view::npos) {
    fail(ErrorKind::parse, "too many values in '" + std::string(text) + "'");
  }
  return Interval::hull(parse_real(body.substr(0, comma)), parse_real(second));
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_interval(const Interval& value, bool compact) {
  if (compact && value.degenerate()) return format_real(value.lo());
  return "[" + format_real(value.lo()) + ", " + format_real(value.hi()) + "]";
}

Box::Box(std::vector<Interval> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) fail(ErrorKind::domain, "box needs at least one dimension");
}

std::vector<double> Box::lower() const {
  std::vector<double> out(dims_.size());
  std::ranges::transform(dims_, out.begin(), &Interval::lo);
  return out;
}

std::vector<double> Box::upper() const {
  std::vector<double> out(dims_.size());
  std::ranges::transform(dims_, out.begin(), &Interval::hi);
  return out;
}

std::vector<double> Box::center() const {
  std::vector<double> out(dims_.size());
  std::ranges::transform(dims_, out.begin(), &Interval::mid);
  return out;
}

EnvelopeStrategy default_strategy(std::size_t dims, std::uint64_t seed) {
  if (dims <= kMaxExhaustiveDims) return strategy::Corners{};
  return strategy::CornersPlusRandom{kDefaultRandomSamples, seed};
}

std::string describe(const EnvelopeStrategy& s) {
  struct Visitor {
    std::string operator()(const strategy::Corners&) const { return "corners"; }
    std::string operator()(const strategy::Endpoints&) const { return "endpoints"; }
    std::string operator()(const strategy::Grid& g) const {
      return "grid:" + std::to_string(g.points_per_dim);
    }
    std::string operator()(const strategy::CornersPlusRandom& r) const {
      return "random:" + std::to_string(r.samples) + ":" + std::to_string(r.seed);
    }
  };
  return std::visit(Visitor{}, s);
}

namespace {

std::size_t parse_count(std::string_view token, std::string_view what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorKind::parse, "malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

EnvelopeStrategy parse_strategy(std::string_view text) {
  text = trim(text);
  if (text == "corners") return strategy::Corners{};
  if (text == "endpoints") return strategy::Endpoints{};
  if (text.starts_with("grid:")) {
    const auto k = parse_count(text.substr(5), "grid size");
    if (k < 2) fail(ErrorKind::domain, "grid needs at least 2 points per dimension");
    return strategy::Grid{k};
  }
  if (text.starts_with("random:")) {
    std::string_view rest = text.substr(7);
    strategy::CornersPlusRandom r;
    const auto colon = rest.find(':');
    r.samples = parse_count(rest.substr(0, colon), "sample count");
    if (colon != std::string_view::npos) r.seed = parse_count(rest.substr(colon + 1), "seed");
    return r;
  }
  fail(ErrorKind::parse, "unknown strategy '" + std::string(text) +
                             "' (expected corners, endpoints, grid:K or random:M)");
}

namespace {

constexpr std::size_t kMaxPoints = std::size_t{1} << 26;

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > kMaxPoints / base) {
      fail(ErrorKind::domain, "strategy would evaluate more than " +
                                  std::to_string(kMaxPoints) + " points");
    }
    out *= base;
  }
  return out;
}

}  // namespace

PointSet::PointSet(const Box& box, const EnvelopeStrategy& s) : box_(box) {
  const std::size_t d = box_.size();
  if (std::holds_alternative<strategy::Corners>(s)) {
    kind_ = Kind::corners;
    count_ = checked_power(2, d);
  } else if (const auto* g = std::get_if<strategy::Grid>(&s)) {
    if (g->points_per_dim < 2) fail(ErrorKind::domain, "grid needs at least 2 points per dimension");
    kind_ = Kind::grid;
    grid_k_ = g->points_per_dim;
    count_ = checked_power(grid_k_, d);
  } else if (std::holds_alternative<strategy::Endpoints>(s)) {
    kind_ = Kind::endpoints;
    count_ = 2;
  } else {
    const auto& r = std::get<strategy::CornersPlusRandom>(s);
    kind_ = Kind::random;
    seed_ = r.seed;
    exhaustive_ = d <= kMaxExhaustiveDims ? checked_power(2, d) : 0;
    count_ = 3 + exhaustive_ + r.samples;
  }
}

void PointSet::point(std::size_t index, std::span<double> out) const {
  const std::size_t d = box_.size();
  auto vertex = [&](std::size_t bits) {
    for (std::size_t j = 0; j < d; ++j) {
      out[j] = (bits >> j) & 1U ? box_[j].hi() : box_[j].lo();
    }
  };
  switch (kind_) {
    case Kind::corners:
      vertex(index);
      return;
    case Kind::endpoints:
      for (std::size_t j = 0; j < d; ++j) out[j] = index == 0 ? box_[j].lo() : box_[j].hi();
      return;
    case Kind::grid: {
      std::size_t rest = index;
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t step = rest % grid_k_;
        rest /= grid_k_;
        const Interval& iv = box_[j];
        out[j] = step + 1 == grid_k_
                     ? iv.hi()
                     : iv.lo() + iv.width() * static_cast<double>(step) /
                                     static_cast<double>(grid_k_ - 1);
      }
      return;
    }
    case Kind::random: {
      if (index < 2) {
        for (std::size_t j = 0; j < d; ++j) out[j] = index == 0 ? box_[j].lo() : box_[j].hi();
        return;
      }
      if (index == 2) {
        for (std::size_t j = 0; j < d; ++j) out[j] = box_[j].mid();
        return;
      }
      if (index < 3 + exhaustive_) {
        vertex(index - 3);
        return;
      }
      RandomStream rng = RandomStream::derive(seed_, index);
      for (std::size_t j = 0; j < d; ++j) out[j] = rng.coin() ? box_[j].hi() : box_[j].lo();
      return;
    }
  }
}

Interval envelope(const BoxFunction& f, const Box& box, const EnvelopeStrategy& s) {
  const PointSet points(box, s);
  std::vector<double> x(box.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < points.size(); ++i) {
    points.point(i, x);
    const double v = f(x);
    if (!std::isfinite(v)) {
      std::string where;
      for (std::size_t j = 0; j < x.size(); ++j) where += (j ? ", " : "") + format_real(x[j]);
      fail(ErrorKind::evaluation, "function is not finite at (" + where + ")");
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return Interval(lo, hi);
}

}  // namespace nbs
