#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "nbs/interval.hpp"
#include "nbs/sample.hpp"

namespace nbs {

// Dataset text: one observation per line ("v", "[a, b]" or "a,b"), blank
// lines and '#' comments ignored, an optional non-numeric header line
// (e.g. "lower,upper") skipped.
std::vector<Interval> read_observations(std::istream& in);
std::vector<Interval> read_observations(const std::filesystem::path& path);

// Same, validated into a sample (insufficient_data for fewer than two rows).
NeutroSample read_dataset(const std::filesystem::path& path);

}  // namespace nbs
