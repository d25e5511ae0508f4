#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "nbs/dataset.hpp"
#include "nbs/interval.hpp"
#include "nbs/sample.hpp"

namespace nbs::test {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near(const Interval& a, double lo, double hi, double tol) {
  return near(a.lo(), lo, tol) && near(a.hi(), hi, tol);
}

inline std::string data_path(const std::string& name) { return std::string(NBS_DATA_DIR) + "/" + name; }

inline NeutroSample aluminium() { return read_dataset(data_path("aluminium.txt")); }
inline NeutroSample nitrogen() { return read_dataset(data_path("nitrogen.txt")); }

inline std::vector<double> aluminium_points() { return aluminium().lower(); }

}  // namespace nbs::test
