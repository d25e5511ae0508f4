#pragma once

#include <nlohmann/json.hpp>

#include "nbs/estimation.hpp"
#include "nbs/gof.hpp"
#include "nbs/interval.hpp"
#include "nbs/simulation.hpp"

namespace nbs {

nlohmann::json to_json(const Interval& value);
nlohmann::json to_json(const FitReport& report);
nlohmann::json to_json(const GofResult& result);
nlohmann::json to_json(const SimSummary& summary);

}  // namespace nbs
