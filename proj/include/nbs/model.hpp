#pragma once

#include <array>
#include <string_view>

namespace nbs {

// nbs: Birnbaum-Saunders, nln: log-normal, ng: gamma.
enum class Model { nbs, nln, ng };

std::string_view to_string(Model model) noexcept;
Model parse_model(std::string_view text);

// Names of the two fitted parameters, e.g. {"alpha", "beta"}.
std::array<std::string_view, 2> param_names(Model model) noexcept;

}  // namespace nbs
