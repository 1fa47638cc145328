// spectrum.hpp - transmission spectrum container shared by the quantum and
// semi-classical models and the lineshape analysis.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "eitcav/params.hpp"

namespace eitcav {

enum class Model { AnalyticDark, FullLinear, Semiclassical };

std::string_view to_string(Model m);
std::optional<Model> model_from_string(std::string_view name);

// Ordered detuning grid with transmission values and the parameters that
// produced them. detunings strictly increasing, one T per grid point,
// 0 <= T <= 1 (up to 1e-9 slack).
struct Spectrum {
    std::vector<double> detunings;
    std::vector<double> transmission;
    Model model = Model::AnalyticDark;
    AtomCavityParams params_snapshot;
};

}  // namespace eitcav
