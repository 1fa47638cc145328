#include "eitcav/params.hpp"

#include <string>

namespace eitcav {

AtomCavityParams validate_params(const AtomCavityParams& p) {
    if (p.n_atoms < 0)
        throw validation_error("n_atoms must be >= 0, got " + std::to_string(p.n_atoms));
    if (!(p.g >= 0.0))
        throw validation_error("g must be >= 0, got " + std::to_string(p.g));
    if (!(p.omega_c >= 0.0))
        throw validation_error("omega_c must be >= 0, got " + std::to_string(p.omega_c));
    if (!(p.kappa > 0.0))
        throw validation_error("kappa must be > 0, got " + std::to_string(p.kappa));
    if (!(p.gamma_e >= 0.0))
        throw validation_error("gamma_e must be >= 0, got " + std::to_string(p.gamma_e));
    if (!(p.gamma_s >= 0.0))
        throw validation_error("gamma_s must be >= 0, got " + std::to_string(p.gamma_s));
    const double ng2 = static_cast<double>(p.n_atoms) * p.g * p.g;
    if (!(ng2 + p.omega_c * p.omega_c > 0.0))
        throw validation_error(
            "polariton basis undefined: N*g^2 + omega_c^2 must be > 0");
    return p;
}

std::vector<double> DetuningGrid::values() const {
    std::vector<double> out;
    out.reserve(points);
    for (std::size_t i = 0; i < points; ++i) out.push_back(at(i));
    return out;
}

DetuningGrid validate_grid(const DetuningGrid& grid) {
    if (grid.points < 2)
        throw validation_error("grid points must be >= 2, got " + std::to_string(grid.points));
    if (!(grid.min < grid.max))
        throw validation_error("grid requires min < max, got [" + std::to_string(grid.min) +
                               ", " + std::to_string(grid.max) + "]");
    return grid;
}

}  // namespace eitcav
