// params.hpp - parameter types, unit convention and validation shared by all modules.
//
// All rates (g, omega_c, kappa, gamma_e, gamma_s) and detunings are expressed
// in one declared rate unit; the default convention is units of kappa. Every
// contract-bearing output (transmission, cos^2(theta), linewidth ratios) is
// dimensionless, so rescaling all rates by a common positive factor leaves
// results unchanged.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eitcav {

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a numerical evaluation fails (singular system, non-convergence).
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Atom-cavity system: N three-level atoms in a Lambda configuration coupled
// to one cavity mode (single-atom rate g) and a classical control field
// (Rabi coupling omega_c). kappa is the bare cavity decay rate, gamma_e the
// excited-state spontaneous-emission rate, gamma_s the ground-state coherence
// decay rate (0 for ideal ground states).
struct AtomCavityParams {
    std::int64_t n_atoms = 0;
    double g = 0.0;
    double omega_c = 0.0;
    double kappa = 1.0;
    double gamma_e = 0.0;
    double gamma_s = 0.0;
};

// Returns p unchanged if all invariants hold, throws validation_error with a
// distinct diagnostic otherwise. Required invariants:
//   n_atoms >= 0, g >= 0, omega_c >= 0, kappa > 0, gamma_e >= 0, gamma_s >= 0,
//   N*g^2 + omega_c^2 > 0 (the polariton basis must be definable).
AtomCavityParams validate_params(const AtomCavityParams& p);

// Uniform detuning grid, endpoints inclusive, strictly increasing.
struct DetuningGrid {
    double min = -1.0;
    double max = 1.0;
    std::size_t points = 2;

    double step() const { return (max - min) / static_cast<double>(points - 1); }

    // at(points-1) returns max exactly.
    double at(std::size_t i) const {
        return i + 1 == points ? max : min + static_cast<double>(i) * step();
    }

    std::vector<double> values() const;
};

// min < max, points >= 2.
DetuningGrid validate_grid(const DetuningGrid& grid);

// Field amplitudes at the two mirror ports, normalized to the input drive.
struct PortAmplitudes {
    std::complex<double> alpha_in{};
    std::complex<double> beta_in{};
    std::complex<double> alpha_out{};
    std::complex<double> beta_out{};
};

}  // namespace eitcav
