// semiclassical.hpp - semi-classical cavity linewidth narrowing from the
// Lambda-system susceptibility.
//
// The cavity-with-medium to empty-cavity linewidth ratio is
//   v/v0 = (1 - r tau) / (sqrt(tau) (1 - r)) * 1 / (1 + eta)
// with tau = exp(-alpha l) the single-pass intensity transmission and
// eta = omega_r (l / 2L) dchi'/domega_p the dispersion pulling factor.
// The susceptibility model is the standard Lambda-EIT linear form
//   chi(delta) = i C (gamma_s - i delta) / ((gamma_e - i delta)(gamma_s - i delta) + Omega^2),
// which reduces to a two-level Lorentzian absorber at Omega = 0 and has an
// exact transparency null at delta = 0 when gamma_s = 0.

#pragma once

#include <complex>

#include "eitcav/params.hpp"

namespace eitcav {

struct SemiClassicalParams {
    double length_medium = 1.0;   // l
    double length_cavity = 1.0;   // L, >= l
    double reflectivity = 0.99;   // r, intensity reflectivity, 0 < r < 1
    double omega_r = 1.0;         // cavity resonant frequency
    double chi_prefactor = 0.0;   // C, dimensionless susceptibility scale
    double gamma_e = 0.0;
    double gamma_s = 0.0;
    double omega_c = 0.0;         // control Rabi coupling Omega
    double probe_frequency = 1.0; // omega_p
    double c_light = 1.0;         // normalized units by default
};

SemiClassicalParams validate_params(const SemiClassicalParams& p);

// Named constructor with the consistency mapping C = 2 L N g^2 / (l omega_r).
// The mapping is derived, not given: it is exactly the prefactor that makes
// the semi-classical ratio reproduce the quantum cos^2(theta) result in the
// tau -> 1 limit.
SemiClassicalParams consistent_semiclassical(const AtomCavityParams& p,
                                             double length_medium,
                                             double length_cavity,
                                             double reflectivity,
                                             double omega_r);

// chi(delta) = chi' + i chi'' at two-photon detuning delta.
std::complex<double> eit_susceptibility(double delta, const SemiClassicalParams& p);

// alpha = 2 pi omega_p chi'' / c. Rejects chi'' < 0 (gain media out of scope).
double absorption_coefficient(double chi_imag, double omega_p, double c_light);

// The ratio v/v0 above. Requires 0 < tau <= 1, 0 < r < 1, eta >= 0.
double linewidth_ratio(double tau, double r, double eta);

struct SemiClassicalIntermediates {
    std::complex<double> chi{};  // at line center
    double alpha = 0.0;          // absorption coefficient
    double tau = 1.0;            // single-pass intensity transmission
    double eta = 0.0;            // dispersion pulling factor
};

struct SemiClassicalResult {
    double ratio = 1.0;  // v / v0
    SemiClassicalIntermediates intermediates;
};

// Finite-difference step for dchi'/domega_p at line center. The closed-form
// slope C/Omega^2 (gamma_s = 0) is kept as a test oracle for this choice.
double dispersion_slope_step(const SemiClassicalParams& p);

// Evaluates chi at line center, tau = exp(-alpha l), eta from a central
// finite difference of chi', and the ratio via linewidth_ratio.
SemiClassicalResult semiclassical_linewidth(const SemiClassicalParams& p);

}  // namespace eitcav
