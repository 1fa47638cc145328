// quantum.hpp - quantum input-output transmission models.
//
// Two routes to the cavity transmission spectrum:
//   * analytic-dark: the dark-polariton response
//       alpha_out = kappa_D beta_in / (kappa_D - i Delta),
//       T(Delta)  = kappa_D^2 / (kappa_D^2 + Delta^2),
//     valid near cavity resonance when the bright polariton is far detuned.
//   * full-linear: exact steady state of the un-truncated three-mode system
//     (a, C_e, C_s) driven through one mirror, which also produces the vacuum
//     Rabi side peaks at Delta ~ +-sqrt(N g^2 + Omega^2).
//
// Port convention: total field damping kappa (kappa_D for the dark polariton),
// each of the two ports couples with amplitude sqrt(kappa), and
// alpha_out + alpha_in = sqrt(kappa) a. On resonance this gives T = 1.

#pragma once

#include <complex>

#include "eitcav/params.hpp"
#include "eitcav/polariton.hpp"
#include "eitcav/spectrum.hpp"

namespace eitcav {

// alpha_out for the dark-polariton model with drive beta_in through the far
// mirror (alpha_in = 0). Requires kappa_d > 0.
std::complex<double> dark_output_amplitude(double delta, double kappa_d,
                                           std::complex<double> beta_in);

// T = kappa_d^2 / (kappa_d^2 + delta^2). Requires kappa_d > 0.
double dark_transmission(double delta, double kappa_d);

// FWHM of the dark-polariton transmission peak: 2 kappa cos^2(theta). The
// empty-cavity value (N = 0) is 2 kappa.
double analytic_linewidth(const AtomCavityParams& p);

struct FullResponse {
    ModeAmplitudes modes;
    std::complex<double> alpha_out{};
};

// Steady state of
//   (kappa - i Delta) a            + i sqrt(N) g C_e                    = sqrt(kappa) beta_in
//   i sqrt(N) g a + (gamma_e - i Delta) C_e + i Omega C_s               = 0
//                   i Omega C_e            + (gamma_s - i Delta) C_s    = 0
// with beta_in = 1, alpha_in = 0, and alpha_out = sqrt(kappa) a.
// Throws computation_error (carrying Delta) if the system is singular.
FullResponse full_response(double delta, const AtomCavityParams& p);

// Pointwise evaluation of the chosen quantum model over the grid. model must
// be AnalyticDark or FullLinear; evaluation errors propagate with the
// offending detuning attached.
Spectrum sweep(const AtomCavityParams& p, const DetuningGrid& grid, Model model);

}  // namespace eitcav
