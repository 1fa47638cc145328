// lineshape.hpp - quantitative lineshape features of a transmission spectrum:
// peaks, FWHM, Lorentzian least-squares fit.
//
// FWHM is measured by linear interpolation of the half-maximum crossings, so
// it makes no assumption about the shape being Lorentzian; the fit is a
// separate, stricter instrument whose residual flags non-Lorentzian shapes.

#pragma once

#include <vector>

#include "eitcav/spectrum.hpp"

namespace eitcav {

struct Peak {
    double delta = 0.0;
    double height = 0.0;
};

// Strict local maxima (greater than both neighbors). A plateau of equal
// samples bounded by lower neighbors is reported once, at its midpoint.
// Requires >= 3 points.
std::vector<Peak> find_peaks(const Spectrum& s);

// FWHM of the peak nearest Delta = 0. Half-maximum crossings are located by
// linear interpolation between bracketing grid points. Throws
// computation_error (carrying the achieved minimum T) if the half level is
// not bracketed within the grid.
double fwhm_of_central_peak(const Spectrum& s);

struct LorentzianFit {
    double center = 0.0;
    double width = 0.0;      // half width at half maximum
    double amplitude = 0.0;
    double residual = 0.0;   // root-mean-square residual
    int iterations = 0;
};

// Least-squares fit of T(Delta) = A w^2 / (w^2 + (Delta - Delta0)^2) by damped
// Gauss-Newton iteration, initialized from find_peaks and
// fwhm_of_central_peak. Converged when the relative parameter change drops
// below 1e-10, capped at 200 iterations; non-convergence throws
// computation_error with an iteration summary. Requires >= 5 points and a
// positive peak.
LorentzianFit lorentzian_fit(const Spectrum& s);

struct LineshapeReport {
    std::vector<double> peak_positions;  // strictly increasing
    std::vector<double> peak_heights;
    double fwhm = 0.0;
    double fit_center = 0.0;
    double fit_width = 0.0;
    double fit_amplitude = 0.0;
    double fit_residual = 0.0;
};

LineshapeReport analyze(const Spectrum& s);

}  // namespace eitcav
