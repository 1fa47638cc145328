#include "eitcav/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace eitcav {

SemiClassicalParams validate_params(const SemiClassicalParams& p) {
    if (!(p.length_medium > 0.0))
        throw validation_error("length_medium must be > 0, got " +
                               std::to_string(p.length_medium));
    if (!(p.length_cavity >= p.length_medium))
        throw validation_error("length_cavity must be >= length_medium");
    if (!(p.reflectivity > 0.0 && p.reflectivity < 1.0))
        throw validation_error("reflectivity must lie in (0, 1), got " +
                               std::to_string(p.reflectivity));
    if (!(p.chi_prefactor >= 0.0))
        throw validation_error("chi_prefactor must be >= 0, got " +
                               std::to_string(p.chi_prefactor));
    if (!(p.gamma_e >= 0.0) || !(p.gamma_s >= 0.0) || !(p.omega_c >= 0.0))
        throw validation_error("rates gamma_e, gamma_s, omega_c must be >= 0");
    if (!(p.omega_r > 0.0))
        throw validation_error("omega_r must be > 0, got " + std::to_string(p.omega_r));
    if (!(p.probe_frequency > 0.0))
        throw validation_error("probe_frequency must be > 0, got " +
                               std::to_string(p.probe_frequency));
    if (!(p.c_light > 0.0))
        throw validation_error("c_light must be > 0, got " + std::to_string(p.c_light));
    return p;
}

SemiClassicalParams consistent_semiclassical(const AtomCavityParams& p,
                                             double length_medium,
                                             double length_cavity,
                                             double reflectivity,
                                             double omega_r) {
    validate_params(p);
    SemiClassicalParams sc;
    sc.length_medium = length_medium;
    sc.length_cavity = length_cavity;
    sc.reflectivity = reflectivity;
    sc.omega_r = omega_r;
    sc.chi_prefactor = 2.0 * length_cavity * static_cast<double>(p.n_atoms) * p.g * p.g /
                       (length_medium * omega_r);
    sc.gamma_e = p.gamma_e;
    sc.gamma_s = p.gamma_s;
    sc.omega_c = p.omega_c;
    sc.probe_frequency = omega_r;
    return validate_params(sc);
}

std::complex<double> eit_susceptibility(double delta, const SemiClassicalParams& p) {
    using cd = std::complex<double>;
    const cd ge(p.gamma_e, -delta);
    const cd gs(p.gamma_s, -delta);
    if (p.omega_c == 0.0) {
        // gs cancels and the two-level Lorentzian i C / (gamma_e - i delta) remains.
        if (std::abs(ge) == 0.0)
            throw computation_error(
                "eit_susceptibility: vanishing denominator (gamma_e = gamma_s = "
                "omega_c = delta = 0)");
        return cd(0.0, 1.0) * p.chi_prefactor / ge;
    }
    const cd denom = ge * gs + p.omega_c * p.omega_c;
    if (std::abs(denom) == 0.0)
        throw computation_error(
            "eit_susceptibility: vanishing denominator at delta = " +
            std::to_string(delta));
    return cd(0.0, 1.0) * p.chi_prefactor * gs / denom;
}

double absorption_coefficient(double chi_imag, double omega_p, double c_light) {
    if (chi_imag < 0.0)
        throw validation_error("absorption_coefficient: chi'' < 0 describes a gain "
                               "medium, got " + std::to_string(chi_imag));
    return 2.0 * std::numbers::pi * omega_p * chi_imag / c_light;
}

double linewidth_ratio(double tau, double r, double eta) {
    if (!(tau > 0.0 && tau <= 1.0))
        throw validation_error("linewidth_ratio requires tau in (0, 1], got " +
                               std::to_string(tau));
    if (!(r > 0.0 && r < 1.0))
        throw validation_error("linewidth_ratio requires r in (0, 1), got " +
                               std::to_string(r));
    if (!(eta >= 0.0))
        throw validation_error("linewidth_ratio requires eta >= 0, got " +
                               std::to_string(eta));
    return (1.0 - r * tau) / (std::sqrt(tau) * (1.0 - r)) / (1.0 + eta);
}

double dispersion_slope_step(const SemiClassicalParams& p) {
    // Capped at a fraction of Omega so the stencil stays inside the
    // transparency window for very strong control fields.
    const double h = std::min(1e-4 * p.omega_c * p.omega_c / std::max(p.gamma_e, 1.0),
                              1e-3 * p.omega_c);
    if (h > 0.0) return h;
    // omega_c = 0: the transparency window is gone and the relevant scale is
    // the absorption linewidth.
    return 1e-4 * std::max({p.gamma_e, p.gamma_s, 1.0});
}

SemiClassicalResult semiclassical_linewidth(const SemiClassicalParams& p) {
    validate_params(p);
    SemiClassicalResult out;
    auto& mid = out.intermediates;

    mid.chi = eit_susceptibility(0.0, p);
    // gamma_s = 0 gives chi(0) = 0 exactly; clamp the -0.0 imaginary part.
    const double chi_imag = mid.chi.imag() == 0.0 ? 0.0 : mid.chi.imag();
    mid.alpha = absorption_coefficient(chi_imag, p.probe_frequency, p.c_light);
    mid.tau = std::exp(-mid.alpha * p.length_medium);

    const double h = dispersion_slope_step(p);
    const double slope =
        (eit_susceptibility(h, p).real() - eit_susceptibility(-h, p).real()) / (2.0 * h);
    mid.eta = p.omega_r * (p.length_medium / (2.0 * p.length_cavity)) * slope;
    if (mid.eta < 0.0)
        throw computation_error("semiclassical_linewidth: negative dispersion pulling "
                                "factor eta = " + std::to_string(mid.eta));

    out.ratio = linewidth_ratio(mid.tau, p.reflectivity, mid.eta);
    return out;
}

}  // namespace eitcav
