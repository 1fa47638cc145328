#include "eitcav/quantum.hpp"

#include <array>
#include <cmath>
#include <string>

namespace eitcav {

namespace {

using cd = std::complex<double>;

// 3x3 complex linear solve, Gaussian elimination with partial pivoting.
// Returns the solution; |det| below 1e-300 is treated as singular.
std::array<cd, 3> solve3(std::array<std::array<cd, 3>, 3> m, std::array<cd, 3> rhs,
                         bool& singular) {
    cd det = 1.0;
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(rhs[pivot], rhs[col]);
            det = -det;
        }
        det *= m[col][col];
        if (std::abs(m[col][col]) == 0.0) break;
        for (int row = col + 1; row < 3; ++row) {
            const cd factor = m[row][col] / m[col][col];
            for (int k = col; k < 3; ++k) m[row][k] -= factor * m[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    if (std::abs(det) < 1e-300) {
        singular = true;
        return {};
    }
    singular = false;
    std::array<cd, 3> x{};
    for (int row = 2; row >= 0; --row) {
        cd acc = rhs[row];
        for (int k = row + 1; k < 3; ++k) acc -= m[row][k] * x[k];
        x[row] = acc / m[row][row];
    }
    return x;
}

}  // namespace

std::complex<double> dark_output_amplitude(double delta, double kappa_d,
                                           std::complex<double> beta_in) {
    if (!(kappa_d > 0.0))
        throw validation_error("dark_output_amplitude requires kappa_d > 0, got " +
                               std::to_string(kappa_d));
    return kappa_d * beta_in / cd(kappa_d, -delta);
}

double dark_transmission(double delta, double kappa_d) {
    if (!(kappa_d > 0.0))
        throw validation_error("dark_transmission requires kappa_d > 0, got " +
                               std::to_string(kappa_d));
    return kappa_d * kappa_d / (kappa_d * kappa_d + delta * delta);
}

double analytic_linewidth(const AtomCavityParams& p) {
    const PolaritonBasis b = make_basis(p);
    return 2.0 * b.kappa_d;
}

FullResponse full_response(double delta, const AtomCavityParams& p) {
    const cd beta_in = 1.0;
    const double root_n_g = std::sqrt(static_cast<double>(p.n_atoms)) * p.g;
    const double root_kappa = std::sqrt(p.kappa);
    const cd i(0.0, 1.0);

    if (root_n_g == 0.0) {
        // Atoms decouple; the undamped atomic block would otherwise make the
        // matrix singular at delta = +-omega_c without affecting the field.
        FullResponse out;
        out.modes.a = root_kappa * beta_in / cd(p.kappa, -delta);
        out.alpha_out = root_kappa * out.modes.a;
        return out;
    }

    std::array<std::array<cd, 3>, 3> m{{
        {cd(p.kappa, -delta), i * root_n_g, cd(0.0)},
        {i * root_n_g, cd(p.gamma_e, -delta), i * p.omega_c},
        {cd(0.0), i * p.omega_c, cd(p.gamma_s, -delta)},
    }};
    std::array<cd, 3> rhs{root_kappa * beta_in, cd(0.0), cd(0.0)};

    bool singular = false;
    const auto x = solve3(m, rhs, singular);
    if (singular)
        throw computation_error(
            "full_response: singular steady-state system at delta = " +
            std::to_string(delta) + " (N=" + std::to_string(p.n_atoms) +
            ", g=" + std::to_string(p.g) + ", omega_c=" + std::to_string(p.omega_c) +
            ", kappa=" + std::to_string(p.kappa) + ")");

    FullResponse out;
    out.modes = {x[0], x[1], x[2]};
    out.alpha_out = root_kappa * x[0];  // alpha_in = 0
    return out;
}

Spectrum sweep(const AtomCavityParams& p, const DetuningGrid& grid, Model model) {
    validate_params(p);
    validate_grid(grid);
    if (model != Model::AnalyticDark && model != Model::FullLinear)
        throw validation_error("sweep handles quantum models only, got " +
                               std::string(to_string(model)));

    Spectrum s;
    s.model = model;
    s.params_snapshot = p;
    s.detunings = grid.values();
    s.transmission.reserve(grid.points);

    const PolaritonBasis basis = make_basis(p);
    for (double delta : s.detunings) {
        double t = 0.0;
        try {
            if (model == Model::AnalyticDark) {
                t = dark_transmission(delta, basis.kappa_d);
            } else {
                const auto r = full_response(delta, p);
                t = std::norm(r.alpha_out);
            }
        } catch (const computation_error&) {
            throw;
        } catch (const std::exception& e) {
            throw computation_error("sweep failed at delta = " + std::to_string(delta) +
                                    ": " + e.what());
        }
        if (!(t >= 0.0) || t > 1.0 + 1e-9)
            throw computation_error("transmission out of [0, 1] at delta = " +
                                    std::to_string(delta) + ": T = " + std::to_string(t));
        s.transmission.push_back(t);
    }
    return s;
}

}  // namespace eitcav
