#include "eitcav/lineshape.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace eitcav {

namespace {

void require_spectrum(const Spectrum& s, std::size_t min_points, const char* who) {
    if (s.detunings.size() != s.transmission.size())
        throw validation_error(std::string(who) + ": detuning/transmission length mismatch");
    if (s.detunings.size() < min_points)
        throw validation_error(std::string(who) + ": needs >= " +
                               std::to_string(min_points) + " points, got " +
                               std::to_string(s.detunings.size()));
}

// Index of the sample (plateau midpoint) holding the maximum transmission.
std::size_t peak_index(const Spectrum& s) {
    const auto it = std::max_element(s.transmission.begin(), s.transmission.end());
    std::size_t lo = static_cast<std::size_t>(it - s.transmission.begin());
    std::size_t hi = lo;
    while (hi + 1 < s.transmission.size() && s.transmission[hi + 1] == *it) ++hi;
    return (lo + hi) / 2;
}

// Symmetric 3x3 linear solve for the Gauss-Newton normal equations.
std::array<double, 3> solve_normal(std::array<std::array<double, 3>, 3> m,
                                   std::array<double, 3> rhs, bool& singular) {
    singular = false;
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        if (std::abs(m[pivot][col]) < 1e-300) {
            singular = true;
            return {};
        }
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (int row = col + 1; row < 3; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < 3; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::array<double, 3> x{};
    for (int row = 2; row >= 0; --row) {
        double acc = rhs[row];
        for (int k = row + 1; k < 3; ++k) acc -= m[row][k] * x[k];
        x[row] = acc / m[row][row];
    }
    return x;
}

double rms_residual(const Spectrum& s, double amp, double center, double width) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.detunings.size(); ++i) {
        const double dx = s.detunings[i] - center;
        const double model = amp * width * width / (width * width + dx * dx);
        const double r = model - s.transmission[i];
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(s.detunings.size()));
}

}  // namespace

std::vector<Peak> find_peaks(const Spectrum& s) {
    require_spectrum(s, 3, "find_peaks");
    std::vector<Peak> peaks;
    const auto& t = s.transmission;
    const auto& d = s.detunings;
    std::size_t i = 1;
    while (i + 1 < t.size()) {
        if (t[i] <= t[i - 1]) {
            ++i;
            continue;
        }
        // Rose above the left neighbor; extend over any plateau.
        std::size_t j = i;
        while (j + 1 < t.size() && t[j + 1] == t[i]) ++j;
        if (j + 1 < t.size() && t[j + 1] < t[i])
            peaks.push_back({(d[i] + d[j]) / 2.0, t[i]});
        i = j + 1;
    }
    return peaks;
}

double fwhm_of_central_peak(const Spectrum& s) {
    require_spectrum(s, 3, "fwhm_of_central_peak");
    const auto& t = s.transmission;
    const auto& d = s.detunings;

    const std::size_t p = peak_index(s);
    if (p == 0 || p + 1 == t.size())
        throw computation_error(
            "fwhm_of_central_peak: maximum sits on the grid boundary; widen the grid");
    const double half = t[p] / 2.0;

    auto cross = [&](bool leftward) -> double {
        std::size_t i = p;
        double t_min = t[p];
        while (leftward ? i > 0 : i + 1 < t.size()) {
            const std::size_t j = leftward ? i - 1 : i + 1;
            t_min = std::min(t_min, t[j]);
            if (t[j] <= half) {
                // Linear interpolation between samples j and i.
                const double frac = (half - t[i]) / (t[j] - t[i]);
                return d[i] + frac * (d[j] - d[i]);
            }
            i = j;
        }
        throw computation_error(
            "fwhm_of_central_peak: half maximum not bracketed within the grid "
            "(minimum T reached on that side: " + std::to_string(t_min) +
            "); widen the grid");
    };

    const double left = cross(true);
    const double right = cross(false);
    return right - left;
}

LorentzianFit lorentzian_fit(const Spectrum& s) {
    require_spectrum(s, 5, "lorentzian_fit");
    const auto& t = s.transmission;

    const std::size_t p = peak_index(s);
    double amp = t[p];
    if (!(amp > 0.0))
        throw validation_error("lorentzian_fit: needs a positive peak");
    double center = s.detunings[p];
    double width;
    try {
        width = fwhm_of_central_peak(s) / 2.0;
    } catch (const computation_error&) {
        width = (s.detunings.back() - s.detunings.front()) / 4.0;
    }

    constexpr int kMaxIterations = 200;
    constexpr double kTolerance = 1e-10;
    double residual = rms_residual(s, amp, center, width);
    int iter = 0;
    for (; iter < kMaxIterations; ++iter) {
        // Normal equations J^T J dp = -J^T r for parameters (A, center, w).
        std::array<std::array<double, 3>, 3> jtj{};
        std::array<double, 3> jtr{};
        for (std::size_t i = 0; i < s.detunings.size(); ++i) {
            const double dx = s.detunings[i] - center;
            const double den = width * width + dx * dx;
            const double shape = width * width / den;
            const double r = amp * shape - t[i];
            const std::array<double, 3> jac = {
                shape,
                amp * width * width * 2.0 * dx / (den * den),
                amp * 2.0 * width * dx * dx / (den * den),
            };
            for (int a = 0; a < 3; ++a) {
                jtr[a] += jac[a] * r;
                for (int b = 0; b < 3; ++b) jtj[a][b] += jac[a] * jac[b];
            }
        }
        bool singular = false;
        auto step = solve_normal(jtj, {-jtr[0], -jtr[1], -jtr[2]}, singular);
        if (singular)
            throw computation_error("lorentzian_fit: singular normal equations after " +
                                    std::to_string(iter) + " iterations");

        // Damping: halve the step until the residual does not increase.
        double scale = 1.0;
        double new_amp = amp, new_center = center, new_width = width, new_res = residual;
        bool accepted = false;
        for (int halving = 0; halving < 30; ++halving) {
            new_amp = amp + scale * step[0];
            new_center = center + scale * step[1];
            new_width = width + scale * step[2];
            if (new_width != 0.0 && new_amp > 0.0) {
                new_res = rms_residual(s, new_amp, new_center, new_width);
                if (new_res <= residual) {
                    accepted = true;
                    break;
                }
            }
            scale /= 2.0;
        }
        if (!accepted) break;  // no downhill step left, treat as converged

        const double rel_change = std::max(
            {std::abs(new_amp - amp) / std::max(std::abs(amp), 1e-30),
             std::abs(new_center - center) / std::max(std::abs(center), std::abs(width)),
             std::abs(new_width - width) / std::max(std::abs(width), 1e-30)});
        amp = new_amp;
        center = new_center;
        width = new_width;
        residual = new_res;
        if (rel_change < kTolerance) break;
    }
    if (iter == kMaxIterations)
        throw computation_error("lorentzian_fit: no convergence after " +
                                std::to_string(kMaxIterations) +
                                " iterations (last residual " + std::to_string(residual) +
                                ")");

    LorentzianFit fit;
    fit.amplitude = amp;
    fit.center = center;
    fit.width = std::abs(width);
    fit.residual = residual;
    fit.iterations = iter + 1;
    return fit;
}

LineshapeReport analyze(const Spectrum& s) {
    LineshapeReport report;
    for (const Peak& p : find_peaks(s)) {
        report.peak_positions.push_back(p.delta);
        report.peak_heights.push_back(p.height);
    }
    report.fwhm = fwhm_of_central_peak(s);
    const LorentzianFit fit = lorentzian_fit(s);
    report.fit_center = fit.center;
    report.fit_width = fit.width;
    report.fit_amplitude = fit.amplitude;
    report.fit_residual = fit.residual;
    return report;
}

}  // namespace eitcav
