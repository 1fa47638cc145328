#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eitcav/polariton.hpp"
#include "eitcav/semiclassical.hpp"

using namespace eitcav;

namespace {

SemiClassicalParams base_params() {
    SemiClassicalParams p;
    p.length_medium = 1.0;
    p.length_cavity = 1.0;
    p.reflectivity = 0.99;
    p.omega_r = 1.0;
    p.chi_prefactor = 800.0;
    p.gamma_e = 1.0;
    p.gamma_s = 0.0;
    p.omega_c = 5.0;
    p.probe_frequency = 1.0;
    return p;
}

}  // namespace

TEST_CASE("eit_susceptibility: transparency null at line center") {
    const auto chi = eit_susceptibility(0.0, base_params());
    CHECK(std::abs(chi) == 0.0);
}

TEST_CASE("eit_susceptibility: control off reduces to a two-level absorber") {
    auto p = base_params();
    p.omega_c = 0.0;
    const auto chi = eit_susceptibility(0.0, p);
    CHECK(chi.real() == doctest::Approx(0.0));
    CHECK(chi.imag() == doctest::Approx(p.chi_prefactor / p.gamma_e).epsilon(1e-14));
}

TEST_CASE("eit_susceptibility rejects the fully degenerate point") {
    SemiClassicalParams p = base_params();
    p.omega_c = 0.0;
    p.gamma_e = 0.0;
    p.gamma_s = 0.0;
    CHECK_THROWS_AS(eit_susceptibility(0.0, p), computation_error);
}

TEST_CASE("dispersion slope at line center matches the closed form C/Omega^2") {
    const auto p = base_params();
    const double h = dispersion_slope_step(p);
    const double slope =
        (eit_susceptibility(h, p).real() - eit_susceptibility(-h, p).real()) / (2.0 * h);
    const double closed_form = p.chi_prefactor / (p.omega_c * p.omega_c);
    CHECK(slope == doctest::Approx(closed_form).epsilon(1e-6));
}

TEST_CASE("absorption_coefficient") {
    CHECK(absorption_coefficient(0.0, 1.0, 1.0) == 0.0);
    CHECK(absorption_coefficient(1.0, 1.0, 2.0 * std::numbers::pi) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(absorption_coefficient(0.4, 1.3, 1.0) ==
          doctest::Approx(2.0 * absorption_coefficient(0.2, 1.3, 1.0)).epsilon(1e-14));
    CHECK_THROWS_AS(absorption_coefficient(-0.1, 1.0, 1.0), validation_error);
}

TEST_CASE("linewidth_ratio") {
    CHECK(linewidth_ratio(1.0, 0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(linewidth_ratio(1.0, 0.999, 0.0) == doctest::Approx(1.0).epsilon(1e-12));

    // tau = 1, eta = N g^2 / Omega^2 recovers cos^2(theta)
    const double ng2 = 400.0, omega2 = 25.0;
    CHECK(linewidth_ratio(1.0, 0.9, ng2 / omega2) ==
          doctest::Approx(omega2 / (ng2 + omega2)).epsilon(1e-14));

    CHECK(linewidth_ratio(std::exp(-0.001), 0.99, 1000.0) ==
          doctest::Approx(0.0010984017274184188).epsilon(1e-13));

    CHECK_THROWS_AS(linewidth_ratio(0.0, 0.5, 0.0), validation_error);
    CHECK_THROWS_AS(linewidth_ratio(1.0, 1.0, 0.0), validation_error);
    CHECK_THROWS_AS(linewidth_ratio(1.0, 0.5, -1.0), validation_error);
}

TEST_CASE("linewidth_ratio is strictly decreasing in eta") {
    double prev = linewidth_ratio(0.9, 0.9, 0.0);
    for (double eta : {0.5, 1.0, 5.0, 50.0, 500.0}) {
        const double r = linewidth_ratio(0.9, 0.9, eta);
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("semiclassical_linewidth: gamma_s = 0 gives tau = 1 and ratio 1/(1+eta)") {
    const auto result = semiclassical_linewidth(base_params());
    CHECK(result.intermediates.tau == 1.0);
    CHECK(result.intermediates.alpha == 0.0);
    CHECK(result.ratio ==
          doctest::Approx(1.0 / (1.0 + result.intermediates.eta)).epsilon(1e-14));
}

TEST_CASE("consistency mapping reproduces the quantum cos^2(theta)") {
    for (double omega_c : {5.0, 0.5}) {
        const AtomCavityParams p{400, 1.0, omega_c, 1.0, 1.0, 0.0};
        const auto sc = consistent_semiclassical(p, 1.0, 1.0, 0.99, 1.0);
        const auto basis = make_basis(p);
        const double expected = basis.cos_theta * basis.cos_theta;
        CHECK(semiclassical_linewidth(sc).ratio ==
              doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("consistency mapping with arbitrary geometry still cancels") {
    const AtomCavityParams p{250, 0.7, 1.3, 1.0, 2.0, 0.0};
    const auto sc = consistent_semiclassical(p, 0.03, 0.5, 0.95, 3.7e6);
    const auto basis = make_basis(p);
    CHECK(semiclassical_linewidth(sc).ratio ==
          doctest::Approx(basis.cos_theta * basis.cos_theta).epsilon(1e-6));
}

TEST_CASE("large control field with fixed prefactor: dispersionless limit") {
    auto p = base_params();
    p.omega_c = 1e5;
    const auto result = semiclassical_linewidth(p);
    CHECK(result.intermediates.eta < 1e-7);
    const double dispersionless =
        (1.0 - p.reflectivity * result.intermediates.tau) /
        (std::sqrt(result.intermediates.tau) * (1.0 - p.reflectivity));
    CHECK(result.ratio == doctest::Approx(dispersionless).epsilon(1e-6));
}

TEST_CASE("finite ground-state decay turns on absorption") {
    auto p = base_params();
    p.gamma_s = 0.05;
    const auto result = semiclassical_linewidth(p);
    CHECK(result.intermediates.chi.imag() > 0.0);
    CHECK(result.intermediates.tau < 1.0);
    CHECK(result.intermediates.tau > 0.0);
}

TEST_CASE("semiclassical parameter validation") {
    auto p = base_params();
    p.reflectivity = 1.0;
    CHECK_THROWS_AS(validate_params(p), validation_error);
    p = base_params();
    p.length_cavity = 0.5 * p.length_medium;
    CHECK_THROWS_AS(validate_params(p), validation_error);
    p = base_params();
    p.chi_prefactor = -1.0;
    CHECK_THROWS_AS(validate_params(p), validation_error);
}
