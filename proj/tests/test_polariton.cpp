#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "eitcav/polariton.hpp"

using namespace eitcav;

TEST_CASE("make_basis reproduces the reference mixing angle") {
    const auto b = make_basis({400, 1.0, 5.0, 1.0, 1.0, 0.0});
    CHECK(b.cos_theta * b.cos_theta == doctest::Approx(25.0 / 425.0).epsilon(1e-14));
    CHECK(b.kappa_d == doctest::Approx(25.0 / 425.0).epsilon(1e-14));
    CHECK(b.collective_rabi == doctest::Approx(20.615528128088304).epsilon(1e-14));
}

TEST_CASE("no atoms: the dark polariton is the bare cavity field") {
    const auto b = make_basis({0, 3.0, 1.0, 1.0, 0.0, 0.0});
    CHECK(b.cos_theta == 1.0);
    CHECK(b.sin_theta == 0.0);
    CHECK(b.kappa_d == 1.0);
    CHECK(b.kappa_b == 0.0);
}

TEST_CASE("make_basis, weak control field") {
    const auto b = make_basis({400, 1.0, 0.5, 1.0, 1.0, 0.0});
    CHECK(b.cos_theta * b.cos_theta == doctest::Approx(0.0006246096189881324).epsilon(1e-12));
    CHECK(b.collective_rabi == doctest::Approx(20.006249023742555).epsilon(1e-14));
}

TEST_CASE("polariton rotation: identity, pure bright state, 3-4-5 angle") {
    PolaritonBasis identity{1.0, 0.0, 1.0, 0.0, 1.0};
    auto r = to_polariton({1.0, 0.0, 0.0}, identity);
    CHECK(r.m_d == std::complex<double>(1.0));
    CHECK(r.m_b == std::complex<double>(0.0));

    PolaritonBasis b{0.8, 0.6, 0.64, 0.36, 1.0};
    r = to_polariton({b.sin_theta, 0.0, b.cos_theta}, b);
    CHECK(std::abs(r.m_d) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(r.m_b - 1.0) == doctest::Approx(0.0).epsilon(1e-15));

    r = to_polariton({0.6, 0.0, 0.8}, b);
    CHECK(std::abs(r.m_d) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(r.m_b - 1.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("from_polariton inverts to_polariton and zeroes c_e") {
    PolaritonBasis b{0.8, 0.6, 0.64, 0.36, 1.0};
    const ModeAmplitudes m{{0.3, -0.2}, {9.0, 9.0}, {-1.1, 0.4}};
    const auto round = from_polariton(to_polariton(m, b), b);
    CHECK(std::abs(round.a - m.a) < 1e-12);
    CHECK(std::abs(round.c_s - m.c_s) < 1e-12);
    CHECK(round.c_e == std::complex<double>(0.0));

    auto back = from_polariton({1.0, 0.0}, PolaritonBasis{1.0, 0.0, 1.0, 0.0, 1.0});
    CHECK(back.a == std::complex<double>(1.0));
    CHECK(back.c_s == std::complex<double>(0.0));

    back = from_polariton({0.0, 1.0}, b);
    CHECK(std::abs(back.a - 0.6) < 1e-15);
    CHECK(std::abs(back.c_s - 0.8) < 1e-15);
}

TEST_CASE("rotation unitarity and basis identities over random parameters") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> rate(0.01, 5.0);
    std::uniform_real_distribution<double> amp(-2.0, 2.0);
    std::uniform_int_distribution<std::int64_t> atoms(0, 2000);

    for (int trial = 0; trial < 200; ++trial) {
        AtomCavityParams p{atoms(rng), rate(rng), rate(rng), rate(rng), rate(rng), 0.0};
        const auto b = make_basis(p);

        CHECK(b.cos_theta * b.cos_theta + b.sin_theta * b.sin_theta ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(b.kappa_d + b.kappa_b == doctest::Approx(p.kappa).epsilon(1e-12));
        // kappa_D N g^2 = kappa_B Omega^2
        const double ng2 = static_cast<double>(p.n_atoms) * p.g * p.g;
        CHECK(b.kappa_d * ng2 ==
              doctest::Approx(b.kappa_b * p.omega_c * p.omega_c).epsilon(1e-12));

        const ModeAmplitudes m{{amp(rng), amp(rng)}, {0.0, 0.0}, {amp(rng), amp(rng)}};
        const auto r = to_polariton(m, b);
        CHECK(std::norm(r.m_d) + std::norm(r.m_b) ==
              doctest::Approx(std::norm(m.a) + std::norm(m.c_s)).epsilon(1e-12));
    }
}

TEST_CASE("kappa_d is increasing in omega_c and decreasing in N g^2") {
    const AtomCavityParams base{400, 1.0, 2.0, 1.0, 1.0, 0.0};
    double prev = 0.0;
    for (double omega : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        AtomCavityParams p = base;
        p.omega_c = omega;
        const double kd = make_basis(p).kappa_d;
        CHECK(kd > prev);
        prev = kd;
    }
    prev = 2.0;  // above kappa, any kappa_d is smaller
    for (std::int64_t n : {10, 100, 1000, 10000}) {
        AtomCavityParams p = base;
        p.n_atoms = n;
        const double kd = make_basis(p).kappa_d;
        CHECK(kd < prev);
        prev = kd;
    }
}

TEST_CASE("kappa_d limits in the control field") {
    AtomCavityParams p{400, 1.0, 1e8, 1.0, 1.0, 0.0};
    CHECK(make_basis(p).kappa_d == doctest::Approx(p.kappa).epsilon(1e-6));
    p.omega_c = 1e-8;
    CHECK(make_basis(p).kappa_d < 1e-15);
}

TEST_CASE("coupling_regime labels and margins") {
    auto report = coupling_regime({400, 1.0, 5.0, 1.0, 1.0, 0.0});
    CHECK(report.label == CouplingRegime::CollectiveStrong);
    CHECK(report.margin == doctest::Approx(20.615528128088304).epsilon(1e-6));

    report = coupling_regime({1, 0.1, 10.0, 1.0, 1.0, 0.0});
    CHECK(report.label == CouplingRegime::Weak);

    report = coupling_regime({400, 1.0, 0.0, 1.0, 1.0, 0.0});
    CHECK(report.label == CouplingRegime::CollectiveStrong);
    CHECK(report.margin == doctest::Approx(20.0).epsilon(1e-12));

    // between the thresholds
    report = coupling_regime({25, 1.0, 1.0, 1.0, 1.0, 0.0});
    CHECK(report.label == CouplingRegime::Marginal);

    // no damping to compare against: infinite margin
    report = coupling_regime({0, 0.0, 1.0, 1.0, 0.0, 0.0});
    CHECK(std::isinf(report.margin));
}
