// polariton.hpp - dark/bright cavity-polariton basis and coupling-regime
// diagnostics.
//
// The cavity field a and the collective spin coherence C_s mix into
//   m_D = cos(theta) a - sin(theta) C_s   (dark polariton)
//   m_B = sin(theta) a + cos(theta) C_s   (bright polariton)
// with cos(theta) = Omega / sqrt(N g^2 + Omega^2). The dark polariton is
// decoupled from the excited state and decays at kappa_D = cos^2(theta) kappa;
// the bright polariton couples to the excited state with strength
// sqrt(N g^2 + Omega^2) and decays at kappa_B = sin^2(theta) kappa.

#pragma once

#include <complex>
#include <string_view>

#include "eitcav/params.hpp"

namespace eitcav {

struct PolaritonBasis {
    double cos_theta = 1.0;
    double sin_theta = 0.0;
    double kappa_d = 0.0;       // dark-polariton decay, cos^2(theta) * kappa
    double kappa_b = 0.0;       // bright-polariton decay, sin^2(theta) * kappa
    double collective_rabi = 0.0;  // sqrt(N g^2 + Omega^2)
};

// Amplitudes of the bare modes: cavity field a, collective excited-state
// amplitude C_e and collective spin amplitude C_s.
struct ModeAmplitudes {
    std::complex<double> a{};
    std::complex<double> c_e{};
    std::complex<double> c_s{};
};

struct PolaritonAmplitudes {
    std::complex<double> m_d{};
    std::complex<double> m_b{};
};

PolaritonBasis make_basis(const AtomCavityParams& p);

// 2x2 rotation (a, C_s) -> (m_D, m_B). C_e is outside the polariton pair and
// is ignored here.
PolaritonAmplitudes to_polariton(const ModeAmplitudes& m, const PolaritonBasis& b);

// Exact inverse rotation; c_e has no polariton representation and comes back
// as 0.
ModeAmplitudes from_polariton(const PolaritonAmplitudes& m, const PolaritonBasis& b);

enum class CouplingRegime { CollectiveStrong, Weak, Marginal };

std::string_view to_string(CouplingRegime r);

// Quantification of "much greater than" in the strong-coupling condition
// sqrt(N g^2 + Omega^2) >> kappa_B, gamma_e. Surfaced in reports so users can
// tighten it.
inline constexpr double kStrongCouplingFactor = 10.0;

struct RegimeReport {
    double margin = 0.0;  // sqrt(N g^2 + Omega^2) / max(kappa_B, gamma_e); +inf if that max is 0
    CouplingRegime label = CouplingRegime::Marginal;
    double strong_factor = kStrongCouplingFactor;
};

// collective-strong if sqrt(N) g >= kStrongCouplingFactor * max(kappa, gamma_e),
// weak if sqrt(N) g <= max(kappa, gamma_e), marginal otherwise.
RegimeReport coupling_regime(const AtomCavityParams& p);

}  // namespace eitcav
