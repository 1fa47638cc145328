#include "eitcav/polariton.hpp"

#include <cmath>
#include <limits>

namespace eitcav {

PolaritonBasis make_basis(const AtomCavityParams& p) {
    const double n = static_cast<double>(p.n_atoms);
    const double rabi = std::sqrt(n * p.g * p.g + p.omega_c * p.omega_c);
    PolaritonBasis b;
    b.collective_rabi = rabi;
    b.cos_theta = p.omega_c / rabi;
    b.sin_theta = std::sqrt(n) * p.g / rabi;
    b.kappa_d = b.cos_theta * b.cos_theta * p.kappa;
    b.kappa_b = b.sin_theta * b.sin_theta * p.kappa;
    return b;
}

PolaritonAmplitudes to_polariton(const ModeAmplitudes& m, const PolaritonBasis& b) {
    return {b.cos_theta * m.a - b.sin_theta * m.c_s,
            b.sin_theta * m.a + b.cos_theta * m.c_s};
}

ModeAmplitudes from_polariton(const PolaritonAmplitudes& m, const PolaritonBasis& b) {
    ModeAmplitudes out;
    out.a = b.cos_theta * m.m_d + b.sin_theta * m.m_b;
    out.c_s = -b.sin_theta * m.m_d + b.cos_theta * m.m_b;
    out.c_e = 0.0;
    return out;
}

std::string_view to_string(CouplingRegime r) {
    switch (r) {
        case CouplingRegime::CollectiveStrong: return "collective-strong";
        case CouplingRegime::Weak: return "weak";
        case CouplingRegime::Marginal: return "marginal";
    }
    return "unknown";
}

RegimeReport coupling_regime(const AtomCavityParams& p) {
    const PolaritonBasis b = make_basis(p);
    RegimeReport report;
    const double damping = std::max(b.kappa_b, p.gamma_e);
    report.margin = damping > 0.0 ? b.collective_rabi / damping
                                  : std::numeric_limits<double>::infinity();
    const double collective_g = std::sqrt(static_cast<double>(p.n_atoms)) * p.g;
    const double bare = std::max(p.kappa, p.gamma_e);
    if (collective_g >= kStrongCouplingFactor * bare)
        report.label = CouplingRegime::CollectiveStrong;
    else if (collective_g <= bare)
        report.label = CouplingRegime::Weak;
    else
        report.label = CouplingRegime::Marginal;
    return report;
}

}  // namespace eitcav
