#pragma once

#include "fluxqm/model.hpp"

namespace fluxqm {

/// Closed-form displacement + squeezing solution of the linear ring-cavity
/// model. Energies in E0, frequencies as hbar*Omega in E0.
struct AnalyticSolution {
    double omega_dressed;  // hbar Omega
    double chi;            // induced collective coupling
    double squeeze_r;      // 1/4 ln(beta/alpha)
    double alpha;          // hbar omega
    double beta;           // 4 g phi^2 N + hbar omega
    double x0_per_m;       // displacement of x = (a + a^+)/sqrt2 per unit M

    /// Quadrature variances in the squeezed vacuum.
    double x_variance() const;
    double p_variance() const;
};

/// hbar Omega = sqrt(hbar omega (hbar omega + 4 g N phi^2)).
double dressed_frequency(const ModelParams& p);

/// chi = 4 g^2 phi^2 / (hbar omega + 4 g N phi^2).
double induced_coupling(const ModelParams& p);

AnalyticSolution squeeze_solution(const ModelParams& p);

/// E = g_eff W - chi M^2 + hbar Omega (n + 1/2) - hbar omega / 2.
///
/// The trailing -hbar omega/2 keeps the spectrum aligned with the bare
/// hbar omega a^+a Hamiltonian, so at phi = 0 the ladder starts at g_eff W.
double sector_energy(const ModelParams& p, const FermionConfig& cfg, int n);

/// <a> in the ground state of sector M: g phi M / (2 g phi^2 N + hbar omega / 2).
double ground_displacement(const ModelParams& p, std::int64_t m_total);

}  // namespace fluxqm
