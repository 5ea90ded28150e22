#pragma once

#include <cstdint>
#include <vector>

#include "fluxqm/model.hpp"

namespace fluxqm {

/// Fixed-M sector of the Kerr cavity
///   g S2 + A P^2 + B X^2 - C M X + alpha4 X^4,   X = a + a^+, [X, P] = 2i,
/// after shifting X = x0 + X' to the minimum of the classical potential.
/// p.hbar_omega plays the role of the plasma energy hbar omega_p.
struct QuarticSector {
    std::int64_t m_total;
    double a;       // hbar omega_p / 4
    double b;       // hbar omega_p / 4 + g phi^2 N
    double c;       // 2 g phi
    double alpha4;
    double x0;      // root of 4 alpha4 x^3 + 2 B x - C M = 0
    double b_eff;   // B + 6 alpha4 x0^2
    double beta3;   // 4 alpha4 x0
    double v_eff;   // B x0^2 - C M x0 + alpha4 x0^4

    /// 4 alpha4 x0^3 + 2 B x0 - C M.
    double residual() const;
    double curvature() const { return 2.0 * b + 12.0 * alpha4 * x0 * x0; }
};

/// Throws DomainError unless alpha4 > 0.
QuarticSector displacement_root(std::int64_t m_total, const ModelParams& p, double alpha4);

/// hbar Omega(M) = 4 sqrt(A B_eff).
double gaussian_frequency(const QuarticSector& sector);

struct AnharmonicSpectrum {
    std::vector<double> eps;  // eigenvalues of the residual oscillator, ascending
    int basis_used = 0;
    double convergence_change = 0.0;

    /// E_n(M) = g S2 + V_eff + eps_n.
    std::vector<double> full_energies(const QuarticSector& sector, double g, std::int64_t s2) const;
};

/// Levels of h = A P'^2 + B_eff X'^2 + beta3 X'^3 + alpha4 X'^4 in the
/// oscillator basis of its quadratic part. The basis is doubled from
/// basis_cutoff until the requested levels move by < 1e-9 relative; throws
/// ConvergenceError after three doublings. Requires basis_cutoff >= 4 n_levels.
AnharmonicSpectrum anharmonic_levels(double a, double b_eff, double beta3, double alpha4, int n_levels,
                                     int basis_cutoff);

AnharmonicSpectrum anharmonic_spectrum(const QuarticSector& sector, int n_levels, int basis_cutoff);

struct OmegaRow {
    std::int64_t m_total;
    double x0;
    double omega;  // hbar Omega(M)
};

/// Gaussian frequency for every M in [m_min, m_max].
std::vector<OmegaRow> omega_table(const ModelParams& p, double alpha4, std::int64_t m_min, std::int64_t m_max);

}  // namespace fluxqm
