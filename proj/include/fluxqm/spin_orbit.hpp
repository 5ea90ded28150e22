#pragma once

#include <array>
#include <optional>

#include "fluxqm/model.hpp"

namespace fluxqm {

/// E = g_eff W - (2 g phi M + eta Sigma)^2 / D + hbar Omega (n + 1/2),
/// D = hbar omega + 4 g N phi^2. No -hbar omega/2 term; see
/// to_linear_convention(). Throws DomainError if cfg carries no spins.
double spin_sector_energy(const ModelParams& p, const FermionConfig& cfg, int n);

/// Shifts a spin_sector_energy value onto the linear-diag / oracle convention.
double to_linear_convention(const ModelParams& p, double spin_energy);

/// Stability of the balanced state in the (M, Sigma) order-parameter plane.
struct HessianReport {
    std::array<std::array<double, 2>, 2> matrix;
    double determinant;
    std::array<double, 2> eigenvalues;  // ascending
    std::array<double, 2> soft_vector;  // unit eigenvector of the lower eigenvalue, (M, Sigma)
    bool stable;
};

HessianReport hessian(const ModelParams& p);

/// eta_c = sqrt(g N hbar omega) / 2. Requires |g_eff - g| <= 1e-12 max(g, g_eff);
/// otherwise throws DomainError pointing at critical_eta_general().
double critical_eta(const ModelParams& p);

/// Root of det H = 0 in eta for arbitrary g_eff:
/// eta_c^2 = (N/4)[g_eff (hbar omega + 4 g N phi^2) - 4 g^2 N phi^2].
/// Throws NoTransitionError when the right side is not positive.
double critical_eta_general(const ModelParams& p);

/// phi_c = (1/N) sqrt((eta^2 - N g_eff hbar omega / 4) / (g (g_eff - g))).
/// Throws DomainError at g_eff == g, NoTransitionError for a non-positive radicand.
double critical_flux_spin(const ModelParams& p);

/// Outcome of the M / Sigma locking ratio.
struct LockingRatio {
    double value;    // finite when !pure_orbital
    bool pure_orbital;  // vanishing denominator: the soft mode is purely orbital
};

/// M/Sigma = (2 g phi) eta_c / (g_eff D / N - (2 g phi)^2) with eta_c from
/// critical_eta_general(p) (p.eta is ignored).
LockingRatio locking_ratio(const ModelParams& p);

}  // namespace fluxqm
