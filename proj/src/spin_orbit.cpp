#include "fluxqm/spin_orbit.hpp"

#include <cmath>

#include "fluxqm/errors.hpp"
#include "fluxqm/linear_diag.hpp"

namespace fluxqm {

double spin_sector_energy(const ModelParams& p, const FermionConfig& cfg, int n) {
    if (!cfg.has_spins()) throw DomainError("spin_sector_energy: configuration carries no spins");
    if (n < 0) throw DomainError("spin_sector_energy: photon index must be non-negative");
    p.validate();
    const double d = p.stiffened_energy();
    const double drive = 2.0 * p.g * p.phi * static_cast<double>(cfg.m_total()) +
                         p.eta * static_cast<double>(cfg.sigma_total());
    return p.g_eff * static_cast<double>(cfg.w_kinetic()) - drive * drive / d +
           dressed_frequency(p) * (n + 0.5);
}

double to_linear_convention(const ModelParams& p, double spin_energy) {
    return spin_energy - 0.5 * p.hbar_omega;
}

HessianReport hessian(const ModelParams& p) {
    p.validate();
    const double n = p.n_particles;
    const double d = p.stiffened_energy();
    const double gp = p.g * p.phi;
    const double hmm = 2.0 * p.g_eff / n - 8.0 * gp * gp / d;
    const double hss = p.g_eff * n / 2.0 - 2.0 * p.eta * p.eta / d;
    const double hms = -4.0 * gp * p.eta / d;

    HessianReport r{};
    r.matrix = {{{hmm, hms}, {hms, hss}}};
    r.determinant = hmm * hss - hms * hms;
    const double mean = 0.5 * (hmm + hss);
    const double radius = std::hypot(0.5 * (hmm - hss), hms);
    r.eigenvalues = {mean - radius, mean + radius};
    // Stable form of the lower eigenvector of [[a, b], [b, c]].
    double vx, vy;
    if (hms == 0.0) {
        vx = hmm <= hss ? 1.0 : 0.0;
        vy = hmm <= hss ? 0.0 : 1.0;
    } else if (hmm <= hss) {
        vx = hss - r.eigenvalues[0];
        vy = -hms;
    } else {
        vx = -hms;
        vy = hmm - r.eigenvalues[0];
    }
    const double norm = std::hypot(vx, vy);
    r.soft_vector = {vx / norm, vy / norm};
    r.stable = r.eigenvalues[0] > 0.0;
    return r;
}

double critical_eta(const ModelParams& p) {
    p.validate();
    if (std::fabs(p.g_eff - p.g) > 1e-12 * std::max(p.g, p.g_eff)) {
        throw DomainError("critical_eta: closed form needs g_eff == g; use critical_eta_general");
    }
    return 0.5 * std::sqrt(p.g * p.n_particles * p.hbar_omega);
}

double critical_eta_general(const ModelParams& p) {
    p.validate();
    const double n = p.n_particles;
    const double rhs = 0.25 * n * (p.g_eff * p.stiffened_energy() - 4.0 * p.g * p.g * n * p.phi * p.phi);
    if (!(rhs > 0.0)) throw NoTransitionError("critical_eta_general: balanced state already unstable at eta = 0");
    return std::sqrt(rhs);
}

double critical_flux_spin(const ModelParams& p) {
    p.validate();
    const double n = p.n_particles;
    const double denom = p.g * (p.g_eff - p.g);
    if (denom == 0.0) throw DomainError("critical_flux_spin: g_eff == g is singular; use critical_eta");
    const double radicand = (p.eta * p.eta - 0.25 * n * p.g_eff * p.hbar_omega) / denom;
    if (!(radicand > 0.0)) throw NoTransitionError("critical_flux_spin: no real critical flux");
    return std::sqrt(radicand) / n;
}

LockingRatio locking_ratio(const ModelParams& p) {
    const double eta_c = critical_eta_general(p);
    const double c = 2.0 * p.g * p.phi;
    const double denom = p.g_eff * p.stiffened_energy() / p.n_particles - c * c;
    if (denom == 0.0) return {std::copysign(INFINITY, c * eta_c), true};
    return {c * eta_c / denom, false};
}

}  // namespace fluxqm
