#include "fluxqm/linear_diag.hpp"

#include <cmath>

#include "fluxqm/errors.hpp"

namespace fluxqm {

double AnalyticSolution::x_variance() const { return 0.5 * std::exp(-2.0 * squeeze_r); }

double AnalyticSolution::p_variance() const { return 0.5 * std::exp(2.0 * squeeze_r); }

double dressed_frequency(const ModelParams& p) {
    p.validate();
    return std::sqrt(p.hbar_omega * p.stiffened_energy());
}

double induced_coupling(const ModelParams& p) {
    p.validate();
    return 4.0 * p.g * p.g * p.phi * p.phi / p.stiffened_energy();
}

AnalyticSolution squeeze_solution(const ModelParams& p) {
    p.validate();
    AnalyticSolution s{};
    s.alpha = p.hbar_omega;
    s.beta = p.stiffened_energy();
    s.omega_dressed = std::sqrt(s.alpha * s.beta);
    s.chi = 4.0 * p.g * p.g * p.phi * p.phi / s.beta;
    s.squeeze_r = 0.25 * std::log(s.beta / s.alpha);
    // A = beta / 2 is the x^2 coefficient; x0 = sqrt2 g phi M / A.
    s.x0_per_m = 2.0 * std::sqrt(2.0) * p.g * p.phi / s.beta;
    return s;
}

double sector_energy(const ModelParams& p, const FermionConfig& cfg, int n) {
    if (n < 0) throw DomainError("sector_energy: photon index must be non-negative");
    const AnalyticSolution s = squeeze_solution(p);
    const double m = static_cast<double>(cfg.m_total());
    return p.g_eff * static_cast<double>(cfg.w_kinetic()) - s.chi * m * m +
           s.omega_dressed * (n + 0.5) - 0.5 * p.hbar_omega;
}

double ground_displacement(const ModelParams& p, std::int64_t m_total) {
    const AnalyticSolution s = squeeze_solution(p);
    return s.x0_per_m * static_cast<double>(m_total) / std::sqrt(2.0);
}

}  // namespace fluxqm
