#include "fluxqm/nonlinear_cavity.hpp"

#include <algorithm>
#include <cmath>

#include "fluxqm/errors.hpp"
#include "fluxqm/linalg.hpp"

namespace fluxqm {

double QuarticSector::residual() const {
    return 4.0 * alpha4 * x0 * x0 * x0 + 2.0 * b * x0 - c * static_cast<double>(m_total);
}

namespace {

// Unique real root of 4 a4 x^3 + 2 b x - cm (monotone for a4, b > 0):
// Newton iteration kept inside a shrinking bracket.
double monotone_cubic_root(double a4, double b, double cm) {
    if (cm == 0.0) return 0.0;
    auto f = [&](double x) { return 4.0 * a4 * x * x * x + 2.0 * b * x - cm; };
    auto df = [&](double x) { return 12.0 * a4 * x * x + 2.0 * b; };
    // f(0) = -cm and the harmonic root cm / 2b overshoots.
    double lo = std::min(0.0, cm / (2.0 * b));
    double hi = std::max(0.0, cm / (2.0 * b));
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fx < 0.0) lo = x; else hi = x;
        double next = x - fx / df(x);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 1e-16 * std::max(1.0, std::fabs(x))) return next;
        x = next;
    }
    return x;
}

}  // namespace

QuarticSector displacement_root(std::int64_t m_total, const ModelParams& p, double alpha4) {
    p.validate();
    if (!(alpha4 > 0.0)) throw DomainError("displacement_root: alpha4 must be positive");
    QuarticSector s{};
    s.m_total = m_total;
    s.a = p.hbar_omega / 4.0;
    s.b = p.hbar_omega / 4.0 + p.g * p.phi * p.phi * p.n_particles;
    s.c = 2.0 * p.g * p.phi;
    s.alpha4 = alpha4;
    const double cm = s.c * static_cast<double>(m_total);
    s.x0 = monotone_cubic_root(alpha4, s.b, cm);
    s.b_eff = s.b + 6.0 * alpha4 * s.x0 * s.x0;
    s.beta3 = 4.0 * alpha4 * s.x0;
    s.v_eff = s.b * s.x0 * s.x0 - cm * s.x0 + alpha4 * std::pow(s.x0, 4);
    return s;
}

double gaussian_frequency(const QuarticSector& sector) { return 4.0 * std::sqrt(sector.a * sector.b_eff); }

std::vector<double> AnharmonicSpectrum::full_energies(const QuarticSector& sector, double g, std::int64_t s2) const {
    std::vector<double> e(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) e[i] = g * static_cast<double>(s2) + sector.v_eff + eps[i];
    return e;
}

namespace {

std::vector<double> levels_in_basis(double a, double b_eff, double beta3, double alpha4, int n_levels, int size) {
    // X' = l (c + c^+), l = (A / B_eff)^(1/4); the quadratic part is diagonal.
    const double l = std::pow(a / b_eff, 0.25);
    const int pad = size + 4;
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(pad, pad);
    for (int k = 0; k + 1 < pad; ++k) {
        x(k, k + 1) = x(k + 1, k) = l * std::sqrt(k + 1.0);
    }
    const Eigen::MatrixXd x2 = x * x;
    const Eigen::MatrixXd x3 = x2 * x;
    const Eigen::MatrixXd x4 = x2 * x2;
    Eigen::MatrixXd h = beta3 * x3.topLeftCorner(size, size) + alpha4 * x4.topLeftCorner(size, size);
    const double quantum = 4.0 * std::sqrt(a * b_eff);
    for (int k = 0; k < size; ++k) h(k, k) += quantum * (k + 0.5);
    return symmetric_eigenvalues(0.5 * (h + h.transpose()), n_levels);
}

}  // namespace

AnharmonicSpectrum anharmonic_levels(double a, double b_eff, double beta3, double alpha4, int n_levels,
                                     int basis_cutoff) {
    if (!(a > 0.0) || !(b_eff > 0.0)) throw DomainError("anharmonic_levels: A and B_eff must be positive");
    if (alpha4 < 0.0) throw DomainError("anharmonic_levels: alpha4 must be non-negative");
    if (n_levels < 1 || basis_cutoff < 4 * n_levels) {
        throw DomainError("anharmonic_levels: basis_cutoff must be at least 4 n_levels");
    }
    AnharmonicSpectrum out;
    int size = basis_cutoff;
    std::vector<double> current = levels_in_basis(a, b_eff, beta3, alpha4, n_levels, size);
    double change = 0.0;
    for (int doubling = 0; doubling < 3; ++doubling) {
        const auto wider = levels_in_basis(a, b_eff, beta3, alpha4, n_levels, 2 * size);
        change = 0.0;
        for (int i = 0; i < n_levels; ++i) {
            change = std::max(change, std::fabs(wider[i] - current[i]) / std::max(std::fabs(wider[i]), 1e-300));
        }
        current = wider;
        size *= 2;
        if (change < 1e-9) {
            out.eps = std::move(current);
            out.basis_used = size;
            out.convergence_change = change;
            return out;
        }
    }
    throw ConvergenceError("anharmonic_levels: basis doubling did not converge", change);
}

AnharmonicSpectrum anharmonic_spectrum(const QuarticSector& sector, int n_levels, int basis_cutoff) {
    return anharmonic_levels(sector.a, sector.b_eff, sector.beta3, sector.alpha4, n_levels, basis_cutoff);
}

std::vector<OmegaRow> omega_table(const ModelParams& p, double alpha4, std::int64_t m_min, std::int64_t m_max) {
    if (m_min > m_max) throw DomainError("omega_table: empty M range");
    std::vector<OmegaRow> rows;
    rows.reserve(static_cast<std::size_t>(m_max - m_min + 1));
    for (std::int64_t m = m_min; m <= m_max; ++m) {
        const auto s = displacement_root(m, p, alpha4);
        rows.push_back({m, s.x0, gaussian_frequency(s)});
    }
    return rows;
}

}  // namespace fluxqm
